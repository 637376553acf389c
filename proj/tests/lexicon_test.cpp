// Copyright 2026 The Codia Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "codia/cnl.hpp"
#include "codia/keywords.hpp"
#include "codia/lexicon.hpp"
#include "support/paths.hpp"

namespace codia {
namespace {

using testing::shippedLexicon;

int errorLine(const std::string& source) {
  try {
    loadLexicon(source);
  } catch (const LexiconError& e) {
    return e.line();
  }
  return 0;
}

TEST(LexiconLoad, ReadsAllEntryKinds) {
  const Lexicon lex = loadLexicon(
      "# comment\n"
      "noun coin coin coins sg\n"
      "noun money money - mass   # trailing comment\n"
      "noun Mary Mary - sg proper\n"
      "noun people person people pl\n"
      "verb give_up give up intrans\n"
      "adj wrong\n");
  ASSERT_NE(lex.noun("coin"), nullptr);
  EXPECT_EQ(lex.noun("coin")->pluralForm, "coins");
  EXPECT_TRUE(lex.noun("money")->massNoun);
  EXPECT_FALSE(lex.noun("money")->form(Number::Plural));
  EXPECT_TRUE(lex.noun("Mary")->proper);
  EXPECT_EQ(lex.noun("people")->defaultNumber, Number::Plural);
  ASSERT_NE(lex.verb("give_up"), nullptr);
  EXPECT_EQ(lex.verb("give_up")->baseText(), "give up");
  EXPECT_EQ(lex.verb("give_up")->arity, Arity::Intransitive);
  EXPECT_NE(lex.adjective("wrong"), nullptr);
  EXPECT_EQ(lex.adjective("right"), nullptr);
  EXPECT_TRUE(lex.warnings().empty());
}

TEST(LexiconLoad, ErrorsNameTheOffendingLine) {
  EXPECT_EQ(errorLine("noun coin coin coins sg\nnoun coin coin coins sg\n"), 2);
  EXPECT_EQ(errorLine("\n\nnoun coin coin\n"), 3);
  EXPECT_EQ(errorLine("noun coin coin coins few\n"), 1);
  EXPECT_EQ(errorLine("verb pay pay sometimes\n"), 1);
  EXPECT_EQ(errorLine("verb pay trans\n"), 1);
  EXPECT_EQ(errorLine("adj\n"), 1);
  EXPECT_EQ(errorLine("adverb quickly\n"), 1);
  EXPECT_EQ(errorLine("noun Mary Mary Marys sg proper\n"), 1);
  EXPECT_EQ(errorLine("noun milk milk milks mass\n"), 1);
  EXPECT_THROW(loadLexiconFile("/nonexistent/codia.lex"), LexiconError);
}

TEST(LexiconLoad, AmbiguitiesWarnButLoad) {
  const Lexicon lex = loadLexicon(
      "noun sheep sheep sheep sg\n"
      "noun order order orders sg\n"
      "noun coin coin coins sg\n"
      "noun token coin coins sg\n"
      "verb pay pay trans\n"
      "verb settle pay trans\n");
  ASSERT_EQ(lex.warnings().size(), 5u);
  for (const Diagnostic& w : lex.warnings()) {
    EXPECT_EQ(w.severity, Severity::Warning);
    EXPECT_EQ(w.code, code::kLexicon);
  }
  EXPECT_EQ(lex.warnings()[0].span.startLine, 1);
  EXPECT_EQ(lex.warnings()[1].span.startLine, 2);
  EXPECT_EQ(lex.nounReadings("coin").size(), 2u);
}

TEST(LexiconLookup, SurfaceFormsMapBackToLemmas) {
  const Lexicon& lex = shippedLexicon();
  const auto coins = lex.nounReadings("coins");
  ASSERT_EQ(coins.size(), 1u);
  EXPECT_EQ(coins[0], (NounRef{"coin", Number::Plural}));
  EXPECT_TRUE(lex.nounReadings("Marie").empty());
  EXPECT_TRUE(lex.isAdjective("wrong"));
  const auto pay = lex.verbsStartingWith("pay");
  EXPECT_EQ(pay.size(), 2u);
}

TEST(Agreement, CopulaFollowsNumber) {
  const Lexicon& lex = shippedLexicon();
  const NounPhrase mary = NounPhrase::proper(NounRef{"Mary"});
  const NounPhrase both = NounPhrase::coord(mary, NounPhrase::proper(NounRef{"John"}));
  const NounPhrase coins =
      NounPhrase::common(std::nullopt, {AdjRef{"wrong"}}, NounRef{"coin", Number::Plural});
  const NounPhrase money = NounPhrase::common(std::nullopt, {}, NounRef{"money"});
  EXPECT_EQ(copulaFor(npNumber(mary, lex)), "is");
  EXPECT_EQ(copulaFor(npNumber(both, lex)), "are");
  EXPECT_EQ(copulaFor(npNumber(coins, lex)), "are");
  EXPECT_EQ(copulaFor(npNumber(money, lex)), "is");
  EXPECT_THROW(npNumber(NounPhrase::proper(NounRef{"Marie"}), lex), LexiconError);
  EXPECT_THROW(npNumber(NounPhrase::common(std::nullopt, {}, NounRef{"money", Number::Plural}),
                        lex),
               LexiconError);
}

// Every word of the shipped coffee text is a reserved word, a name defined by
// the document, a number, or a form listed in the shipped lexicon.
TEST(ShippedLexicon, CoversTheCoffeeText) {
  const Lexicon& lex = shippedLexicon();
  const std::string text = testing::dataFile("coffee.cnl");
  ParseResult parsed = parseDocument(text, lex);
  ASSERT_TRUE(parsed.ok());
  std::set<std::string> names{"paid"};
  for (const Label& l : collectLabels(*parsed.document)) {
    names.insert(l.str());
    names.insert(clockNameFor(l).str());
  }
  std::istringstream words(text);
  std::string w;
  int checked = 0;
  while (words >> w) {
    while (!w.empty() && (w.back() == ':' || w.back() == ',')) w.pop_back();
    if (w.empty() || w == "-") continue;
    ++checked;
    if (isStructuralKeyword(w) || isDeterminerWord(w) || isPrepositionWord(w)) continue;
    if (names.count(w) || w.find_first_not_of("0123456789") == std::string::npos) continue;
    EXPECT_TRUE(!lex.nounReadings(w).empty() || lex.isAdjective(w) ||
                !lex.verbsStartingWith(w).empty())
        << w;
  }
  EXPECT_GT(checked, 150);
  EXPECT_TRUE(lex.warnings().empty());
}

}  // namespace
}  // namespace codia
