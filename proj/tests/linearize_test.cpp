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

#include "codia/cnl.hpp"
#include "support/builders.hpp"
#include "support/paths.hpp"

namespace codia {
namespace {

using testing::modalBox;
using testing::obliged;
using testing::shippedLexicon;

std::string text(const Document& d) { return linearize(d, shippedLexicon()); }

TEST(Linearize, CopulaAgreement) {
  EXPECT_EQ(text(Document({obliged("1")})), "1 : Mary is required to pay\n");
  EXPECT_EQ(text(Document({modalBox("2", Modality::Obligation, testing::pays(), std::nullopt,
                                    NounPhrase::coord(testing::mary(), testing::john()))})),
            "2 : Mary and John are required to pay\n");
  const NounPhrase coins =
      NounPhrase::common(Determiner::Definite, {}, NounRef{"coin", Number::Plural});
  EXPECT_EQ(text(Document({modalBox("3", Modality::Obligation, testing::pays(), std::nullopt,
                                    coins)})),
            "3 : the coins are required to pay\n");
}

TEST(Linearize, ModalityKeywords) {
  EXPECT_EQ(text(Document({modalBox("a", Modality::Permission)})), "a : Mary may pay\n");
  EXPECT_EQ(text(Document({modalBox("a", Modality::Prohibition)})), "a : Mary mustn't pay\n");
}

TEST(Linearize, ActionListPutsOperatorAtLineEnds) {
  const Document d({modalBox("2", Modality::Permission,
                             ActionExpr(RefOp::Choice,
                                        {NamedAction{Label("2a"), testing::pays()},
                                         NamedAction{Label("2b"), testing::eatsBagel()}}))});
  EXPECT_EQ(text(d),
            "2 : Mary is allowed\n"
            "  - 2a : to pay , or\n"
            "  - 2b : to eat a bagel\n");
}

TEST(Linearize, CompoundCopulaAgreesToo) {
  const Document d({modalBox("2", Modality::Prohibition,
                             ActionExpr(RefOp::Conj, {NamedAction{Label("x"), testing::pays()},
                                                      NamedAction{Label("y"), testing::pays()}}),
                             std::nullopt, NounPhrase::coord(testing::mary(), testing::john()))});
  EXPECT_EQ(text(d),
            "2 : Mary and John are forbidden\n"
            "  - x : to pay , and\n"
            "  - y : to pay\n");
}

TEST(Linearize, TwoSingleLinePartsAreInlined) {
  EXPECT_EQ(text(Document({testing::refined("m", RefOp::Conj, {obliged("x"), obliged("y")})})),
            "m : x : Mary is required to pay and y : Mary is required to pay\n");
  EXPECT_EQ(text(Document({testing::refined("m", RefOp::Seq, {obliged("x"), obliged("y")})})),
            "m : first x : Mary is required to pay , then y : Mary is required to pay\n");
}

TEST(Linearize, LongerListsAreBulleted) {
  const Document d({testing::refined(
      "1", RefOp::Conj,
      {obliged("1a"), obliged("1b"), modalBox("1c", Modality::Permission, testing::eatsBagel())})});
  EXPECT_EQ(text(d),
            "1 : all of\n"
            "  - 1a : Mary is required to pay\n"
            "  - 1b : Mary is required to pay\n"
            "  - 1c : Mary may eat a bagel\n");
}

TEST(Linearize, ArticleFollowsTheNextWord) {
  const Document d({modalBox(
      "a", Modality::Obligation,
      Action::transitive(VerbRef{"press"}, NounPhrase::common(Determiner::Indefinite, {},
                                                              NounRef{"abort"})))});
  EXPECT_EQ(text(d), "a : Mary is required to press an abort\n");
}

TEST(Linearize, GuardsTimingAndReparations) {
  const Document d(
      {Contract(Label("x"), testing::mary(),
                {DoneTest{Label("y"), false}, Comparison{Identifier("paid"), CmpOp::Greater, 10, true}},
                {TimeRestriction{ClockName("t_y"), CmpOp::Less, 30, false}},
                Modal{Modality::Obligation, testing::pays()}, testing::seeLabel("y")),
       obliged("y", Box<Contract>(obliged("z")))},
      std::vector{Identifier("paid")});
  EXPECT_EQ(text(d),
            "variables: paid\n"
            "x : if y is done and variable paid not greater than 10 when clock t_y less than 30 "
            "Mary is required to pay otherwise see y\n"
            "y : Mary is required to pay otherwise z : Mary is required to pay\n");
}

TEST(Linearize, UnknownLemmaIsALexiconError) {
  const Document unknownNoun({modalBox("a", Modality::Obligation, testing::pays(), std::nullopt,
                                       NounPhrase::proper(NounRef{"Marie"}))});
  EXPECT_THROW(text(unknownNoun), LexiconError);
  const Document wrongArity(
      {modalBox("a", Modality::Obligation, Action::intransitive(VerbRef{"eat"}))});
  EXPECT_THROW(text(wrongArity), LexiconError);
}

TEST(Linearize, NounPhraseSurface) {
  const NounPhrase np = NounPhrase::common(
      std::nullopt, {AdjRef{"wrong"}}, NounRef{"coin", Number::Plural},
      PrepPhrase{Preposition::From, NounPhrase::coord(testing::mary(), testing::john())});
  EXPECT_EQ(linearizeNounPhrase(np, shippedLexicon()), "wrong coins from Mary and John");
}

TEST(Linearize, ReproducesTheShippedCoffeeText) {
  const std::string golden = testing::dataFile("coffee.cnl");
  ParseResult r = parseDocument(golden, shippedLexicon());
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(text(*r.document), golden);
  ParseResult original = parseDocument(testing::dataFile("coffee-original.cnl"), shippedLexicon());
  ASSERT_TRUE(original.ok());
  EXPECT_EQ(text(*original.document), golden.substr(golden.find('\n') + 1));
}

}  // namespace
}  // namespace codia
