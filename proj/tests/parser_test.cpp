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

using testing::shippedLexicon;

ParseResult parse(const std::string& text, ParseOptions options = {}) {
  return parseDocument(text, shippedLexicon(), options);
}

// Parses text expected to hold exactly one error and returns it.
Diagnostic singleError(const std::string& text) {
  ParseResult r = parse(text);
  EXPECT_FALSE(r.document) << text;
  EXPECT_EQ(r.diagnostics.size(), 1u) << text;
  return r.diagnostics.empty() ? Diagnostic{} : r.diagnostics.front();
}

const Contract& only(const ParseResult& r) {
  EXPECT_TRUE(r.ok());
  return r.document->contracts().front();
}

TEST(ParseModal, SingularAgent) {
  ParseResult r = parse("1 : Mary is required to pay\n");
  const Contract& c = only(r);
  EXPECT_EQ(c.name(), Label("1"));
  EXPECT_EQ(*c.agent(), testing::mary());
  ASSERT_NE(c.modal(), nullptr);
  EXPECT_EQ(c.modal()->modality, Modality::Obligation);
  EXPECT_EQ(c.modal()->action, ActionExpr(testing::pays()));
}

TEST(ParseModal, CoordinatedAgent) {
  ParseResult r = parse("2 : Mary and John are required to pay\n");
  EXPECT_EQ(*only(r).agent(), NounPhrase::coord(testing::mary(), testing::john()));
}

TEST(ParseModal, LongFormsMeanTheSameAsShortForms) {
  ParseResult allowed = parse("1 : Mary is allowed to pay\n");
  ParseResult may = parse("1 : Mary may pay\n");
  ASSERT_TRUE(allowed.ok() && may.ok());
  EXPECT_TRUE(equalsStructural(*allowed.document, *may.document));
  ParseResult forbidden = parse("1 : Mary is forbidden to pay\n");
  ParseResult mustnt = parse("1 : Mary mustn't pay\n");
  ASSERT_TRUE(forbidden.ok() && mustnt.ok());
  EXPECT_TRUE(equalsStructural(*forbidden.document, *mustnt.document));
}

TEST(ParseModal, TransitiveVerbTakesItsObject) {
  ParseResult r = parse("1 : client is required to pay euro\n");
  const Action& a = std::get<Action>(only(r).modal()->action.node());
  EXPECT_EQ(a.verb.lemma, "pay");
  ASSERT_TRUE(a.object);
  EXPECT_EQ(*a.object, NounPhrase::common(std::nullopt, {}, NounRef{"euro"}));
}

TEST(ParseModal, NounPhraseParts) {
  ParseResult r = parse("1 : the wrong clients with a machine mustn't pour coffee and milk\n");
  const Contract& c = only(r);
  const auto& agent = std::get<NounPhrase::Common>(c.agent()->node());
  EXPECT_EQ(agent.determiner, Determiner::Definite);
  EXPECT_EQ(agent.adjectives, std::vector<AdjRef>{AdjRef{"wrong"}});
  EXPECT_EQ(agent.head, (NounRef{"client", Number::Plural}));
  ASSERT_TRUE(agent.modifier);
  EXPECT_EQ(agent.modifier->prep, Preposition::With);
  const Action& a = std::get<Action>(c.modal()->action.node());
  EXPECT_TRUE(a.object->isCoord());
}

TEST(ParseModal, ActionListWithReparationOnLastItem) {
  ParseResult r = parse(
      "c : client is required\n"
      "  - x : to press abort , or\n"
      "  - y : to choose coffee otherwise see refund\n"
      "refund : machine is required to refund money\n");
  ASSERT_TRUE(r.ok());
  const Contract& c = r.document->contracts().front();
  const auto& compound = std::get<CompoundAction>(c.modal()->action.node());
  EXPECT_EQ(compound.op, RefOp::Choice);
  ASSERT_EQ(compound.parts.size(), 2u);
  EXPECT_EQ(compound.parts[1].name, Label("y"));
  EXPECT_EQ(c.reparation(), std::optional<Reparation>(testing::seeLabel("refund")));
}

TEST(ParseModal, NestedActionList) {
  ParseResult r = parse(
      "c : Mary is allowed\n"
      "  - x : to pay , and\n"
      "  - y : the following\n"
      "    - y1 : to eat a bagel , or\n"
      "    - y2 : to press abort\n");
  ASSERT_TRUE(r.ok()) << formatDiagnostic(r.diagnostics.at(0), "t");
  const auto& outer = std::get<CompoundAction>(only(r).modal()->action.node());
  EXPECT_EQ(outer.op, RefOp::Conj);
  const auto& inner = std::get<CompoundAction>(outer.parts[1].expr.node());
  EXPECT_EQ(inner.op, RefOp::Choice);
}

TEST(ParseStructure, BlockKeywordsSelectTheOperator) {
  const std::pair<const char*, RefOp> cases[] = {
      {"all of", RefOp::Conj}, {"one of", RefOp::Choice},
      {"the following, in order", RefOp::Seq}, {"the following , in order", RefOp::Seq}};
  for (const auto& [keyword, op] : cases) {
    ParseResult r = parse(std::string("1 : ") + keyword +
                          "\n  - a : Mary may pay\n  - b : John may pay\n  - c : John may pay\n");
    const auto& ref = std::get<Refinement>(only(r).body());
    EXPECT_EQ(ref.op(), op) << keyword;
    EXPECT_EQ(ref.parts().size(), 3u);
  }
}

TEST(ParseStructure, InlineCombinations) {
  const std::pair<const char*, RefOp> cases[] = {
      {"1 : a : Mary may pay and b : John may pay\n", RefOp::Conj},
      {"1 : a : Mary may pay or b : John may pay\n", RefOp::Choice},
      {"1 : first a : Mary may pay , then b : John may pay\n", RefOp::Seq}};
  for (const auto& [text, op] : cases) {
    ParseResult r = parse(text);
    EXPECT_EQ(std::get<Refinement>(only(r).body()).op(), op) << text;
  }
}

TEST(ParseStructure, RepetitionAndCrossReference) {
  ParseResult r = parse("1 : repeatedly 2 : Mary may pay\n3 : see 1\n");
  ASSERT_TRUE(r.ok());
  const auto& rep = std::get<Repetition>(r.document->contracts()[0].body());
  EXPECT_EQ(rep.inner->name(), Label("2"));
  EXPECT_EQ(std::get<CrossRef>(r.document->contracts()[1].body()).target, Label("1"));
}

TEST(ParseStructure, InlineReparationContract) {
  ParseResult r = parse("1 : Mary is required to pay otherwise 2 : John is required to pay\n");
  const auto& box = std::get<Box<Contract>>(*only(r).reparation());
  EXPECT_EQ(box->name(), Label("2"));
  EXPECT_EQ(*box->agent(), testing::john());
}

TEST(ParseStructure, BracedFormEqualsBulletedForm) {
  ParseResult bulleted = parse(
      "1 : all of\n"
      "  - 1a : Mary may eat a bagel\n"
      "  - 1b : John is required to pay\n");
  ParseResult braced =
      parse("1 : all of { - 1a : Mary may eat a bagel - 1b : John is required to pay }\n");
  ASSERT_TRUE(bulleted.ok() && braced.ok());
  EXPECT_TRUE(equalsStructural(*bulleted.document, *braced.document));
}

TEST(ParseConditions, GuardsAndTiming) {
  ParseResult r = parse(
      "variables: paid\n"
      "p : Mary may pay\n"
      "x : if p is not done and variable paid not less than 10 "
      "when clock t_p greater than 30 Mary may pay\n");
  ASSERT_TRUE(r.ok());
  const Contract& c = r.document->contracts()[1];
  ASSERT_EQ(c.guards().size(), 2u);
  EXPECT_EQ(std::get<DoneTest>(c.guards()[0]), (DoneTest{Label("p"), true}));
  EXPECT_EQ(std::get<Comparison>(c.guards()[1]),
            (Comparison{Identifier("paid"), CmpOp::Less, 10, true}));
  ASSERT_EQ(c.timing().size(), 1u);
  EXPECT_EQ(c.timing()[0], (TimeRestriction{ClockName("t_p"), CmpOp::Greater, 30, false}));
  EXPECT_EQ(r.document->variables(), std::optional(std::vector{Identifier("paid")}));
}

TEST(ParseConditions, EqualityNeedsTo) {
  ParseResult r = parse("1 : if variable paid equal to 3 Mary may pay\n");
  EXPECT_EQ(std::get<Comparison>(only(r).guards()[0]).op, CmpOp::Equal);
  EXPECT_EQ(singleError("1 : if variable paid equal 3 Mary may pay\n").code, code::kGrammar);
}

TEST(ParseCorpus, ShippedCoffeeText) {
  ParseResult r = parse(testing::dataFile("coffee.cnl"));
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r.diagnostics.empty());
  const Document& d = *r.document;
  ASSERT_EQ(d.contracts().size(), 2u);
  EXPECT_EQ(d.contracts()[0].name(), Label("coffeeMachine"));
  EXPECT_EQ(d.contracts()[1].name(), Label("refund"));
  EXPECT_EQ(collectLabels(d).size(), 19u);

  int refundReparations = 0;
  const Contract* choosing = nullptr;
  const Contract* pourEnough = nullptr;
  forEachContract(d, [&](const Contract& c) {
    if (c.reparation() == std::optional<Reparation>(testing::seeLabel("refund"))) {
      ++refundReparations;
    }
    if (c.name() == Label("choosing")) choosing = &c;
    if (c.name() == Label("pourEnoughCredit")) pourEnough = &c;
  });
  EXPECT_EQ(refundReparations, 4);
  ASSERT_TRUE(choosing && pourEnough);
  EXPECT_EQ(choosing->timing(),
            (std::vector{TimeRestriction{ClockName("t_payRight"), CmpOp::Less, 30, false}}));
  EXPECT_EQ(pourEnough->guards(),
            (std::vector<Guard>{DoneTest{Label("abort"), true},
                                Comparison{Identifier("paid"), CmpOp::Less, 10, true}}));
}

TEST(ParseCorpus, OriginalCoffeeTextDiffersOnlyByPreamble) {
  ParseResult original = parse(testing::dataFile("coffee-original.cnl"));
  ParseResult shipped = parse(testing::dataFile("coffee.cnl"));
  ASSERT_TRUE(original.ok());
  ASSERT_TRUE(shipped.ok());
  EXPECT_FALSE(original.document->variables());
  EXPECT_EQ(original.document->contracts(), shipped.document->contracts());
}

TEST(ParseOptions, AutolabelNamesUnlabeledItems) {
  const std::string text =
      "main : all of\n"
      "  - Mary may pay\n"
      "  - John may pay\n";
  EXPECT_FALSE(parse(text).document);
  ParseResult r = parse(text, ParseOptions{true});
  ASSERT_TRUE(r.ok());
  const auto labels = collectLabels(*r.document);
  EXPECT_EQ(labels, (std::vector{Label("main"), Label("main_1"), Label("main_2")}));
}

TEST(ParseErrors, AgreementIsLocatedAtTheCopula) {
  const Diagnostic d = singleError("1 : Mary are required to pay\n");
  EXPECT_EQ(d.code, code::kAgreement);
  EXPECT_EQ(d.span, (SourceSpan{1, 10, 1, 13}));
  EXPECT_EQ(singleError("1 : coins is required to pay\n").code, code::kAgreement);
  EXPECT_EQ(singleError("1 : a coins are required to pay\n").code, code::kAgreement);
}

TEST(ParseErrors, PermissionWithReparation) {
  ParseResult r = parse(testing::fixture("permission-reparation.cnl"));
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].code, code::kGrammar);
  EXPECT_EQ(r.diagnostics[0].span, (SourceSpan{1, 26, 1, 46}));
}

TEST(ParseErrors, DuplicateLabelPointsAtTheSecondDefinition) {
  ParseResult r = parse(testing::fixture("duplicate-label.cnl"));
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].code, code::kDuplicateLabel);
  EXPECT_EQ(r.diagnostics[0].span, (SourceSpan{2, 1, 2, 2}));
  EXPECT_NE(r.diagnostics[0].message.find("line 1"), std::string::npos);
}

TEST(ParseErrors, UnknownWordsAndBadNames) {
  EXPECT_EQ(singleError("1 : Marie is required to pay\n").code, code::kUnknownWord);
  EXPECT_EQ(singleError("1 : a Mary is required to pay\n").code, code::kGrammar);
  EXPECT_EQ(singleError("1 : Mary must pay\n").code, code::kGrammar);
  EXPECT_EQ(singleError("see : Mary may pay\n").code, code::kGrammar);
  EXPECT_EQ(singleError("1 : Mary is required to eat\n").code, code::kGrammar);
}

TEST(ParseErrors, EmptyAndTruncatedInput) {
  const Diagnostic empty = singleError("");
  EXPECT_EQ(empty.code, code::kGrammar);
  EXPECT_EQ(empty.span.startLine, 1);
  EXPECT_EQ(singleError("\n\n").code, code::kGrammar);
  const Diagnostic cut = singleError("x :\n");
  EXPECT_EQ(cut.code, code::kGrammar);
  EXPECT_EQ(cut.span.startLine, 1);
}

TEST(ParseErrors, VariablesPreambleComesFirstOnce) {
  EXPECT_EQ(singleError("variables: x\nvariables: y\n1 : Mary may pay\n").span.startLine, 2);
  EXPECT_EQ(singleError("1 : Mary may pay\nvariables: x\n").span.startLine, 2);
}

TEST(ParseErrors, RecoveryReportsEachBrokenLine) {
  ParseResult r = parse(
      "1 : Mary must pay\n"
      "2 : John is required to pay\n"
      "3 : Marie may pay\n");
  EXPECT_FALSE(r.document);
  ASSERT_EQ(r.diagnostics.size(), 2u);
  EXPECT_EQ(r.diagnostics[0].span.startLine, 1);
  EXPECT_EQ(r.diagnostics[1].span.startLine, 3);
}

TEST(ParseErrors, InvalidUtf8) {
  const Diagnostic d = singleError("1 : Mary may pay \xC3(\n");
  EXPECT_EQ(d.span, (SourceSpan{1, 18, 1, 18}));
}

TEST(SourceMap, RecordsDefinitionsAndReferences) {
  ParseResult r = parse("a : Mary is required to pay otherwise see b\nb : John may pay\n");
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.sources.find(Site::Definition, "b"), (SourceSpan{2, 1, 2, 2}));
  EXPECT_EQ(r.sources.find(Site::Reparation, "a"), (SourceSpan{1, 43, 1, 44}));
  EXPECT_FALSE(r.sources.find(Site::CrossRef, "a"));
}

}  // namespace
}  // namespace codia
