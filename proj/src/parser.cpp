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

// Recursive-descent parser over the layout-aware token stream.
//
// The grammar is deterministic with at most two tokens of lookahead:
//
//   document  := ['variables' ':' id (',' id)*] contract+
//   contract  := label ':' cond* core
//   cond      := ('if'|'when') atom ('and' atom)*
//   atom      := 'variable' id ['not'] cmp num
//              | 'clock' clock ['not'] cmp num
//              | label 'is' ['not'] 'done'
//   core      := ('all of' | 'one of' | 'the following, in order') cblock
//              | 'first' contract ',' 'then' contract
//              | contract ('and'|'or') contract      -- when `label :` follows
//              | 'repeatedly' contract
//              | 'see' label
//              | np modal
//   modal     := ('may' | 'mustn't' | copula ('required'|'allowed'|'forbidden') 'to')
//                  action [reparation]
//              | copula ('required'|'allowed'|'forbidden') ablock [reparation]
//   ablock    := '{' ('-' label ':' ('to' action | 'the following' [op] ablock) [op])+ '}'
//   op        := ',' ('and'|'or'|'then')
//
// Inside an action block a reparation may close the final item.  An `and`
// followed by `label :` always joins clauses, never noun phrases.

#include <charconv>
#include <map>

#include "codia/cnl.hpp"
#include "codia/keywords.hpp"
#include "lexer.hpp"

namespace codia {
namespace {

using detail::Token;
using detail::TokenKind;

// Thrown after a fatal diagnostic has been recorded; unwinds to the
// enclosing top-level contract.
struct Abort {};

struct ReparationSink {
  std::optional<Reparation> reparation;
  SourceSpan span;
};

struct ActionList {
  RefOp op;
  std::vector<NamedAction> parts;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, const Lexicon& lex, const ParseOptions& options,
         ParseResult& out)
      : toks_(std::move(tokens)), lex_(lex), options_(options), out_(out) {}

  void run();

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& previous() const { return toks_[pos_ == 0 ? 0 : pos_ - 1]; }
  const Token& advance() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  bool atWord(std::string_view w, std::size_t ahead = 0) const {
    return peek(ahead).is(w);
  }
  bool accept(std::string_view w) {
    if (!atWord(w)) return false;
    advance();
    return true;
  }
  bool accept(TokenKind k) {
    if (peek().kind != k) return false;
    advance();
    return true;
  }

  [[noreturn]] void fail(const Token& at, std::string message,
                         std::string_view c = code::kGrammar) {
    out_.diagnostics.push_back(makeError(c, std::move(message), at.span));
    throw Abort{};
  }
  [[noreturn]] void failExpected(std::string_view what) {
    fail(peek(), "expected " + std::string(what) + ", found " + found(peek()));
  }
  void report(std::string_view c, std::string message, SourceSpan span) {
    out_.diagnostics.push_back(makeError(c, std::move(message), span));
  }

  static std::string found(const Token& t) {
    if (t.kind == TokenKind::Word || t.kind == TokenKind::Number) {
      return "'" + t.text + "'";
    }
    return std::string(detail::describe(t.kind));
  }

  const Token& expectWord(std::string_view w) {
    if (!atWord(w)) failExpected("'" + std::string(w) + "'");
    return advance();
  }
  const Token& expect(TokenKind k, std::string_view what) {
    if (peek().kind != k) failExpected(what);
    return advance();
  }

  bool isLabelToken(std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return (t.kind == TokenKind::Word || t.kind == TokenKind::Number) &&
           Label::isValid(t.text);
  }
  bool isLabelHeader(std::size_t ahead = 0) const {
    return isLabelToken(ahead) && peek(ahead + 1).kind == TokenKind::Colon;
  }
  const Token& labelToken(std::string_view what) {
    const Token& t = peek();
    if (isLabelToken()) return advance();
    if (t.kind == TokenKind::Word && isStructuralKeyword(t.text)) {
      fail(t, "'" + t.text + "' is a reserved word and cannot be used as " +
                  std::string(what));
    }
    failExpected(what);
  }

  Label defineLabel(const std::string& text, SourceSpan span) {
    Label l(text);
    labels_.emplace_back(text, span);
    out_.sources.record(Site::Definition, text, span);
    return l;
  }
  Label parseLabelHeader() {
    const Token& t = labelToken("a label");
    expect(TokenKind::Colon, "':' after the label");
    return defineLabel(t.text, t.span);
  }
  Label itemLabel(const std::string& parent, int index, const Token& dash) {
    if (options_.autolabel && !isLabelHeader()) {
      return defineLabel(parent + "_" + std::to_string(index), dash.span);
    }
    return parseLabelHeader();
  }

  bool isKnownWord(std::string_view w) const;
  bool canStartNounPhrase(std::size_t ahead = 0) const;
  std::vector<NounRef> commonReadings(std::string_view w) const;
  std::optional<NounRef> properReading(std::string_view w) const;

  Contract parseContract();
  Contract parseContractBody(Label name);
  std::vector<Contract> parseContractBlock(const std::string& parent);
  void parseConditions(const std::string& owner, std::vector<Guard>& guards,
                       std::vector<TimeRestriction>& timing);
  void parseCondition(const std::string& owner, std::vector<Guard>& guards,
                      std::vector<TimeRestriction>& timing);
  CmpOp parseComparison();
  std::uint64_t parseNumber();
  Contract parseModal(Label name, std::vector<Guard> guards,
                      std::vector<TimeRestriction> timing);
  ActionList parseActionBlock(const std::string& parent, const std::string& owner,
                              ReparationSink& sink, bool& sinkFilled);
  std::optional<RefOp> parseListOperator();
  void parseReparation(const std::string& owner, ReparationSink& sink);
  Action parseAction();
  NounPhrase parseNounPhrase(std::string_view role);
  NounPhrase parseSimpleNounPhrase(std::string_view role);

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Lexicon& lex_;
  const ParseOptions& options_;
  ParseResult& out_;
  std::vector<std::pair<std::string, SourceSpan>> labels_;
};

bool Parser::isKnownWord(std::string_view w) const {
  if (!lex_.nounReadings(w).empty() || lex_.isAdjective(w)) return true;
  if (isDeterminerWord(w) || isPrepositionWord(w) || isStructuralKeyword(w)) {
    return true;
  }
  for (const auto& [lemma, v] : lex_.verbs()) {
    for (const auto& form : v.baseForm) {
      if (form == w) return true;
    }
  }
  return false;
}

bool Parser::canStartNounPhrase(std::size_t ahead) const {
  const Token& t = peek(ahead);
  if (t.kind != TokenKind::Word) return false;
  if (peek(ahead + 1).kind == TokenKind::Colon) return false;
  if (isDeterminerWord(t.text)) return true;
  return !isStructuralKeyword(t.text);
}

std::vector<NounRef> Parser::commonReadings(std::string_view w) const {
  std::vector<NounRef> out;
  for (const NounRef& r : lex_.nounReadings(w)) {
    if (!lex_.noun(r.lemma)->proper) out.push_back(r);
  }
  return out;
}

std::optional<NounRef> Parser::properReading(std::string_view w) const {
  for (const NounRef& r : lex_.nounReadings(w)) {
    if (lex_.noun(r.lemma)->proper) return r;
  }
  return std::nullopt;
}

void Parser::run() {
  std::vector<Contract> contracts;
  std::optional<std::vector<Identifier>> variables;
  if (peek().kind == TokenKind::End) {
    report(code::kGrammar, "document is empty", peek().span);
    return;
  }
  while (peek().kind != TokenKind::End) {
    const std::size_t start = pos_;
    try {
      if (atWord("variables") && peek(1).kind == TokenKind::Colon) {
        const Token& kw = advance();
        advance();
        if (!contracts.empty() || variables) {
          fail(kw, "the variables line must come first and appear only once");
        }
        std::vector<Identifier> ids;
        do {
          const Token& t = peek();
          if (t.kind != TokenKind::Word || !Identifier::isValid(t.text)) {
            failExpected("a variable name");
          }
          for (const Identifier& seen : ids) {
            if (seen.str() == t.text) {
              fail(t, "variable '" + t.text + "' is declared twice");
            }
          }
          ids.emplace_back(advance().text);
        } while (accept(TokenKind::Comma));
        variables = std::move(ids);
      } else {
        contracts.push_back(parseContract());
      }
      if (peek().kind != TokenKind::End && !peek().startsTopLevel) {
        fail(peek(), "unexpected " + found(peek()) + " after the end of the contract");
      }
    } catch (const Abort&) {
      if (pos_ == start) advance();
      while (peek().kind != TokenKind::End && !peek().startsTopLevel) advance();
    }
  }

  std::map<std::string, SourceSpan> firstSeen;
  for (const auto& [text, span] : labels_) {
    auto [it, fresh] = firstSeen.emplace(text, span);
    if (!fresh) {
      report(code::kDuplicateLabel,
             "label '" + text + "' is already defined at line " +
                 std::to_string(it->second.startLine),
             span);
    }
  }
  if (hasErrors(out_.diagnostics)) return;
  if (contracts.empty()) {
    report(code::kGrammar, "document contains no contracts", toks_.front().span);
    return;
  }
  try {
    out_.document.emplace(std::move(contracts), std::move(variables));
  } catch (const ModelError& e) {
    report(code::kModelInvariant, e.what(), toks_.front().span);
  }
}

Contract Parser::parseContract() {
  Label name = parseLabelHeader();
  return parseContractBody(std::move(name));
}

Contract Parser::parseContractBody(Label name) {
  const SourceSpan labelSpan = previous().span;
  std::vector<Guard> guards;
  std::vector<TimeRestriction> timing;
  parseConditions(name.str(), guards, timing);

  auto refine = [&](RefOp op, std::vector<Contract> parts) {
    return Contract(name, std::nullopt, std::move(guards), std::move(timing),
                    Refinement(op, std::move(parts)));
  };
  try {
    if (atWord("all") && atWord("of", 1)) {
      advance();
      advance();
      return refine(RefOp::Conj, parseContractBlock(name.str()));
    }
    if (atWord("one") && atWord("of", 1)) {
      advance();
      advance();
      return refine(RefOp::Choice, parseContractBlock(name.str()));
    }
    if (atWord("the") && atWord("following", 1)) {
      advance();
      advance();
      expect(TokenKind::Comma, "', in order' after 'the following'");
      expectWord("in");
      expectWord("order");
      return refine(RefOp::Seq, parseContractBlock(name.str()));
    }
    if (accept("first")) {
      Contract head = parseContract();
      expect(TokenKind::Comma, "', then' closing 'first ...'");
      expectWord("then");
      Contract tail = parseContract();
      return refine(RefOp::Seq, {std::move(head), std::move(tail)});
    }
    if (isLabelHeader()) {
      Contract left = parseContract();
      RefOp op;
      if (accept("and")) {
        op = RefOp::Conj;
      } else if (accept("or")) {
        op = RefOp::Choice;
      } else {
        failExpected("'and' or 'or' joining two inline clauses");
      }
      Contract right = parseContract();
      return refine(op, {std::move(left), std::move(right)});
    }
    if (accept("repeatedly")) {
      Contract inner = parseContract();
      return Contract(name, std::nullopt, std::move(guards), std::move(timing),
                      Repetition{Box<Contract>(std::move(inner))});
    }
    if (accept("see")) {
      const Token& t = labelToken("a cross-reference target");
      out_.sources.record(Site::CrossRef, name.str(), t.span);
      return Contract(name, std::nullopt, std::move(guards), std::move(timing),
                      CrossRef{Label(t.text)});
    }
    return parseModal(std::move(name), std::move(guards), std::move(timing));
  } catch (const ModelError& e) {
    report(code::kGrammar, e.what(), labelSpan);
    throw Abort{};
  }
}

std::vector<Contract> Parser::parseContractBlock(const std::string& parent) {
  const Token& open = expect(TokenKind::LBrace, "a bulleted list of clauses");
  const SourceSpan openSpan = open.span;
  std::vector<Contract> parts;
  for (int index = 1;; ++index) {
    const Token& dash = expect(TokenKind::Dash, "'-' starting a list item");
    if (options_.autolabel && !isLabelHeader()) {
      Label name = defineLabel(parent + "_" + std::to_string(index), dash.span);
      parts.push_back(parseContractBody(std::move(name)));
    } else {
      parts.push_back(parseContract());
    }
    if (accept(TokenKind::RBrace)) break;
    if (peek().kind != TokenKind::Dash) failExpected("'-' or the end of the list");
  }
  if (parts.size() < 2) {
    report(code::kGrammar, "a list of clauses needs at least two items", openSpan);
    throw Abort{};
  }
  return parts;
}

void Parser::parseConditions(const std::string& owner, std::vector<Guard>& guards,
                             std::vector<TimeRestriction>& timing) {
  while (atWord("if") || atWord("when")) {
    advance();
    do {
      parseCondition(owner, guards, timing);
    } while (accept("and"));
  }
}

void Parser::parseCondition(const std::string& owner, std::vector<Guard>& guards,
                            std::vector<TimeRestriction>& timing) {
  if (accept("variable")) {
    const Token& t = peek();
    if (t.kind != TokenKind::Word || !Identifier::isValid(t.text)) {
      failExpected("a variable name");
    }
    advance();
    const bool negated = accept("not");
    const CmpOp op = parseComparison();
    const std::uint64_t value = parseNumber();
    out_.sources.record(Site::Guard, owner, t.span, guards.size());
    guards.push_back(Comparison{Identifier(t.text), op, value, negated});
    return;
  }
  if (accept("clock")) {
    const Token& t = peek();
    if (t.kind != TokenKind::Word || !ClockName::isValid(t.text)) {
      failExpected("a clock name of the form t_<label>");
    }
    advance();
    const bool negated = accept("not");
    const CmpOp op = parseComparison();
    const std::uint64_t value = parseNumber();
    out_.sources.record(Site::Timing, owner, t.span, timing.size());
    timing.push_back(TimeRestriction{ClockName(t.text), op, value, negated});
    return;
  }
  if (isLabelToken() && atWord("is", 1)) {
    const Token& t = advance();
    advance();
    const bool negated = accept("not");
    expectWord("done");
    out_.sources.record(Site::Guard, owner, t.span, guards.size());
    guards.push_back(DoneTest{Label(t.text), negated});
    return;
  }
  failExpected("a condition ('variable ...', 'clock ...' or '<label> is done')");
}

CmpOp Parser::parseComparison() {
  if (accept("less")) {
    expectWord("than");
    return CmpOp::Less;
  }
  if (accept("greater")) {
    expectWord("than");
    return CmpOp::Greater;
  }
  if (accept("equal")) {
    expectWord("to");
    return CmpOp::Equal;
  }
  failExpected("'less than', 'greater than' or 'equal to'");
}

std::uint64_t Parser::parseNumber() {
  const Token& t = peek();
  if (t.kind != TokenKind::Number) failExpected("a number");
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
    fail(t, "number '" + t.text + "' is out of range");
  }
  advance();
  return value;
}

Contract Parser::parseModal(Label name, std::vector<Guard> guards,
                            std::vector<TimeRestriction> timing) {
  NounPhrase agent = parseNounPhrase("an agent");
  const Number number = npNumber(agent, lex_);

  std::optional<Modality> modality;
  std::optional<ActionExpr> action;
  ReparationSink sink;
  if (accept("may")) {
    modality = Modality::Permission;
    action = parseAction();
  } else if (accept("mustn't")) {
    modality = Modality::Prohibition;
    action = parseAction();
  } else if (atWord("is") || atWord("are")) {
    const Token& copula = advance();
    if (copula.text != copulaFor(number)) {
      report(code::kAgreement,
             "'" + copula.text + "' does not agree with " +
                 (number == Number::Plural ? "a plural" : "a singular") +
                 " agent; use '" + std::string(copulaFor(number)) + "'",
             copula.span);
    }
    if (accept("required")) {
      modality = Modality::Obligation;
    } else if (accept("allowed")) {
      modality = Modality::Permission;
    } else if (accept("forbidden")) {
      modality = Modality::Prohibition;
    } else {
      failExpected("'required', 'allowed' or 'forbidden'");
    }
    if (accept("to")) {
      action = parseAction();
    } else if (peek().kind == TokenKind::LBrace) {
      bool filled = false;
      ActionList list = parseActionBlock(name.str(), name.str(), sink, filled);
      action = ActionExpr(list.op, std::move(list.parts));
    } else {
      failExpected("'to' or a bulleted list of actions");
    }
  } else {
    failExpected("a modality ('is required to', 'may', 'mustn't', ...)");
  }

  if (atWord("otherwise")) {
    if (sink.reparation) fail(peek(), "a clause can have only one reparation");
    parseReparation(name.str(), sink);
  }
  if (sink.reparation && modality == Modality::Permission) {
    report(code::kGrammar, "a permission cannot carry a reparation", sink.span);
    sink.reparation.reset();
  }
  return Contract(std::move(name), std::move(agent), std::move(guards),
                  std::move(timing), Modal{*modality, std::move(*action)},
                  std::move(sink.reparation));
}

std::optional<RefOp> Parser::parseListOperator() {
  if (!accept(TokenKind::Comma)) return std::nullopt;
  if (accept("and")) return RefOp::Conj;
  if (accept("or")) return RefOp::Choice;
  if (accept("then")) return RefOp::Seq;
  failExpected("'and', 'or' or 'then' after ','");
}

ActionList Parser::parseActionBlock(const std::string& parent,
                                    const std::string& owner,
                                    ReparationSink& sink, bool& sinkFilled) {
  const Token& open = expect(TokenKind::LBrace, "a bulleted list of actions");
  const SourceSpan openSpan = open.span;
  std::vector<NamedAction> parts;
  std::optional<RefOp> listOp;
  for (int index = 1;; ++index) {
    const Token& dash = expect(TokenKind::Dash, "'-' starting a list item");
    Label name = itemLabel(parent, index, dash);
    std::optional<RefOp> itemOp;
    SourceSpan opSpan = peek().span;
    bool filledHere = false;
    std::optional<ActionExpr> expr;
    if (accept("to")) {
      expr = parseAction();
      opSpan = peek().span;
      if (atWord("otherwise")) {
        if (sink.reparation) fail(peek(), "a clause can have only one reparation");
        parseReparation(owner, sink);
        filledHere = true;
      } else {
        itemOp = parseListOperator();
      }
    } else if (atWord("the") && atWord("following", 1)) {
      advance();
      advance();
      opSpan = peek().span;
      itemOp = parseListOperator();
      ActionList nested = parseActionBlock(name.str(), owner, sink, filledHere);
      expr = ActionExpr(nested.op, std::move(nested.parts));
    } else {
      failExpected("'to <action>' or 'the following'");
    }
    parts.push_back(NamedAction{std::move(name), std::move(*expr)});
    if (filledHere) {
      sinkFilled = true;
      if (itemOp || peek().kind != TokenKind::RBrace) {
        fail(peek(), "a reparation can only close the last item of the list");
      }
    }
    if (itemOp) {
      if (listOp && *listOp != *itemOp) {
        report(code::kGrammar, "all items of one list must use the same operator",
               opSpan);
        throw Abort{};
      }
      listOp = itemOp;
      if (peek().kind != TokenKind::Dash) {
        failExpected("another item after the operator");
      }
      continue;
    }
    expect(TokenKind::RBrace, "', <operator>' or the end of the list");
    break;
  }
  if (parts.size() < 2 || !listOp) {
    report(code::kGrammar, "a list of actions needs at least two items", openSpan);
    throw Abort{};
  }
  return {*listOp, std::move(parts)};
}

void Parser::parseReparation(const std::string& owner, ReparationSink& sink) {
  const Token& kw = expectWord("otherwise");
  const SourceSpan start = kw.span;
  if (accept("see")) {
    const Token& t = labelToken("a reparation target");
    out_.sources.record(Site::Reparation, owner, t.span);
    sink.reparation = ReparationRef{Label(t.text)};
    sink.span = cover(start, t.span);
    return;
  }
  if (!isLabelHeader()) failExpected("'see <label>' or a labelled clause");
  Contract inlineContract = parseContract();
  sink.reparation = Box<Contract>(std::move(inlineContract));
  sink.span = cover(start, previous().span);
}

Action Parser::parseAction() {
  const Token& first = peek();
  if (first.kind != TokenKind::Word) failExpected("a verb");
  std::size_t bestLength = 0;
  std::vector<const VerbEntry*> best;
  for (const VerbEntry* v : lex_.verbsStartingWith(first.text)) {
    const std::size_t n = v->baseForm.size();
    bool matches = true;
    for (std::size_t i = 0; i < n && matches; ++i) {
      matches = peek(i).kind == TokenKind::Word && peek(i).text == v->baseForm[i];
    }
    if (!matches || n < bestLength) continue;
    if (n > bestLength) best.clear();
    bestLength = n;
    best.push_back(v);
  }
  if (best.empty()) {
    if (!isKnownWord(first.text)) {
      fail(first, "unknown word '" + first.text + "'", code::kUnknownWord);
    }
    fail(first, "'" + first.text + "' is not a verb");
  }
  for (std::size_t i = 0; i < bestLength; ++i) advance();
  const VerbEntry* chosen = best.front();
  if (best.size() > 1) {
    const Arity want =
        canStartNounPhrase() ? Arity::Transitive : Arity::Intransitive;
    for (const VerbEntry* v : best) {
      if (v->arity == want) {
        chosen = v;
        break;
      }
    }
  }
  if (chosen->arity == Arity::Transitive) {
    return Action::transitive(VerbRef{chosen->lemma}, parseNounPhrase("an object"));
  }
  return Action::intransitive(VerbRef{chosen->lemma});
}

NounPhrase Parser::parseNounPhrase(std::string_view role) {
  NounPhrase left = parseSimpleNounPhrase(role);
  if (atWord("and") && canStartNounPhrase(1)) {
    const Token& conj = advance();
    NounPhrase right = parseNounPhrase(role);
    try {
      return NounPhrase::coord(std::move(left), std::move(right));
    } catch (const ModelError& e) {
      fail(conj, e.what());
    }
  }
  return left;
}

NounPhrase Parser::parseSimpleNounPhrase(std::string_view role) {
  const Token& first = peek();
  if (first.kind != TokenKind::Word) failExpected(role);
  std::optional<Determiner> det;
  SourceSpan detSpan = first.span;
  if (first.is("a") || first.is("an")) {
    det = Determiner::Indefinite;
    advance();
  } else if (first.is("the")) {
    det = Determiner::Definite;
    advance();
  } else if (auto proper = properReading(first.text)) {
    advance();
    return NounPhrase::proper(*proper);
  }

  std::vector<AdjRef> adjectives;
  while (peek().kind == TokenKind::Word && lex_.isAdjective(peek().text)) {
    const bool alsoNoun = !commonReadings(peek().text).empty();
    const Token& next = peek(1);
    const bool moreFollows =
        next.kind == TokenKind::Word &&
        (lex_.isAdjective(next.text) || !commonReadings(next.text).empty());
    if (alsoNoun && !moreFollows) break;
    adjectives.push_back(AdjRef{advance().text});
  }

  const Token& head = peek();
  if (head.kind != TokenKind::Word) failExpected("a noun");
  auto readings = commonReadings(head.text);
  if (readings.empty()) {
    if (properReading(head.text)) {
      fail(head, "proper noun '" + head.text +
                     "' cannot take a determiner or adjectives");
    }
    if (!isKnownWord(head.text)) {
      fail(head, "unknown word '" + head.text + "'", code::kUnknownWord);
    }
    fail(head, "expected " + std::string(role) + ", found " + found(head));
  }
  advance();
  const NounRef ref = readings.front();
  if (det == Determiner::Indefinite && ref.number == Number::Plural) {
    report(code::kAgreement,
           "indefinite article cannot precede plural noun '" + head.text + "'",
           cover(detSpan, head.span));
    det.reset();
  }

  std::optional<PrepPhrase> modifier;
  if (peek().kind == TokenKind::Word && isPrepositionWord(peek().text) &&
      canStartNounPhrase(1)) {
    const std::string prep = advance().text;
    Preposition p = prep == "with" ? Preposition::With
                    : prep == "of" ? Preposition::Of
                    : prep == "to" ? Preposition::To
                                   : Preposition::From;
    modifier = PrepPhrase{p, Box<NounPhrase>(parseNounPhrase("a noun phrase"))};
  }
  return NounPhrase::common(det, std::move(adjectives), ref, std::move(modifier));
}

}  // namespace

ParseResult parseDocument(std::string_view text, const Lexicon& lex,
                          const ParseOptions& options) {
  ParseResult out;
  if (auto bad = firstInvalidUtf8(text)) {
    out.diagnostics.push_back(makeError(code::kGrammar, "text is not valid UTF-8", *bad));
    return out;
  }
  detail::LexResult lexed = detail::lex(text);
  out.diagnostics = std::move(lexed.diagnostics);
  Parser parser(std::move(lexed.tokens), lex, options, out);
  parser.run();
  if (hasErrors(out.diagnostics)) out.document.reset();
  std::stable_sort(out.diagnostics.begin(), out.diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     return a.span < b.span;
                   });
  return out;
}

}  // namespace codia
