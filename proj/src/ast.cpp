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

#include "codia/ast.hpp"

#include <cctype>
#include <set>

#include "codia/keywords.hpp"

namespace codia {
namespace {

bool isAsciiAlpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
bool isAsciiDigit(char c) { return c >= '0' && c <= '9'; }

bool isNameTail(std::string_view text) {
  for (char c : text) {
    if (!isAsciiAlpha(c) && !isAsciiDigit(c) && c != '_') return false;
  }
  return true;
}

template <typename... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <typename... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

Label::Label(std::string text) : text_(std::move(text)) {
  if (!isValid(text_)) {
    throw ModelError(ModelError::Kind::InvalidName,
                     "invalid label '" + text_ + "'");
  }
}

bool Label::isValid(std::string_view text) {
  if (text.empty()) return false;
  if (!isAsciiAlpha(text[0]) && !isAsciiDigit(text[0])) return false;
  return isNameTail(text.substr(1)) && !isStructuralKeyword(text);
}

Identifier::Identifier(std::string text) : text_(std::move(text)) {
  if (!isValid(text_)) {
    throw ModelError(ModelError::Kind::InvalidName,
                     "invalid variable name '" + text_ + "'");
  }
}

bool Identifier::isValid(std::string_view text) {
  if (text.empty() || !isAsciiAlpha(text[0])) return false;
  return isNameTail(text.substr(1)) && !isStructuralKeyword(text);
}

ClockName::ClockName(std::string text) : text_(std::move(text)) {
  if (!isValid(text_)) {
    throw ModelError(ModelError::Kind::InvalidName,
                     "invalid clock name '" + text_ + "'");
  }
}

bool ClockName::isValid(std::string_view text) {
  return text.size() > 2 && text.substr(0, 2) == "t_" &&
         Label::isValid(text.substr(2));
}

ClockName clockNameFor(const Label& box) { return ClockName("t_" + box.str()); }

NounPhrase NounPhrase::proper(NounRef noun) {
  return NounPhrase(Proper{std::move(noun)});
}

NounPhrase NounPhrase::common(std::optional<Determiner> determiner,
                              std::vector<AdjRef> adjectives, NounRef head,
                              std::optional<PrepPhrase> modifier) {
  if (determiner == Determiner::Indefinite && head.number == Number::Plural) {
    throw ModelError(ModelError::Kind::InvalidNounPhrase,
                     "indefinite determiner on plural noun '" + head.lemma + "'");
  }
  return NounPhrase(Common{determiner, std::move(adjectives), std::move(head),
                           std::move(modifier)});
}

NounPhrase NounPhrase::coord(NounPhrase left, NounPhrase right) {
  if (left.isCoord()) {
    throw ModelError(ModelError::Kind::InvalidNounPhrase,
                     "left operand of a coordination cannot be a coordination");
  }
  if (const auto* c = std::get_if<Common>(&left.node_); c && c->modifier) {
    throw ModelError(
        ModelError::Kind::InvalidNounPhrase,
        "left operand of a coordination cannot carry a prepositional phrase");
  }
  return NounPhrase(Coord{Box<NounPhrase>(std::move(left)),
                          Box<NounPhrase>(std::move(right))});
}

ActionExpr::ActionExpr(Action atom) : node_(std::move(atom)) {}

ActionExpr::ActionExpr(RefOp op, std::vector<NamedAction> parts)
    : node_(CompoundAction{op, std::move(parts)}) {
  if (std::get<CompoundAction>(node_).parts.size() < 2) {
    throw ModelError(ModelError::Kind::TooFewParts,
                     "compound action needs at least two parts");
  }
}

Refinement::Refinement(RefOp op, std::vector<Contract> parts)
    : op_(op), parts_(std::move(parts)) {
  if (parts_.size() < 2) {
    throw ModelError(ModelError::Kind::TooFewParts,
                     "refinement needs at least two parts");
  }
}

bool operator==(const Refinement& a, const Refinement& b) {
  return a.op_ == b.op_ && a.parts_ == b.parts_;
}

Contract::Contract(Label name, std::optional<NounPhrase> agent,
                   std::vector<Guard> guards,
                   std::vector<TimeRestriction> timing, Body body,
                   std::optional<Reparation> reparation)
    : name_(std::move(name)),
      agent_(std::move(agent)),
      guards_(std::move(guards)),
      timing_(std::move(timing)),
      body_(std::move(body)),
      reparation_(std::move(reparation)) {
  const std::string& n = name_.str();
  if (const Modal* m = modal()) {
    if (!agent_) {
      throw ModelError(ModelError::Kind::MissingAgent,
                       "modal box '" + n + "' needs an agent");
    }
    if (m->modality == Modality::Permission && reparation_) {
      throw ModelError(ModelError::Kind::PermissionReparation,
                       "permission box '" + n + "' cannot carry a reparation");
    }
    return;
  }
  if (agent_) {
    throw ModelError(ModelError::Kind::UnexpectedAgent,
                     "box '" + n + "' has no modality and cannot carry an agent");
  }
  if (reparation_) {
    throw ModelError(
        ModelError::Kind::UnexpectedReparation,
        "box '" + n + "' has no modality and cannot carry a reparation");
  }
}

bool operator==(const Contract& a, const Contract& b) {
  return a.name_ == b.name_ && a.agent_ == b.agent_ && a.guards_ == b.guards_ &&
         a.timing_ == b.timing_ && a.body_ == b.body_ &&
         a.reparation_ == b.reparation_;
}

Document::Document(std::vector<Contract> contracts,
                   std::optional<std::vector<Identifier>> variables)
    : contracts_(std::move(contracts)), variables_(std::move(variables)) {
  if (contracts_.empty()) {
    throw ModelError(ModelError::Kind::EmptyDocument,
                     "document must contain at least one contract");
  }
  if (variables_) {
    if (variables_->empty()) {
      throw ModelError(ModelError::Kind::EmptyDocument,
                       "variable declaration list is empty");
    }
    std::set<Identifier> seen;
    for (const Identifier& v : *variables_) {
      if (!seen.insert(v).second) {
        throw ModelError(ModelError::Kind::DuplicateVariable,
                         "variable '" + v.str() + "' declared twice");
      }
    }
  }
  std::set<Label> seen;
  for (const Label& l : collectLabels(*this)) {
    if (!seen.insert(l).second) {
      throw ModelError(ModelError::Kind::DuplicateLabel,
                       "duplicate label '" + l.str() + "'");
    }
  }
}

const Contract* Document::findTopLevel(const Label& name) const {
  for (const Contract& c : contracts_) {
    if (c.name() == name) return &c;
  }
  return nullptr;
}

bool equalsStructural(const Document& a, const Document& b) { return a == b; }

void forEachContract(const Contract& root,
                     const std::function<void(const Contract&)>& visit) {
  visit(root);
  std::visit(Overloaded{
                 [](const Modal&) {},
                 [&](const Refinement& r) {
                   for (const Contract& p : r.parts()) forEachContract(p, visit);
                 },
                 [&](const Repetition& r) { forEachContract(*r.inner, visit); },
                 [](const CrossRef&) {},
             },
             root.body());
  if (root.reparation()) {
    if (const auto* inl = std::get_if<Box<Contract>>(&*root.reparation())) {
      forEachContract(**inl, visit);
    }
  }
}

void forEachContract(const Document& doc,
                     const std::function<void(const Contract&)>& visit) {
  for (const Contract& c : doc.contracts()) forEachContract(c, visit);
}

void forEachNamedAction(const ActionExpr& expr,
                        const std::function<void(const NamedAction&)>& visit) {
  if (const auto* c = std::get_if<CompoundAction>(&expr.node())) {
    for (const NamedAction& part : c->parts) {
      visit(part);
      forEachNamedAction(part.expr, visit);
    }
  }
}

std::vector<Label> collectLabels(const Contract& contract) {
  std::vector<Label> out;
  forEachContract(contract, [&](const Contract& c) {
    out.push_back(c.name());
    if (const Modal* m = c.modal()) {
      forEachNamedAction(m->action,
                         [&](const NamedAction& a) { out.push_back(a.name); });
    }
  });
  return out;
}

std::vector<Label> collectLabels(const Document& doc) {
  std::vector<Label> out;
  for (const Contract& c : doc.contracts()) {
    auto part = collectLabels(c);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::string_view toString(Modality m) {
  switch (m) {
    case Modality::Obligation: return "obligation";
    case Modality::Permission: return "permission";
    case Modality::Prohibition: return "prohibition";
  }
  return "";
}

std::string_view toString(RefOp op) {
  switch (op) {
    case RefOp::Conj: return "and";
    case RefOp::Choice: return "or";
    case RefOp::Seq: return "seq";
  }
  return "";
}

std::string_view toString(CmpOp op) {
  switch (op) {
    case CmpOp::Less: return "less";
    case CmpOp::Greater: return "greater";
    case CmpOp::Equal: return "equal";
  }
  return "";
}

}  // namespace codia
