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

// Abstract model of a C-O Diagram document.
//
// A contract is a box: (agent, name, guards, timing, body, reparation).
// The body is either a modality applied to an action expression, a
// refinement of sub-contracts, a repetition, or a cross-reference.  Every
// type validates its structural invariants on construction and throws
// ModelError when they are violated, so a value that exists is well formed.
// All values are immutable once built.

#ifndef CODIA_AST_HPP_
#define CODIA_AST_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace codia {

class ModelError : public std::runtime_error {
 public:
  enum class Kind {
    InvalidName,
    MissingAgent,
    UnexpectedAgent,
    UnexpectedReparation,
    PermissionReparation,
    TooFewParts,
    DuplicateLabel,
    DuplicateVariable,
    InvalidNounPhrase,
    EmptyDocument,
  };

  ModelError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// Heap-allocated value with deep copy and deep equality.  Used to break
// recursion in the model; never null once constructed.
template <typename T>
class Box {
 public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}  // NOLINT
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;
  ~Box() = default;

  const T& operator*() const { return *ptr_; }
  const T* operator->() const { return ptr_.get(); }

  friend bool operator==(const Box& a, const Box& b) { return *a == *b; }

 private:
  std::unique_ptr<T> ptr_;
};

// Box name.  `[A-Za-z0-9][A-Za-z0-9_]*`, never a structural keyword.
class Label {
 public:
  explicit Label(std::string text);

  static bool isValid(std::string_view text);

  const std::string& str() const noexcept { return text_; }

  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label&, const Label&) = default;

 private:
  std::string text_;
};

// Variable name used in comparison guards.  `[A-Za-z][A-Za-z0-9_]*`.
class Identifier {
 public:
  explicit Identifier(std::string text);

  static bool isValid(std::string_view text);

  const std::string& str() const noexcept { return text_; }

  friend bool operator==(const Identifier&, const Identifier&) = default;
  friend auto operator<=>(const Identifier&, const Identifier&) = default;

 private:
  std::string text_;
};

// The implicit timer of a box: `t_` followed by the box label.
class ClockName {
 public:
  explicit ClockName(std::string text);

  static bool isValid(std::string_view text);

  const std::string& str() const noexcept { return text_; }
  Label box() const { return Label(text_.substr(2)); }

  friend bool operator==(const ClockName&, const ClockName&) = default;
  friend auto operator<=>(const ClockName&, const ClockName&) = default;

 private:
  std::string text_;
};

ClockName clockNameFor(const Label& box);

enum class Modality { Obligation, Permission, Prohibition };
enum class RefOp { Conj, Choice, Seq };
enum class CmpOp { Less, Greater, Equal };
enum class Number { Singular, Plural };
enum class Determiner { Indefinite, Definite };
enum class Preposition { With, Of, To, From };

// Lexical references.  The lemma keys into the active Lexicon; the model
// itself does not depend on a lexicon.
struct NounRef {
  std::string lemma;
  Number number = Number::Singular;
  friend bool operator==(const NounRef&, const NounRef&) = default;
};

struct AdjRef {
  std::string lemma;
  friend bool operator==(const AdjRef&, const AdjRef&) = default;
};

struct VerbRef {
  std::string lemma;
  friend bool operator==(const VerbRef&, const VerbRef&) = default;
};

class NounPhrase;

struct PrepPhrase {
  Preposition prep;
  Box<NounPhrase> object;
  friend bool operator==(const PrepPhrase&, const PrepPhrase&) = default;
};

class NounPhrase {
 public:
  struct Proper {
    NounRef noun;
    friend bool operator==(const Proper&, const Proper&) = default;
  };
  struct Common {
    std::optional<Determiner> determiner;
    std::vector<AdjRef> adjectives;
    NounRef head;
    std::optional<PrepPhrase> modifier;
    friend bool operator==(const Common&, const Common&) = default;
  };
  struct Coord {
    Box<NounPhrase> left;
    Box<NounPhrase> right;
    friend bool operator==(const Coord&, const Coord&) = default;
  };

  static NounPhrase proper(NounRef noun);
  // Rejects an indefinite determiner on a plural head.
  static NounPhrase common(std::optional<Determiner> determiner,
                           std::vector<AdjRef> adjectives, NounRef head,
                           std::optional<PrepPhrase> modifier = std::nullopt);
  // Coordination nests to the right: `left` must be Proper or Common
  // without a prepositional modifier.
  static NounPhrase coord(NounPhrase left, NounPhrase right);

  const std::variant<Proper, Common, Coord>& node() const noexcept {
    return node_;
  }
  bool isCoord() const noexcept {
    return std::holds_alternative<Coord>(node_);
  }

  friend bool operator==(const NounPhrase&, const NounPhrase&) = default;

 private:
  explicit NounPhrase(std::variant<Proper, Common, Coord> node)
      : node_(std::move(node)) {}

  std::variant<Proper, Common, Coord> node_;
};

struct Action {
  VerbRef verb;
  std::optional<NounPhrase> object;  // present iff transitive

  static Action intransitive(VerbRef verb) { return Action{std::move(verb), {}}; }
  static Action transitive(VerbRef verb, NounPhrase object) {
    return Action{std::move(verb), std::move(object)};
  }
  bool isTransitive() const noexcept { return object.has_value(); }

  friend bool operator==(const Action&, const Action&) = default;
};

struct NamedAction;

struct CompoundAction {
  RefOp op;
  std::vector<NamedAction> parts;
  friend bool operator==(const CompoundAction&, const CompoundAction&);
};

class ActionExpr {
 public:
  ActionExpr(Action atom);  // NOLINT
  ActionExpr(RefOp op, std::vector<NamedAction> parts);

  const std::variant<Action, CompoundAction>& node() const noexcept {
    return node_;
  }
  bool isAtomic() const noexcept {
    return std::holds_alternative<Action>(node_);
  }

  friend bool operator==(const ActionExpr&, const ActionExpr&) = default;

 private:
  std::variant<Action, CompoundAction> node_;
};

struct NamedAction {
  Label name;
  ActionExpr expr;
  friend bool operator==(const NamedAction&, const NamedAction&) = default;
};

inline bool operator==(const CompoundAction& a, const CompoundAction& b) {
  return a.op == b.op && a.parts == b.parts;
}

struct Comparison {
  Identifier variable;
  CmpOp op;
  std::uint64_t value;
  bool negated = false;
  friend bool operator==(const Comparison&, const Comparison&) = default;
};

struct DoneTest {
  Label action;
  bool negated = false;
  friend bool operator==(const DoneTest&, const DoneTest&) = default;
};

using Guard = std::variant<Comparison, DoneTest>;

struct TimeRestriction {
  ClockName clock;
  CmpOp op;
  std::uint64_t value;
  bool negated = false;
  friend bool operator==(const TimeRestriction&, const TimeRestriction&) = default;
};

class Contract;

struct Modal {
  Modality modality;
  ActionExpr action;
  friend bool operator==(const Modal&, const Modal&) = default;
};

class Refinement {
 public:
  Refinement(RefOp op, std::vector<Contract> parts);

  RefOp op() const noexcept { return op_; }
  const std::vector<Contract>& parts() const noexcept { return parts_; }

  friend bool operator==(const Refinement& a, const Refinement& b);

 private:
  RefOp op_;
  std::vector<Contract> parts_;
};

struct Repetition {
  Box<Contract> inner;
  friend bool operator==(const Repetition&, const Repetition&) = default;
};

struct CrossRef {
  Label target;
  friend bool operator==(const CrossRef&, const CrossRef&) = default;
};

using Body = std::variant<Modal, Refinement, Repetition, CrossRef>;

struct ReparationRef {
  Label target;
  friend bool operator==(const ReparationRef&, const ReparationRef&) = default;
};

using Reparation = std::variant<ReparationRef, Box<Contract>>;

class Contract {
 public:
  Contract(Label name, std::optional<NounPhrase> agent,
           std::vector<Guard> guards, std::vector<TimeRestriction> timing,
           Body body, std::optional<Reparation> reparation = std::nullopt);

  const Label& name() const noexcept { return name_; }
  const std::optional<NounPhrase>& agent() const noexcept { return agent_; }
  const std::vector<Guard>& guards() const noexcept { return guards_; }
  const std::vector<TimeRestriction>& timing() const noexcept { return timing_; }
  const Body& body() const noexcept { return body_; }
  const std::optional<Reparation>& reparation() const noexcept {
    return reparation_;
  }

  const Modal* modal() const noexcept { return std::get_if<Modal>(&body_); }

  friend bool operator==(const Contract&, const Contract&);

 private:
  Label name_;
  std::optional<NounPhrase> agent_;
  std::vector<Guard> guards_;
  std::vector<TimeRestriction> timing_;
  Body body_;
  std::optional<Reparation> reparation_;
};

class Document {
 public:
  // The first contract is the main one.  Labels must be unique across the
  // whole document; `variables`, when present, declares guard variables.
  explicit Document(std::vector<Contract> contracts,
                    std::optional<std::vector<Identifier>> variables = std::nullopt);

  const std::vector<Contract>& contracts() const noexcept { return contracts_; }
  const std::optional<std::vector<Identifier>>& variables() const noexcept {
    return variables_;
  }

  const Contract* findTopLevel(const Label& name) const;

  friend bool operator==(const Document&, const Document&) = default;

 private:
  std::vector<Contract> contracts_;
  std::optional<std::vector<Identifier>> variables_;
};

// Deep equality of every field, including label spelling and list order.
bool equalsStructural(const Document& a, const Document& b);

// Visits every contract box, outer boxes first, in document order.
// Reparation contracts are visited after the body of their owner.
void forEachContract(const Document& doc,
                     const std::function<void(const Contract&)>& visit);
void forEachContract(const Contract& root,
                     const std::function<void(const Contract&)>& visit);

// Visits every NamedAction under an action expression, pre-order.
void forEachNamedAction(const ActionExpr& expr,
                        const std::function<void(const NamedAction&)>& visit);

// Labels of every Contract and NamedAction, in document order.
std::vector<Label> collectLabels(const Document& doc);
std::vector<Label> collectLabels(const Contract& contract);

std::string_view toString(Modality m);
std::string_view toString(RefOp op);
std::string_view toString(CmpOp op);

}  // namespace codia

#endif  // CODIA_AST_HPP_
