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

#include "codia/coml.hpp"

#include <charconv>
#include <map>

#include "xml_dom.hpp"

namespace codia {
namespace {

using detail::XmlElement;

constexpr std::string_view kModalNames[] = {"obligation", "permission", "prohibition"};
constexpr std::string_view kRefOpNames[] = {"and", "or", "seq"};
constexpr std::string_view kCmpNames[] = {"less", "greater", "equal"};
constexpr std::string_view kPrepNames[] = {"with", "of", "to", "from"};

template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};
template <class... F>
Overloaded(F...) -> Overloaded<F...>;

std::string_view numberName(Number n) { return n == Number::Plural ? "pl" : "sg"; }

// ---------------------------------------------------------------- writing

using Attrs = std::vector<std::pair<std::string_view, std::string>>;

class Writer {
 public:
  std::string take() { return std::move(out_); }

  void leaf(std::string_view name, const Attrs& attrs = {}) { tag(name, attrs, true); }
  void open(std::string_view name, const Attrs& attrs = {}) {
    tag(name, attrs, false);
    ++depth_;
  }
  void close(std::string_view name) {
    --depth_;
    indent();
    out_ += "</";
    out_ += name;
    out_ += ">\n";
  }

  void document(const Document& doc) {
    out_ += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    open("document", {{"version", "1"}});
    if (const auto& vars = doc.variables()) {
      open("variables");
      for (const Identifier& v : *vars) leaf("variable", {{"name", v.str()}});
      close("variables");
    }
    for (const Contract& c : doc.contracts()) contract(c);
    close("document");
  }

 private:
  void indent() { out_.append(static_cast<std::size_t>(2 * depth_), ' '); }

  void tag(std::string_view name, const Attrs& attrs, bool selfClosing) {
    indent();
    out_ += '<';
    out_ += name;
    for (const auto& [k, v] : attrs) {
      out_ += ' ';
      out_ += k;
      out_ += "=\"";
      out_ += detail::xmlEscape(v);
      out_ += '"';
    }
    out_ += selfClosing ? "/>\n" : ">\n";
  }

  void contract(const Contract& c) {
    open("contract", {{"name", c.name().str()}});
    if (c.agent()) {
      open("agent");
      nounPhrase(*c.agent());
      close("agent");
    }
    if (!c.guards().empty()) {
      open("guard");
      for (const Guard& g : c.guards()) {
        std::visit(Overloaded{
                       [&](const Comparison& x) {
                         leaf("cmp", {{"var", x.variable.str()},
                                      {"op", std::string(kCmpNames[int(x.op)])},
                                      {"value", std::to_string(x.value)},
                                      {"negated", x.negated ? "true" : "false"}});
                       },
                       [&](const DoneTest& x) {
                         leaf("done", {{"action", x.action.str()},
                                       {"negated", x.negated ? "true" : "false"}});
                       },
                   },
                   g);
      }
      close("guard");
    }
    if (!c.timing().empty()) {
      open("timing");
      for (const TimeRestriction& t : c.timing()) {
        leaf("cmp", {{"clock", t.clock.str()},
                     {"op", std::string(kCmpNames[int(t.op)])},
                     {"value", std::to_string(t.value)},
                     {"negated", t.negated ? "true" : "false"}});
      }
      close("timing");
    }
    std::visit(Overloaded{
                   [&](const Modal& m) {
                     const std::string_view name = kModalNames[int(m.modality)];
                     open(name);
                     actionExpr(m.action);
                     close(name);
                   },
                   [&](const Refinement& r) {
                     open("refinement", {{"op", std::string(kRefOpNames[int(r.op())])}});
                     for (const Contract& p : r.parts()) contract(p);
                     close("refinement");
                   },
                   [&](const Repetition& r) {
                     open("rep");
                     contract(*r.inner);
                     close("rep");
                   },
                   [&](const CrossRef& x) { leaf("crossref", {{"target", x.target.str()}}); },
               },
               c.body());
    if (const auto& rep = c.reparation()) {
      if (const auto* ref = std::get_if<ReparationRef>(&*rep)) {
        leaf("reparation", {{"target", ref->target.str()}});
      } else {
        open("reparation");
        contract(*std::get<Box<Contract>>(*rep));
        close("reparation");
      }
    }
    close("contract");
  }

  void actionExpr(const ActionExpr& expr) {
    if (const auto* a = std::get_if<Action>(&expr.node())) {
      if (!a->object) {
        leaf("action", {{"verb", a->verb.lemma}});
        return;
      }
      open("action", {{"verb", a->verb.lemma}});
      open("object");
      nounPhrase(*a->object);
      close("object");
      close("action");
      return;
    }
    const auto& ca = std::get<CompoundAction>(expr.node());
    open("refinement", {{"op", std::string(kRefOpNames[int(ca.op)])}});
    for (const NamedAction& part : ca.parts) {
      open("namedAction", {{"name", part.name.str()}});
      actionExpr(part.expr);
      close("namedAction");
    }
    close("refinement");
  }

  void nounPhrase(const NounPhrase& np) {
    open("np");
    std::visit(
        Overloaded{
            [&](const NounPhrase::Proper& p) {
              leaf("proper", {{"lemma", p.noun.lemma},
                              {"number", std::string(numberName(p.noun.number))}});
            },
            [&](const NounPhrase::Common& c) {
              Attrs attrs;
              if (c.determiner) {
                attrs.emplace_back("det",
                                   c.determiner == Determiner::Definite ? "the" : "a");
              }
              open("common", attrs);
              for (const AdjRef& a : c.adjectives) leaf("adj", {{"lemma", a.lemma}});
              leaf("noun", {{"lemma", c.head.lemma},
                            {"number", std::string(numberName(c.head.number))}});
              if (c.modifier) {
                open("pp", {{"prep", std::string(kPrepNames[int(c.modifier->prep)])}});
                nounPhrase(*c.modifier->object);
                close("pp");
              }
              close("common");
            },
            [&](const NounPhrase::Coord& c) {
              open("coord");
              nounPhrase(*c.left);
              nounPhrase(*c.right);
              close("coord");
            },
        },
        np.node());
    close("np");
  }

  std::string out_;
  int depth_ = 0;
};

// ---------------------------------------------------------------- reading

struct Invalid {
  Diagnostic diagnostic;
};

bool matchesName(std::string_view s, bool letterFirst) {
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (s.empty()) return false;
  if (!(alpha(s[0]) || (!letterFirst && digit(s[0])))) return false;
  for (char c : s.substr(1)) {
    if (!alpha(c) && !digit(c) && c != '_') return false;
  }
  return true;
}

bool isToken(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') return false;
  }
  return true;
}

class Reader {
 public:
  explicit Reader(SourceMap& sources) : sources_(sources) {}

  Document document(const XmlElement& root) {
    const std::string path = "/" + root.name;
    if (root.name != "document") {
      schemaError(root, path, "root element must be <document>, found <" + root.name + ">");
    }
    attributes(root, path, {"version"}, {});
    if (*root.attribute("version") != "1") {
      schemaError(root, path, "unsupported version '" + *root.attribute("version") + "'");
    }
    noText(root, path);

    Cursor cur(root);
    std::optional<std::vector<Identifier>> variables;
    if (const XmlElement* v = cur.next("variables")) {
      const std::string vpath = childPath(root, *v, path);
      attributes(*v, vpath, {}, {});
      noText(*v, vpath);
      std::vector<Identifier> ids;
      for (const auto& child : v->children) {
        const std::string cpath = childPath(*v, *child, vpath);
        if (child->name != "variable") unexpected(*child, cpath);
        attributes(*child, cpath, {"name"}, {});
        noText(*child, cpath);
        noChildren(*child, cpath);
        ids.push_back(identifier(*child, cpath, "name"));
      }
      if (ids.empty()) schemaError(*v, vpath, "<variables> needs at least one <variable>");
      variables = std::move(ids);
    }
    std::vector<Contract> contracts;
    while (const XmlElement* c = cur.next("contract")) {
      contracts.push_back(contract(*c, childPath(root, *c, path)));
    }
    if (const XmlElement* extra = cur.rest()) unexpected(*extra, childPath(root, *extra, path));
    if (contracts.empty()) schemaError(root, path, "a document needs at least one <contract>");

    std::map<std::string, const Definition*> seen;
    for (const Definition& d : definitions_) {
      if (!seen.emplace(d.label, &d).second) {
        invariant(d.span, d.path, "duplicate label '" + d.label + "'");
      }
    }
    try {
      return Document(std::move(contracts), std::move(variables));
    } catch (const ModelError& e) {
      invariant(root.span, path, e.what());
    }
  }

 private:
  struct Definition {
    std::string label;
    SourceSpan span;
    std::string path;
  };

  // Walks the children of one element in order.
  class Cursor {
   public:
    explicit Cursor(const XmlElement& e) : e_(e) {}
    const XmlElement* next(std::string_view name) {
      if (i_ < e_.children.size() && e_.children[i_]->name == name) {
        return e_.children[i_++].get();
      }
      return nullptr;
    }
    const XmlElement* peek() const {
      return i_ < e_.children.size() ? e_.children[i_].get() : nullptr;
    }
    const XmlElement* take() { return i_ < e_.children.size() ? e_.children[i_++].get() : nullptr; }
    const XmlElement* rest() const { return peek(); }

   private:
    const XmlElement& e_;
    std::size_t i_ = 0;
  };

  static std::string childPath(const XmlElement& parent, const XmlElement& child,
                               const std::string& parentPath) {
    std::size_t index = 0;
    std::size_t count = 0;
    for (const auto& c : parent.children) {
      if (c->name != child.name) continue;
      ++count;
      if (c.get() == &child) index = count;
    }
    std::string out = parentPath + "/" + child.name;
    if (count > 1) out += "[" + std::to_string(index) + "]";
    return out;
  }

  [[noreturn]] static void schemaError(const XmlElement& e, const std::string& path,
                                       const std::string& message) {
    throw Invalid{makeError(code::kXmlSchema, path + ": " + message, e.span)};
  }
  [[noreturn]] static void invariant(SourceSpan span, const std::string& path,
                                     const std::string& message) {
    throw Invalid{makeError(code::kModelInvariant, path + ": " + message, span)};
  }
  [[noreturn]] static void unexpected(const XmlElement& e, const std::string& path) {
    schemaError(e, path, "unexpected element <" + e.name + ">");
  }

  static void attributes(const XmlElement& e, const std::string& path,
                         std::initializer_list<std::string_view> required,
                         std::initializer_list<std::string_view> optional) {
    for (const auto& [k, v] : e.attributes) {
      const bool known =
          std::find(required.begin(), required.end(), k) != required.end() ||
          std::find(optional.begin(), optional.end(), k) != optional.end();
      if (!known) schemaError(e, path, "unexpected attribute '" + k + "'");
    }
    for (std::string_view r : required) {
      if (!e.attribute(r)) {
        schemaError(e, path, "missing attribute '" + std::string(r) + "'");
      }
    }
  }
  static void noText(const XmlElement& e, const std::string& path) {
    if (e.hasText) {
      throw Invalid{makeError(code::kXmlSchema, path + ": unexpected text content",
                              e.textSpan)};
    }
  }
  static void noChildren(const XmlElement& e, const std::string& path) {
    if (!e.children.empty()) {
      unexpected(*e.children.front(), childPath(e, *e.children.front(), path));
    }
  }
  static void plain(const XmlElement& e, const std::string& path,
                    std::initializer_list<std::string_view> required,
                    std::initializer_list<std::string_view> optional = {}) {
    attributes(e, path, required, optional);
    noText(e, path);
    noChildren(e, path);
  }

  template <std::size_t N>
  static std::size_t enumValue(const XmlElement& e, const std::string& path,
                               std::string_view attr,
                               const std::string_view (&names)[N]) {
    const std::string& v = *e.attribute(attr);
    for (std::size_t i = 0; i < N; ++i) {
      if (names[i] == v) return i;
    }
    schemaError(e, path, "invalid value '" + v + "' for attribute '" + std::string(attr) + "'");
  }

  static bool negated(const XmlElement& e, const std::string& path) {
    const std::string* v = e.attribute("negated");
    if (!v || *v == "false") return false;
    if (*v == "true") return true;
    schemaError(e, path, "invalid value '" + *v + "' for attribute 'negated'");
  }

  static std::uint64_t value(const XmlElement& e, const std::string& path) {
    const std::string& v = *e.attribute("value");
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || ec != std::errc() || ptr != v.data() + v.size()) {
      schemaError(e, path, "invalid value '" + v + "' for attribute 'value'");
    }
    return out;
  }

  static std::string lemma(const XmlElement& e, const std::string& path,
                           std::string_view attr) {
    const std::string& v = *e.attribute(attr);
    if (!isToken(v)) {
      schemaError(e, path, "invalid value '" + v + "' for attribute '" + std::string(attr) + "'");
    }
    return v;
  }

  static Label label(const XmlElement& e, const std::string& path, std::string_view attr) {
    const std::string& v = *e.attribute(attr);
    if (!matchesName(v, false)) {
      schemaError(e, path, "invalid label '" + v + "'");
    }
    if (!Label::isValid(v)) invariant(e.span, path, "'" + v + "' is a reserved word");
    return Label(v);
  }

  static Identifier identifier(const XmlElement& e, const std::string& path,
                               std::string_view attr) {
    const std::string& v = *e.attribute(attr);
    if (!matchesName(v, true)) schemaError(e, path, "invalid variable name '" + v + "'");
    if (!Identifier::isValid(v)) invariant(e.span, path, "'" + v + "' is a reserved word");
    return Identifier(v);
  }

  Label define(const XmlElement& e, const std::string& path, const std::string& owner) {
    Label l = label(e, path, "name");
    definitions_.push_back({l.str(), e.span, path});
    sources_.record(Site::Definition, owner.empty() ? l.str() : owner, e.span);
    return l;
  }

  Contract contract(const XmlElement& e, const std::string& path) {
    if (e.name != "contract") unexpected(e, path);
    attributes(e, path, {"name"}, {});
    noText(e, path);
    Label name = define(e, path, "");
    const std::string& owner = name.str();

    Cursor cur(e);
    std::optional<NounPhrase> agent;
    if (const XmlElement* a = cur.next("agent")) {
      const std::string apath = childPath(e, *a, path);
      attributes(*a, apath, {}, {});
      noText(*a, apath);
      agent = singleNounPhrase(*a, apath);
    }
    std::vector<Guard> guards;
    if (const XmlElement* g = cur.next("guard")) {
      const std::string gpath = childPath(e, *g, path);
      attributes(*g, gpath, {}, {});
      noText(*g, gpath);
      for (const auto& child : g->children) {
        const std::string cpath = childPath(*g, *child, gpath);
        if (child->name == "cmp") {
          plain(*child, cpath, {"var", "op", "value"}, {"negated"});
          guards.push_back(Comparison{identifier(*child, cpath, "var"),
                                      CmpOp(enumValue(*child, cpath, "op", kCmpNames)),
                                      value(*child, cpath), negated(*child, cpath)});
        } else if (child->name == "done") {
          plain(*child, cpath, {"action"}, {"negated"});
          guards.push_back(DoneTest{label(*child, cpath, "action"), negated(*child, cpath)});
        } else {
          unexpected(*child, cpath);
        }
        sources_.record(Site::Guard, owner, child->span, guards.size() - 1);
      }
      if (guards.empty()) schemaError(*g, gpath, "<guard> needs at least one condition");
    }
    std::vector<TimeRestriction> timing;
    if (const XmlElement* t = cur.next("timing")) {
      const std::string tpath = childPath(e, *t, path);
      attributes(*t, tpath, {}, {});
      noText(*t, tpath);
      for (const auto& child : t->children) {
        const std::string cpath = childPath(*t, *child, tpath);
        if (child->name != "cmp") unexpected(*child, cpath);
        plain(*child, cpath, {"clock", "op", "value"}, {"negated"});
        const std::string& clock = *child->attribute("clock");
        if (clock.rfind("t_", 0) != 0 || !matchesName(std::string_view(clock).substr(2), false)) {
          schemaError(*child, cpath, "invalid clock name '" + clock + "'");
        }
        if (!ClockName::isValid(clock)) {
          invariant(child->span, cpath, "'" + clock + "' names a reserved word");
        }
        timing.push_back(TimeRestriction{ClockName(clock),
                                         CmpOp(enumValue(*child, cpath, "op", kCmpNames)),
                                         value(*child, cpath), negated(*child, cpath)});
        sources_.record(Site::Timing, owner, child->span, timing.size() - 1);
      }
      if (timing.empty()) schemaError(*t, tpath, "<timing> needs at least one <cmp>");
    }

    const XmlElement* b = cur.take();
    if (!b) schemaError(e, path, "missing body element");
    const std::string bpath = childPath(e, *b, path);
    std::optional<Body> body;
    for (std::size_t m = 0; m < 3; ++m) {
      if (b->name == kModalNames[m]) {
        attributes(*b, bpath, {}, {});
        noText(*b, bpath);
        if (b->children.size() != 1) {
          schemaError(*b, bpath, "<" + b->name + "> needs exactly one action element");
        }
        const XmlElement& child = *b->children.front();
        body = Modal{Modality(m), actionExpr(child, childPath(*b, child, bpath), owner)};
      }
    }
    if (b->name == "refinement") {
      attributes(*b, bpath, {"op"}, {});
      noText(*b, bpath);
      const RefOp op = RefOp(enumValue(*b, bpath, "op", kRefOpNames));
      std::vector<Contract> parts;
      for (const auto& child : b->children) {
        parts.push_back(contract(*child, childPath(*b, *child, bpath)));
      }
      if (parts.size() < 2) schemaError(*b, bpath, "<refinement> needs at least two contracts");
      body = Refinement(op, std::move(parts));
    } else if (b->name == "rep") {
      attributes(*b, bpath, {}, {});
      noText(*b, bpath);
      if (b->children.size() != 1) schemaError(*b, bpath, "<rep> needs exactly one <contract>");
      const XmlElement& child = *b->children.front();
      body = Repetition{Box<Contract>(contract(child, childPath(*b, child, bpath)))};
    } else if (b->name == "crossref") {
      plain(*b, bpath, {"target"});
      sources_.record(Site::CrossRef, owner, b->span);
      body = CrossRef{label(*b, bpath, "target")};
    } else if (!body) {
      unexpected(*b, bpath);
    }

    std::optional<Reparation> reparation;
    if (const XmlElement* r = cur.next("reparation")) {
      const std::string rpath = childPath(e, *r, path);
      attributes(*r, rpath, {}, {"target"});
      noText(*r, rpath);
      sources_.record(Site::Reparation, owner, r->span);
      if (r->attribute("target")) {
        noChildren(*r, rpath);
        reparation = ReparationRef{label(*r, rpath, "target")};
      } else {
        if (r->children.size() != 1) {
          schemaError(*r, rpath, "<reparation> needs a target or exactly one <contract>");
        }
        const XmlElement& child = *r->children.front();
        reparation = Box<Contract>(contract(child, childPath(*r, child, rpath)));
      }
    }
    if (const XmlElement* extra = cur.rest()) unexpected(*extra, childPath(e, *extra, path));

    try {
      return Contract(std::move(name), std::move(agent), std::move(guards), std::move(timing),
                      std::move(*body), std::move(reparation));
    } catch (const ModelError& err) {
      invariant(e.span, path, err.what());
    }
  }

  ActionExpr actionExpr(const XmlElement& e, const std::string& path,
                        const std::string& owner) {
    if (e.name == "action") {
      attributes(e, path, {"verb"}, {});
      noText(e, path);
      VerbRef verb{lemma(e, path, "verb")};
      if (e.children.empty()) return Action::intransitive(std::move(verb));
      const XmlElement& obj = *e.children.front();
      const std::string opath = childPath(e, obj, path);
      if (obj.name != "object") unexpected(obj, opath);
      if (e.children.size() > 1) {
        unexpected(*e.children[1], childPath(e, *e.children[1], path));
      }
      attributes(obj, opath, {}, {});
      noText(obj, opath);
      return Action::transitive(std::move(verb), singleNounPhrase(obj, opath));
    }
    if (e.name != "refinement") unexpected(e, path);
    attributes(e, path, {"op"}, {});
    noText(e, path);
    const RefOp op = RefOp(enumValue(e, path, "op", kRefOpNames));
    std::vector<NamedAction> parts;
    for (const auto& child : e.children) {
      const std::string cpath = childPath(e, *child, path);
      if (child->name != "namedAction") unexpected(*child, cpath);
      attributes(*child, cpath, {"name"}, {});
      noText(*child, cpath);
      Label name = define(*child, cpath, "");
      if (child->children.size() != 1) {
        schemaError(*child, cpath, "<namedAction> needs exactly one action element");
      }
      const XmlElement& inner = *child->children.front();
      parts.push_back(
          NamedAction{std::move(name), actionExpr(inner, childPath(*child, inner, cpath), owner)});
    }
    if (parts.size() < 2) schemaError(e, path, "<refinement> needs at least two <namedAction>");
    return ActionExpr(op, std::move(parts));
  }

  NounPhrase singleNounPhrase(const XmlElement& holder, const std::string& path) {
    if (holder.children.size() != 1) {
      schemaError(holder, path, "<" + holder.name + "> needs exactly one <np>");
    }
    const XmlElement& np = *holder.children.front();
    return nounPhrase(np, childPath(holder, np, path));
  }

  NounPhrase nounPhrase(const XmlElement& e, const std::string& path) {
    if (e.name != "np") unexpected(e, path);
    attributes(e, path, {}, {});
    noText(e, path);
    if (e.children.size() != 1) schemaError(e, path, "<np> needs exactly one child");
    const XmlElement& k = *e.children.front();
    const std::string kpath = childPath(e, k, path);
    try {
      if (k.name == "proper") {
        plain(k, kpath, {"lemma", "number"});
        return NounPhrase::proper(nounRef(k, kpath));
      }
      if (k.name == "coord") {
        attributes(k, kpath, {}, {});
        noText(k, kpath);
        if (k.children.size() != 2) schemaError(k, kpath, "<coord> needs exactly two <np>");
        NounPhrase left = nounPhrase(*k.children[0], childPath(k, *k.children[0], kpath));
        NounPhrase right = nounPhrase(*k.children[1], childPath(k, *k.children[1], kpath));
        return NounPhrase::coord(std::move(left), std::move(right));
      }
      if (k.name != "common") unexpected(k, kpath);
      attributes(k, kpath, {}, {"det"});
      noText(k, kpath);
      std::optional<Determiner> det;
      if (const std::string* d = k.attribute("det")) {
        if (*d == "a") {
          det = Determiner::Indefinite;
        } else if (*d == "the") {
          det = Determiner::Definite;
        } else {
          schemaError(k, kpath, "invalid value '" + *d + "' for attribute 'det'");
        }
      }
      Cursor cur(k);
      std::vector<AdjRef> adjectives;
      while (const XmlElement* a = cur.next("adj")) {
        const std::string apath = childPath(k, *a, kpath);
        plain(*a, apath, {"lemma"});
        adjectives.push_back(AdjRef{lemma(*a, apath, "lemma")});
      }
      const XmlElement* n = cur.next("noun");
      if (!n) schemaError(k, kpath, "<common> needs a <noun>");
      const std::string npath = childPath(k, *n, kpath);
      plain(*n, npath, {"lemma", "number"});
      NounRef head = nounRef(*n, npath);
      std::optional<PrepPhrase> modifier;
      if (const XmlElement* pp = cur.next("pp")) {
        const std::string ppath = childPath(k, *pp, kpath);
        attributes(*pp, ppath, {"prep"}, {});
        noText(*pp, ppath);
        const Preposition prep = Preposition(enumValue(*pp, ppath, "prep", kPrepNames));
        modifier = PrepPhrase{prep, Box<NounPhrase>(singleNounPhrase(*pp, ppath))};
      }
      if (const XmlElement* extra = cur.rest()) unexpected(*extra, childPath(k, *extra, kpath));
      return NounPhrase::common(det, std::move(adjectives), std::move(head),
                                std::move(modifier));
    } catch (const ModelError& err) {
      invariant(k.span, kpath, err.what());
    }
  }

  static NounRef nounRef(const XmlElement& e, const std::string& path) {
    constexpr std::string_view kNumbers[] = {"sg", "pl"};
    return NounRef{lemma(e, path, "lemma"), Number(enumValue(e, path, "number", kNumbers))};
  }

  SourceMap& sources_;
  std::vector<Definition> definitions_;
};

}  // namespace

std::string toComl(const Document& doc) {
  Writer w;
  w.document(doc);
  return w.take();
}

ComlResult fromComl(std::string_view xml) {
  ComlResult out;
  detail::XmlParseResult parsed = detail::parseXml(xml);
  if (!parsed.root) {
    out.diagnostics.push_back(*parsed.error);
    return out;
  }
  try {
    Reader reader(out.sources);
    out.document.emplace(reader.document(*parsed.root));
  } catch (const Invalid& e) {
    out.diagnostics.push_back(e.diagnostic);
    out.sources = SourceMap();
  }
  return out;
}

}  // namespace codia
