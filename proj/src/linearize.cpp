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

#include "codia/cnl.hpp"

namespace codia {
namespace {

// One output line; depth > 0 lines are bullets.
struct Line {
  int depth;
  std::string text;
};
using Lines = std::vector<Line>;

template <class... F>
struct Overloaded : F... {
  using F::operator()...;
};
template <class... F>
Overloaded(F...) -> Overloaded<F...>;

std::string_view listWord(RefOp op) {
  switch (op) {
    case RefOp::Conj: return "and";
    case RefOp::Choice: return "or";
    case RefOp::Seq: return "then";
  }
  return "and";
}

std::string_view cmpWords(CmpOp op) {
  switch (op) {
    case CmpOp::Less: return "less than";
    case CmpOp::Greater: return "greater than";
    case CmpOp::Equal: return "equal to";
  }
  return "equal to";
}

bool startsWithVowel(std::string_view word) {
  if (word.empty()) return false;
  char c = word.front();
  if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return std::string_view("aeiou").find(c) != std::string_view::npos;
}

class Writer {
 public:
  explicit Writer(const Lexicon& lex) : lex_(lex) {}

  std::string nounPhrase(const NounPhrase& np) const {
    return std::visit(
        Overloaded{
            [&](const NounPhrase::Proper& p) { return noun(p.noun); },
            [&](const NounPhrase::Common& c) {
              std::vector<std::string> words;
              for (const AdjRef& a : c.adjectives) {
                if (!lex_.adjective(a.lemma)) {
                  throw LexiconError("unknown adjective '" + a.lemma + "'");
                }
                words.push_back(a.lemma);
              }
              words.push_back(noun(c.head));
              std::string out;
              if (c.determiner == Determiner::Definite) {
                out = "the ";
              } else if (c.determiner == Determiner::Indefinite) {
                out = startsWithVowel(words.front()) ? "an " : "a ";
              }
              for (std::size_t i = 0; i < words.size(); ++i) {
                if (i) out += ' ';
                out += words[i];
              }
              if (c.modifier) {
                static constexpr std::string_view kPreps[] = {"with", "of", "to", "from"};
                out += ' ';
                out += kPreps[static_cast<int>(c.modifier->prep)];
                out += ' ';
                out += nounPhrase(*c.modifier->object);
              }
              return out;
            },
            [&](const NounPhrase::Coord& c) {
              return nounPhrase(*c.left) + " and " + nounPhrase(*c.right);
            },
        },
        np.node());
  }

  Lines contract(const Contract& c) const {
    const std::string head = c.name().str() + " : " + conditions(c);
    Lines out;
    std::visit(
        Overloaded{
            [&](const Modal& m) { modal(out, head, c, m); },
            [&](const Refinement& r) { refinement(out, head, r); },
            [&](const Repetition& r) {
              Lines inner = contract(*r.inner);
              out.push_back({0, head + "repeatedly " + inner.front().text});
              out.insert(out.end(), inner.begin() + 1, inner.end());
            },
            [&](const CrossRef& x) {
              out.push_back({0, head + "see " + x.target.str()});
            },
        },
        c.body());
    if (c.reparation()) appendReparation(out, *c.reparation());
    return out;
  }

 private:
  std::string noun(const NounRef& ref) const {
    const NounEntry* e = lex_.noun(ref.lemma);
    if (!e) throw LexiconError("unknown noun '" + ref.lemma + "'");
    auto form = e->form(ref.number);
    if (!form) {
      throw LexiconError("noun '" + ref.lemma + "' has no " +
                         (ref.number == Number::Plural ? "plural" : "singular") +
                         " form");
    }
    return *form;
  }

  std::string action(const Action& a) const {
    const VerbEntry* v = lex_.verb(a.verb.lemma);
    if (!v) throw LexiconError("unknown verb '" + a.verb.lemma + "'");
    const bool transitive = v->arity == Arity::Transitive;
    if (transitive != a.isTransitive()) {
      throw LexiconError("verb '" + a.verb.lemma + "' is " +
                         (transitive ? "transitive" : "intransitive"));
    }
    std::string out = v->baseText();
    if (a.object) out += " " + nounPhrase(*a.object);
    return out;
  }

  static std::string conditions(const Contract& c) {
    std::string out;
    for (std::size_t i = 0; i < c.guards().size(); ++i) {
      out += i ? " and " : "if ";
      out += std::visit(
          Overloaded{
              [](const Comparison& g) {
                return "variable " + g.variable.str() + (g.negated ? " not " : " ") +
                       std::string(cmpWords(g.op)) + " " + std::to_string(g.value);
              },
              [](const DoneTest& g) {
                return g.action.str() + (g.negated ? " is not done" : " is done");
              },
          },
          c.guards()[i]);
    }
    if (!out.empty()) out += ' ';
    for (std::size_t i = 0; i < c.timing().size(); ++i) {
      const TimeRestriction& t = c.timing()[i];
      out += i ? "and " : "when ";
      out += "clock " + t.clock.str() + (t.negated ? " not " : " ") +
             std::string(cmpWords(t.op)) + " " + std::to_string(t.value) + " ";
    }
    return out;
  }

  void modal(Lines& out, const std::string& head, const Contract& c,
             const Modal& m) const {
    const std::string agent = nounPhrase(*c.agent());
    const std::string copula(copulaFor(npNumber(*c.agent(), lex_)));
    if (const auto* a = std::get_if<Action>(&m.action.node())) {
      std::string verbGroup;
      switch (m.modality) {
        case Modality::Obligation: verbGroup = copula + " required to "; break;
        case Modality::Permission: verbGroup = "may "; break;
        case Modality::Prohibition: verbGroup = "mustn't "; break;
      }
      out.push_back({0, head + agent + " " + verbGroup + action(*a)});
      return;
    }
    static constexpr std::string_view kAdjectives[] = {"required", "allowed",
                                                       "forbidden"};
    out.push_back({0, head + agent + " " + copula + " " +
                          std::string(kAdjectives[static_cast<int>(m.modality)])});
    actionItems(out, std::get<CompoundAction>(m.action.node()), 1);
  }

  void actionItems(Lines& out, const CompoundAction& ca, int depth) const {
    for (std::size_t i = 0; i < ca.parts.size(); ++i) {
      const NamedAction& part = ca.parts[i];
      const std::string suffix =
          i + 1 == ca.parts.size() ? "" : " , " + std::string(listWord(ca.op));
      if (const auto* a = std::get_if<Action>(&part.expr.node())) {
        out.push_back({depth, part.name.str() + " : to " + action(*a) + suffix});
      } else {
        out.push_back({depth, part.name.str() + " : the following" + suffix});
        actionItems(out, std::get<CompoundAction>(part.expr.node()), depth + 1);
      }
    }
  }

  void refinement(Lines& out, const std::string& head, const Refinement& r) const {
    std::vector<Lines> parts;
    for (const Contract& p : r.parts()) parts.push_back(contract(p));
    if (parts.size() == 2 && parts[0].size() == 1 && parts[1].size() == 1) {
      const std::string& a = parts[0].front().text;
      const std::string& b = parts[1].front().text;
      switch (r.op()) {
        case RefOp::Conj: out.push_back({0, head + a + " and " + b}); break;
        case RefOp::Choice: out.push_back({0, head + a + " or " + b}); break;
        case RefOp::Seq: out.push_back({0, head + "first " + a + " , then " + b}); break;
      }
      return;
    }
    static constexpr std::string_view kKeywords[] = {"all of", "one of",
                                                     "the following, in order"};
    out.push_back({0, head + std::string(kKeywords[static_cast<int>(r.op())])});
    for (const Lines& part : parts) {
      for (const Line& l : part) out.push_back({l.depth + 1, l.text});
    }
  }

  void appendReparation(Lines& out, const Reparation& r) const {
    if (const auto* ref = std::get_if<ReparationRef>(&r)) {
      out.back().text += " otherwise see " + ref->target.str();
      return;
    }
    Lines inner = contract(*std::get<Box<Contract>>(r));
    const int base = out.back().depth;
    out.back().text += " otherwise " + inner.front().text;
    for (std::size_t i = 1; i < inner.size(); ++i) {
      out.push_back({base + inner[i].depth, inner[i].text});
    }
  }

  const Lexicon& lex_;
};

}  // namespace

std::string linearizeNounPhrase(const NounPhrase& np, const Lexicon& lex) {
  return Writer(lex).nounPhrase(np);
}

std::string linearize(const Document& doc, const Lexicon& lex) {
  Writer writer(lex);
  std::string out;
  if (const auto& vars = doc.variables()) {
    out += "variables: ";
    for (std::size_t i = 0; i < vars->size(); ++i) {
      if (i) out += ", ";
      out += (*vars)[i].str();
    }
    out += '\n';
  }
  for (const Contract& c : doc.contracts()) {
    for (const Line& l : writer.contract(c)) {
      if (l.depth > 0) {
        out.append(static_cast<std::size_t>(2 * l.depth), ' ');
        out += "- ";
      }
      out += l.text;
      out += '\n';
    }
  }
  return out;
}

}  // namespace codia
