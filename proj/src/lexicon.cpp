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

#include "codia/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "codia/keywords.hpp"

namespace codia {
namespace {

bool isWordChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '\'';
}

bool isWord(std::string_view w) {
  return !w.empty() && std::all_of(w.begin(), w.end(), isWordChar) &&
         !(w[0] >= '0' && w[0] <= '9');
}

std::vector<std::string> splitFields(std::string_view line) {
  std::vector<std::string> fields;
  std::istringstream in{std::string(line)};
  std::string f;
  while (in >> f) fields.push_back(f);
  return fields;
}

SourceSpan lineSpan(int line, std::string_view text) {
  return {line, 1, line, static_cast<int>(text.size()) + 1};
}

}  // namespace

std::optional<std::string> NounEntry::form(Number n) const {
  if (defaultNumber == Number::Plural) {
    if (n == Number::Singular) return std::nullopt;
    return pluralForm.value_or(singularForm);
  }
  if (n == Number::Singular) return singularForm;
  return pluralForm;
}

std::string VerbEntry::baseText() const {
  std::string out;
  for (const auto& w : baseForm) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

const NounEntry* Lexicon::noun(std::string_view lemma) const {
  auto it = nouns_.find(lemma);
  return it == nouns_.end() ? nullptr : &it->second;
}

const VerbEntry* Lexicon::verb(std::string_view lemma) const {
  auto it = verbs_.find(lemma);
  return it == verbs_.end() ? nullptr : &it->second;
}

const AdjEntry* Lexicon::adjective(std::string_view lemma) const {
  auto it = adjectives_.find(lemma);
  return it == adjectives_.end() ? nullptr : &it->second;
}

std::vector<NounRef> Lexicon::nounReadings(std::string_view surface) const {
  std::vector<NounRef> out;
  auto [lo, hi] = nounForms_.equal_range(surface);
  for (auto it = lo; it != hi; ++it) out.push_back(it->second);
  return out;
}

bool Lexicon::isAdjective(std::string_view surface) const {
  return adjectives_.contains(surface);
}

std::vector<const VerbEntry*> Lexicon::verbsStartingWith(
    std::string_view firstWord) const {
  std::vector<const VerbEntry*> out;
  for (const auto& [lemma, v] : verbs_) {
    if (v.baseForm.front() == firstWord) out.push_back(&v);
  }
  std::stable_sort(out.begin(), out.end(), [](const VerbEntry* a, const VerbEntry* b) {
    return a->baseForm.size() > b->baseForm.size();
  });
  return out;
}

void Lexicon::addNoun(NounEntry e) {
  if (!isWord(e.lemma) || !isWord(e.singularForm) ||
      (e.pluralForm && !isWord(*e.pluralForm))) {
    throw LexiconError("noun '" + e.lemma + "' has a malformed word form");
  }
  if (e.proper && e.pluralForm) {
    throw LexiconError("proper noun '" + e.lemma + "' cannot have a plural form");
  }
  if (e.massNoun && (e.pluralForm || e.defaultNumber != Number::Singular)) {
    throw LexiconError("mass noun '" + e.lemma + "' must be singular only");
  }
  if (nouns_.contains(e.lemma)) {
    throw LexiconError("duplicate noun lemma '" + e.lemma + "'");
  }
  for (Number n : {Number::Singular, Number::Plural}) {
    if (auto f = e.form(n)) nounForms_.emplace(*f, NounRef{e.lemma, n});
  }
  nouns_.emplace(e.lemma, std::move(e));
}

void Lexicon::addVerb(VerbEntry e) {
  if (!isWord(e.lemma) || e.baseForm.empty() ||
      !std::all_of(e.baseForm.begin(), e.baseForm.end(),
                   [](const std::string& w) { return isWord(w); })) {
    throw LexiconError("verb '" + e.lemma + "' has a malformed base form");
  }
  if (verbs_.contains(e.lemma)) {
    throw LexiconError("duplicate verb lemma '" + e.lemma + "'");
  }
  verbs_.emplace(e.lemma, std::move(e));
}

void Lexicon::addAdjective(AdjEntry e) {
  if (!isWord(e.lemma)) {
    throw LexiconError("adjective '" + e.lemma + "' is malformed");
  }
  if (adjectives_.contains(e.lemma)) {
    throw LexiconError("duplicate adjective lemma '" + e.lemma + "'");
  }
  adjectives_.emplace(e.lemma, std::move(e));
}

Lexicon loadLexicon(std::string_view source) {
  Lexicon lex;
  int lineNo = 0;
  std::istringstream in{std::string(source)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineNo;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto f = splitFields(line);
    if (f.empty()) continue;

    std::vector<std::string> forms;
    try {
      if (f[0] == "noun") {
        bool proper = f.size() == 6 && f[5] == "proper";
        if (f.size() != 5 && !proper) {
          throw LexiconError(
              "expected 'noun <lemma> <sg> <pl|-> <sg|pl|mass> [proper]'", lineNo);
        }
        NounEntry e;
        e.lemma = f[1];
        e.singularForm = f[2];
        if (f[3] != "-") e.pluralForm = f[3];
        if (f[4] == "sg") {
          e.defaultNumber = Number::Singular;
        } else if (f[4] == "pl") {
          e.defaultNumber = Number::Plural;
        } else if (f[4] == "mass") {
          e.massNoun = true;
        } else {
          throw LexiconError("unknown noun class '" + f[4] + "'", lineNo);
        }
        e.proper = proper;
        if (e.defaultNumber == Number::Singular && e.pluralForm &&
            *e.pluralForm == e.singularForm) {
          lex.warnings_.push_back(makeWarning(
              code::kLexicon,
              "noun '" + e.lemma + "' has identical singular and plural forms",
              lineSpan(lineNo, raw)));
        }
        forms.push_back(e.singularForm);
        if (e.pluralForm) forms.push_back(*e.pluralForm);
        for (const auto& form : forms) {
          auto clash = lex.nounReadings(form);
          if (!clash.empty()) {
            lex.warnings_.push_back(makeWarning(
                code::kLexicon,
                "noun form '" + form + "' is shared with lemma '" +
                    clash.front().lemma + "'",
                lineSpan(lineNo, raw)));
          }
        }
        lex.addNoun(std::move(e));
      } else if (f[0] == "verb") {
        if (f.size() < 4) {
          throw LexiconError("expected 'verb <lemma> <base...> <intrans|trans>'",
                             lineNo);
        }
        VerbEntry e;
        e.lemma = f[1];
        e.baseForm.assign(f.begin() + 2, f.end() - 1);
        if (f.back() == "intrans") {
          e.arity = Arity::Intransitive;
        } else if (f.back() == "trans") {
          e.arity = Arity::Transitive;
        } else {
          throw LexiconError("unknown verb arity '" + f.back() + "'", lineNo);
        }
        for (const auto& [lemma, other] : lex.verbs()) {
          if (other.baseForm == e.baseForm && other.arity == e.arity) {
            lex.warnings_.push_back(makeWarning(
                code::kLexicon,
                "verb '" + e.lemma + "' is indistinguishable from '" + lemma + "'",
                lineSpan(lineNo, raw)));
          }
        }
        forms = e.baseForm;
        lex.addVerb(std::move(e));
      } else if (f[0] == "adj") {
        if (f.size() != 2) throw LexiconError("expected 'adj <lemma>'", lineNo);
        forms.push_back(f[1]);
        lex.addAdjective(AdjEntry{f[1]});
      } else {
        throw LexiconError("unknown entry kind '" + f[0] + "'", lineNo);
      }
    } catch (const LexiconError& e) {
      if (e.line() > 0) throw;
      throw LexiconError(e.what(), lineNo);
    }
    for (const auto& form : forms) {
      if (isStructuralKeyword(form) || isDeterminerWord(form) ||
          isPrepositionWord(form)) {
        lex.warnings_.push_back(makeWarning(
            code::kLexicon, "word '" + form + "' collides with a reserved word",
            lineSpan(lineNo, raw)));
      }
    }
  }
  return lex;
}

Lexicon loadLexiconFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LexiconError("cannot read lexicon '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return loadLexicon(buf.str());
}

Number npNumber(const NounPhrase& np, const Lexicon& lex) {
  auto resolve = [&](const NounRef& ref) {
    const NounEntry* e = lex.noun(ref.lemma);
    if (!e) throw LexiconError("unknown noun '" + ref.lemma + "'");
    if (!e->form(ref.number)) {
      throw LexiconError("noun '" + ref.lemma + "' has no " +
                         (ref.number == Number::Plural ? "plural" : "singular") +
                         " form");
    }
    return ref.number;
  };
  return std::visit(
      [&](const auto& n) -> Number {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, NounPhrase::Proper>) {
          return resolve(n.noun);
        } else if constexpr (std::is_same_v<T, NounPhrase::Common>) {
          return resolve(n.head);
        } else {
          npNumber(*n.left, lex);
          npNumber(*n.right, lex);
          return Number::Plural;
        }
      },
      np.node());
}

std::string_view copulaFor(Number n) {
  return n == Number::Singular ? "is" : "are";
}

}  // namespace codia
