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

// Word-level knowledge for parsing and agreement.
//
// Lexicon files are line oriented, `#` starts a comment:
//
//   noun <lemma> <singular> <plural|-> <sg|pl|mass> [proper]
//   verb <lemma> <base form...> <intrans|trans>
//   adj  <lemma>
//
// A verb base form may span several words.  Determiners (a, an, the) and
// prepositions (with, of, to, from) are built in.

#ifndef CODIA_LEXICON_HPP_
#define CODIA_LEXICON_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "codia/ast.hpp"
#include "codia/diagnostic.hpp"

namespace codia {

enum class Arity { Intransitive, Transitive };

struct NounEntry {
  std::string lemma;
  std::string singularForm;
  std::optional<std::string> pluralForm;
  Number defaultNumber = Number::Singular;
  bool proper = false;
  bool massNoun = false;

  // Surface form for the requested number, if the noun has one.
  std::optional<std::string> form(Number n) const;

  friend bool operator==(const NounEntry&, const NounEntry&) = default;
};

struct VerbEntry {
  std::string lemma;
  std::vector<std::string> baseForm;  // one or more words
  Arity arity = Arity::Intransitive;

  std::string baseText() const;

  friend bool operator==(const VerbEntry&, const VerbEntry&) = default;
};

struct AdjEntry {
  std::string lemma;
  friend bool operator==(const AdjEntry&, const AdjEntry&) = default;
};

class LexiconError : public std::runtime_error {
 public:
  LexiconError(const std::string& message, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class Lexicon {
 public:
  const NounEntry* noun(std::string_view lemma) const;
  const VerbEntry* verb(std::string_view lemma) const;
  const AdjEntry* adjective(std::string_view lemma) const;

  const std::map<std::string, NounEntry, std::less<>>& nouns() const { return nouns_; }
  const std::map<std::string, VerbEntry, std::less<>>& verbs() const { return verbs_; }
  const std::map<std::string, AdjEntry, std::less<>>& adjectives() const {
    return adjectives_;
  }

  // Readings of a surface word as a noun form, in lemma order.
  std::vector<NounRef> nounReadings(std::string_view surface) const;
  bool isAdjective(std::string_view surface) const;
  // Verbs whose base form begins with `firstWord`, longest base form first.
  std::vector<const VerbEntry*> verbsStartingWith(std::string_view firstWord) const;

  // Ambiguities found at load time.
  const std::vector<Diagnostic>& warnings() const noexcept { return warnings_; }

  // Throws LexiconError on a duplicate lemma or an entry that breaks the
  // noun invariants.
  void addNoun(NounEntry entry);
  void addVerb(VerbEntry entry);
  void addAdjective(AdjEntry entry);

 private:
  friend Lexicon loadLexicon(std::string_view source);

  std::map<std::string, NounEntry, std::less<>> nouns_;
  std::map<std::string, VerbEntry, std::less<>> verbs_;
  std::map<std::string, AdjEntry, std::less<>> adjectives_;
  std::multimap<std::string, NounRef, std::less<>> nounForms_;
  std::vector<Diagnostic> warnings_;
};

// Throws LexiconError naming the line of the first malformed entry.
Lexicon loadLexicon(std::string_view source);
Lexicon loadLexiconFile(const std::filesystem::path& path);

// Grammatical number of a noun phrase; coordination is always plural.
// Throws LexiconError when a noun lemma does not resolve.
Number npNumber(const NounPhrase& np, const Lexicon& lex);

std::string_view copulaFor(Number n);

}  // namespace codia

#endif  // CODIA_LEXICON_HPP_
