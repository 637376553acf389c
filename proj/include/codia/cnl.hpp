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

// Controlled-English front end: text to Document and back.
//
// Canonical surface (one contract per top-level line, blocks as bullets):
//
//   variables: paid
//   main : the following, in order
//     - a : if b is done Mary is required to pay otherwise see fine
//     - c : when clock t_a less than 30 Mary is allowed
//       - c1 : to pay , or
//       - c2 : to eat a bagel
//   fine : Mary is required to pay euro
//
// Two-part refinements whose parts both fit on one line are written inline
// (`x and y`, `x or y`, `first x , then y`); anything else is bulleted.

#ifndef CODIA_CNL_HPP_
#define CODIA_CNL_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "codia/ast.hpp"
#include "codia/diagnostic.hpp"
#include "codia/layout.hpp"
#include "codia/lexicon.hpp"

namespace codia {

struct ParseOptions {
  // Name unlabeled bullet items `<parent>_1`, `<parent>_2`, ...
  bool autolabel = false;
};

struct ParseResult {
  std::optional<Document> document;
  std::vector<Diagnostic> diagnostics;
  SourceMap sources;

  bool ok() const { return document.has_value() && !hasErrors(diagnostics); }
};

// Never throws on bad input; every problem becomes a located diagnostic and
// `document` is empty whenever an error was reported.
ParseResult parseDocument(std::string_view text, const Lexicon& lex,
                          const ParseOptions& options = {});

// Canonical text, LF line endings, trailing newline.  Throws LexiconError
// when a word reference does not resolve or a verb is used with the wrong
// arity.
std::string linearize(const Document& doc, const Lexicon& lex);

// Surface text of a noun phrase, e.g. "wrong coins" or "Mary and John".
std::string linearizeNounPhrase(const NounPhrase& np, const Lexicon& lex);

}  // namespace codia

#endif  // CODIA_CNL_HPP_
