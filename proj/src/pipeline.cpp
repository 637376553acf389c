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

#include "codia/pipeline.hpp"

namespace codia {

Loaded loadDocument(std::string_view text, Format format, const Lexicon& lex,
                    const ParseOptions& options) {
  Loaded out;
  if (format == Format::Cnl) {
    ParseResult r = parseDocument(text, lex, options);
    out.document = std::move(r.document);
    out.diagnostics = std::move(r.diagnostics);
    out.sources = std::move(r.sources);
    return out;
  }
  ComlResult r = fromComl(text);
  out.diagnostics = std::move(r.diagnostics);
  out.sources = std::move(r.sources);
  if (r.document) {
    try {
      (void)linearize(*r.document, lex);
      out.document = std::move(r.document);
    } catch (const LexiconError& e) {
      out.diagnostics.push_back(makeError(code::kLexicon, e.what(), SourceSpan{}));
    }
  }
  return out;
}

Loaded lintDocument(std::string_view text, Format format, const Lexicon& lex,
                    const ParseOptions& options) {
  Loaded out = loadDocument(text, format, lex, options);
  if (out.document) {
    for (Diagnostic& d : validateDocument(*out.document, &out.sources)) {
      out.diagnostics.push_back(std::move(d));
    }
  }
  return out;
}

}  // namespace codia
