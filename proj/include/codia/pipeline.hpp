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

// Format-agnostic loading shared by the CLI and the service.

#ifndef CODIA_PIPELINE_HPP_
#define CODIA_PIPELINE_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "codia/cnl.hpp"
#include "codia/coml.hpp"
#include "codia/validate.hpp"

namespace codia {

enum class Format { Cnl, Coml };

struct Loaded {
  std::optional<Document> document;
  std::vector<Diagnostic> diagnostics;
  SourceMap sources;
};

// COML input is also checked against the lexicon, since nothing else ties
// its lemmas to known words.
Loaded loadDocument(std::string_view text, Format format, const Lexicon& lex,
                    const ParseOptions& options = {});

// loadDocument followed by validateDocument when loading succeeded.
Loaded lintDocument(std::string_view text, Format format, const Lexicon& lex,
                    const ParseOptions& options = {});

}  // namespace codia

#endif  // CODIA_PIPELINE_HPP_
