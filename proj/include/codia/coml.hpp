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

// COML: the XML interchange form of a Document.  The element structure
// mirrors the model one to one; schema/coml.xsd is the normative schema.

#ifndef CODIA_COML_HPP_
#define CODIA_COML_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "codia/ast.hpp"
#include "codia/diagnostic.hpp"

namespace codia {

// Deterministic: equal documents give byte-identical output.
std::string toComl(const Document& doc);

struct ComlResult {
  std::optional<Document> document;
  std::vector<Diagnostic> diagnostics;
  SourceMap sources;

  bool ok() const { return document.has_value() && !hasErrors(diagnostics); }
};

// Reports the first problem found: `xml-syntax`, `xml-schema` (message
// starts with the element path) or `model-invariant`.
ComlResult fromComl(std::string_view xml);

}  // namespace codia

#endif  // CODIA_COML_HPP_
