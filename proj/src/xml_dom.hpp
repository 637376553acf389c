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

#ifndef CODIA_SRC_XML_DOM_HPP_
#define CODIA_SRC_XML_DOM_HPP_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "codia/diagnostic.hpp"

namespace codia::detail {

// Minimal element tree; comments and processing instructions are dropped.
struct XmlElement {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<std::unique_ptr<XmlElement>> children;
  SourceSpan span;               // the start tag's `<name`
  bool hasText = false;          // non-whitespace character data inside
  SourceSpan textSpan;

  const std::string* attribute(std::string_view key) const;
};

struct XmlParseResult {
  std::unique_ptr<XmlElement> root;
  std::optional<Diagnostic> error;  // set iff root is null
};

XmlParseResult parseXml(std::string_view text);

// Escapes &, <, > and " for use in attribute values and text.
std::string xmlEscape(std::string_view text);

}  // namespace codia::detail

#endif  // CODIA_SRC_XML_DOM_HPP_
