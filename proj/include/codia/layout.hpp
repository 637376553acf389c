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

// Layout rules of the CNL surface.
//
// A top-level line starts at column 1.  Every other line is a bullet
// `- ` indented by two spaces per nesting level, at most one level deeper
// than the line before it.  A run of deeper bullets forms a block; the flat
// form replaces each block by `{ ... }` and keeps the bullets as item
// separators:
//
//   1 : all of                        1 : all of { - 1a : x - 1b : y }
//     - 1a : x               ==>
//     - 1b : y

#ifndef CODIA_LAYOUT_HPP_
#define CODIA_LAYOUT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "codia/diagnostic.hpp"

namespace codia {

struct LayoutLine {
  int lineNumber = 0;
  int depth = 0;             // 0 for top-level lines
  std::string_view content;  // from the bullet (or first char), right-trimmed
  int contentColumn = 1;
};

struct LayoutResult {
  std::vector<LayoutLine> lines;  // blank and malformed lines dropped
  std::vector<Diagnostic> diagnostics;
};

LayoutResult analyzeLayout(std::string_view text);

struct UnprettyResult {
  std::string text;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return !hasErrors(diagnostics); }
};

// Flattens bullets into braces, one output line per top-level line.
// Text without bullets comes back unchanged.
UnprettyResult unprettyPrint(std::string_view text);

}  // namespace codia

#endif  // CODIA_LAYOUT_HPP_
