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

#include "codia/layout.hpp"

namespace codia {
namespace {

std::string_view rtrim(std::string_view s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool isBullet(std::string_view content) {
  return content == "-" || content.substr(0, 2) == "- ";
}

int codePoints(std::string_view s) {
  int n = 0;
  for (char c : s) n += (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  return n;
}

SourceSpan lineSpan(int line, int fromColumn, int toColumn) {
  return {line, fromColumn, line, toColumn};
}

}  // namespace

LayoutResult analyzeLayout(std::string_view text) {
  LayoutResult out;
  int lineNumber = 0;
  int previousDepth = -1;  // no top-level line yet
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    ++lineNumber;
    pos = eol + 1;

    std::string_view line = rtrim(raw);
    std::size_t indent = 0;
    bool tab = false;
    while (indent < line.size() && (line[indent] == ' ' || line[indent] == '\t')) {
      tab |= line[indent] == '\t';
      ++indent;
    }
    if (indent == line.size()) continue;  // blank

    const int col = static_cast<int>(indent) + 1;
    const int endCol = codePoints(line) + 1;
    std::string_view content = line.substr(indent);
    if (tab) {
      out.diagnostics.push_back(makeError(code::kLayout,
                                          "indentation must use spaces, not tabs",
                                          lineSpan(lineNumber, 1, col)));
      continue;
    }
    if (indent == 0) {
      if (isBullet(content)) {
        out.diagnostics.push_back(makeError(
            code::kLayout, "a bullet must be indented under a contract",
            lineSpan(lineNumber, 1, 2)));
        continue;
      }
      out.lines.push_back({lineNumber, 0, content, 1});
      previousDepth = 0;
      continue;
    }
    if (indent % 2 != 0) {
      out.diagnostics.push_back(makeError(
          code::kLayout, "indentation must be a multiple of two spaces",
          lineSpan(lineNumber, 1, col)));
      continue;
    }
    if (!isBullet(content)) {
      out.diagnostics.push_back(makeError(
          code::kLayout, "an indented line must start with a bullet '- '",
          lineSpan(lineNumber, col, endCol)));
      continue;
    }
    const int depth = static_cast<int>(indent / 2);
    if (previousDepth < 0) {
      out.diagnostics.push_back(makeError(
          code::kLayout, "bullet appears before any contract",
          lineSpan(lineNumber, col, col + 1)));
      continue;
    }
    if (depth > previousDepth + 1) {
      out.diagnostics.push_back(makeError(
          code::kLayout,
          "bullet is indented more than one level below the previous line",
          lineSpan(lineNumber, 1, col)));
      continue;
    }
    out.lines.push_back({lineNumber, depth, content, col});
    previousDepth = depth;
  }
  return out;
}

UnprettyResult unprettyPrint(std::string_view text) {
  LayoutResult layout = analyzeLayout(text);
  UnprettyResult out;
  out.diagnostics = std::move(layout.diagnostics);
  int open = 0;
  bool first = true;
  auto closeTo = [&](int depth) {
    for (; open > depth; --open) out.text += " }";
  };
  for (const LayoutLine& l : layout.lines) {
    if (l.depth == 0) {
      closeTo(0);
      if (!first) out.text += '\n';
      out.text += l.content;
      first = false;
      continue;
    }
    if (l.depth > open) {
      out.text += " {";
      ++open;
    } else {
      closeTo(l.depth);
    }
    out.text += ' ';
    out.text += l.content;
  }
  closeTo(0);
  if (!text.empty() && text.back() == '\n' && !out.text.empty()) out.text += '\n';
  return out;
}

}  // namespace codia
