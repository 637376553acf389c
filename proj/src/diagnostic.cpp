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

#include "codia/diagnostic.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

namespace codia {
namespace {

// Code-point length of each line of `text`.
std::vector<int> lineLengths(std::string_view text) {
  std::vector<int> lengths{0};
  for (char c : text) {
    if (c == '\n') {
      lengths.push_back(0);
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      ++lengths.back();
    }
  }
  return lengths;
}

bool positionWithin(int line, int column, const std::vector<int>& lengths) {
  if (line < 1 || line > static_cast<int>(lengths.size())) return false;
  return column >= 1 && column <= lengths[line - 1] + 1;
}

}  // namespace

std::optional<SourceSpan> firstInvalidUtf8(std::string_view text) {
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto b = static_cast<unsigned char>(text[i]);
    std::size_t len = 0;
    std::uint32_t min = 0;
    if (b < 0x80) {
      len = 1;
    } else if ((b & 0xE0) == 0xC0) {
      len = 2;
      min = 0x80;
    } else if ((b & 0xF0) == 0xE0) {
      len = 3;
      min = 0x800;
    } else if ((b & 0xF8) == 0xF0) {
      len = 4;
      min = 0x10000;
    }
    bool ok = len > 0 && i + len <= text.size();
    std::uint32_t cp = len == 1 ? b : b & (0x7F >> len);
    for (std::size_t k = 1; ok && k < len; ++k) {
      const auto c = static_cast<unsigned char>(text[i + k]);
      ok = (c & 0xC0) == 0x80;
      cp = (cp << 6) | (c & 0x3F);
    }
    if (ok && len > 1) ok = cp >= min && cp <= 0x10FFFF && (cp < 0xD800 || cp > 0xDFFF);
    if (!ok) return SourceSpan{line, column, line, column};
    if (b == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    i += len;
  }
  return std::nullopt;
}

SourceSpan cover(const SourceSpan& first, const SourceSpan& last) {
  return {first.startLine, first.startColumn, last.endLine, last.endColumn};
}

bool spanWithin(const SourceSpan& span, std::string_view text) {
  const auto lengths = lineLengths(text);
  if (!positionWithin(span.startLine, span.startColumn, lengths) ||
      !positionWithin(span.endLine, span.endColumn, lengths)) {
    return false;
  }
  return std::pair(span.startLine, span.startColumn) <=
         std::pair(span.endLine, span.endColumn);
}

bool isKnownCode(std::string_view c) {
  static constexpr std::array kAll = {
      code::kLayout,          code::kGrammar,
      code::kUnknownWord,     code::kAgreement,
      code::kDuplicateLabel,  code::kXmlSyntax,
      code::kXmlSchema,       code::kModelInvariant,
      code::kUnresolvedReference, code::kUnresolvedDone,
      code::kUnresolvedClock, code::kReparationCycle,
      code::kUndeclaredVariable, code::kLexicon,
  };
  return std::find(kAll.begin(), kAll.end(), c) != kAll.end();
}

Diagnostic makeError(std::string_view c, std::string message, SourceSpan span) {
  return Diagnostic{Severity::Error, std::string(c), std::move(message), span};
}

Diagnostic makeWarning(std::string_view c, std::string message, SourceSpan span) {
  return Diagnostic{Severity::Warning, std::string(c), std::move(message), span};
}

bool hasErrors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

std::string_view toString(Severity s) {
  return s == Severity::Error ? "error" : "warning";
}

std::string formatDiagnostic(const Diagnostic& d, std::string_view file) {
  std::string out(file);
  out += ':' + std::to_string(d.span.startLine) + ':' +
         std::to_string(d.span.startColumn) + ": ";
  out += toString(d.severity);
  out += '[' + d.code + "]: " + d.message;
  return out;
}

void SourceMap::record(Site site, std::string owner, SourceSpan span,
                       std::size_t index) {
  spans_[SiteKey{site, std::move(owner), index}] = span;
}

std::optional<SourceSpan> SourceMap::find(Site site, const std::string& owner,
                                          std::size_t index) const {
  auto it = spans_.find(SiteKey{site, owner, index});
  if (it == spans_.end()) return std::nullopt;
  return it->second;
}

}  // namespace codia
