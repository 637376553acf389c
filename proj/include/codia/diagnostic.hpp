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

#ifndef CODIA_DIAGNOSTIC_HPP_
#define CODIA_DIAGNOSTIC_HPP_

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace codia {

// 1-based positions; columns count code points; the end is exclusive.
struct SourceSpan {
  int startLine = 1;
  int startColumn = 1;
  int endLine = 1;
  int endColumn = 1;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
  friend auto operator<=>(const SourceSpan&, const SourceSpan&) = default;
};

SourceSpan cover(const SourceSpan& first, const SourceSpan& last);

// True when both endpoints address a character of `text` or the position
// just past the end of a line.
bool spanWithin(const SourceSpan& span, std::string_view text);

// Position of the first byte that is not part of a well-formed UTF-8
// sequence, or nullopt for valid text.
std::optional<SourceSpan> firstInvalidUtf8(std::string_view text);

enum class Severity { Error, Warning };

// Stable diagnostic codes; see docs/diagnostics.md.
namespace code {
inline constexpr std::string_view kLayout = "layout";
inline constexpr std::string_view kGrammar = "grammar";
inline constexpr std::string_view kUnknownWord = "unknown-word";
inline constexpr std::string_view kAgreement = "agreement";
inline constexpr std::string_view kDuplicateLabel = "duplicate-label";
inline constexpr std::string_view kXmlSyntax = "xml-syntax";
inline constexpr std::string_view kXmlSchema = "xml-schema";
inline constexpr std::string_view kModelInvariant = "model-invariant";
inline constexpr std::string_view kUnresolvedReference = "unresolved-reference";
inline constexpr std::string_view kUnresolvedDone = "unresolved-done";
inline constexpr std::string_view kUnresolvedClock = "unresolved-clock";
inline constexpr std::string_view kReparationCycle = "reparation-cycle";
inline constexpr std::string_view kUndeclaredVariable = "undeclared-variable";
inline constexpr std::string_view kLexicon = "lexicon";
}  // namespace code

bool isKnownCode(std::string_view code);

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;
  std::string message;
  SourceSpan span;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

Diagnostic makeError(std::string_view code, std::string message, SourceSpan span);
Diagnostic makeWarning(std::string_view code, std::string message, SourceSpan span);

bool hasErrors(const std::vector<Diagnostic>& diagnostics);

std::string_view toString(Severity s);

// `file:line:col: severity[code]: message`
std::string formatDiagnostic(const Diagnostic& d, std::string_view file);

// Where a piece of a document came from.  Keys identify a site by the label
// of the box that owns it, which is unique within a valid document.
enum class Site {
  Definition,   // the label of a box
  Reparation,   // target of `otherwise see X`
  CrossRef,     // target of a `see X` body
  Guard,        // guard number `index` of the box
  Timing,       // time restriction number `index` of the box
};

struct SiteKey {
  Site site;
  std::string owner;
  std::size_t index = 0;
  friend auto operator<=>(const SiteKey&, const SiteKey&) = default;
};

class SourceMap {
 public:
  void record(Site site, std::string owner, SourceSpan span, std::size_t index = 0);
  std::optional<SourceSpan> find(Site site, const std::string& owner,
                                 std::size_t index = 0) const;
  bool empty() const noexcept { return spans_.empty(); }

 private:
  std::map<SiteKey, SourceSpan> spans_;
};

}  // namespace codia

#endif  // CODIA_DIAGNOSTIC_HPP_
