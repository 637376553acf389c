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

#include "codia/keywords.hpp"

#include <algorithm>
#include <array>

namespace codia {
namespace {

constexpr std::array<std::string_view, 33> kKeywords = {
    "all",      "allowed",   "and",    "are",       "clock",     "done",
    "equal",    "first",     "following", "forbidden", "greater", "if",
    "in",       "is",        "less",   "may",       "mustn't",   "not",
    "of",       "one",       "or",     "order",     "otherwise", "repeatedly",
    "required", "see",       "than",   "the",       "then",      "to",
    "variable", "variables", "when",
};

}  // namespace

std::span<const std::string_view> structuralKeywords() { return kKeywords; }

bool isStructuralKeyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

bool isDeterminerWord(std::string_view word) {
  return word == "a" || word == "an" || word == "the";
}

bool isPrepositionWord(std::string_view word) {
  return word == "with" || word == "of" || word == "to" || word == "from";
}

}  // namespace codia
