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

#ifndef CODIA_KEYWORDS_HPP_
#define CODIA_KEYWORDS_HPP_

#include <span>
#include <string_view>

namespace codia {

// Closed word set of the surface grammar.  None of these may be used as a
// label, and lexicon forms that coincide with one draw a load warning.
std::span<const std::string_view> structuralKeywords();
bool isStructuralKeyword(std::string_view word);

// Closed classes that the lexicon provides implicitly.
bool isDeterminerWord(std::string_view word);
bool isPrepositionWord(std::string_view word);

}  // namespace codia

#endif  // CODIA_KEYWORDS_HPP_
