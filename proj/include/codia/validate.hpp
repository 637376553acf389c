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

// Whole-document checks and derived clocks.

#ifndef CODIA_VALIDATE_HPP_
#define CODIA_VALIDATE_HPP_

#include <set>
#include <vector>

#include "codia/ast.hpp"
#include "codia/diagnostic.hpp"

namespace codia {

// Name resolution, reparation cycles and variable declarations.  With a
// source map the findings carry the origin span and are sorted by it;
// without one they have default spans and are sorted by owning label.
//
// Undeclared variables are errors when the document has a `variables`
// preamble and warnings otherwise.
std::vector<Diagnostic> validateDocument(const Document& doc,
                                         const SourceMap* sources = nullptr);

// One clock `t_<label>` per box label.
std::set<ClockName> generateClocks(const Document& doc);

}  // namespace codia

#endif  // CODIA_VALIDATE_HPP_
