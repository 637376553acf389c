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

#ifndef CODIA_DIAGNOSTIC_JSON_HPP_
#define CODIA_DIAGNOSTIC_JSON_HPP_

#include <vector>

#include "codia/diagnostic.hpp"
#include "json.hpp"

namespace codia {

// {"severity", "code", "message", "span": {startLine, startColumn, endLine,
// endColumn}}; shared by the CLI's --json mode and the HTTP service.
nlohmann::json toJson(const Diagnostic& d);
nlohmann::json toJson(const std::vector<Diagnostic>& ds);

}  // namespace codia

#endif  // CODIA_DIAGNOSTIC_JSON_HPP_
