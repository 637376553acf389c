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

#include "codia/diagnostic_json.hpp"

namespace codia {

nlohmann::json toJson(const Diagnostic& d) {
  return {
      {"severity", std::string(toString(d.severity))},
      {"code", d.code},
      {"message", d.message},
      {"span",
       {{"startLine", d.span.startLine},
        {"startColumn", d.span.startColumn},
        {"endLine", d.span.endLine},
        {"endColumn", d.span.endColumn}}},
  };
}

nlohmann::json toJson(const std::vector<Diagnostic>& ds) {
  nlohmann::json out = nlohmann::json::array();
  for (const Diagnostic& d : ds) out.push_back(toJson(d));
  return out;
}

}  // namespace codia
