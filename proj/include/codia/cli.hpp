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

#ifndef CODIA_CLI_HPP_
#define CODIA_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace codia {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDiagnostics = 1;
inline constexpr int kExitFailure = 2;  // I/O, lexicon or usage

// Entry point of the `codia` tool.  `args` excludes the program name; an
// input path of "-" reads `in`.
int runCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
           std::ostream& err);

}  // namespace codia

#endif  // CODIA_CLI_HPP_
