// Copyright 2026 The peckseq Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PECKSEQ_TOOLS_CLI_APP_HPP_
#define PECKSEQ_TOOLS_CLI_APP_HPP_

#include <exception>
#include <ostream>
#include <string>
#include <vector>

namespace peckseq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBoundViolated = 2;
inline constexpr int kExitPrecisionExhausted = 3;
inline constexpr int kExitInvalidInput = 4;
inline constexpr int kExitInternal = 1;

// Exit status for an error escaping a subcommand.
int exit_code(const std::exception& e);

// Runs one invocation; args excludes the program name.  Results go to out
// (or --out), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace peckseq::cli

#endif  // PECKSEQ_TOOLS_CLI_APP_HPP_
