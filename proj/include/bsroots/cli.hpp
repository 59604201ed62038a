// Copyright 2026 The Authors.
//
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

#ifndef BSROOTS_CLI_HPP_
#define BSROOTS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace bsroots {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,  // selftest mismatch
  kExitParse = 2,
  kExitPrecondition = 3,
  kExitInternal = 4,
};

// args excludes the program name. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bsroots

#endif  // BSROOTS_CLI_HPP_
