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

// Acceptance criteria and oracle comparisons, runnable from the command line
// and from the test suite.

#ifndef BSROOTS_SELFTEST_HPP_
#define BSROOTS_SELFTEST_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bsroots/forms.hpp"
#include "bsroots/polynomial.hpp"

namespace bsroots {

inline constexpr std::uint64_t kDefaultSeed = 20261016;

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct NamedCheck {
  int id;
  std::string name;
  std::function<CheckResult(std::uint64_t)> run;
};

// The ten acceptance criteria, in order.
const std::vector<NamedCheck>& acceptance_criteria();

// Extra brute-force comparisons run by the selftest command.
const std::vector<NamedCheck>& oracle_checks();

// Runs a check, turning exceptions into failures.
CheckResult run_check(const NamedCheck& check, std::uint64_t seed);

// h(df ^ omega) + df ^ h(omega) == f omega for f homogeneous of degree d >= 1.
bool homotopy_identity_holds(const Polynomial& f, const DifferentialForm& omega);

}  // namespace bsroots

#endif  // BSROOTS_SELFTEST_HPP_
