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

// JSON input formats and report serialization. Rationals are written as
// strings "p" or "p/q"; index sets are 1-based in every file and report.
//
// Polynomial:  [{"coeff": "1/2", "exps": [1, 0, 2]}, ...]
//          or  {"n": 4, "terms": [...]}  or  {"n": 4, "poly": "x1*x2 + x3^2"}
// Arrangement: {"n": 2, "forms": [[1, 0], [0, 1], [1, 1]], "mults": [1, 1, 1]}

#ifndef BSROOTS_IO_HPP_
#define BSROOTS_IO_HPP_

#include <string>

#include <nlohmann/json.hpp>

#include "bsroots/arrangement.hpp"
#include "bsroots/fs.hpp"
#include "bsroots/homogeneous.hpp"
#include "bsroots/lattice.hpp"
#include "bsroots/polynomial.hpp"
#include "bsroots/weyl.hpp"

namespace bsroots {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Reads and parses a file; ParseError on I/O or syntax problems.
Json read_json_file(const std::string& path);

Json rational_json(const Rational& q);
// Accepts integers and "p" / "p/q" strings.
Rational rational_from_json(const Json& j);

Json support_json(const Support& s);  // 1-based
Json polynomial_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);
Json arrangement_json(const Arrangement& a);
Arrangement arrangement_from_json(const Json& j);

// {"schema": 1, "command": name}
Json report_header(const std::string& command);

Json analysis_json(const AnalysisReport& r);
Json lattice_json(const LatticeReport& r);
Json screen_json(const ScreenReport& r);
Json split_json(const SplitReport& r);
Json separability_json(const SeparabilityReport& r);
Json euler_search_json(const EulerSearch& e);
Json ideal_check_json(const IdealCheck& c);
Json fs_element_json(const FsElement& e);
Json euler_witness_json(const EulerWitness& w);

}  // namespace bsroots

#endif  // BSROOTS_IO_HPP_
