// Copyright 2026 The quadkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "quadkit/quad4.hpp"

// Built-in example functions and their reference outputs, used by the
// `reproduce` command and the test suites. Reference quadratics are stored in
// original variable labels with the group's auxiliary as a1 (rename before
// comparing against a pipeline that assigned a different auxiliary).

namespace quadkit::fixtures {

// 11-term, 8-variable, degree-4 function
Polynomial example_a();
// 4N-variable chain, N >= 1
Polynomial example_b(int n_groups);
// 12-term, 5-variable, degree-4, all terms at least cubic
Polynomial example_c();
// 15-term, 5-variable: every possible super-quadratic term
Polynomial example_d();
// arctan(b1+b2) * e^min(b2,b3) * sqrt(5 b4), tabulated over 2^4 rows
std::vector<double> example_e_truth_table();
// the same function's polynomial with coefficients rounded to 2 decimals
Polynomial example_e_rounded();

/// Reference group quadratics, keyed by sorted 1-based support indices.
/// The auxiliary appears as a1.
std::map<std::vector<int>, Polynomial> reference_groups_a();
std::map<std::vector<int>, Polynomial> reference_groups_c();
std::map<std::vector<int>, Polynomial> reference_groups_d();

/// Reference quadratization of example E built from the 2-decimal inputs:
/// coefficient magnitudes match the reference figures to 2 decimals.
Polynomial reference_e_quadratic();

/// Pairwise-cover quadratization of example D, transcribed as data
/// (a1=b1b2, a2=b1b3, a3=b4b5, a4=b2b3, a5=b1b2b3). Parts hold the
/// transcription chunks for term counting.
quad4::Quadratization pairwise_cover_fixture_d();

}  // namespace quadkit::fixtures
