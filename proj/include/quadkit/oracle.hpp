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

#include <optional>
#include <vector>

#include "quadkit/polynomial.hpp"

// Ground-truth machinery. verify_perfect checks a claimed quadratization by
// exhaustive enumeration; synthesize_one_aux builds a single-auxiliary
// quadratization from scratch by scanning tight patterns, independent of the
// formula-based constructions it is used to cross-check.

namespace quadkit {

struct Tolerance {
    double abs = 1e-9;
    double rel = 1e-9;

    double at(double reference) const { return abs + rel * (reference < 0 ? -reference : reference); }
};

struct VerificationReport {
    bool ok = false;
    double worst_gap = 0.0;  // max over assignments of |min-over-aux - f|
    Assignment witness;      // assignment attaining worst_gap
};

/// Enumerates all assignments of f's original variables; for each, minimizes q
/// over every combination of the auxiliary variables and compares with f.
/// Budget: n <= 20 originals, m <= 8 auxiliaries, 2^(n+m) <= 2^28; throws
/// BudgetError beyond.
VerificationReport verify_perfect(const Polynomial& f, const Polynomial& q,
                                  const std::vector<VarId>& aux_vars, Tolerance tol = {});

/// Searches all 2^16 tight patterns s: assignments -> {0,1}. For each, solves
/// the 16x16 linear system q(x, s(x)) = f(x) for the 16 coefficients of a
/// general quadratic in the 4 variables plus one auxiliary, then requires
/// q(x, 1-s(x)) >= f(x) - tol at every assignment. Returns the first verified
/// solution in increasing order of the 16-bit pattern word (bit x is s(x)), or
/// nullopt if none exists. Singular systems (pivot < 1e-10) are skipped.
std::optional<Polynomial> synthesize_one_aux(const Polynomial& f, Tolerance tol = {},
                                             VarId aux = VarId::aux(0));

}  // namespace quadkit
