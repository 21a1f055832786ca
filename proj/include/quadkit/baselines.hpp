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
#include <utility>
#include <vector>

#include "quadkit/quad4.hpp"

// Earlier quadratization strategies, kept for comparison, plus the metrics
// used by the compare reports.

namespace quadkit {

struct ComparisonMetrics {
    int aux_count = 0;
    // degree-2 monomials introduced by the quadratization, counted per
    // provenance part and excluding monomials already present in the input
    int new_quadratic_terms = 0;
    // over all coefficients of the merged expanded output
    double coeff_min = 0.0;
    double coeff_max = 0.0;
};

struct RosenbergResult {
    quad4::Quadratization quad;
    std::vector<std::pair<VarId, VarId>> pairs;
    std::vector<double> penalties;  // Gruber-style multiplier per substitution
};

/// Substitution method: each chosen pair (i,j) is replaced by a fresh
/// auxiliary a inside the super-quadratic terms containing it, with penalty
/// M * (b_i b_j - 2 b_i a - 2 b_j a + 3 a), M the sum of |coefficients| of
/// those terms at substitution time. When `pairs` is not given, pairs are
/// picked greedily: the pair occurring in the most remaining super-quadratic
/// terms (ties lexicographic) until the polynomial is quadratic. With
/// explicit pairs that fail to reach degree <= 2, throws DegreeError.
RosenbergResult rosenberg(const Polynomial& p,
                          std::optional<std::vector<std::pair<VarId, VarId>>> pairs = {},
                          Tolerance tol = {});

/// One auxiliary per super-quadratic term: negative terms use the lemma2
/// single-term gadget, positive terms the lemma1 one.
quad4::Quadratization termwise(const Polynomial& p, Tolerance tol = {});

ComparisonMetrics metrics(const quad4::Quadratization& q, const Polynomial& original);

}  // namespace quadkit
