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

#include <array>
#include <cstdint>
#include <vector>

#include "quadkit/oracle.hpp"
#include "quadkit/polynomial.hpp"

// Perfect single-auxiliary quadratization of functions on at most 4 binary
// variables. The general such function, up to its quadratic part, is
//
//   A b1b2b3b4 + a123 b1b2b3 + a124 b1b2b4 + a134 b1b3b4 + a234 b2b3b4
//
// and four closed-form gadgets (lemma1..lemma4) cover four coefficient
// regions. Bit flips (b <- 1-b) and variable permutations move any
// coefficient vector into one of the regions; quadratize_4var performs the
// dispatch, always verifies the result exhaustively, and falls back to a
// total search over flip masks x permutations x gadgets if a plan fails.

namespace quadkit::quad4 {

/// Coefficients of the degree >= 3 part of a 4-variable function. Cubic
/// coefficients are stored by omitted variable: cubic[k] multiplies the
/// product of the three variables other than local variable k.
struct Coeffs4 {
    double quartic = 0.0;
    std::array<double, 4> cubic{};  // cubic[0] = a234, .., cubic[3] = a123

    double a123() const { return cubic[3]; }
    double a124() const { return cubic[2]; }
    double a134() const { return cubic[1]; }
    double a234() const { return cubic[0]; }

    /// canonical order: a123 <= a124 <= a134 <= a234
    bool is_canonical() const {
        return a123() <= a124() && a124() <= a134() && a134() <= a234();
    }
};

/// perm[i] = new local index of old local variable i
using Perm4 = std::array<int, 4>;

Perm4 identity_perm();
Perm4 compose(const Perm4& first, const Perm4& second);  // apply first, then second
Perm4 inverse(const Perm4& p);

/// Sorts the cubic coefficients ascending (a123 <= a124 <= a134 <= a234),
/// ties broken by original variable index, and returns the variable
/// permutation realizing the sort.
std::pair<Coeffs4, Perm4> canonicalize(const Coeffs4& c);

enum class Lemma : std::uint8_t { l1 = 1, l2 = 2, l3 = 3, l4 = 4 };

struct CasePlan {
    std::uint8_t flip_mask = 0;  // bit i: flip local variable i (post-permutation labels)
    Perm4 permutation = identity_perm();
    Lemma lemma = Lemma::l1;
    int case_row = 0;     // 1..35 when the plan corresponds to a dispatch-table
                          // cell, 0 otherwise
    bool fallback = false;
};

// The four gadgets. Inputs are coefficient vectors; outputs are quadratics
// over local variables VarId::original(0..3) plus VarId::aux(0) whose minimum
// over the auxiliary equals the input function at every assignment.
//
// Validity regions (checked, PreconditionError when violated; lemma1/lemma2
// are symmetric in the four variables so the checks use the sorted view):
//   lemma1: A >= 0 and one of
//             (a) every cubic >= -A/2
//             (b) -A <= min cubic <= -A/2, all other cubics >= 0
//             (c) -A <= a123 <= -A/2 <= a124 <= a134 <= a234 <= 0
//                 and a123 + a124 >= -A          (sorted labels)
//   lemma2: A <= 0 and every cubic <= 0
//   lemma3: A >= 0, a123 <= -A, -A/2 <= a124 <= a134 <= 0 <= a234
//   lemma4: A >= 0, a123 <= -A/2 <= a124 <= a134 <= a234 <= 0,
//           a123 + a124 <= -A
// lemma3 and lemma4 additionally self-verify their output over all 16 x 2
// assignments and throw InterpretationError on failure.
Polynomial lemma1(const Coeffs4& c);
Polynomial lemma2(const Coeffs4& c);
Polynomial lemma3(const Coeffs4& c);
Polynomial lemma4(const Coeffs4& c);

/// Resolved dispatch for a canonical coefficient vector (quartic may be
/// negative only in the degenerate all-nonpositive case, which lemma2 covers
/// directly; quadratize_4var flips a bit first otherwise). Total: every input
/// receives a plan; quadratize_4var verifies it and falls back if needed.
CasePlan classify_case(const Coeffs4& canonical);

struct GroupProvenance {
    std::vector<VarId> support;
    CasePlan plan;
    Polynomial part_output;  // this group's quadratic, original labels
};

struct Quadratization {
    Polynomial quadratic;
    std::vector<VarId> aux_vars;
    std::vector<GroupProvenance> provenance;
    Tolerance tolerance;
    bool used_fallback = false;
};

/// Quadratizes a function of at most 4 original variables with at most one
/// fresh auxiliary (`aux`). The degree <= 2 part passes through unchanged; a
/// degree <= 2 input is returned as-is with no auxiliary. The result is
/// always verified exhaustively before returning.
Quadratization quadratize_4var(const Polynomial& f, VarId aux, Tolerance tol = {});

}  // namespace quadkit::quad4
