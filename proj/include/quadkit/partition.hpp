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

#include "quadkit/quad4.hpp"

namespace quadkit {

/// A set of at most 4 variables together with the degree >= 3 terms assigned
/// to it. Groups partition the super-quadratic terms of the input.
struct TermGroup {
    std::vector<VarId> support;
    Polynomial part;
};

/// Greedy grouping: repeatedly seed a group with the uncovered super-quadratic
/// term of highest degree (ties by lexicographic support), then absorb every
/// uncovered super-quadratic term whose variables fit in the group's support,
/// growing it up to 4 variables. The residual is the degree <= 2 part.
/// Throws DegreeError when degree(p) > 4.
std::pair<std::vector<TermGroup>, Polynomial> group_terms(const Polynomial& p);

/// Quadratizes each group with one fresh auxiliary and sums the results with
/// the residual; one auxiliary per group, never shared.
quad4::Quadratization quadratize_n(const Polynomial& p, Tolerance tol = {});

}  // namespace quadkit
