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

#include <random>
#include <vector>

#include "quadkit/polynomial.hpp"

namespace quadkit::testing {

struct T {
    double c;
    std::vector<int> vars;  // 1-based; negative k = auxiliary a(-k)
};

inline Polynomial make_poly(const std::vector<T>& ts) {
    Polynomial p;
    for (const auto& t : ts) {
        Monomial m;
        for (int v : t.vars)
            m.insert(v > 0 ? VarId::original(static_cast<std::uint32_t>(v - 1))
                           : VarId::aux(static_cast<std::uint32_t>(-v - 1)));
        p.add_term(m, t.c);
    }
    p.normalize();
    return p;
}

inline Polynomial random_poly(std::mt19937_64& rng, int n_vars, int max_degree,
                              double lo = -10.0, double hi = 10.0, double density = 0.6) {
    std::uniform_real_distribution<double> coeff(lo, hi);
    std::uniform_real_distribution<double> keep(0.0, 1.0);
    Polynomial p;
    // every subset of size <= max_degree, kept with probability `density`
    for (std::uint32_t mask = 0; mask < (1u << n_vars); ++mask) {
        if (__builtin_popcount(mask) > max_degree) continue;
        if (keep(rng) > density) continue;
        Monomial m;
        for (int j = 0; j < n_vars; ++j)
            if (mask & (1u << j)) m.insert(VarId::original(j));
        p.add_term(m, coeff(rng));
    }
    p.normalize();
    return p;
}

/// Random degree <= 4 polynomial with a bounded number of super-quadratic
/// terms, so quadratize_n stays within the exhaustive-verification budget
/// (one auxiliary per group, groups <= super-quadratic terms).
inline Polynomial random_sparse_poly(std::mt19937_64& rng, int n_vars, int n_super,
                                     int n_low, double lo = -10.0, double hi = 10.0) {
    std::uniform_real_distribution<double> coeff(lo, hi);
    auto random_monomial = [&](int degree) {
        Monomial m;
        while (m.degree() < degree) m.insert(VarId::original(rng() % n_vars));
        return m;
    };
    Polynomial p;
    for (int i = 0; i < n_super; ++i) p.add_term(random_monomial(3 + int(rng() % 2)), coeff(rng));
    for (int i = 0; i < n_low; ++i) p.add_term(random_monomial(int(rng() % 3)), coeff(rng));
    p.normalize();
    return p;
}

/// Test-local exhaustive check, independent of the dense-kernel verification
/// path: walks every assignment with Polynomial::evaluate.
inline bool naive_perfect(const Polynomial& f, const Polynomial& q,
                          const std::vector<VarId>& aux, double tol = 1e-9) {
    std::vector<VarId> vars = f.variables();
    for (VarId v : q.original_variables()) {
        bool present = false;
        for (VarId w : vars) present = present || w == v;
        if (!present) vars.push_back(v);
    }
    const std::size_t n = vars.size(), m = aux.size();
    for (std::size_t x = 0; x < (std::size_t{1} << n); ++x) {
        Assignment a;
        for (std::size_t j = 0; j < n; ++j) a[vars[j]] = (x >> j) & 1;
        double fx = f.evaluate(a);
        double best = 0.0;
        for (std::size_t y = 0; y < (std::size_t{1} << m); ++y) {
            Assignment b = a;
            for (std::size_t j = 0; j < m; ++j) b[aux[j]] = (y >> j) & 1;
            double v = q.evaluate(b);
            if (y == 0 || v < best) best = v;
        }
        if (std::abs(best - fx) > tol * (1.0 + std::abs(fx))) return false;
    }
    return true;
}

}  // namespace quadkit::testing
