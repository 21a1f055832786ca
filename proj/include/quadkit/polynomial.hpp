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
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "quadkit/types.hpp"

namespace quadkit {

/// Multilinear pseudo-Boolean polynomial: a finite map from monomials to real
/// coefficients. Coefficients with magnitude below `epsilon` are dropped when
/// the polynomial is normalized, which every mutating operation performs, so
/// term counts are well defined under floating-point rounding.
///
/// All operations are pure or copy-on-write style; values can be shared
/// across threads freely.
class Polynomial {
  public:
    static constexpr double kDefaultEpsilon = 1e-12;

    Polynomial() = default;
    explicit Polynomial(double epsilon) : epsilon_(epsilon) {}

    double epsilon() const { return epsilon_; }

    /// Adds `coeff * monomial`, merging with an existing term.
    void add_term(const Monomial& m, double coeff);

    double coefficient(const Monomial& m) const;

    const std::map<Monomial, double>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    int degree() const;

    /// All distinct variables, sorted (originals first).
    std::vector<VarId> variables() const;
    std::vector<VarId> original_variables() const;
    std::vector<VarId> auxiliary_variables() const;

    /// Sum of coefficient * product of assigned bits over the support.
    /// Throws MissingVariableError when `x` does not cover a variable.
    double evaluate(const Assignment& x) const;

    /// Substitutes b_v <- 1 - b_v for every v in `mask`, expands and merges.
    Polynomial flipped(const std::set<VarId>& mask) const;

    /// Relabels variables; ids absent from the map are kept.
    Polynomial renamed(const std::map<VarId, VarId>& rename) const;

    /// (degree <= 2 part, degree >= 3 part); the two sum back to *this
    /// coefficient-by-coefficient.
    std::pair<Polynomial, Polynomial> degree_split() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(double s);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, double s) { return a *= s; }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    /// max over shared and unshared monomials of |difference|
    double max_coeff_difference(const Polynomial& o) const;

    /// Drops terms with |coefficient| < epsilon.
    void normalize();

  private:
    std::map<Monomial, double> terms_;
    double epsilon_ = kDefaultEpsilon;
};

// Spec-level operation aliases -----------------------------------------------

inline double evaluate(const Polynomial& p, const Assignment& x) { return p.evaluate(x); }

inline Polynomial flip_variables(const Polynomial& p, const std::set<VarId>& mask) {
    return p.flipped(mask);
}

inline std::pair<Polynomial, Polynomial> degree_split(const Polynomial& p) {
    return p.degree_split();
}

/// Unique multilinear polynomial matching a truth table of 2^n values over
/// original variables 0..n-1. Bit j of the row index is the value of variable
/// j (little-endian). n <= 20; values.size() must equal 2^n exactly.
Polynomial truth_table_to_multilinear(std::span<const double> values, int n,
                                      double epsilon = Polynomial::kDefaultEpsilon);

/// Dense evaluation over every assignment of `order` (order[j] is bit j),
/// out.size() == 2^order.size(). The polynomial's variables must all be in
/// `order`. Runs scatter + zeta transform.
void tabulate(const Polynomial& p, std::span<const VarId> order, std::span<double> out);

}  // namespace quadkit
