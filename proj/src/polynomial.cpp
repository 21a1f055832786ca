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

#include "quadkit/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "quadkit/kernels.hpp"

namespace quadkit {

void Polynomial::add_term(const Monomial& m, double coeff) {
    if (coeff == 0.0) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (std::fabs(it->second) < epsilon_) terms_.erase(it);
    }
}

double Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0.0 : it->second;
}

int Polynomial::degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

std::vector<VarId> Polynomial::variables() const {
    std::set<VarId> vs;
    for (const auto& [m, c] : terms_)
        for (VarId v : m.vars()) vs.insert(v);
    return {vs.begin(), vs.end()};
}

std::vector<VarId> Polynomial::original_variables() const {
    std::vector<VarId> out;
    for (VarId v : variables())
        if (!v.is_aux()) out.push_back(v);
    return out;
}

std::vector<VarId> Polynomial::auxiliary_variables() const {
    std::vector<VarId> out;
    for (VarId v : variables())
        if (v.is_aux()) out.push_back(v);
    return out;
}

double Polynomial::evaluate(const Assignment& x) const {
    double total = 0.0;
    for (const auto& [m, c] : terms_) {
        bool on = true;
        for (VarId v : m.vars()) {
            auto it = x.find(v);
            if (it == x.end())
                throw MissingVariableError("assignment does not cover variable " + v.str());
            if (!it->second) {
                on = false;
                break;
            }
        }
        if (on) total += c;
    }
    return total;
}

Polynomial Polynomial::flipped(const std::set<VarId>& mask) const {
    Polynomial out(epsilon_);
    for (const auto& [m, c] : terms_) {
        std::vector<VarId> flip_vars;
        Monomial kept;
        for (VarId v : m.vars()) {
            if (mask.count(v))
                flip_vars.push_back(v);
            else
                kept.insert(v);
        }
        const std::size_t k = flip_vars.size();
        // product of (1 - b_v) over the flipped support, expanded
        for (std::size_t subset = 0; subset < (std::size_t{1} << k); ++subset) {
            Monomial nm = kept;
            int bits = 0;
            for (std::size_t j = 0; j < k; ++j)
                if (subset & (std::size_t{1} << j)) {
                    nm.insert(flip_vars[j]);
                    ++bits;
                }
            out.add_term(nm, (bits % 2 == 0) ? c : -c);
        }
    }
    out.normalize();
    return out;
}

Polynomial Polynomial::renamed(const std::map<VarId, VarId>& rename) const {
    Polynomial out(epsilon_);
    for (const auto& [m, c] : terms_) {
        Monomial nm;
        for (VarId v : m.vars()) {
            auto it = rename.find(v);
            nm.insert(it == rename.end() ? v : it->second);
        }
        out.add_term(nm, c);
    }
    return out;
}

std::pair<Polynomial, Polynomial> Polynomial::degree_split() const {
    Polynomial low(epsilon_), high(epsilon_);
    for (const auto& [m, c] : terms_)
        (m.degree() <= 2 ? low : high).add_term(m, c);
    return {low, high};
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(double s) {
    if (s == 0.0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    normalize();
    return *this;
}

double Polynomial::max_coeff_difference(const Polynomial& o) const {
    double worst = 0.0;
    for (const auto& [m, c] : terms_) worst = std::max(worst, std::fabs(c - o.coefficient(m)));
    for (const auto& [m, c] : o.terms_)
        if (!terms_.count(m)) worst = std::max(worst, std::fabs(c));
    return worst;
}

void Polynomial::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = std::fabs(it->second) < epsilon_ ? terms_.erase(it) : std::next(it);
}

Polynomial truth_table_to_multilinear(std::span<const double> values, int n, double epsilon) {
    if (n < 0 || n > 20)
        throw BudgetError("truth table dimension must satisfy 0 <= n <= 20, got " +
                          std::to_string(n));
    if (values.size() != (std::size_t{1} << n))
        throw Error("truth table length mismatch: expected 2^" + std::to_string(n) + " = " +
                    std::to_string(std::size_t{1} << n) + " values, got " +
                    std::to_string(values.size()));
    std::vector<double> table(values.begin(), values.end());
    kernels::mobius_transform(table, static_cast<unsigned>(n));
    Polynomial p(epsilon);
    for (std::size_t x = 0; x < table.size(); ++x) {
        if (std::fabs(table[x]) < epsilon) continue;
        Monomial m;
        for (int j = 0; j < n; ++j)
            if (x & (std::size_t{1} << j)) m.insert(VarId::original(static_cast<std::uint32_t>(j)));
        p.add_term(m, table[x]);
    }
    return p;
}

void tabulate(const Polynomial& p, std::span<const VarId> order, std::span<double> out) {
    std::map<VarId, unsigned> slot;
    for (std::size_t j = 0; j < order.size(); ++j) slot[order[j]] = static_cast<unsigned>(j);
    std::fill(out.begin(), out.end(), 0.0);
    for (const auto& [m, c] : p.terms()) {
        std::size_t mask = 0;
        for (VarId v : m.vars()) {
            auto it = slot.find(v);
            if (it == slot.end())
                throw MissingVariableError("variable " + v.str() + " not in tabulation order");
            mask |= std::size_t{1} << it->second;
        }
        out[mask] += c;
    }
    kernels::zeta_transform(out, static_cast<unsigned>(order.size()));
}

}  // namespace quadkit
