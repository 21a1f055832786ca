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

#include "quadkit/partition.hpp"

#include <algorithm>
#include <set>

namespace quadkit {

std::pair<std::vector<TermGroup>, Polynomial> group_terms(const Polynomial& p) {
    if (p.degree() > 4)
        throw DegreeError("grouping handles degree <= 4, got degree " +
                          std::to_string(p.degree()));
    for (VarId v : p.variables())
        if (v.is_aux()) throw PreconditionError("input must not contain auxiliaries");

    auto [residual, high] = p.degree_split();

    // seed order: degree descending, then lexicographic support
    std::vector<Monomial> order;
    for (const auto& [m, c] : high.terms()) order.push_back(m);
    std::stable_sort(order.begin(), order.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() > b.degree();
        return a < b;
    });

    std::set<Monomial> covered;
    std::vector<TermGroup> groups;
    for (const Monomial& seed : order) {
        if (covered.count(seed)) continue;
        std::set<VarId> support(seed.vars().begin(), seed.vars().end());
        TermGroup g;
        g.part = Polynomial(p.epsilon());
        g.part.add_term(seed, high.coefficient(seed));
        covered.insert(seed);
        for (const Monomial& m : order) {
            if (covered.count(m)) continue;
            std::set<VarId> merged = support;
            for (VarId v : m.vars()) merged.insert(v);
            if (merged.size() <= 4) {
                support = std::move(merged);
                g.part.add_term(m, high.coefficient(m));
                covered.insert(m);
            }
        }
        g.support.assign(support.begin(), support.end());
        groups.push_back(std::move(g));
    }
    return {std::move(groups), std::move(residual)};
}

quad4::Quadratization quadratize_n(const Polynomial& p, Tolerance tol) {
    auto [groups, residual] = group_terms(p);
    quad4::Quadratization out;
    out.tolerance = tol;
    out.quadratic = residual;
    std::uint32_t next_aux = 0;
    for (const TermGroup& g : groups) {
        VarId aux = VarId::aux(next_aux);
        quad4::Quadratization part = quad4::quadratize_4var(g.part, aux, tol);
        out.quadratic += part.quadratic;
        if (!part.aux_vars.empty()) ++next_aux;
        for (VarId a : part.aux_vars) out.aux_vars.push_back(a);
        for (auto& prov : part.provenance) out.provenance.push_back(std::move(prov));
        out.used_fallback = out.used_fallback || part.used_fallback;
    }
    out.quadratic.normalize();

    // each group's quadratization is already verified; cross-check globally
    // whenever the exhaustive budget allows
    std::size_t n = p.original_variables().size();
    std::size_t m = out.aux_vars.size();
    if (n <= 16 && m <= 8 && n + m <= 24) {
        auto report = verify_perfect(p, out.quadratic, out.aux_vars, tol);
        if (!report.ok)
            throw InternalError("quadratize_n: assembled output failed verification, worst gap " +
                                std::to_string(report.worst_gap));
    }
    return out;
}

}  // namespace quadkit
