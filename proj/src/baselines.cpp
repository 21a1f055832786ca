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

#include "quadkit/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace quadkit {

namespace {

std::uint32_t next_aux_index(const Polynomial& p) {
    std::uint32_t next = 0;
    for (VarId v : p.auxiliary_variables()) next = std::max(next, v.index() + 1);
    return next;
}

}  // namespace

RosenbergResult rosenberg(const Polynomial& p,
                          std::optional<std::vector<std::pair<VarId, VarId>>> pairs,
                          Tolerance tol) {
    if (p.degree() > 4)
        throw DegreeError("rosenberg handles degree <= 4, got degree " +
                          std::to_string(p.degree()));
    RosenbergResult res;
    res.quad.tolerance = tol;
    Polynomial work = p;
    Polynomial penalties_poly(p.epsilon());
    std::uint32_t next_aux = next_aux_index(p);
    const bool greedy = !pairs.has_value();
    std::size_t explicit_pos = 0;

    while (true) {
        std::vector<Monomial> supers;
        for (const auto& [m, c] : work.terms())
            if (m.degree() >= 3) supers.push_back(m);
        if (supers.empty()) break;

        std::pair<VarId, VarId> pick;
        if (greedy) {
            // most frequent pair among remaining super-quadratic terms
            std::map<std::pair<VarId, VarId>, int> counts;
            for (const Monomial& m : supers) {
                auto vs = m.vars();
                for (std::size_t i = 0; i < vs.size(); ++i)
                    for (std::size_t j = i + 1; j < vs.size(); ++j) ++counts[{vs[i], vs[j]}];
            }
            int best = 0;
            for (const auto& [pr, cnt] : counts) {
                if (cnt > best) {
                    best = cnt;
                    pick = pr;
                }
            }
        } else {
            if (explicit_pos >= pairs->size())
                throw DegreeError(
                    "rosenberg: the given pairs do not reduce the polynomial to quadratic");
            pick = (*pairs)[explicit_pos++];
            if (pick.second < pick.first) std::swap(pick.first, pick.second);
        }

        double M = 0.0;
        for (const Monomial& m : supers)
            if (m.contains(pick.first) && m.contains(pick.second))
                M += std::fabs(work.coefficient(m));

        VarId aux = VarId::aux(next_aux++);
        Polynomial substituted(p.epsilon());
        for (const auto& [m, c] : work.terms()) {
            if (m.degree() >= 3 && m.contains(pick.first) && m.contains(pick.second)) {
                Monomial nm = m;
                nm.erase(pick.first);
                nm.erase(pick.second);
                nm.insert(aux);
                substituted.add_term(nm, c);
            } else {
                substituted.add_term(m, c);
            }
        }
        work = std::move(substituted);

        penalties_poly.add_term({pick.first, pick.second}, M);
        penalties_poly.add_term({pick.first, aux}, -2 * M);
        penalties_poly.add_term({pick.second, aux}, -2 * M);
        penalties_poly.add_term({aux}, 3 * M);

        res.pairs.push_back(pick);
        res.penalties.push_back(M);
        res.quad.aux_vars.push_back(aux);
    }

    res.quad.quadratic = work + penalties_poly;
    res.quad.quadratic.normalize();
    quad4::GroupProvenance prov;
    prov.support = p.original_variables();
    prov.part_output = res.quad.quadratic;
    res.quad.provenance.push_back(std::move(prov));
    return res;
}

quad4::Quadratization termwise(const Polynomial& p, Tolerance tol) {
    if (p.degree() > 4)
        throw DegreeError("termwise handles degree <= 4, got degree " +
                          std::to_string(p.degree()));
    auto [low, high] = p.degree_split();
    quad4::Quadratization out;
    out.tolerance = tol;
    out.quadratic = low;
    std::uint32_t next_aux = next_aux_index(p);
    for (const auto& [m, c] : high.terms()) {
        // single-term gadget: positive coefficients through lemma1, negative
        // through lemma2
        quad4::Coeffs4 coeffs;
        if (m.degree() == 4)
            coeffs.quartic = c;
        else
            coeffs.cubic[3] = c;  // local triple {0,1,2}
        Polynomial gadget = c >= 0 ? quad4::lemma1(coeffs) : quad4::lemma2(coeffs);

        VarId aux = VarId::aux(next_aux++);
        std::map<VarId, VarId> to_global;
        auto vs = m.vars();
        for (std::size_t i = 0; i < vs.size(); ++i) to_global[VarId::original(i)] = vs[i];
        to_global[VarId::aux(0)] = aux;
        Polynomial part = gadget.renamed(to_global);

        Polynomial single(p.epsilon());
        single.add_term(m, c);
        auto check = verify_perfect(single, part, {aux}, tol);
        if (!check.ok) throw InternalError("termwise gadget failed verification");

        out.quadratic += part;
        out.aux_vars.push_back(aux);
        quad4::GroupProvenance prov;
        prov.support.assign(vs.begin(), vs.end());
        prov.plan.lemma = c >= 0 ? quad4::Lemma::l1 : quad4::Lemma::l2;
        prov.part_output = part;
        out.provenance.push_back(std::move(prov));
    }
    out.quadratic.normalize();
    return out;
}

ComparisonMetrics metrics(const quad4::Quadratization& q, const Polynomial& original) {
    ComparisonMetrics m;
    m.aux_count = static_cast<int>(q.aux_vars.size());

    std::set<Monomial> preexisting;
    for (const auto& [mono, c] : original.terms())
        if (mono.degree() == 2) preexisting.insert(mono);

    if (!q.provenance.empty()) {
        for (const auto& prov : q.provenance)
            for (const auto& [mono, c] : prov.part_output.terms())
                if (mono.degree() == 2 && !preexisting.count(mono)) ++m.new_quadratic_terms;
    } else {
        for (const auto& [mono, c] : q.quadratic.terms())
            if (mono.degree() == 2 && !preexisting.count(mono)) ++m.new_quadratic_terms;
    }

    bool first = true;
    for (const auto& [mono, c] : q.quadratic.terms()) {
        if (first) {
            m.coeff_min = m.coeff_max = c;
            first = false;
        } else {
            m.coeff_min = std::min(m.coeff_min, c);
            m.coeff_max = std::max(m.coeff_max, c);
        }
    }
    return m;
}

}  // namespace quadkit
