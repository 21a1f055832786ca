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

#include "quadkit/fixtures.hpp"

#include <cmath>

namespace quadkit::fixtures {

namespace {

struct Term {
    double c;
    std::vector<int> vars;  // 1-based originals; negative k means auxiliary a(-k)
};

Polynomial poly(const std::vector<Term>& ts) {
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

constexpr int A1 = -1, A2 = -2, A3 = -3, A4 = -4, A5 = -5;

}  // namespace

Polynomial example_a() {
    return poly({{1, {1, 2, 3, 4}},
                 {1, {1, 2, 3}},
                 {1, {1, 2, 4}},
                 {2, {1, 3, 4}},
                 {3, {2, 3, 4}},
                 {-1, {5, 6, 7, 8}},
                 {-2, {5, 6, 7}},
                 {-3, {5, 6, 8}},
                 {-4, {5, 7, 8}},
                 {-5, {6, 7, 8}},
                 {1, {1, 8}}});
}

Polynomial example_b(int n_groups) {
    std::vector<Term> ts;
    for (int k = 0; k < n_groups; ++k) {
        int b = 4 * k;
        ts.push_back({2, {b + 1, b + 2, b + 3, b + 4}});
        ts.push_back({-1, {b + 1, b + 2, b + 4}});
        if (k + 1 < n_groups) ts.push_back({-1, {b + 4, b + 5}});
    }
    return poly(ts);
}

Polynomial example_c() {
    return poly({{5, {1, 2, 3, 4}},
                 {4, {1, 2, 3, 5}},
                 {3, {1, 2, 4, 5}},
                 {-3, {1, 2, 3}},
                 {-1, {1, 2, 4}},
                 {-5, {1, 2, 5}},
                 {-1, {1, 3, 4}},
                 {-1, {1, 3, 5}},
                 {-1, {1, 4, 5}},
                 {-2, {2, 3, 4}},
                 {-1, {2, 3, 5}},
                 {-4, {2, 4, 5}}});
}

Polynomial example_d() {
    return poly({{5, {1, 2, 3, 4}},  {4, {1, 2, 3, 5}}, {3, {1, 2, 4, 5}}, {2, {1, 3, 4, 5}},
                 {1, {2, 3, 4, 5}}, {-3, {1, 2, 3}},   {-1, {1, 2, 4}},   {-5, {1, 2, 5}},
                 {-1, {1, 3, 4}},   {-1, {1, 3, 5}},   {-1, {1, 4, 5}},   {-2, {2, 3, 4}},
                 {-1, {2, 3, 5}},   {-4, {2, 4, 5}},   {-3, {3, 4, 5}}});
}

std::vector<double> example_e_truth_table() {
    std::vector<double> values(16);
    for (int x = 0; x < 16; ++x) {
        double b1 = (x >> 0) & 1, b2 = (x >> 1) & 1, b3 = (x >> 2) & 1, b4 = (x >> 3) & 1;
        values[x] = std::atan(b1 + b2) * std::exp(std::min(b2, b3)) * std::sqrt(5.0 * b4);
    }
    return values;
}

Polynomial example_e_rounded() {
    return poly({{1.76, {1, 4}},
                 {1.76, {2, 4}},
                 {-1.04, {1, 2, 4}},
                 {3.02, {2, 3, 4}},
                 {1.24, {1, 2, 3, 4}}});
}

std::map<std::vector<int>, Polynomial> reference_groups_a() {
    std::map<std::vector<int>, Polynomial> out;
    out[{1, 2, 3, 4}] = poly({{3, {1, 2}},
                              {4, {1, 3}},
                              {4, {1, 4}},
                              {5, {2, 3}},
                              {5, {2, 4}},
                              {6, {3, 4}},
                              {10, {A1}},
                              {-6, {1, A1}},
                              {-7, {2, A1}},
                              {-8, {3, A1}},
                              {-8, {4, A1}}});
    out[{5, 6, 7, 8}] = poly({{31, {A1}},
                              {-10, {5, A1}},
                              {-11, {6, A1}},
                              {-12, {7, A1}},
                              {-13, {8, A1}}});
    return out;
}

std::map<std::vector<int>, Polynomial> reference_groups_c() {
    std::map<std::vector<int>, Polynomial> out;
    out[{1, 2, 3, 4}] = poly({{1, {1, 2}},
                              {1, {1, 3}},
                              {3, {1, 4}},
                              {2, {2, 4}},
                              {2, {3, 4}},
                              {8, {A1}},
                              {-5, {1, A1}},
                              {-4, {2, A1}},
                              {-4, {3, A1}},
                              {-6, {4, A1}}});
    out[{1, 2, 3, 5}] = poly({{3, {}},
                              {-3, {1}},
                              {6, {2}},
                              {-3, {3}},
                              {5, {5}},
                              {-5, {1, 2}},
                              {3, {1, 3}},
                              {-5, {1, 5}},
                              {-1, {2, 3}},
                              {-1, {3, 5}},
                              {-3, {A1}},
                              {8, {1, A1}},
                              {-6, {2, A1}},
                              {4, {3, A1}},
                              {-5, {5, A1}}});
    out[{1, 2, 4, 5}] = poly({{1, {1}},
                              {4, {2}},
                              {3, {1, 2}},
                              {-1, {1, 4}},
                              {-1, {1, 5}},
                              {-4, {2, 4}},
                              {-4, {2, 5}},
                              {3, {A1}},
                              {-4, {1, A1}},
                              {-7, {2, A1}},
                              {5, {4, A1}},
                              {5, {5, A1}}});
    return out;
}

std::map<std::vector<int>, Polynomial> reference_groups_d() {
    auto out = reference_groups_c();
    out[{1, 3, 4, 5}] = poly({{6, {A1}},
                              {2, {1, A1}},
                              {-3, {3, A1}},
                              {-3, {4, A1}},
                              {-3, {5, A1}}});
    out[{2, 3, 4, 5}] = poly({{1, {2, 3}},
                              {1, {2, 4}},
                              {1, {2, 5}},
                              {1, {3, 4}},
                              {1, {3, 5}},
                              {1, {4, 5}},
                              {3, {A1}},
                              {-2, {2, A1}},
                              {-2, {3, A1}},
                              {-2, {4, A1}},
                              {-2, {5, A1}}});
    return out;
}

Polynomial reference_e_quadratic() {
    return poly({{0.20, {1, 2}},
                 {1.24, {1, 3}},
                 {1.96, {1, 4}},
                 {4.26, {2, 3}},
                 {4.98, {2, 4}},
                 {4.26, {3, 4}},
                 {5.70, {A1}},
                 {-1.44, {1, A1}},
                 {-4.46, {2, A1}},
                 {-5.50, {3, A1}},
                 {-4.46, {4, A1}}});
}

quad4::Quadratization pairwise_cover_fixture_d() {
    std::vector<Polynomial> parts;
    parts.push_back(poly({{-3, {A1, 3}},
                          {-1, {A1, 4}},
                          {-5, {A1, 5}},
                          {-1, {A2, 4}},
                          {-1, {A2, 5}},
                          {-1, {1, A3}},
                          {-2, {A4, 4}},
                          {-1, {A4, 5}},
                          {-4, {2, A3}},
                          {-3, {3, A3}},
                          {5, {A5, 4}},
                          {4, {A5, 5}},
                          {3, {A1, A3}},
                          {2, {A2, A3}},
                          {1, {A4, A3}}}));
    parts.push_back(poly({{45, {A5}}, {-18, {A5, 1}}, {-18, {A5, 2}}, {-18, {A5, 3}}, {9, {A1, 3}}}));
    parts.push_back(poly({{63, {A1}}, {-42, {A1, 1}}, {-42, {A1, 2}}, {21, {1, 2}}}));
    parts.push_back(poly({{12, {A2}}, {-8, {A2, 1}}, {-8, {A2, 3}}, {4, {1, 3}}}));
    parts.push_back(poly({{12, {A4}}, {-8, {A4, 2}}, {-8, {A4, 3}}, {4, {2, 3}}}));
    parts.push_back(poly({{42, {A3}}, {-28, {A3, 4}}, {-28, {A3, 5}}, {14, {4, 5}}}));

    quad4::Quadratization q;
    for (int k = 0; k < 5; ++k) q.aux_vars.push_back(VarId::aux(k));
    for (const Polynomial& part : parts) {
        q.quadratic += part;
        quad4::GroupProvenance prov;
        prov.part_output = part;
        q.provenance.push_back(std::move(prov));
    }
    q.quadratic.normalize();
    return q;
}

}  // namespace quadkit::fixtures
