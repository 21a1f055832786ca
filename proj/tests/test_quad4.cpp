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

#include <doctest.h>

#include <bit>
#include <random>
#include <set>

#include "helpers.hpp"
#include "quadkit/quad4.hpp"
#include "regions.hpp"

using namespace quadkit;
using namespace quadkit::quad4;
using testing::from_alphas;
using testing::make_poly;
using testing::naive_perfect;
using testing::poly_from_coeffs;

namespace {

const VarId kAux0 = VarId::aux(0);

// 16x2 enumeration: min over the auxiliary equals f everywhere, and the
// other branch never undershoots
bool perfect_and_one_sided(const Coeffs4& c, const Polynomial& q, double tol = 1e-9) {
    Polynomial f = poly_from_coeffs(c);
    for (unsigned x = 0; x < 16; ++x) {
        Assignment a;
        for (int j = 0; j < 4; ++j) a[VarId::original(j)] = (x >> j) & 1;
        double fx = f.evaluate(a);
        a[kAux0] = false;
        double q0 = q.evaluate(a);
        a[kAux0] = true;
        double q1 = q.evaluate(a);
        double scale = tol * (1.0 + std::abs(fx));
        if (std::abs(std::min(q0, q1) - fx) > scale) return false;
        if (q0 < fx - scale || q1 < fx - scale) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("lemma1 reference outputs") {
    SUBCASE("mixed positive cubics") {
        Polynomial q = lemma1(from_alphas(1, 1, 1, 2, 3));
        Polynomial expected = make_poly({{3, {1, 2}},
                                         {4, {1, 3}},
                                         {4, {1, 4}},
                                         {5, {2, 3}},
                                         {5, {2, 4}},
                                         {6, {3, 4}},
                                         {10, {-1}},
                                         {-6, {1, -1}},
                                         {-7, {2, -1}},
                                         {-8, {3, -1}},
                                         {-8, {4, -1}}});
        CHECK(q.max_coeff_difference(expected) == 0.0);
    }
    SUBCASE("bare quartic") {
        Polynomial q = lemma1(from_alphas(1, 0, 0, 0, 0));
        Polynomial expected = make_poly({{1, {1, 2}},
                                         {1, {1, 3}},
                                         {1, {1, 4}},
                                         {1, {2, 3}},
                                         {1, {2, 4}},
                                         {1, {3, 4}},
                                         {3, {-1}},
                                         {-2, {1, -1}},
                                         {-2, {2, -1}},
                                         {-2, {3, -1}},
                                         {-2, {4, -1}}});
        CHECK(q.max_coeff_difference(expected) == 0.0);
    }
    SUBCASE("zero in, zero out") { CHECK(lemma1(from_alphas(0, 0, 0, 0, 0)).empty()); }
    SUBCASE("precondition violation") {
        CHECK_THROWS_AS(lemma1(from_alphas(-1, 0, 0, 0, 0)), PreconditionError);
        CHECK_THROWS_AS(lemma1(from_alphas(1, -5, -5, 0, 0)), PreconditionError);
    }
}

TEST_CASE("lemma1 closed-form structure") {
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 50; ++iter) {
        Coeffs4 c = testing::sample_lemma1(rng);
        Polynomial q = lemma1(c);
        double cubic_sum = c.cubic[0] + c.cubic[1] + c.cubic[2] + c.cubic[3];
        CHECK(q.coefficient({kAux0}) ==
              doctest::Approx(3 * c.quartic + cubic_sum).epsilon(1e-12));
        // pair coefficient = quartic + the two cubics containing the pair
        CHECK(q.coefficient({VarId::original(0), VarId::original(1)}) ==
              doctest::Approx(c.quartic + c.a123() + c.a124()).epsilon(1e-12));
        CHECK(q.coefficient({VarId::original(2), VarId::original(3)}) ==
              doctest::Approx(c.quartic + c.a134() + c.a234()).epsilon(1e-12));
    }
}

TEST_CASE("lemma2 reference outputs") {
    SUBCASE("all-negative coefficients") {
        Polynomial q = lemma2(from_alphas(-1, -2, -3, -4, -5));
        Polynomial expected = make_poly({{31, {-1}},
                                         {-10, {1, -1}},
                                         {-11, {2, -1}},
                                         {-12, {3, -1}},
                                         {-13, {4, -1}}});
        CHECK(q.max_coeff_difference(expected) == 0.0);
    }
    SUBCASE("bare negative quartic: minimum lands exactly on the all-ones row") {
        Coeffs4 c = from_alphas(-1, 0, 0, 0, 0);
        Polynomial q = lemma2(c);
        for (unsigned x = 0; x < 16; ++x) {
            Assignment a;
            for (int j = 0; j < 4; ++j) a[VarId::original(j)] = (x >> j) & 1;
            a[kAux0] = false;
            double q0 = q.evaluate(a);
            a[kAux0] = true;
            double q1 = q.evaluate(a);
            CHECK(std::min(q0, q1) == (x == 15 ? -1.0 : 0.0));
        }
    }
    SUBCASE("zero in, zero out") { CHECK(lemma2(from_alphas(0, 0, 0, 0, 0)).empty()); }
    SUBCASE("precondition violation") {
        CHECK_THROWS_AS(lemma2(from_alphas(1, -1, -1, -1, -1)), PreconditionError);
        CHECK_THROWS_AS(lemma2(from_alphas(-1, 0, 0, 0, 1)), PreconditionError);
    }
}

TEST_CASE("lemma3 verified on its region") {
    CHECK(perfect_and_one_sided(from_alphas(2, -3, -1, -0.5, 1),
                                lemma3(from_alphas(2, -3, -1, -0.5, 1))));
    CHECK(perfect_and_one_sided(from_alphas(0, -1, 0, 0, 1),
                                lemma3(from_alphas(0, -1, 0, 0, 1))));
    CHECK(lemma3(from_alphas(0, 0, 0, 0, 0)).empty());
    CHECK_THROWS_AS(lemma3(from_alphas(1, -0.2, 0, 0, 1)), PreconditionError);
    // non-canonical order rejected
    CHECK_THROWS_AS(lemma3(from_alphas(2, -1, -3, -0.5, 1)), PreconditionError);
}

TEST_CASE("lemma4 verified on its region") {
    CHECK(perfect_and_one_sided(from_alphas(1, -2, -0.5, -0.3, -0.1),
                                lemma4(from_alphas(1, -2, -0.5, -0.3, -0.1))));
    CHECK(perfect_and_one_sided(from_alphas(1, -1.6, -0.5, -0.4, -0.2),
                                lemma4(from_alphas(1, -1.6, -0.5, -0.4, -0.2))));
    CHECK(lemma4(from_alphas(0, 0, 0, 0, 0)).empty());
    CHECK_THROWS_AS(lemma4(from_alphas(1, -0.1, 0, 0, 0)), PreconditionError);
}

TEST_CASE("each gadget is perfect across its sampled region") {
    std::mt19937_64 rng(37);
    for (int iter = 0; iter < 250; ++iter) {
        Coeffs4 c1 = testing::sample_lemma1(rng);
        CHECK(perfect_and_one_sided(c1, lemma1(c1)));
        Coeffs4 c2 = testing::sample_lemma2(rng);
        CHECK(perfect_and_one_sided(c2, lemma2(c2)));
        Coeffs4 c3 = testing::sample_lemma3(rng);
        CHECK(perfect_and_one_sided(c3, lemma3(c3)));
        Coeffs4 c4 = testing::sample_lemma4(rng);
        CHECK(perfect_and_one_sided(c4, lemma4(c4)));
    }
}

TEST_CASE("canonicalize") {
    SUBCASE("sorting with ties kept stable") {
        auto [c, perm] = canonicalize(from_alphas(7, 3, 1, 2, 1));
        CHECK(c.a123() == 1);
        CHECK(c.a124() == 1);
        CHECK(c.a134() == 2);
        CHECK(c.a234() == 3);
        CHECK(c.quartic == 7);
        // relabeling the function by the permutation yields the canonical one
        std::map<VarId, VarId> rename;
        for (int i = 0; i < 4; ++i) rename[VarId::original(i)] = VarId::original(perm[i]);
        Polynomial moved = poly_from_coeffs(from_alphas(7, 3, 1, 2, 1)).renamed(rename);
        CHECK(moved.max_coeff_difference(poly_from_coeffs(c)) == 0.0);
    }
    SUBCASE("already sorted is identity") {
        auto [c, perm] = canonicalize(from_alphas(1, 1, 1, 2, 3));
        CHECK(perm == identity_perm());
        CHECK(c.a123() == 1);
        CHECK(c.a234() == 3);
    }
}

TEST_CASE("classify_case picks the expected plans") {
    SUBCASE("all cubics nonnegative") {
        CasePlan plan = classify_case(from_alphas(1, 1, 1, 2, 3));
        CHECK(plan.lemma == Lemma::l1);
        CHECK(plan.flip_mask == 0);
        CHECK(plan.case_row == 1);
        CHECK_FALSE(plan.fallback);
    }
    SUBCASE("one deeply negative cubic, rest nonnegative") {
        CasePlan plan = classify_case(from_alphas(1, -2, 1, 2, 3));
        CHECK(plan.lemma == Lemma::l2);
        CHECK(std::popcount(plan.flip_mask) == 1);
        CHECK(plan.case_row == 4);
    }
    SUBCASE("all cubics below -quartic") {
        CasePlan plan = classify_case(from_alphas(1, -2, -2, -2, -2));
        CHECK(plan.lemma == Lemma::l1);
        CHECK(plan.flip_mask == 0b1111);
        CHECK(plan.case_row == 35);
    }
    SUBCASE("non-canonical input rejected") {
        CHECK_THROWS_AS(classify_case(from_alphas(1, 3, 2, 1, 0)), PreconditionError);
    }
    SUBCASE("lemma2 plans carry flips whenever the quartic is positive") {
        std::mt19937_64 rng(29);
        std::uniform_real_distribution<double> wide(-10, 10);
        for (int iter = 0; iter < 300; ++iter) {
            double v[4];
            for (double& x : v) x = wide(rng);
            std::sort(v, v + 4);
            double A = std::abs(wide(rng)) + 0.01;
            CasePlan plan = classify_case(from_alphas(A, v[0], v[1], v[2], v[3]));
            if (plan.lemma == Lemma::l2) CHECK(plan.flip_mask != 0);
        }
    }
}

TEST_CASE("quadratize_4var reference outputs") {
    SUBCASE("quartic with mixed negative cubics") {
        Polynomial f = make_poly(
            {{5, {1, 2, 3, 4}}, {-3, {1, 2, 3}}, {-1, {1, 2, 4}}, {-1, {1, 3, 4}}, {-2, {2, 3, 4}}});
        auto q = quadratize_4var(f, kAux0);
        Polynomial expected = make_poly({{1, {1, 2}},
                                         {1, {1, 3}},
                                         {3, {1, 4}},
                                         {2, {2, 4}},
                                         {2, {3, 4}},
                                         {8, {-1}},
                                         {-5, {1, -1}},
                                         {-4, {2, -1}},
                                         {-4, {3, -1}},
                                         {-6, {4, -1}}});
        CHECK(q.quadratic.max_coeff_difference(expected) == 0.0);
        CHECK(q.aux_vars.size() == 1);
        CHECK_FALSE(q.used_fallback);
    }
    SUBCASE("sparse quartic-plus-cubic") {
        Polynomial f = make_poly({{2, {1, 3, 4, 5}}, {-3, {3, 4, 5}}});
        auto q = quadratize_4var(f, kAux0);
        Polynomial expected = make_poly(
            {{6, {-1}}, {2, {1, -1}}, {-3, {3, -1}}, {-3, {4, -1}}, {-3, {5, -1}}});
        CHECK(q.quadratic.max_coeff_difference(expected) == 0.0);
    }
    SUBCASE("degree <= 2 passes through untouched") {
        Polynomial f = make_poly({{1, {1, 2}}, {-2, {3}}, {4, {}}});
        auto q = quadratize_4var(f, kAux0);
        CHECK(q.quadratic == f);
        CHECK(q.aux_vars.empty());
        bool mentions_aux = false;
        for (VarId v : q.quadratic.variables()) mentions_aux = mentions_aux || v.is_aux();
        CHECK_FALSE(mentions_aux);
    }
    SUBCASE("more than 4 variables rejected") {
        Polynomial f = make_poly({{1, {1, 2, 3, 4}}, {1, {5}}});
        CHECK_THROWS_AS(quadratize_4var(f, kAux0), DegreeError);
    }
}

TEST_CASE("quadratize_4var aux count matches the degree") {
    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 40; ++iter) {
        Polynomial f = testing::random_poly(rng, 4, 4);
        auto q = quadratize_4var(f, kAux0);
        if (f.degree() >= 3)
            CHECK(q.aux_vars.size() == 1);
        else
            CHECK(q.aux_vars.empty());
    }
}

TEST_CASE("quadratize_4var flip conjugation") {
    std::mt19937_64 rng(43);
    for (int iter = 0; iter < 3; ++iter) {
        Polynomial f = testing::random_poly(rng, 4, 4, -10, 10, 0.9);
        for (unsigned mask_bits = 0; mask_bits < 16; ++mask_bits) {
            std::set<VarId> mask;
            for (int j = 0; j < 4; ++j)
                if (mask_bits & (1u << j)) mask.insert(VarId::original(j));
            auto q = quadratize_4var(f.flipped(mask), kAux0);
            // un-flip only the original variables; the auxiliary stays
            Polynomial back = q.quadratic.flipped(mask);
            CHECK(naive_perfect(f, back, q.aux_vars));
        }
    }
}

TEST_CASE("quadratize_4var permutation equivariance") {
    std::mt19937_64 rng(47);
    Polynomial f = testing::random_poly(rng, 4, 4, -10, 10, 0.9);
    std::array<int, 4> idx = {0, 1, 2, 3};
    do {
        std::map<VarId, VarId> rename, back;
        for (int i = 0; i < 4; ++i) {
            rename[VarId::original(i)] = VarId::original(idx[i]);
            back[VarId::original(idx[i])] = VarId::original(i);
        }
        auto q = quadratize_4var(f.renamed(rename), kAux0);
        Polynomial unrelabeled = q.quadratic.renamed(back);
        CHECK(naive_perfect(f, unrelabeled, q.aux_vars));
    } while (std::next_permutation(idx.begin(), idx.end()));
}
