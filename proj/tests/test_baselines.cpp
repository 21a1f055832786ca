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

#include "helpers.hpp"
#include "quadkit/baselines.hpp"
#include "quadkit/fixtures.hpp"
#include "quadkit/partition.hpp"

using namespace quadkit;
using testing::make_poly;
using testing::naive_perfect;

namespace {

std::pair<VarId, VarId> vp(int i, int j) {
    return {VarId::original(i - 1), VarId::original(j - 1)};
}

}  // namespace

TEST_CASE("rosenberg with explicit pairs reproduces the reference multipliers") {
    SUBCASE("example A") {
        auto r = rosenberg(fixtures::example_a(), {{vp(1, 2), vp(3, 4), vp(5, 6), vp(7, 8)}});
        CHECK(r.penalties == std::vector<double>{3, 6, 6, 10});
        CHECK(r.quad.aux_vars.size() == 4);
        CHECK(verify_perfect(fixtures::example_a(), r.quad.quadratic, r.quad.aux_vars).ok);
    }
    SUBCASE("example C") {
        auto r = rosenberg(fixtures::example_c(), {{vp(1, 2), vp(3, 4), vp(3, 5), vp(4, 5)}});
        CHECK(r.penalties == std::vector<double>{21, 8, 6, 8});
        CHECK(verify_perfect(fixtures::example_c(), r.quad.quadratic, r.quad.aux_vars).ok);
        ComparisonMetrics m = metrics(r.quad, fixtures::example_c());
        CHECK(m.coeff_min == -42);
        CHECK(m.coeff_max == 63);
    }
    SUBCASE("example E on 2-decimal inputs") {
        auto r = rosenberg(fixtures::example_e_rounded(), {{vp(1, 3), vp(2, 4)}});
        REQUIRE(r.penalties.size() == 2);
        CHECK(r.penalties[0] == doctest::Approx(1.24).epsilon(1e-12));
        CHECK(r.penalties[1] == doctest::Approx(5.30).epsilon(1e-12));
        CHECK(verify_perfect(fixtures::example_e_rounded(), r.quad.quadratic, r.quad.aux_vars).ok);
    }
}

TEST_CASE("rosenberg greedy pair selection") {
    // greedy picks the most frequent pair; on these inputs it lands on the
    // same pairs as the reference runs
    auto ra = rosenberg(fixtures::example_a());
    CHECK(ra.pairs == std::vector<std::pair<VarId, VarId>>{vp(1, 2), vp(3, 4), vp(5, 6), vp(7, 8)});
    CHECK(verify_perfect(fixtures::example_a(), ra.quad.quadratic, ra.quad.aux_vars).ok);

    auto rc = rosenberg(fixtures::example_c());
    CHECK(rc.pairs == std::vector<std::pair<VarId, VarId>>{vp(1, 2), vp(3, 4), vp(3, 5), vp(4, 5)});
    CHECK(verify_perfect(fixtures::example_c(), rc.quad.quadratic, rc.quad.aux_vars).ok);
}

TEST_CASE("rosenberg penalty gadget behaviour") {
    // the gadget M(bibj - 2bia - 2bja + 3a) is 0 when a = bi*bj, >= M otherwise
    Polynomial gadget = make_poly({{1, {1, 2}}, {-2, {1, -1}}, {-2, {2, -1}}, {3, {-1}}});
    for (int bi = 0; bi <= 1; ++bi)
        for (int bj = 0; bj <= 1; ++bj)
            for (int a = 0; a <= 1; ++a) {
                Assignment x{{VarId::original(0), bi != 0},
                             {VarId::original(1), bj != 0},
                             {VarId::aux(0), a != 0}};
                double v = gadget.evaluate(x);
                if (a == bi * bj)
                    CHECK(v == 0.0);
                else
                    CHECK(v >= 1.0);
            }
}

TEST_CASE("rosenberg rejects pair lists that cannot reach degree 2") {
    CHECK_THROWS_AS(rosenberg(fixtures::example_a(), {{vp(1, 2)}}), DegreeError);
}

TEST_CASE("baselines reject degree above 4") {
    Polynomial p = make_poly({{1, {1, 2, 3, 4, 5}}});
    CHECK_THROWS_AS(rosenberg(p), DegreeError);
    CHECK_THROWS_AS(termwise(p), DegreeError);
}

TEST_CASE("termwise") {
    SUBCASE("chain function spends one auxiliary per super-quadratic term") {
        auto q = termwise(fixtures::example_b(2));
        CHECK(q.aux_vars.size() == 4);
        CHECK(verify_perfect(fixtures::example_b(2), q.quadratic, q.aux_vars).ok);
    }
    SUBCASE("negative cubic gadget") {
        Polynomial f = make_poly({{-1, {1, 2, 3}}});
        auto q = termwise(f);
        REQUIRE(q.aux_vars.size() == 1);
        Polynomial expected =
            make_poly({{2, {-1}}, {-1, {1, -1}}, {-1, {2, -1}}, {-1, {3, -1}}});
        CHECK(q.quadratic.max_coeff_difference(expected) == 0.0);
        CHECK(naive_perfect(f, q.quadratic, q.aux_vars));
    }
    SUBCASE("quadratic input unchanged") {
        Polynomial f = make_poly({{2, {1, 2}}, {1, {}}});
        auto q = termwise(f);
        CHECK(q.aux_vars.empty());
        CHECK(q.quadratic == f);
    }
}

TEST_CASE("metrics") {
    SUBCASE("reference example A") {
        Polynomial f = fixtures::example_a();
        auto q = quadratize_n(f);
        ComparisonMetrics m = metrics(q, f);
        CHECK(m.aux_count == 2);
        CHECK(m.new_quadratic_terms == 14);
        CHECK(m.coeff_min == -13);
        CHECK(m.coeff_max == 31);
    }
    SUBCASE("reference example C") {
        Polynomial f = fixtures::example_c();
        auto q = quadratize_n(f);
        ComparisonMetrics m = metrics(q, f);
        CHECK(m.aux_count == 3);
        CHECK(m.new_quadratic_terms == 27);
        CHECK(m.coeff_min == -7);
        CHECK(m.coeff_max == 10);
    }
    SUBCASE("determinism") {
        Polynomial f = fixtures::example_c();
        auto q = quadratize_n(f);
        ComparisonMetrics a = metrics(q, f);
        ComparisonMetrics b = metrics(q, f);
        CHECK(a.aux_count == b.aux_count);
        CHECK(a.new_quadratic_terms == b.new_quadratic_terms);
        CHECK(a.coeff_min == b.coeff_min);
        CHECK(a.coeff_max == b.coeff_max);
    }
}
