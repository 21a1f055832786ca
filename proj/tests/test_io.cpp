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

#include <filesystem>
#include <random>

#include "helpers.hpp"
#include "quadkit/fixtures.hpp"
#include "quadkit/io.hpp"
#include "quadkit/partition.hpp"

using namespace quadkit;
using testing::make_poly;

TEST_CASE("parse_polynomial") {
    SUBCASE("basic term list") {
        Polynomial p = parse_polynomial("5 : 1 2 3 4\n-3 : 1 2 3\n");
        CHECK(p.term_count() == 2);
        CHECK(p.coefficient({VarId::original(0), VarId::original(1), VarId::original(2),
                             VarId::original(3)}) == 5.0);
    }
    SUBCASE("constant term") {
        Polynomial p = parse_polynomial("1.5 :");
        CHECK(p.coefficient({}) == 1.5);
    }
    SUBCASE("comments, blanks and duplicate lines") {
        Polynomial p = parse_polynomial("# header\n\n2 : 1 2\n3 : 2 1  # same monomial\n");
        CHECK(p.term_count() == 1);
        CHECK(p.coefficient({VarId::original(0), VarId::original(1)}) == 5.0);
    }
    SUBCASE("errors carry line numbers") {
        try {
            parse_polynomial("1 : 1\nbogus\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 2);
        }
        try {
            parse_polynomial("1 : 2 2\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 1);
            CHECK(std::string(e.what()).find("repeated") != std::string::npos);
        }
    }
}

TEST_CASE("polynomial format round trip is exact") {
    std::mt19937_64 rng(79);
    for (int iter = 0; iter < 10; ++iter) {
        Polynomial p = testing::random_poly(rng, 8, 4, -17.25, 13.5, 0.3);
        Polynomial back = parse_polynomial(format_polynomial(p));
        CHECK(back == p);
    }
    Polynomial a = fixtures::example_a();
    CHECK(parse_polynomial(format_polynomial(a)) == a);
}

TEST_CASE("qubo export and import") {
    Polynomial f = fixtures::example_a();
    auto q = quadratize_n(f);
    std::string text = export_qubo(q.quadratic);

    SUBCASE("header counts") {
        QuboData data = import_qubo(text);
        CHECK(data.n == 8);
        CHECK(data.m == 2);
        CHECK(data.poly.max_coeff_difference(q.quadratic) == 0.0);
    }
    SUBCASE("round trip re-verifies") {
        QuboData data = import_qubo(text);
        CHECK(verify_perfect(f, data.poly, data.poly.auxiliary_variables()).ok);
    }
    SUBCASE("export is deterministic") { CHECK(text == export_qubo(q.quadratic)); }
    SUBCASE("degree check") {
        CHECK_THROWS_AS(export_qubo(fixtures::example_a()), DegreeError);
    }
}

TEST_CASE("truth table files") {
    auto values = parse_truth_table("0 0 0 1\n");
    CHECK(values == std::vector<double>{0, 0, 0, 1});
    CHECK_THROWS_AS(parse_truth_table("1 2 3"), Error);
}

TEST_CASE("atomic write") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "quadkit_io_test";
    fs::create_directories(dir);
    fs::path target = dir / "out.txt";
    atomic_write(target, "hello\n");
    CHECK(read_file(target) == "hello\n");
    atomic_write(target, "replaced\n");
    CHECK(read_file(target) == "replaced\n");
    CHECK_FALSE(fs::exists(dir / "out.txt.tmp"));
    fs::remove_all(dir);
}
