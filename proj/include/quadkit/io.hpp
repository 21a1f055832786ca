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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "quadkit/polynomial.hpp"

// File formats.
//
// Polynomial ("poly"): one term per line,
//     coefficient : space-separated 1-based variable indices
// An empty index list is the constant term. '#' starts a comment, blank lines
// are ignored. Duplicate monomial lines are summed. Auxiliary variables are
// written as a<k>.
//
// QUBO: header line "n m c0" (original count, auxiliary count, constant),
// then lines "i j coeff" with i <= j, 1-based; auxiliaries are numbered
// n+1..n+m; linear terms have i == j. Coefficients print with 17 significant
// digits, so export is byte-deterministic and exact on re-import.

namespace quadkit {

Polynomial parse_polynomial(std::string_view text,
                            double epsilon = Polynomial::kDefaultEpsilon);

std::string format_polynomial(const Polynomial& p);

/// Truth-table file: whitespace-separated reals; the count must be a power of
/// two, 2^n with n <= 20. Row i's bit j is the value of variable j+1.
std::vector<double> parse_truth_table(std::string_view text);

struct QuboData {
    int n = 0;  // original variable count (highest 1-based original index)
    int m = 0;  // auxiliary count
    Polynomial poly;
};

std::string export_qubo(const Polynomial& quadratic);
QuboData import_qubo(std::string_view text);

std::string read_file(const std::filesystem::path& path);

/// write-temp-then-rename
void atomic_write(const std::filesystem::path& path, std::string_view content);

}  // namespace quadkit
