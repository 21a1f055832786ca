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

#include <iosfwd>
#include <string>

#include "quadkit/baselines.hpp"

namespace quadkit::cli {

enum class Command { quadratize, verify, compare, truth2poly, reproduce };
enum class Method { theorem1, rosenberg, termwise };
enum class Format { qubo, poly, report, json };

struct RunConfig {
    Command command = Command::quadratize;
    std::string input_path;
    std::string output_path;
    std::string qubo_path;  // candidate quadratization for `verify`
    Method method = Method::theorem1;
    Format format = Format::qubo;
    double tolerance = 1e-9;
    std::uint64_t seed = 0;
};

// exit codes
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kConfigError = 2;
inline constexpr int kBudgetExceeded = 3;

/// Executes one command; writes artifacts, streams human output to `out`.
/// Returns an exit code and never throws: errors become a machine-readable
/// "error <kind>: <message>" record on `out` plus the matching exit code.
int run(const RunConfig& config, std::ostream& out);

std::string method_name(Method m);

}  // namespace quadkit::cli
