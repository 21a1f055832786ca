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

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "quadkit/cli.hpp"

using quadkit::cli::Command;
using quadkit::cli::Format;
using quadkit::cli::Method;
using quadkit::cli::RunConfig;

int main(int argc, char** argv) {
    CLI::App app{"quadkit: quadratization of degree-4 pseudo-Boolean functions"};
    app.require_subcommand(1);

    RunConfig config;
    std::string method = "theorem1";
    std::string format;

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        auto* in = cmd->add_option("--input,-i", config.input_path, "input file");
        if (needs_input) in->required();
        cmd->add_option("--output,-o", config.output_path, "output file");
        cmd->add_option("--tolerance", config.tolerance, "verification tolerance");
        cmd->add_option("--seed", config.seed, "seed for sampling operations");
        cmd->add_option("--format", format, "output format: qubo|poly|report|json");
    };

    auto* quadratize = app.add_subcommand("quadratize", "quadratize a polynomial file");
    add_common(quadratize, true);
    quadratize->add_option("--method", method, "theorem1|rosenberg|termwise");
    auto* verify = app.add_subcommand("verify", "check a QUBO against the original polynomial");
    add_common(verify, true);
    verify->add_option("--qubo", config.qubo_path, "QUBO file to verify")->required();
    auto* compare = app.add_subcommand("compare", "metrics table across methods");
    add_common(compare, true);
    compare->add_option("--method", method, "ignored; compare always runs every method");
    auto* truth2poly = app.add_subcommand("truth2poly", "truth table to polynomial");
    add_common(truth2poly, true);
    auto* reproduce = app.add_subcommand("reproduce", "run the built-in examples");
    add_common(reproduce, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : quadkit::cli::kConfigError;
    }

    if (quadratize->parsed()) {
        config.command = Command::quadratize;
        if (config.output_path.empty()) {
            std::cerr << "error config: quadratize requires --output\n";
            return quadkit::cli::kConfigError;
        }
    } else if (verify->parsed()) {
        config.command = Command::verify;
    } else if (compare->parsed()) {
        config.command = Command::compare;
    } else if (truth2poly->parsed()) {
        config.command = Command::truth2poly;
    } else {
        config.command = Command::reproduce;
    }

    static const std::map<std::string, Method> methods = {
        {"theorem1", Method::theorem1},
        {"rosenberg", Method::rosenberg},
        {"termwise", Method::termwise},
    };
    auto mit = methods.find(method);
    if (mit == methods.end()) {
        std::cerr << "error config: unknown method '" << method << "'\n";
        return quadkit::cli::kConfigError;
    }
    config.method = mit->second;

    if (!format.empty()) {
        static const std::map<std::string, Format> formats = {
            {"qubo", Format::qubo},
            {"poly", Format::poly},
            {"report", Format::report},
            {"json", Format::json},
        };
        auto fit = formats.find(format);
        if (fit == formats.end()) {
            std::cerr << "error config: unknown format '" << format << "'\n";
            return quadkit::cli::kConfigError;
        }
        config.format = fit->second;
    }
    if (config.tolerance <= 0) {
        std::cerr << "error config: tolerance must be positive\n";
        return quadkit::cli::kConfigError;
    }

    return quadkit::cli::run(config, std::cout);
}
