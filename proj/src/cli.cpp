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

#include "quadkit/cli.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "quadkit/fixtures.hpp"
#include "quadkit/io.hpp"
#include "quadkit/partition.hpp"

namespace quadkit::cli {

namespace {

using json = nlohmann::json;

std::string lemma_name(quad4::Lemma l) {
    switch (l) {
        case quad4::Lemma::l1: return "lemma1";
        case quad4::Lemma::l2: return "lemma2";
        case quad4::Lemma::l3: return "lemma3";
        case quad4::Lemma::l4: return "lemma4";
    }
    return "?";
}

std::string support_str(const std::vector<VarId>& support) {
    std::string s;
    for (VarId v : support) {
        if (!s.empty()) s += ",";
        s += v.str();
    }
    return s;
}

struct MethodRun {
    quad4::Quadratization quad;
    std::vector<double> penalties;  // rosenberg only
};

MethodRun run_method(Method method, const Polynomial& input, Tolerance tol) {
    MethodRun r;
    switch (method) {
        case Method::theorem1: r.quad = quadratize_n(input, tol); break;
        case Method::termwise: r.quad = termwise(input, tol); break;
        case Method::rosenberg: {
            RosenbergResult rr = rosenberg(input, std::nullopt, tol);
            r.quad = std::move(rr.quad);
            r.penalties = std::move(rr.penalties);
            break;
        }
    }
    return r;
}

bool within_budget(const Polynomial& f, const quad4::Quadratization& q) {
    std::size_t n = f.original_variables().size();
    std::size_t m = q.aux_vars.size();
    return n <= 20 && m <= 8 && n + m <= 28;
}

std::string report_text(Method method, const MethodRun& run, const Polynomial& input,
                        const RunConfig& config) {
    ComparisonMetrics m = metrics(run.quad, input);
    std::ostringstream os;
    os << "method " << method_name(method) << "\n";
    os << "seed " << config.seed << "\n";
    os << "tolerance " << config.tolerance << "\n";
    os << "aux_count " << m.aux_count << "\n";
    os << "new_quadratic_terms " << m.new_quadratic_terms << "\n";
    os << "coeff_min " << std::setprecision(17) << m.coeff_min << "\n";
    os << "coeff_max " << std::setprecision(17) << m.coeff_max << "\n";
    os << "used_fallback " << (run.quad.used_fallback ? 1 : 0) << "\n";
    for (std::size_t i = 0; i < run.penalties.size(); ++i)
        os << "penalty_" << i + 1 << " " << std::setprecision(17) << run.penalties[i] << "\n";
    for (const auto& prov : run.quad.provenance) {
        if (prov.support.empty()) continue;
        os << "group " << support_str(prov.support) << " " << lemma_name(prov.plan.lemma)
           << " flips=" << int(prov.plan.flip_mask) << " row=" << prov.plan.case_row << "\n";
    }
    if (within_budget(input, run.quad)) {
        auto report = verify_perfect(input, run.quad.quadratic, run.quad.aux_vars,
                                     Tolerance{config.tolerance, config.tolerance});
        os << "verified " << (report.ok ? 1 : 0) << "\n";
        os << "worst_gap " << std::setprecision(17) << report.worst_gap << "\n";
    } else {
        os << "verified skipped_budget\n";
    }
    return os.str();
}

int cmd_quadratize(const RunConfig& config, std::ostream& out) {
    Polynomial input = parse_polynomial(read_file(config.input_path));
    Tolerance tol{config.tolerance, config.tolerance};
    MethodRun run = run_method(config.method, input, tol);

    std::string artifact;
    if (config.format == Format::poly)
        artifact = format_polynomial(run.quad.quadratic);
    else
        artifact = export_qubo(run.quad.quadratic);
    atomic_write(config.output_path, artifact);
    atomic_write(config.output_path + ".report", report_text(config.method, run, input, config));

    ComparisonMetrics m = metrics(run.quad, input);
    out << "wrote " << config.output_path << " (aux " << m.aux_count << ", new quadratic terms "
        << m.new_quadratic_terms << ")\n";
    return kOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
    Polynomial original = parse_polynomial(read_file(config.input_path));
    QuboData qubo = import_qubo(read_file(config.qubo_path));
    std::vector<VarId> aux = qubo.poly.auxiliary_variables();
    auto report = verify_perfect(original, qubo.poly, aux,
                                 Tolerance{config.tolerance, config.tolerance});
    out << "ok " << (report.ok ? 1 : 0) << "\n";
    out << "worst_gap " << std::setprecision(17) << report.worst_gap << "\n";
    std::string witness;
    for (const auto& [v, bit] : report.witness) witness += v.str() + "=" + (bit ? "1" : "0") + " ";
    out << "witness " << witness << "\n";
    return report.ok ? kOk : kVerificationFailed;
}

int cmd_compare(const RunConfig& config, std::ostream& out) {
    Polynomial input = parse_polynomial(read_file(config.input_path));
    Tolerance tol{config.tolerance, config.tolerance};

    json doc;
    std::ostringstream table;
    table << std::left << std::setw(12) << "method" << std::right << std::setw(6) << "aux"
          << std::setw(12) << "quad.terms" << std::setw(12) << "coeff.min" << std::setw(12)
          << "coeff.max" << "\n";
    for (Method method : {Method::theorem1, Method::rosenberg, Method::termwise}) {
        MethodRun run = run_method(method, input, tol);
        ComparisonMetrics m = metrics(run.quad, input);
        table << std::left << std::setw(12) << method_name(method) << std::right << std::setw(6)
              << m.aux_count << std::setw(12) << m.new_quadratic_terms << std::setw(12)
              << std::fixed << std::setprecision(2) << m.coeff_min << std::setw(12) << m.coeff_max
              << "\n";
        table.unsetf(std::ios::fixed);
        table << std::setprecision(6);
        json entry = {{"method", method_name(method)},
                      {"aux_count", m.aux_count},
                      {"new_quadratic_terms", m.new_quadratic_terms},
                      {"coeff_min", m.coeff_min},
                      {"coeff_max", m.coeff_max}};
        if (!run.penalties.empty()) entry["penalties"] = run.penalties;
        doc["methods"].push_back(entry);
    }
    out << table.str();
    if (!config.output_path.empty()) {
        if (config.format == Format::json)
            atomic_write(config.output_path, doc.dump(2) + "\n");
        else
            atomic_write(config.output_path, table.str());
    }
    return kOk;
}

int cmd_truth2poly(const RunConfig& config, std::ostream& out) {
    std::vector<double> values = parse_truth_table(read_file(config.input_path));
    int n = 0;
    while ((std::size_t{1} << n) < values.size()) ++n;
    Polynomial p = truth_table_to_multilinear(values, n);
    std::string text = format_polynomial(p);
    if (config.output_path.empty())
        out << text;
    else
        atomic_write(config.output_path, text);
    out << "converted " << values.size() << " rows to " << p.term_count() << " terms\n";
    return kOk;
}

// ---------------------------------------------------------------------------
// reproduce: the five built-in examples against their reference outputs
// ---------------------------------------------------------------------------

bool match_groups(const quad4::Quadratization& got,
                  const std::map<std::vector<int>, Polynomial>& want, std::ostream& out) {
    bool all = true;
    for (const auto& prov : got.provenance) {
        std::vector<int> key;
        for (VarId v : prov.support) key.push_back(static_cast<int>(v.index()) + 1);
        auto it = want.find(key);
        if (it == want.end()) {
            out << "  group {" << support_str(prov.support) << "}: no reference\n";
            all = false;
            continue;
        }
        // reference stores the auxiliary as a1
        std::map<VarId, VarId> rename;
        for (const auto& [mono, c] : prov.part_output.terms())
            for (VarId v : mono.vars())
                if (v.is_aux()) rename[v] = VarId::aux(0);
        Polynomial part = prov.part_output.renamed(rename);
        double diff = part.max_coeff_difference(it->second);
        if (diff > 1e-12) {
            out << "  group {" << support_str(prov.support) << "}: max coefficient diff " << diff
                << "\n";
            all = false;
        }
    }
    return all;
}

bool approx(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

int cmd_reproduce(const RunConfig& config, std::ostream& out) {
    Tolerance tol{config.tolerance, config.tolerance};
    bool all_ok = true;
    auto line = [&](const std::string& name, bool ok) {
        out << (ok ? "PASS " : "FAIL ") << name << "\n";
        all_ok = all_ok && ok;
    };

    {  // A
        Polynomial f = fixtures::example_a();
        auto q = quadratize_n(f, tol);
        bool ok = match_groups(q, fixtures::reference_groups_a(), out);
        ComparisonMetrics m = metrics(q, f);
        ok = ok && m.aux_count == 2 && m.new_quadratic_terms == 14;
        ok = ok && approx(m.coeff_min, -13, 1e-12) && approx(m.coeff_max, 31, 1e-12);
        ok = ok && verify_perfect(f, q.quadratic, q.aux_vars, tol).ok;
        auto ros = rosenberg(f, {{{VarId::original(0), VarId::original(1)},
                                  {VarId::original(2), VarId::original(3)},
                                  {VarId::original(4), VarId::original(5)},
                                  {VarId::original(6), VarId::original(7)}}},
                             tol);
        ok = ok && ros.penalties == std::vector<double>{3, 6, 6, 10} && ros.quad.aux_vars.size() == 4;
        ok = ok && verify_perfect(f, ros.quad.quadratic, ros.quad.aux_vars, tol).ok;
        line("example-a", ok);
    }
    {  // B
        bool ok = true;
        for (int n = 2; n <= 5; ++n) {
            Polynomial f = fixtures::example_b(n);
            auto q = quadratize_n(f, tol);
            ok = ok && static_cast<int>(q.aux_vars.size()) == n;
            auto tw = termwise(f, tol);
            ok = ok && static_cast<int>(tw.aux_vars.size()) == 2 * n;
            if (n <= 3) {
                ok = ok && verify_perfect(f, q.quadratic, q.aux_vars, tol).ok;
                ok = ok && verify_perfect(f, tw.quadratic, tw.aux_vars, tol).ok;
            }
        }
        line("example-b", ok);
    }
    {  // C
        Polynomial f = fixtures::example_c();
        auto q = quadratize_n(f, tol);
        bool ok = match_groups(q, fixtures::reference_groups_c(), out);
        ComparisonMetrics m = metrics(q, f);
        ok = ok && m.aux_count == 3 && m.new_quadratic_terms == 27;
        ok = ok && approx(m.coeff_min, -7, 1e-12) && approx(m.coeff_max, 10, 1e-12);
        ok = ok && verify_perfect(f, q.quadratic, q.aux_vars, tol).ok;
        auto ros = rosenberg(f, {{{VarId::original(0), VarId::original(1)},
                                  {VarId::original(2), VarId::original(3)},
                                  {VarId::original(2), VarId::original(4)},
                                  {VarId::original(3), VarId::original(4)}}},
                             tol);
        ComparisonMetrics rm = metrics(ros.quad, f);
        ok = ok && ros.penalties == std::vector<double>{21, 8, 6, 8};
        ok = ok && approx(rm.coeff_min, -42, 1e-12) && approx(rm.coeff_max, 63, 1e-12);
        ok = ok && verify_perfect(f, ros.quad.quadratic, ros.quad.aux_vars, tol).ok;
        line("example-c", ok);
    }
    {  // D
        Polynomial f = fixtures::example_d();
        auto q = quadratize_n(f, tol);
        bool ok = match_groups(q, fixtures::reference_groups_d(), out);
        ok = ok && q.aux_vars.size() == 5;
        ok = ok && verify_perfect(f, q.quadratic, q.aux_vars, tol).ok;
        auto fixture = fixtures::pairwise_cover_fixture_d();
        ok = ok && verify_perfect(f, fixture.quadratic, fixture.aux_vars, tol).ok;
        ComparisonMetrics fm = metrics(fixture, f);
        ok = ok && fm.aux_count == 5 && fm.new_quadratic_terms == 31;
        ok = ok && approx(fm.coeff_min, -42, 1e-12) && approx(fm.coeff_max, 63, 1e-12);
        line("example-d", ok);
    }
    {  // E
        std::vector<double> table = fixtures::example_e_truth_table();
        Polynomial exact = truth_table_to_multilinear(table, 4);
        Polynomial rounded = fixtures::example_e_rounded();
        bool ok = exact.max_coeff_difference(rounded) <= 0.01;
        // exact-coefficient quadratization stays perfect
        auto q_exact = quadratize_n(exact, tol);
        ok = ok && verify_perfect(exact, q_exact.quadratic, q_exact.aux_vars, tol).ok;
        // the 2-decimal inputs reproduce the reference figures
        auto q2 = quadratize_n(rounded, tol);
        ok = ok && q2.aux_vars.size() == 1;
        ok = ok && q2.quadratic.max_coeff_difference(fixtures::reference_e_quadratic()) <= 0.005;
        auto ros = rosenberg(rounded, {{{VarId::original(0), VarId::original(2)},
                                        {VarId::original(1), VarId::original(3)}}},
                             tol);
        ok = ok && ros.penalties.size() == 2 && approx(ros.penalties[0], 1.24, 1e-9) &&
             approx(ros.penalties[1], 5.30, 1e-9);
        ComparisonMetrics rm = metrics(ros.quad, rounded);
        ok = ok && approx(rm.coeff_min, -10.60, 1e-9) && approx(rm.coeff_max, 15.90, 1e-9);
        ok = ok && verify_perfect(rounded, ros.quad.quadratic, ros.quad.aux_vars, tol).ok;
        line("example-e", ok);
    }

    out << (all_ok ? "reproduce: all examples pass\n" : "reproduce: FAILURES\n");
    return all_ok ? kOk : kVerificationFailed;
}

}  // namespace

std::string method_name(Method m) {
    switch (m) {
        case Method::theorem1: return "theorem1";
        case Method::rosenberg: return "rosenberg";
        case Method::termwise: return "termwise";
    }
    return "?";
}

int run(const RunConfig& config, std::ostream& out) {
    try {
        switch (config.command) {
            case Command::quadratize: return cmd_quadratize(config, out);
            case Command::verify: return cmd_verify(config, out);
            case Command::compare: return cmd_compare(config, out);
            case Command::truth2poly: return cmd_truth2poly(config, out);
            case Command::reproduce: return cmd_reproduce(config, out);
        }
        out << "error config: unknown command\n";
        return kConfigError;
    } catch (const BudgetError& e) {
        out << "error budget: " << e.what() << "\n";
        return kBudgetExceeded;
    } catch (const ParseError& e) {
        out << "error parse: " << e.what() << "\n";
        return kConfigError;
    } catch (const Error& e) {
        out << "error run: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::exception& e) {
        out << "error internal: " << e.what() << "\n";
        return kConfigError;
    }
}

}  // namespace quadkit::cli
