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

#include "quadkit/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <set>
#include <thread>

#include "quadkit/kernels.hpp"

namespace quadkit {

namespace {

constexpr int kMaxOriginals = 20;
constexpr int kMaxAux = 8;
constexpr std::size_t kBudget = std::size_t{1} << 28;

}  // namespace

VerificationReport verify_perfect(const Polynomial& f, const Polynomial& q,
                                  const std::vector<VarId>& aux_vars, Tolerance tol) {
    // variable universe: originals from both f and q, ordered; aux from the list
    std::set<VarId> originals;
    for (VarId v : f.variables()) {
        if (v.is_aux()) throw Error("function to verify must not contain auxiliary variables");
        originals.insert(v);
    }
    for (VarId v : q.original_variables()) originals.insert(v);
    std::vector<VarId> order(originals.begin(), originals.end());
    std::vector<VarId> aux(aux_vars.begin(), aux_vars.end());
    std::sort(aux.begin(), aux.end());
    aux.erase(std::unique(aux.begin(), aux.end()), aux.end());

    const int n = static_cast<int>(order.size());
    const int m = static_cast<int>(aux.size());
    if (n > kMaxOriginals || m > kMaxAux || (std::size_t{1} << (n + m)) > kBudget)
        throw BudgetError("verification budget exceeded: n=" + std::to_string(n) +
                          " m=" + std::to_string(m));

    const std::size_t rows = std::size_t{1} << n;
    std::vector<double> ftab(rows);
    tabulate(f, order, ftab);

    // q sliced per auxiliary assignment: substitute the aux bits, tabulate the
    // remaining polynomial over the originals, and min-accumulate.
    std::map<VarId, unsigned> slot;
    for (int j = 0; j < n; ++j) slot[order[j]] = static_cast<unsigned>(j);
    std::vector<double> qmin(rows), slice(rows);
    for (std::size_t a = 0; a < (std::size_t{1} << m); ++a) {
        std::fill(slice.begin(), slice.end(), 0.0);
        for (const auto& [mono, c] : q.terms()) {
            std::size_t mask = 0;
            bool on = true;
            for (VarId v : mono.vars()) {
                if (v.is_aux()) {
                    auto it = std::lower_bound(aux.begin(), aux.end(), v);
                    if (it == aux.end() || *it != v)
                        throw Error("quadratic mentions auxiliary " + v.str() +
                                    " absent from the auxiliary set");
                    if (!(a & (std::size_t{1} << (it - aux.begin())))) {
                        on = false;
                        break;
                    }
                } else {
                    mask |= std::size_t{1} << slot.at(v);
                }
            }
            if (on) slice[mask] += c;
        }
        kernels::zeta_transform(slice, static_cast<unsigned>(n));
        if (a == 0)
            qmin = slice;
        else
            kernels::min_accumulate(qmin, slice);
    }

    kernels::GapScan scan = kernels::max_abs_gap(qmin, ftab);
    VerificationReport report;
    report.worst_gap = scan.worst;
    for (int j = 0; j < n; ++j)
        report.witness[order[j]] = (scan.index & (std::size_t{1} << j)) != 0;
    report.ok = true;
    for (std::size_t x = 0; x < rows; ++x) {
        if (std::fabs(qmin[x] - ftab[x]) > tol.at(ftab[x])) {
            report.ok = false;
            report.worst_gap = 0.0;
            // report the worst *violation* when one exists
            double worst_excess = -1.0;
            for (std::size_t y = 0; y < rows; ++y) {
                double gap = std::fabs(qmin[y] - ftab[y]);
                double excess = gap - tol.at(ftab[y]);
                if (excess > 0 && excess > worst_excess) {
                    worst_excess = excess;
                    report.worst_gap = gap;
                    for (int j = 0; j < n; ++j)
                        report.witness[order[j]] = (y & (std::size_t{1} << j)) != 0;
                }
            }
            break;
        }
    }
    return report;
}

namespace {

// monomial basis of a quadratic over (v0..v3, aux):
// 1, b1..b4, ba, 6 pairs, 4 aux pairs -> 16 coefficients
struct Basis16 {
    // value of each basis monomial at (assignment x, aux bit s)
    static std::array<double, 16> row(unsigned x, unsigned s) {
        const double b[4] = {double(x & 1), double((x >> 1) & 1), double((x >> 2) & 1),
                             double((x >> 3) & 1)};
        const double a = double(s);
        return {1.0,        b[0],     b[1],        b[2],        b[3],        a,
                b[0] * b[1], b[0] * b[2], b[0] * b[3], b[1] * b[2], b[1] * b[3], b[2] * b[3],
                b[0] * a,    b[1] * a, b[2] * a,    b[3] * a};
    }
};

// dense 16x16 partial-pivot LU solve; returns false when a pivot magnitude
// drops below the threshold
bool solve16(std::array<std::array<double, 16>, 16> M, std::array<double, 16>& rhs,
             double pivot_threshold) {
    std::array<int, 16> perm;
    for (int i = 0; i < 16; ++i) perm[i] = i;
    for (int col = 0; col < 16; ++col) {
        int best = col;
        double mag = std::fabs(M[col][col]);
        for (int r = col + 1; r < 16; ++r) {
            double m = std::fabs(M[r][col]);
            if (m > mag) {
                mag = m;
                best = r;
            }
        }
        if (mag < pivot_threshold) return false;
        std::swap(M[col], M[best]);
        std::swap(rhs[col], rhs[best]);
        const double inv = 1.0 / M[col][col];
        for (int r = col + 1; r < 16; ++r) {
            double factor = M[r][col] * inv;
            if (factor == 0.0) continue;
            for (int c = col; c < 16; ++c) M[r][c] -= factor * M[col][c];
            rhs[r] -= factor * rhs[col];
        }
    }
    for (int col = 15; col >= 0; --col) {
        double v = rhs[col];
        for (int c = col + 1; c < 16; ++c) v -= M[col][c] * rhs[c];
        rhs[col] = v / M[col][col];
    }
    return true;
}

int thread_cap() {
    if (const char* env = std::getenv("QUADKIT_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

struct PatternHit {
    unsigned pattern;
    std::array<double, 16> coeffs;
};

// scan patterns in [begin, end); returns the lowest verified pattern
std::optional<PatternHit> scan_range(unsigned begin, unsigned end,
                                     const std::array<double, 16>& fvec, Tolerance tol) {
    std::array<std::array<double, 16>, 16> rows0, rows1;
    for (unsigned x = 0; x < 16; ++x) {
        rows0[x] = Basis16::row(x, 0);
        rows1[x] = Basis16::row(x, 1);
    }
    for (unsigned pat = begin; pat < end; ++pat) {
        std::array<std::array<double, 16>, 16> M;
        for (unsigned x = 0; x < 16; ++x) M[x] = (pat >> x) & 1 ? rows1[x] : rows0[x];
        std::array<double, 16> c = fvec;
        if (!solve16(M, c, 1e-10)) continue;
        bool ok = true;
        for (unsigned x = 0; x < 16 && ok; ++x) {
            const auto& tight = (pat >> x) & 1 ? rows1[x] : rows0[x];
            const auto& slack = (pat >> x) & 1 ? rows0[x] : rows1[x];
            double qt = 0.0, qs = 0.0;
            for (int j = 0; j < 16; ++j) {
                qt += tight[j] * c[j];
                qs += slack[j] * c[j];
            }
            if (std::fabs(qt - fvec[x]) > tol.at(fvec[x])) ok = false;
            if (qs < fvec[x] - tol.at(fvec[x])) ok = false;
        }
        if (ok) return PatternHit{pat, c};
    }
    return std::nullopt;
}

}  // namespace

std::optional<Polynomial> synthesize_one_aux(const Polynomial& f, Tolerance tol, VarId aux) {
    std::vector<VarId> vars = f.variables();
    for (VarId v : vars)
        if (v.is_aux()) throw Error("input must not contain auxiliary variables");
    if (vars.size() > 4)
        throw DegreeError("synthesis handles at most 4 variables, got " +
                          std::to_string(vars.size()));
    // pad to exactly 4 with fresh original ids
    std::uint32_t next = vars.empty() ? 0 : vars.back().index() + 1;
    while (vars.size() < 4) vars.push_back(VarId::original(next++));

    std::array<double, 16> fvec{};
    for (unsigned x = 0; x < 16; ++x) {
        Assignment a;
        for (int j = 0; j < 4; ++j) a[vars[j]] = (x >> j) & 1;
        fvec[x] = f.evaluate(a);
    }

    std::optional<PatternHit> hit;
    const int threads = std::min(thread_cap(), 8);
    if (threads <= 1) {
        hit = scan_range(0, 1u << 16, fvec, tol);
    } else {
        // deterministic: every chunk is scanned, the lowest pattern index wins
        std::vector<std::optional<PatternHit>> results(threads);
        std::vector<std::thread> pool;
        const unsigned chunk = ((1u << 16) + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            unsigned b = t * chunk, e = std::min((t + 1) * chunk, 1u << 16);
            pool.emplace_back(
                [&, t, b, e] { results[t] = scan_range(b, e, fvec, tol); });
        }
        for (auto& th : pool) th.join();
        for (auto& r : results)
            if (r && (!hit || r->pattern < hit->pattern)) hit = r;
    }
    if (!hit) return std::nullopt;

    Polynomial q(f.epsilon());
    const auto& c = hit->coeffs;
    auto add = [&](const Monomial& m, double v) {
        if (std::fabs(v) >= q.epsilon()) q.add_term(m, v);
    };
    add({}, c[0]);
    for (int j = 0; j < 4; ++j) add({vars[j]}, c[1 + j]);
    add({aux}, c[5]);
    int k = 6;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) add({vars[i], vars[j]}, c[k++]);
    for (int j = 0; j < 4; ++j) add({vars[j], aux}, c[12 + j]);
    return q;
}

}  // namespace quadkit
