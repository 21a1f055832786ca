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

#include "quadkit/quad4.hpp"

#include <algorithm>
#include <cmath>

namespace quadkit::quad4 {

namespace {

const VarId kLocal[4] = {VarId::original(0), VarId::original(1), VarId::original(2),
                         VarId::original(3)};
const VarId kAux = VarId::aux(0);

Polynomial poly_of(const Coeffs4& c) {
    Polynomial p;
    p.add_term({kLocal[0], kLocal[1], kLocal[2], kLocal[3]}, c.quartic);
    for (int omit = 0; omit < 4; ++omit) {
        Monomial m;
        for (int i = 0; i < 4; ++i)
            if (i != omit) m.insert(kLocal[i]);
        p.add_term(m, c.cubic[omit]);
    }
    p.normalize();
    return p;
}

Coeffs4 coeffs_of(const Polynomial& p) {
    Coeffs4 c;
    c.quartic = p.coefficient({kLocal[0], kLocal[1], kLocal[2], kLocal[3]});
    for (int omit = 0; omit < 4; ++omit) {
        Monomial m;
        for (int i = 0; i < 4; ++i)
            if (i != omit) m.insert(kLocal[i]);
        c.cubic[omit] = p.coefficient(m);
    }
    return c;
}

// sorted cubic view: s[0] <= s[1] <= s[2] <= s[3]
std::array<double, 4> sorted_cubics(const Coeffs4& c) {
    std::array<double, 4> s = c.cubic;
    std::sort(s.begin(), s.end());
    return s;
}

bool l1_pre(double A, const std::array<double, 4>& s) {
    if (A < 0) return false;
    if (s[0] >= -A / 2) return true;
    if (-A <= s[0] && s[0] <= -A / 2 && s[1] >= 0) return true;
    if (-A <= s[0] && s[0] <= -A / 2 && s[1] >= -A / 2 && s[3] <= 0 && s[0] + s[1] >= -A)
        return true;
    return false;
}

bool l2_pre(double A, const std::array<double, 4>& s) { return A <= 0 && s[3] <= 0; }

bool l3_pre(double A, const std::array<double, 4>& s, bool strict) {
    if (!(A >= 0 && s[0] <= -A && s[1] >= -A / 2 && s[3] >= 0)) return false;
    return strict ? s[2] < 0 : s[2] <= 0;
}

bool l4_pre(double A, const std::array<double, 4>& s, bool strict) {
    if (!(A >= 0 && s[0] <= -A / 2 && s[1] >= -A / 2 && s[3] <= 0 && s[0] + s[1] <= -A))
        return false;
    return strict ? s[1] < 0 : true;
}

Polynomial lemma1_formula(const Coeffs4& c) {
    const double A = c.quartic;
    Polynomial q;
    double cubic_sum = c.cubic[0] + c.cubic[1] + c.cubic[2] + c.cubic[3];
    q.add_term({kAux}, 3 * A + cubic_sum);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            // triples containing the pair {i,j} are the ones omitting k not in it
            double pair = A;
            for (int k = 0; k < 4; ++k)
                if (k != i && k != j) pair += c.cubic[k];
            q.add_term({kLocal[i], kLocal[j]}, pair);
        }
    for (int i = 0; i < 4; ++i)
        q.add_term({kLocal[i], kAux}, -(2 * A + cubic_sum - c.cubic[i]));
    q.normalize();
    return q;
}

Polynomial lemma2_formula(const Coeffs4& c) {
    const double A = c.quartic;
    double cubic_sum = c.cubic[0] + c.cubic[1] + c.cubic[2] + c.cubic[3];
    Polynomial q;
    q.add_term({kAux}, -3 * A - 2 * cubic_sum);
    for (int i = 0; i < 4; ++i)
        q.add_term({kLocal[i], kAux}, A + cubic_sum - c.cubic[i]);
    q.normalize();
    return q;
}

Polynomial lemma4_formula(const Coeffs4& c) {
    const double A = c.quartic;
    const double a123 = c.a123(), a124 = c.a124(), a134 = c.a134(), a234 = c.a234();
    const double core = A + a134 + a234;
    Polynomial q;
    q.add_term({kLocal[2]}, -a123);
    q.add_term({kLocal[3]}, -a124);
    q.add_term({kAux}, core);
    q.add_term({kLocal[0], kLocal[2]}, a123);
    q.add_term({kLocal[1], kLocal[2]}, a123);
    q.add_term({kLocal[0], kLocal[3]}, a124);
    q.add_term({kLocal[1], kLocal[3]}, a124);
    q.add_term({kLocal[2], kLocal[3]}, core);
    q.add_term({kLocal[0], kAux}, a134 - a123 - a124);
    q.add_term({kLocal[1], kAux}, a234 - a123 - a124);
    q.add_term({kLocal[2], kAux}, a123 - core);
    q.add_term({kLocal[3], kAux}, a124 - core);
    q.normalize();
    return q;
}

Polynomial lemma3_formula(const Coeffs4& c) {
    const double A = c.quartic;
    const double a123 = c.a123(), a124 = c.a124(), a134 = c.a134(), a234 = c.a234();
    const double core = A + a134 + a234;
    Polynomial q;
    q.add_term({}, core);
    q.add_term({kLocal[0]}, a134 - a123 - a124);
    q.add_term({kLocal[1]}, a234 - a123 - a124);
    q.add_term({kLocal[2]}, -core);
    q.add_term({kLocal[3]}, -core);
    q.add_term({kAux}, -core);
    q.add_term({kLocal[0], kLocal[2]}, a123);
    q.add_term({kLocal[1], kLocal[2]}, a123);
    q.add_term({kLocal[0], kLocal[3]}, a124);
    q.add_term({kLocal[1], kLocal[3]}, a124);
    q.add_term({kLocal[2], kLocal[3]}, core);
    q.add_term({kLocal[0], kAux}, a123 + a124 - a134);
    q.add_term({kLocal[1], kAux}, a123 + a124 - a234);
    q.add_term({kLocal[2], kAux}, core - a123);
    q.add_term({kLocal[3], kAux}, core - a124);
    q.normalize();
    return q;
}

Polynomial lemma_formula(Lemma which, const Coeffs4& c) {
    switch (which) {
        case Lemma::l1: return lemma1_formula(c);
        case Lemma::l2: return lemma2_formula(c);
        case Lemma::l3: return lemma3_formula(c);
        case Lemma::l4: return lemma4_formula(c);
    }
    throw InternalError("bad lemma id");
}

void certify(const char* name, const Coeffs4& c, const Polynomial& q) {
    auto report = verify_perfect(poly_of(c), q, {kAux});
    if (!report.ok)
        throw InterpretationError(std::string(name) +
                                  " construction failed self-verification, worst gap " +
                                  std::to_string(report.worst_gap));
}

// dispatch-table cells: interval column per sorted cubic (1..4), flip mask
// over local variables 0..3, gadget to apply after flipping
struct TableRow {
    std::array<int, 4> cols;
    std::uint8_t flips;
    Lemma lemma;
};

constexpr TableRow kTable[35] = {
    {{4, 4, 4, 4}, 0b0000, Lemma::l1}, {{3, 4, 4, 4}, 0b0000, Lemma::l1},
    {{2, 4, 4, 4}, 0b0000, Lemma::l1}, {{1, 4, 4, 4}, 0b1000, Lemma::l2},
    {{3, 3, 4, 4}, 0b0000, Lemma::l1}, {{2, 3, 4, 4}, 0b1010, Lemma::l3},
    {{1, 3, 4, 4}, 0b1100, Lemma::l1}, {{2, 2, 4, 4}, 0b1100, Lemma::l1},
    {{1, 2, 4, 4}, 0b1100, Lemma::l1}, {{1, 1, 4, 4}, 0b1100, Lemma::l1},
    {{3, 3, 3, 4}, 0b0000, Lemma::l1}, {{2, 3, 3, 4}, 0b1001, Lemma::l4},
    {{1, 3, 3, 4}, 0b0000, Lemma::l3}, {{2, 2, 3, 4}, 0b1100, Lemma::l1},
    {{1, 2, 3, 4}, 0b1100, Lemma::l1}, {{1, 1, 3, 4}, 0b1100, Lemma::l1},
    {{2, 2, 2, 4}, 0b1111, Lemma::l4}, {{1, 2, 2, 4}, 0b0110, Lemma::l3},
    {{1, 1, 2, 4}, 0b1100, Lemma::l1}, {{1, 1, 1, 4}, 0b1110, Lemma::l2},
    {{3, 3, 3, 3}, 0b0000, Lemma::l1}, {{2, 3, 3, 3}, 0b0000, Lemma::l1},
    {{1, 3, 3, 3}, 0b0000, Lemma::l4}, {{2, 2, 3, 3}, 0b1100, Lemma::l1},
    {{1, 2, 3, 3}, 0b1100, Lemma::l1}, {{1, 1, 3, 3}, 0b1100, Lemma::l1},
    {{2, 2, 2, 3}, 0b1100, Lemma::l1}, {{1, 2, 2, 3}, 0b0110, Lemma::l4},
    {{1, 1, 2, 3}, 0b0110, Lemma::l3}, {{1, 1, 1, 3}, 0b1111, Lemma::l1},
    {{2, 2, 2, 2}, 0b1111, Lemma::l1}, {{1, 2, 2, 2}, 0b1111, Lemma::l1},
    {{1, 1, 2, 2}, 0b1111, Lemma::l1}, {{1, 1, 1, 2}, 0b1111, Lemma::l1},
    {{1, 1, 1, 1}, 0b1111, Lemma::l1},
};

// boundary-tolerant: a coefficient equal to a partition point matches both
// adjacent columns
bool in_column(double A, double v, int col) {
    switch (col) {
        case 1: return v <= -A;
        case 2: return -A <= v && v <= -A / 2;
        case 3: return -A / 2 <= v && v <= 0;
        default: return v >= 0;
    }
}

bool row_matches(double A, const std::array<double, 4>& s, const TableRow& row) {
    for (int i = 0; i < 4; ++i)
        if (!in_column(A, s[i], row.cols[i])) return false;
    return true;
}

int first_matching_row(double A, const std::array<double, 4>& s) {
    for (int r = 0; r < 35; ++r)
        if (row_matches(A, s, kTable[r])) return r + 1;
    return 0;
}

// gadget chosen for a canonical vector by precondition order, or nullopt
std::optional<Lemma> cascade(double A, const std::array<double, 4>& s, bool strict) {
    if (l1_pre(A, s)) return Lemma::l1;
    if (l2_pre(A, s)) return Lemma::l2;
    if (l3_pre(A, s, strict)) return Lemma::l3;
    if (l4_pre(A, s, strict)) return Lemma::l4;
    return std::nullopt;
}

}  // namespace

Perm4 identity_perm() { return {0, 1, 2, 3}; }

Perm4 compose(const Perm4& first, const Perm4& second) {
    Perm4 r;
    for (int i = 0; i < 4; ++i) r[i] = second[first[i]];
    return r;
}

Perm4 inverse(const Perm4& p) {
    Perm4 r;
    for (int i = 0; i < 4; ++i) r[p[i]] = i;
    return r;
}

std::pair<Coeffs4, Perm4> canonicalize(const Coeffs4& c) {
    // a canonical vector is a fixed point
    if (c.is_canonical()) return {c, identity_perm()};
    // otherwise sort (cubic value, omitted variable) ascending; the k-th
    // smallest becomes the cubic omitted by new variable 3-k
    std::array<std::pair<double, int>, 4> keyed;
    for (int i = 0; i < 4; ++i) keyed[i] = {c.cubic[i], i};
    std::stable_sort(keyed.begin(), keyed.end());
    Coeffs4 out;
    out.quartic = c.quartic;
    Perm4 perm;
    for (int k = 0; k < 4; ++k) {
        out.cubic[3 - k] = keyed[k].first;
        perm[keyed[k].second] = 3 - k;
    }
    return {out, perm};
}

Polynomial lemma1(const Coeffs4& c) {
    auto s = sorted_cubics(c);
    if (c.quartic < 0) throw PreconditionError("lemma1 requires a nonnegative quartic coefficient");
    if (!l1_pre(c.quartic, s))
        throw PreconditionError("lemma1: no branch of the coefficient conditions holds");
    return lemma1_formula(c);
}

Polynomial lemma2(const Coeffs4& c) {
    auto s = sorted_cubics(c);
    if (!l2_pre(c.quartic, s))
        throw PreconditionError("lemma2 requires quartic <= 0 and every cubic <= 0");
    return lemma2_formula(c);
}

Polynomial lemma3(const Coeffs4& c) {
    if (!c.is_canonical()) throw PreconditionError("lemma3 expects canonical coefficient order");
    if (!l3_pre(c.quartic, sorted_cubics(c), false))
        throw PreconditionError("lemma3 coefficient conditions violated");
    Polynomial q = lemma3_formula(c);
    certify("lemma3", c, q);
    return q;
}

Polynomial lemma4(const Coeffs4& c) {
    if (!c.is_canonical()) throw PreconditionError("lemma4 expects canonical coefficient order");
    auto s = sorted_cubics(c);
    if (!l4_pre(c.quartic, s, false))
        throw PreconditionError("lemma4 coefficient conditions violated");
    Polynomial q = lemma4_formula(c);
    certify("lemma4", c, q);
    return q;
}

namespace {

// One flip/permute pipeline used by both classify_case (to resolve a plan)
// and quadratize_4var (to build the output). Applying a gadget after flips
// requires carrying the quadratic remainders the flips generate and undoing
// every transform on the way out.
struct Pipeline {
    struct Step {
        bool is_flip;
        std::set<VarId> flip;
        Perm4 perm = identity_perm();
    };

    Polynomial work;                       // degree >= 3 part, current frame
    std::vector<Step> steps;
    std::vector<std::pair<std::size_t, Polynomial>> lows;  // (step count at creation, low part)

    explicit Pipeline(Polynomial high) : work(std::move(high)) { strip_low(); }

    void strip_low() {
        auto [low, high] = work.degree_split();
        if (!low.empty()) lows.emplace_back(steps.size(), low);
        work = std::move(high);
    }

    void push_flip(std::uint8_t mask) {
        std::set<VarId> vars;
        for (int i = 0; i < 4; ++i)
            if (mask & (1u << i)) vars.insert(kLocal[i]);
        work = work.flipped(vars);
        steps.push_back({true, std::move(vars), identity_perm()});
        strip_low();
    }

    void push_perm(const Perm4& p) {
        std::map<VarId, VarId> rename;
        for (int i = 0; i < 4; ++i) rename[kLocal[i]] = kLocal[p[i]];
        work = work.renamed(rename);
        steps.push_back({false, {}, p});
    }

    std::size_t mark() const { return steps.size(); }

    void rollback(std::size_t mark, const Polynomial& saved_work) {
        steps.resize(mark);
        std::erase_if(lows, [&](const auto& e) { return e.first > mark; });
        work = saved_work;
    }

    // maps a polynomial from the frame after `upto` steps back to the original
    Polynomial unwind(Polynomial q, std::size_t upto) const {
        for (std::size_t k = upto; k-- > 0;) {
            const Step& st = steps[k];
            if (st.is_flip) {
                q = q.flipped(st.flip);  // auxiliary never flipped: not in the set
            } else {
                Perm4 inv = inverse(st.perm);
                std::map<VarId, VarId> rename;
                for (int i = 0; i < 4; ++i) rename[kLocal[i]] = kLocal[inv[i]];
                q = q.renamed(rename);
            }
        }
        return q;
    }

    Polynomial assemble(const Polynomial& gadget_out) const {
        Polynomial out = unwind(gadget_out, steps.size());
        for (const auto& [idx, low] : lows) out += unwind(low, idx);
        return out;
    }

    // normal form of the applied transforms: flip M (original labels pushed
    // forward), then permutation S
    std::pair<std::uint8_t, Perm4> normal_form() const {
        std::uint8_t mask = 0;
        Perm4 total = identity_perm();
        for (const Step& st : steps) {
            if (st.is_flip) {
                for (VarId v : st.flip) mask ^= std::uint8_t(1u << v.index());
            } else {
                // flip(mask) then perm == perm then flip(perm(mask))
                std::uint8_t moved = 0;
                for (int i = 0; i < 4; ++i)
                    if (mask & (1u << i)) moved |= std::uint8_t(1u << st.perm[i]);
                mask = moved;
                total = compose(total, st.perm);
            }
        }
        return {mask, total};
    }
};

bool local_verify(const Polynomial& f, const Polynomial& q, Tolerance tol) {
    return verify_perfect(f, q, {kAux}, tol).ok;
}

struct Resolved {
    Pipeline pipe;
    Polynomial gadget_out;
    Lemma lemma;
    int case_row;
    bool fallback;
};

// The dispatch. The pipeline's work already holds only degree>=3 terms and
// has quartic >= 0 unless the vector is a direct lemma2 case (the caller
// flips one bit first otherwise).
std::optional<Resolved> resolve(Pipeline pipe, Tolerance tol) {
    auto [canon, perm] = canonicalize(coeffs_of(pipe.work));
    pipe.push_perm(perm);
    const double A = canon.quartic;
    const auto s = sorted_cubics(canon);
    const int cell_row = A >= 0 ? first_matching_row(A, s) : 0;

    if (auto lem = cascade(A, s, true)) {
        Polynomial q = lemma_formula(*lem, canon);
        if (local_verify(pipe.work, q, tol))
            return Resolved{std::move(pipe), std::move(q), *lem, cell_row, false};
    }

    if (A >= 0) {
        for (int r = 0; r < 35; ++r) {
            if (!row_matches(A, s, kTable[r])) continue;
            const std::size_t m = pipe.mark();
            const Polynomial saved = pipe.work;
            if (kTable[r].flips) pipe.push_flip(kTable[r].flips);
            auto [canon2, perm2] = canonicalize(coeffs_of(pipe.work));
            pipe.push_perm(perm2);
            auto s2 = sorted_cubics(canon2);
            Lemma lem = cascade(canon2.quartic, s2, false).value_or(kTable[r].lemma);
            Polynomial q = lemma_formula(lem, canon2);
            if (local_verify(pipe.work, q, tol))
                return Resolved{std::move(pipe), std::move(q), lem, r + 1, false};
            pipe.rollback(m, saved);
        }
    }
    return std::nullopt;
}

// total search: flip masks x permutations x gadgets, fixed order, first
// verified wins
std::optional<Resolved> fallback_search(const Polynomial& high, Tolerance tol) {
    std::array<int, 4> idx = {0, 1, 2, 3};
    std::vector<Perm4> perms;
    do {
        perms.push_back({idx[0], idx[1], idx[2], idx[3]});
    } while (std::next_permutation(idx.begin(), idx.end()));

    for (unsigned mask = 0; mask < 16; ++mask) {
        for (const Perm4& p : perms) {
            for (Lemma lem : {Lemma::l1, Lemma::l2, Lemma::l3, Lemma::l4}) {
                Pipeline pipe(high);
                if (mask) pipe.push_flip(static_cast<std::uint8_t>(mask));
                pipe.push_perm(p);
                Polynomial q = lemma_formula(lem, coeffs_of(pipe.work));
                if (local_verify(pipe.work, q, tol))
                    return Resolved{std::move(pipe), std::move(q), lem, 0, true};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

CasePlan classify_case(const Coeffs4& canonical) {
    if (!canonical.is_canonical())
        throw PreconditionError("classify_case expects canonical coefficient order");
    auto resolved = resolve(Pipeline(poly_of(canonical)), Tolerance{});
    CasePlan plan;
    if (!resolved) {
        plan.fallback = true;
        return plan;
    }
    auto [mask, perm] = resolved->pipe.normal_form();
    plan.flip_mask = mask;
    plan.permutation = perm;
    plan.lemma = resolved->lemma;
    plan.case_row = resolved->case_row;
    return plan;
}

Quadratization quadratize_4var(const Polynomial& f, VarId aux, Tolerance tol) {
    for (VarId v : f.variables())
        if (v.is_aux())
            throw PreconditionError("input to quadratize_4var must not contain auxiliaries");
    std::vector<VarId> support = f.original_variables();
    if (support.size() > 4)
        throw DegreeError("quadratize_4var accepts at most 4 variables, got " +
                          std::to_string(support.size()));

    Quadratization result;
    result.tolerance = tol;
    auto [low, high] = f.degree_split();
    if (high.empty()) {
        result.quadratic = f;
        return result;
    }

    // relabel to local variables 0..3
    std::map<VarId, VarId> to_local, to_global;
    for (std::size_t i = 0; i < support.size(); ++i) {
        to_local[support[i]] = kLocal[i];
        to_global[kLocal[i]] = support[i];
    }
    to_global[kAux] = aux;
    Polynomial local_high = high.renamed(to_local);

    Pipeline pipe(local_high);
    // one bit flip makes the quartic coefficient nonnegative
    if (coeffs_of(local_high).quartic < 0) pipe.push_flip(0b0001);

    std::optional<Resolved> res = resolve(std::move(pipe), tol);
    if (!res) res = fallback_search(local_high, tol);
    if (!res) throw InternalError("quadratize_4var: no verified plan found");

    Polynomial assembled = res->pipe.assemble(res->gadget_out);
    Polynomial out = assembled.renamed(to_global) + low;
    out.normalize();

    result.quadratic = out;
    bool uses_aux = false;
    for (VarId v : out.variables())
        if (v == aux) uses_aux = true;
    if (uses_aux) result.aux_vars.push_back(aux);
    result.used_fallback = res->fallback;

    GroupProvenance prov;
    prov.support = support;
    auto [mask, perm] = res->pipe.normal_form();
    prov.plan.flip_mask = mask;
    prov.plan.permutation = perm;
    prov.plan.lemma = res->lemma;
    prov.plan.case_row = res->case_row;
    prov.plan.fallback = res->fallback;
    prov.part_output = out;
    result.provenance.push_back(std::move(prov));

    auto report = verify_perfect(f, result.quadratic, result.aux_vars, tol);
    if (!report.ok)
        throw InternalError("quadratize_4var: verification failed, worst gap " +
                            std::to_string(report.worst_gap));
    return result;
}

}  // namespace quadkit::quad4
