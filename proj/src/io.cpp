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

#include "quadkit/io.hpp"

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace quadkit {

namespace {

std::string strip_comment(std::string line) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    return line;
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, double epsilon) {
    Polynomial p(epsilon);
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip_comment(raw);
        if (blank(line)) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError(lineno, "expected 'coefficient : indices'");
        std::string coeff_str = line.substr(0, colon);
        std::istringstream cs(coeff_str);
        double coeff;
        if (!(cs >> coeff)) throw ParseError(lineno, "bad coefficient '" + coeff_str + "'");
        std::string trailing;
        if (cs >> trailing) throw ParseError(lineno, "unexpected token '" + trailing + "'");

        Monomial m;
        std::set<VarId> seen;
        std::istringstream vs(line.substr(colon + 1));
        std::string tok;
        while (vs >> tok) {
            bool aux = tok[0] == 'a';
            std::string digits = aux ? tok.substr(1) : tok;
            long idx = 0;
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), idx);
            if (ec != std::errc() || ptr != digits.data() + digits.size() || idx < 1)
                throw ParseError(lineno, "bad variable index '" + tok + "'");
            VarId v = aux ? VarId::aux(static_cast<std::uint32_t>(idx - 1))
                          : VarId::original(static_cast<std::uint32_t>(idx - 1));
            if (!seen.insert(v).second)
                throw ParseError(lineno, "variable " + tok + " repeated within one term");
            if (m.degree() == Monomial::kMaxDegree)
                throw ParseError(lineno,
                                 "term degree exceeds " + std::to_string(Monomial::kMaxDegree));
            m.insert(v);
        }
        p.add_term(m, coeff);
    }
    p.normalize();
    return p;
}

std::string format_polynomial(const Polynomial& p) {
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        out += fmt17(c);
        out += " :";
        for (VarId v : m.vars()) {
            out += ' ';
            if (v.is_aux()) out += 'a';
            out += std::to_string(v.index() + 1);
        }
        out += '\n';
    }
    return out;
}

std::vector<double> parse_truth_table(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<double> values;
    std::string tok;
    while (in >> tok) {
        if (tok[0] == '#') {
            std::string rest;
            std::getline(in, rest);
            continue;
        }
        char* end = nullptr;
        errno = 0;
        double v = std::strtod(tok.c_str(), &end);
        if (errno != 0 || end != tok.c_str() + tok.size())
            throw Error("bad truth-table value '" + tok + "'");
        values.push_back(v);
    }
    if (values.empty() || (values.size() & (values.size() - 1)) != 0)
        throw Error("truth-table length must be a power of two, got " +
                    std::to_string(values.size()));
    return values;
}

std::string export_qubo(const Polynomial& quadratic) {
    if (quadratic.degree() > 2) throw DegreeError("QUBO export requires degree <= 2");

    int n = 0;
    for (VarId v : quadratic.original_variables())
        n = std::max(n, static_cast<int>(v.index()) + 1);
    std::vector<VarId> aux = quadratic.auxiliary_variables();
    const int m = static_cast<int>(aux.size());
    auto var_number = [&](VarId v) -> int {
        if (!v.is_aux()) return static_cast<int>(v.index()) + 1;
        auto it = std::lower_bound(aux.begin(), aux.end(), v);
        return n + 1 + static_cast<int>(it - aux.begin());
    };

    double constant = quadratic.coefficient({});
    std::map<std::pair<int, int>, double> entries;
    for (const auto& [mono, c] : quadratic.terms()) {
        if (mono.is_constant()) continue;
        int i, j;
        if (mono.degree() == 1) {
            i = j = var_number(mono[0]);
        } else {
            i = var_number(mono[0]);
            j = var_number(mono[1]);
            if (j < i) std::swap(i, j);
        }
        entries[{i, j}] += c;
    }

    std::string out = std::to_string(n) + " " + std::to_string(m) + " " + fmt17(constant) + "\n";
    for (const auto& [ij, c] : entries)
        out += std::to_string(ij.first) + " " + std::to_string(ij.second) + " " + fmt17(c) + "\n";
    return out;
}

QuboData import_qubo(std::string_view text) {
    std::istringstream in{std::string(text)};
    QuboData data;
    double constant;
    if (!(in >> data.n >> data.m >> constant)) throw ParseError(1, "bad QUBO header");
    if (data.n < 0 || data.m < 0) throw ParseError(1, "negative counts in QUBO header");
    data.poly.add_term({}, constant);
    auto var_of = [&](int num) -> VarId {
        if (num < 1 || num > data.n + data.m)
            throw Error("QUBO variable number " + std::to_string(num) + " out of range");
        return num <= data.n ? VarId::original(static_cast<std::uint32_t>(num - 1))
                             : VarId::aux(static_cast<std::uint32_t>(num - data.n - 1));
    };
    int i, j;
    double c;
    while (in >> i >> j >> c) {
        if (j < i) throw Error("QUBO entries must satisfy i <= j");
        if (i == j)
            data.poly.add_term({var_of(i)}, c);
        else
            data.poly.add_term({var_of(i), var_of(j)}, c);
    }
    data.poly.normalize();
    return data;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void atomic_write(const std::filesystem::path& path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp.string());
        out << content;
        if (!out.good()) throw Error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace quadkit
