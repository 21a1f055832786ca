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

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>

namespace quadkit {

// ---------------------------------------------------------------------------
// errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what)
        : Error("parse error at line " + std::to_string(line_) + ": " + what), line(line_) {}
};

struct MissingVariableError : Error {
    using Error::Error;
};

struct DegreeError : Error {
    using Error::Error;
};

struct BudgetError : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    using Error::Error;
};

struct InterpretationError : Error {
    using Error::Error;
};

struct InternalError : Error {
    using Error::Error;
};

// ---------------------------------------------------------------------------
// variables
// ---------------------------------------------------------------------------

/// A binary variable: either one of the input ("original") variables or an
/// auxiliary variable introduced by a quadratization. Originals sort before
/// auxiliaries, each kind by index.
class VarId {
  public:
    constexpr VarId() : raw_(0) {}

    static constexpr VarId original(std::uint32_t index) { return VarId(index); }
    static constexpr VarId aux(std::uint32_t index) { return VarId(index | kAuxBit); }

    constexpr bool is_aux() const { return (raw_ & kAuxBit) != 0; }
    constexpr std::uint32_t index() const { return raw_ & ~kAuxBit; }

    friend constexpr auto operator<=>(VarId a, VarId b) { return a.raw_ <=> b.raw_; }
    friend constexpr bool operator==(VarId a, VarId b) { return a.raw_ == b.raw_; }

    /// 1-based display form, matching the polynomial file format: b7, a2.
    std::string str() const {
        return (is_aux() ? "a" : "b") + std::to_string(index() + 1);
    }

  private:
    static constexpr std::uint32_t kAuxBit = 0x8000'0000u;
    explicit constexpr VarId(std::uint32_t raw) : raw_(raw) {}
    std::uint32_t raw_;
};

// ---------------------------------------------------------------------------
// monomials
// ---------------------------------------------------------------------------

/// Product of distinct variables. The quadratization paths only handle degree
/// <= 4, but truth-table conversion produces monomials up to the table
/// dimension, so the storage cap matches the 20-variable table ceiling. The
/// empty monomial is the constant term.
class Monomial {
  public:
    static constexpr int kMaxDegree = 20;

    Monomial() : n_(0) {}

    Monomial(std::initializer_list<VarId> vars) : n_(0) {
        for (VarId v : vars) insert(v);
    }

    explicit Monomial(std::span<const VarId> vars) : n_(0) {
        for (VarId v : vars) insert(v);
    }

    /// Multilinear insert: b*b = b, so re-inserting a variable is a no-op.
    void insert(VarId v) {
        int pos = 0;
        while (pos < n_ && vars_[pos] < v) ++pos;
        if (pos < n_ && vars_[pos] == v) return;
        if (n_ == kMaxDegree)
            throw DegreeError("monomial degree would exceed " + std::to_string(kMaxDegree));
        for (int i = n_; i > pos; --i) vars_[i] = vars_[i - 1];
        vars_[pos] = v;
        ++n_;
    }

    void erase(VarId v) {
        for (int i = 0; i < n_; ++i) {
            if (vars_[i] == v) {
                for (int j = i; j + 1 < n_; ++j) vars_[j] = vars_[j + 1];
                --n_;
                return;
            }
        }
    }

    int degree() const { return n_; }
    bool is_constant() const { return n_ == 0; }
    bool contains(VarId v) const {
        for (int i = 0; i < n_; ++i)
            if (vars_[i] == v) return true;
        return false;
    }

    std::span<const VarId> vars() const { return {vars_.data(), static_cast<std::size_t>(n_)}; }
    VarId operator[](int i) const { return vars_[i]; }

    Monomial united(const Monomial& o) const {
        Monomial r = *this;
        for (VarId v : o.vars()) r.insert(v);
        return r;
    }

    bool subset_of(const Monomial& o) const {
        for (VarId v : vars())
            if (!o.contains(v)) return false;
        return true;
    }

    // graded-lex: by degree, then by variable sequence
    friend auto operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        for (int i = 0; i < a.n_; ++i)
            if (auto c = a.vars_[i] <=> b.vars_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return (a <=> b) == 0;
    }

    std::string str() const {
        if (n_ == 0) return "1";
        std::string s;
        for (int i = 0; i < n_; ++i) {
            if (i) s += "*";
            s += vars_[i].str();
        }
        return s;
    }

  private:
    std::array<VarId, kMaxDegree> vars_{};
    int n_;
};

/// Total assignment of {0,1} values to variables.
using Assignment = std::map<VarId, bool>;

}  // namespace quadkit
