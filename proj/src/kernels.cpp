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

#include "quadkit/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <string_view>

namespace quadkit::kernels {

namespace scalar {

void zeta_transform(std::span<double> a, unsigned bits) {
    const std::size_t n = a.size();
    for (unsigned j = 0; j < bits; ++j) {
        const std::size_t bit = std::size_t{1} << j;
        for (std::size_t base = 0; base < n; base += 2 * bit)
            for (std::size_t x = base; x < base + bit; ++x) a[x + bit] += a[x];
    }
}

void mobius_transform(std::span<double> a, unsigned bits) {
    const std::size_t n = a.size();
    for (unsigned j = 0; j < bits; ++j) {
        const std::size_t bit = std::size_t{1} << j;
        for (std::size_t base = 0; base < n; base += 2 * bit)
            for (std::size_t x = base; x < base + bit; ++x) a[x + bit] -= a[x];
    }
}

void min_accumulate(std::span<double> acc, std::span<const double> src) {
    for (std::size_t i = 0; i < acc.size(); ++i)
        if (src[i] < acc[i]) acc[i] = src[i];
}

GapScan max_abs_gap(std::span<const double> a, std::span<const double> b) {
    GapScan g;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = std::fabs(a[i] - b[i]);
        if (d > g.worst) {
            g.worst = d;
            g.index = i;
        }
    }
    return g;
}

}  // namespace scalar

namespace {

Isa detect() {
    if (const char* env = std::getenv("QUADKIT_SIMD")) {
        std::string_view v(env);
        if (v == "scalar") return Isa::scalar;
#if defined(__x86_64__) || defined(_M_X64)
        if (v == "avx2" && __builtin_cpu_supports("avx2")) return Isa::avx2;
#endif
#if defined(__aarch64__)
        if (v == "neon") return Isa::neon;
#endif
        return Isa::scalar;
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2")) return Isa::avx2;
#endif
#if defined(__aarch64__)
    return Isa::neon;
#endif
    return Isa::scalar;
}

}  // namespace

Isa active() {
    static const Isa isa = detect();
    return isa;
}

std::string isa_name(Isa isa) {
    switch (isa) {
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
        default: return "scalar";
    }
}

void zeta_transform(std::span<double> a, unsigned bits) {
    switch (active()) {
#if defined(__x86_64__) || defined(_M_X64)
        case Isa::avx2: avx2::zeta_transform(a, bits); return;
#endif
#if defined(__aarch64__)
        case Isa::neon: neon::zeta_transform(a, bits); return;
#endif
        default: scalar::zeta_transform(a, bits); return;
    }
}

void mobius_transform(std::span<double> a, unsigned bits) {
    switch (active()) {
#if defined(__x86_64__) || defined(_M_X64)
        case Isa::avx2: avx2::mobius_transform(a, bits); return;
#endif
#if defined(__aarch64__)
        case Isa::neon: neon::mobius_transform(a, bits); return;
#endif
        default: scalar::mobius_transform(a, bits); return;
    }
}

void min_accumulate(std::span<double> acc, std::span<const double> src) {
    switch (active()) {
#if defined(__x86_64__) || defined(_M_X64)
        case Isa::avx2: avx2::min_accumulate(acc, src); return;
#endif
#if defined(__aarch64__)
        case Isa::neon: neon::min_accumulate(acc, src); return;
#endif
        default: scalar::min_accumulate(acc, src); return;
    }
}

GapScan max_abs_gap(std::span<const double> a, std::span<const double> b) {
    switch (active()) {
#if defined(__x86_64__) || defined(_M_X64)
        case Isa::avx2: return avx2::max_abs_gap(a, b);
#endif
#if defined(__aarch64__)
        case Isa::neon: return neon::max_abs_gap(a, b);
#endif
        default: return scalar::max_abs_gap(a, b);
    }
}

}  // namespace quadkit::kernels
