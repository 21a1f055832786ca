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

// AVX2 variants. Built with -mavx2 for this translation unit only; callers
// reach them through the runtime dispatch in kernels.cpp. Strides below 4
// doubles fall back to the scalar loop on the affected butterfly levels, so
// the operation sequence per element matches the reference exactly.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cmath>

#include "quadkit/kernels.hpp"

namespace quadkit::kernels::avx2 {

namespace {

template <bool add>
void butterfly(std::span<double> a, unsigned bits) {
    const std::size_t n = a.size();
    double* p = a.data();
    for (unsigned j = 0; j < bits; ++j) {
        const std::size_t bit = std::size_t{1} << j;
        if (bit < 4) {
            for (std::size_t base = 0; base < n; base += 2 * bit)
                for (std::size_t x = base; x < base + bit; ++x) {
                    if constexpr (add)
                        p[x + bit] += p[x];
                    else
                        p[x + bit] -= p[x];
                }
            continue;
        }
        for (std::size_t base = 0; base < n; base += 2 * bit) {
            for (std::size_t x = base; x < base + bit; x += 4) {
                __m256d lo = _mm256_loadu_pd(p + x);
                __m256d hi = _mm256_loadu_pd(p + x + bit);
                __m256d r = add ? _mm256_add_pd(hi, lo) : _mm256_sub_pd(hi, lo);
                _mm256_storeu_pd(p + x + bit, r);
            }
        }
    }
}

}  // namespace

void zeta_transform(std::span<double> a, unsigned bits) { butterfly<true>(a, bits); }

void mobius_transform(std::span<double> a, unsigned bits) { butterfly<false>(a, bits); }

void min_accumulate(std::span<double> acc, std::span<const double> src) {
    const std::size_t n = acc.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d a = _mm256_loadu_pd(acc.data() + i);
        __m256d s = _mm256_loadu_pd(src.data() + i);
        _mm256_storeu_pd(acc.data() + i, _mm256_min_pd(a, s));
    }
    for (; i < n; ++i)
        if (src[i] < acc[i]) acc[i] = src[i];
}

GapScan max_abs_gap(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = a.size();
    const __m256d signmask = _mm256_set1_pd(-0.0);
    __m256d vmax = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i));
        vmax = _mm256_max_pd(vmax, _mm256_andnot_pd(signmask, d));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, vmax);
    GapScan g;
    for (double v : lanes)
        if (v > g.worst) g.worst = v;
    for (; i < n; ++i) {
        double d = std::fabs(a[i] - b[i]);
        if (d > g.worst) g.worst = d;
    }
    // first index attaining the maximum, matching the scalar reference
    for (std::size_t k = 0; k < n; ++k) {
        if (std::fabs(a[k] - b[k]) == g.worst) {
            g.index = k;
            break;
        }
    }
    return g;
}

}  // namespace quadkit::kernels::avx2

#endif
