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

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cmath>

#include "quadkit/kernels.hpp"

namespace quadkit::kernels::neon {

namespace {

template <bool add>
void butterfly(std::span<double> a, unsigned bits) {
    const std::size_t n = a.size();
    double* p = a.data();
    for (unsigned j = 0; j < bits; ++j) {
        const std::size_t bit = std::size_t{1} << j;
        if (bit < 2) {
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
            for (std::size_t x = base; x < base + bit; x += 2) {
                float64x2_t lo = vld1q_f64(p + x);
                float64x2_t hi = vld1q_f64(p + x + bit);
                vst1q_f64(p + x + bit, add ? vaddq_f64(hi, lo) : vsubq_f64(hi, lo));
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
    for (; i + 2 <= n; i += 2) {
        float64x2_t a = vld1q_f64(acc.data() + i);
        float64x2_t s = vld1q_f64(src.data() + i);
        vst1q_f64(acc.data() + i, vminq_f64(a, s));
    }
    for (; i < n; ++i)
        if (src[i] < acc[i]) acc[i] = src[i];
}

GapScan max_abs_gap(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = a.size();
    float64x2_t vmax = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t d = vsubq_f64(vld1q_f64(a.data() + i), vld1q_f64(b.data() + i));
        vmax = vmaxq_f64(vmax, vabsq_f64(d));
    }
    GapScan g;
    g.worst = std::fmax(vgetq_lane_f64(vmax, 0), vgetq_lane_f64(vmax, 1));
    for (; i < n; ++i) {
        double d = std::fabs(a[i] - b[i]);
        if (d > g.worst) g.worst = d;
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (std::fabs(a[k] - b[k]) == g.worst) {
            g.index = k;
            break;
        }
    }
    return g;
}

}  // namespace quadkit::kernels::neon

#endif
