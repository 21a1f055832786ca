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

#include <cstddef>
#include <span>
#include <string>

// Dense kernels over tables indexed by variable bitmasks. Evaluating a
// multilinear polynomial at every assignment is a subset-sum (zeta) transform
// of its scattered coefficient table, and converting a truth table to
// coefficients is the inverse (Moebius) transform. These inner loops carry the
// bulk of the verification work, so each has a scalar reference implementation
// and a SIMD variant selected at runtime. The variants perform the exact same
// floating-point operations in the same order per element, so results are
// bit-identical (asserted by the equivalence tests).

namespace quadkit::kernels {

enum class Isa { scalar, avx2, neon };

/// Active implementation. Picked once from CPU capabilities; the environment
/// variable QUADKIT_SIMD ("scalar", "avx2", "neon") overrides.
Isa active();
std::string isa_name(Isa isa);

/// In place, for every bit j < bits: a[x | 1<<j] += a[x]. a.size() == 2^bits.
void zeta_transform(std::span<double> a, unsigned bits);

/// Inverse of zeta_transform: a[x | 1<<j] -= a[x].
void mobius_transform(std::span<double> a, unsigned bits);

/// acc[i] = min(acc[i], src[i]).
void min_accumulate(std::span<double> acc, std::span<const double> src);

struct GapScan {
    double worst = 0.0;     // max |a[i] - b[i]|
    std::size_t index = 0;  // first index attaining it
};

GapScan max_abs_gap(std::span<const double> a, std::span<const double> b);

// Reference implementations, always available.
namespace scalar {
void zeta_transform(std::span<double> a, unsigned bits);
void mobius_transform(std::span<double> a, unsigned bits);
void min_accumulate(std::span<double> acc, std::span<const double> src);
GapScan max_abs_gap(std::span<const double> a, std::span<const double> b);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void zeta_transform(std::span<double> a, unsigned bits);
void mobius_transform(std::span<double> a, unsigned bits);
void min_accumulate(std::span<double> acc, std::span<const double> src);
GapScan max_abs_gap(std::span<const double> a, std::span<const double> b);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
void zeta_transform(std::span<double> a, unsigned bits);
void mobius_transform(std::span<double> a, unsigned bits);
void min_accumulate(std::span<double> acc, std::span<const double> src);
GapScan max_abs_gap(std::span<const double> a, std::span<const double> b);
}  // namespace neon
#endif

}  // namespace quadkit::kernels
