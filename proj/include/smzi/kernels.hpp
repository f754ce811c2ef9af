// Copyright 2026 The smzi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

namespace smzi::kernels {

using cplx = std::complex<double>;

/// Vectorizable inner loops shared by the matrix layer. Every entry has a
/// scalar reference implementation plus optional AVX2/NEON variants that are
/// selected once at startup and must agree with the scalar path to rounding.
struct Ops {
    const char* name;

    /// y[i] += a * x[i] for i in [0, n).
    void (*caxpy)(cplx* y, cplx a, const cplx* x, std::size_t n);

    /// x[i] *= a for i in [0, n).
    void (*cscale)(cplx* x, cplx a, std::size_t n);

    /// Column-vector update over two contiguous spans:
    ///   [x[i]; y[i]] <- [[b0, b1], [b2, b3]] * [x[i]; y[i]].
    void (*pair_mix)(cplx* x, cplx* y, std::size_t n, const cplx* block);

    /// Row-vector update over n adjacent pairs with a stride between them:
    ///   [p[i*stride], p[i*stride+1]] <- [p[i*stride], p[i*stride+1]] * [[b0, b1], [b2, b3]].
    void (*pair_mix_adjacent)(cplx* p, std::size_t n, std::size_t stride, const cplx* block);

    /// sum over i of conj(x[i]) * y[i].
    cplx (*cdotc)(const cplx* x, const cplx* y, std::size_t n);
};

/// Scalar reference kernels; always available.
const Ops& scalar_ops();

/// AVX2+FMA kernels, or nullptr when the build target or CPU lacks them.
const Ops* avx2_ops();

/// NEON kernels, or nullptr off aarch64.
const Ops* neon_ops();

/// The kernel set in use. Picked once: the SMZI_KERNEL environment variable
/// ("scalar", "avx2", "neon") wins, otherwise the best supported variant.
const Ops& active();

/// Force a kernel set by name ("auto" re-detects). Returns false if the
/// requested set is unavailable. Not thread-safe; intended for tests.
bool select(std::string_view name);

/// All kernel sets usable on this machine (scalar first).
std::vector<const Ops*> all_available();

} // namespace smzi::kernels
