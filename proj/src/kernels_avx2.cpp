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

#include "smzi/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#define SMZI_AVX2 __attribute__((target("avx2,fma")))

namespace smzi::kernels {
namespace {

// One __m256d holds two interleaved complex doubles: [re0, im0, re1, im1].
// cmul_v(u, w) multiplies them lane-pairwise:
//   even lanes: ur*wr - ui*wi, odd lanes: ur*wi + ui*wr.
SMZI_AVX2 inline __m256d cmul_v(__m256d u, __m256d w) {
    const __m256d ur = _mm256_movedup_pd(u);
    const __m256d ui = _mm256_permute_pd(u, 0xF);
    const __m256d ws = _mm256_permute_pd(w, 0x5);
    return _mm256_fmaddsub_pd(ur, w, _mm256_mul_pd(ui, ws));
}

SMZI_AVX2 void caxpy_avx2(cplx* y, cplx a, const cplx* x, std::size_t n) {
    const __m256d ar = _mm256_set1_pd(a.real());
    const __m256d ai = _mm256_set1_pd(a.imag());
    auto* yd = reinterpret_cast<double*>(y);
    const auto* xd = reinterpret_cast<const double*>(x);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        const __m256d xs = _mm256_permute_pd(xv, 0x5);
        const __m256d prod = _mm256_fmaddsub_pd(ar, xv, _mm256_mul_pd(ai, xs));
        _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(yv, prod));
    }
    for (; i < n; ++i) {
        y[i] += a * x[i];
    }
}

SMZI_AVX2 void cscale_avx2(cplx* x, cplx a, std::size_t n) {
    const __m256d ar = _mm256_set1_pd(a.real());
    const __m256d ai = _mm256_set1_pd(a.imag());
    auto* xd = reinterpret_cast<double*>(x);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        const __m256d xs = _mm256_permute_pd(xv, 0x5);
        _mm256_storeu_pd(xd + 2 * i, _mm256_fmaddsub_pd(ar, xv, _mm256_mul_pd(ai, xs)));
    }
    for (; i < n; ++i) {
        x[i] *= a;
    }
}

SMZI_AVX2 void pair_mix_avx2(cplx* x, cplx* y, std::size_t n, const cplx* b) {
    const __m256d b0r = _mm256_set1_pd(b[0].real()), b0i = _mm256_set1_pd(b[0].imag());
    const __m256d b1r = _mm256_set1_pd(b[1].real()), b1i = _mm256_set1_pd(b[1].imag());
    const __m256d b2r = _mm256_set1_pd(b[2].real()), b2i = _mm256_set1_pd(b[2].imag());
    const __m256d b3r = _mm256_set1_pd(b[3].real()), b3i = _mm256_set1_pd(b[3].imag());
    auto* xd = reinterpret_cast<double*>(x);
    auto* yd = reinterpret_cast<double*>(y);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        const __m256d xs = _mm256_permute_pd(xv, 0x5);
        const __m256d ys = _mm256_permute_pd(yv, 0x5);
        const __m256d t0 = _mm256_fmaddsub_pd(b0r, xv, _mm256_mul_pd(b0i, xs));
        const __m256d t1 = _mm256_fmaddsub_pd(b1r, yv, _mm256_mul_pd(b1i, ys));
        const __m256d t2 = _mm256_fmaddsub_pd(b2r, xv, _mm256_mul_pd(b2i, xs));
        const __m256d t3 = _mm256_fmaddsub_pd(b3r, yv, _mm256_mul_pd(b3i, ys));
        _mm256_storeu_pd(xd + 2 * i, _mm256_add_pd(t0, t1));
        _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(t2, t3));
    }
    for (; i < n; ++i) {
        const cplx xi = x[i];
        const cplx yi = y[i];
        x[i] = b[0] * xi + b[1] * yi;
        y[i] = b[2] * xi + b[3] * yi;
    }
}

SMZI_AVX2 void pair_mix_adjacent_avx2(cplx* p, std::size_t n, std::size_t stride, const cplx* b) {
    // Column vectors of the right-multiplied block: [b0, b1] and [b2, b3].
    const __m256d cA = _mm256_setr_pd(b[0].real(), b[0].imag(), b[1].real(), b[1].imag());
    const __m256d cB = _mm256_setr_pd(b[2].real(), b[2].imag(), b[3].real(), b[3].imag());
    auto* pd = reinterpret_cast<double*>(p);
    for (std::size_t i = 0; i < n; ++i) {
        double* q = pd + 2 * i * stride;
        const __m256d v = _mm256_loadu_pd(q);
        const __m256d z1 = _mm256_permute2f128_pd(v, v, 0x00);
        const __m256d z2 = _mm256_permute2f128_pd(v, v, 0x11);
        _mm256_storeu_pd(q, _mm256_add_pd(cmul_v(z1, cA), cmul_v(z2, cB)));
    }
}

SMZI_AVX2 cplx cdotc_avx2(const cplx* x, const cplx* y, std::size_t n) {
    const __m256d sign = _mm256_setr_pd(1.0, -1.0, 1.0, -1.0);
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    const auto* xd = reinterpret_cast<const double*>(x);
    const auto* yd = reinterpret_cast<const double*>(y);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        const __m256d ys = _mm256_permute_pd(yv, 0x5);
        acc_re = _mm256_fmadd_pd(xv, yv, acc_re);
        acc_im = _mm256_fmadd_pd(_mm256_mul_pd(xv, sign), ys, acc_im);
    }
    alignas(32) double lane_re[4];
    alignas(32) double lane_im[4];
    _mm256_store_pd(lane_re, acc_re);
    _mm256_store_pd(lane_im, acc_im);
    double re = lane_re[0] + lane_re[1] + lane_re[2] + lane_re[3];
    double im = lane_im[0] + lane_im[1] + lane_im[2] + lane_im[3];
    for (; i < n; ++i) {
        re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
        im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
    }
    return {re, im};
}

} // namespace

const Ops* avx2_ops() {
    if (!__builtin_cpu_supports("avx2") || !__builtin_cpu_supports("fma")) {
        return nullptr;
    }
    static const Ops ops = {
        "avx2",          caxpy_avx2, cscale_avx2, pair_mix_avx2,
        pair_mix_adjacent_avx2, cdotc_avx2,
    };
    return &ops;
}

} // namespace smzi::kernels

#else

namespace smzi::kernels {
const Ops* avx2_ops() { return nullptr; }
} // namespace smzi::kernels

#endif
