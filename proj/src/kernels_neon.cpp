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

#if defined(__aarch64__)

#include <arm_neon.h>

namespace smzi::kernels {
namespace {

// One float64x2_t holds one complex double: [re, im].
inline float64x2_t cmul_v(float64x2_t u, float64x2_t w) {
    const float64x2_t ur = vdupq_laneq_f64(u, 0);
    const float64x2_t ui = vdupq_laneq_f64(u, 1);
    const float64x2_t ws = vextq_f64(w, w, 1);
    const float64x2_t sign = {-1.0, 1.0};
    return vfmaq_f64(vmulq_f64(vmulq_f64(ui, ws), sign), ur, w);
}

inline float64x2_t load_c(const cplx* p) {
    return vld1q_f64(reinterpret_cast<const double*>(p));
}

inline void store_c(cplx* p, float64x2_t v) {
    vst1q_f64(reinterpret_cast<double*>(p), v);
}

void caxpy_neon(cplx* y, cplx a, const cplx* x, std::size_t n) {
    const float64x2_t av = {a.real(), a.imag()};
    for (std::size_t i = 0; i < n; ++i) {
        store_c(y + i, vaddq_f64(load_c(y + i), cmul_v(av, load_c(x + i))));
    }
}

void cscale_neon(cplx* x, cplx a, std::size_t n) {
    const float64x2_t av = {a.real(), a.imag()};
    for (std::size_t i = 0; i < n; ++i) {
        store_c(x + i, cmul_v(av, load_c(x + i)));
    }
}

void pair_mix_neon(cplx* x, cplx* y, std::size_t n, const cplx* b) {
    const float64x2_t b0 = {b[0].real(), b[0].imag()};
    const float64x2_t b1 = {b[1].real(), b[1].imag()};
    const float64x2_t b2 = {b[2].real(), b[2].imag()};
    const float64x2_t b3 = {b[3].real(), b[3].imag()};
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t xv = load_c(x + i);
        const float64x2_t yv = load_c(y + i);
        store_c(x + i, vaddq_f64(cmul_v(b0, xv), cmul_v(b1, yv)));
        store_c(y + i, vaddq_f64(cmul_v(b2, xv), cmul_v(b3, yv)));
    }
}

void pair_mix_adjacent_neon(cplx* p, std::size_t n, std::size_t stride, const cplx* b) {
    const float64x2_t b0 = {b[0].real(), b[0].imag()};
    const float64x2_t b1 = {b[1].real(), b[1].imag()};
    const float64x2_t b2 = {b[2].real(), b[2].imag()};
    const float64x2_t b3 = {b[3].real(), b[3].imag()};
    for (std::size_t i = 0; i < n; ++i) {
        cplx* q = p + i * stride;
        const float64x2_t z1 = load_c(q);
        const float64x2_t z2 = load_c(q + 1);
        store_c(q, vaddq_f64(cmul_v(z1, b0), cmul_v(z2, b2)));
        store_c(q + 1, vaddq_f64(cmul_v(z1, b1), cmul_v(z2, b3)));
    }
}

cplx cdotc_neon(const cplx* x, const cplx* y, std::size_t n) {
    const float64x2_t sign = {1.0, -1.0};
    float64x2_t acc_re = {0.0, 0.0};
    float64x2_t acc_im = {0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t xv = load_c(x + i);
        const float64x2_t yv = load_c(y + i);
        const float64x2_t ys = vextq_f64(yv, yv, 1);
        acc_re = vfmaq_f64(acc_re, xv, yv);
        acc_im = vfmaq_f64(acc_im, vmulq_f64(xv, sign), ys);
    }
    return {vaddvq_f64(acc_re), vaddvq_f64(acc_im)};
}

} // namespace

const Ops* neon_ops() {
    static const Ops ops = {
        "neon",          caxpy_neon, cscale_neon, pair_mix_neon,
        pair_mix_adjacent_neon, cdotc_neon,
    };
    return &ops;
}

} // namespace smzi::kernels

#else

namespace smzi::kernels {
const Ops* neon_ops() { return nullptr; }
} // namespace smzi::kernels

#endif
