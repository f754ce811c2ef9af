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

namespace smzi::kernels {
namespace {

void caxpy_scalar(cplx* y, cplx a, const cplx* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] += a * x[i];
    }
}

void cscale_scalar(cplx* x, cplx a, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        x[i] *= a;
    }
}

void pair_mix_scalar(cplx* x, cplx* y, std::size_t n, const cplx* b) {
    for (std::size_t i = 0; i < n; ++i) {
        const cplx xi = x[i];
        const cplx yi = y[i];
        x[i] = b[0] * xi + b[1] * yi;
        y[i] = b[2] * xi + b[3] * yi;
    }
}

void pair_mix_adjacent_scalar(cplx* p, std::size_t n, std::size_t stride, const cplx* b) {
    for (std::size_t i = 0; i < n; ++i) {
        cplx* q = p + i * stride;
        const cplx z1 = q[0];
        const cplx z2 = q[1];
        q[0] = z1 * b[0] + z2 * b[2];
        q[1] = z1 * b[1] + z2 * b[3];
    }
}

cplx cdotc_scalar(const cplx* x, const cplx* y, std::size_t n) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        // conj(x) * y expanded to keep the accumulation order fixed.
        re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
        im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
    }
    return {re, im};
}

} // namespace

const Ops& scalar_ops() {
    static const Ops ops = {
        "scalar",        caxpy_scalar, cscale_scalar, pair_mix_scalar,
        pair_mix_adjacent_scalar, cdotc_scalar,
    };
    return ops;
}

} // namespace smzi::kernels
