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

#include <doctest.h>

#include <complex>
#include <string>
#include <vector>

#include "smzi/kernels.hpp"
#include "smzi/rng.hpp"

using smzi::kernels::cplx;

namespace {

std::vector<cplx> random_vec(std::size_t n, std::uint64_t seed) {
    smzi::Rng rng(seed);
    std::vector<cplx> v(n);
    for (cplx& z : v) {
        z = cplx{2.0 * rng.next_unit() - 1.0, 2.0 * rng.next_unit() - 1.0};
    }
    return v;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

} // namespace

TEST_CASE("every available kernel set matches the scalar reference") {
    const auto& scalar = smzi::kernels::scalar_ops();
    const std::vector<std::size_t> sizes = {0, 1, 2, 3, 5, 8, 16, 33};

    for (const auto* ops : smzi::kernels::all_available()) {
        CAPTURE(ops->name);
        for (std::size_t n : sizes) {
            const cplx a{0.3, -0.7};
            const auto x = random_vec(n, 11 * n + 1);

            auto y1 = random_vec(n, 5 * n + 2);
            auto y2 = y1;
            scalar.caxpy(y1.data(), a, x.data(), n);
            ops->caxpy(y2.data(), a, x.data(), n);
            CHECK(max_diff(y1, y2) < 1e-13);

            auto s1 = x;
            auto s2 = x;
            scalar.cscale(s1.data(), a, n);
            ops->cscale(s2.data(), a, n);
            CHECK(max_diff(s1, s2) < 1e-13);

            const cplx block[4] = {{0.2, 0.5}, {-0.4, 0.1}, {0.9, -0.3}, {0.6, 0.8}};
            auto px1 = random_vec(n, 7 * n + 3);
            auto py1 = random_vec(n, 7 * n + 4);
            auto px2 = px1;
            auto py2 = py1;
            scalar.pair_mix(px1.data(), py1.data(), n, block);
            ops->pair_mix(px2.data(), py2.data(), n, block);
            CHECK(max_diff(px1, px2) < 1e-13);
            CHECK(max_diff(py1, py2) < 1e-13);

            const cplx* rhs = n != 0 ? px1.data() : x.data();
            const cplx d1 = scalar.cdotc(x.data(), rhs, n);
            const cplx d2 = ops->cdotc(x.data(), rhs, n);
            CHECK(std::abs(d1 - d2) < 1e-12 * (1.0 + static_cast<double>(n)));
        }

        // Strided adjacent pairs, the right-multiplication layout.
        for (std::size_t rows : {std::size_t{1}, std::size_t{3}, std::size_t{7}}) {
            const std::size_t stride = 6;
            const cplx block[4] = {{0.1, -0.2}, {0.7, 0.4}, {-0.5, 0.3}, {0.2, 0.9}};
            auto p1 = random_vec(rows * stride, 99 * rows);
            auto p2 = p1;
            scalar.pair_mix_adjacent(p1.data(), rows, stride, block);
            ops->pair_mix_adjacent(p2.data(), rows, stride, block);
            CHECK(max_diff(p1, p2) < 1e-13);
        }
    }
}

TEST_CASE("kernel selection by name") {
    CHECK(smzi::kernels::select("scalar"));
    CHECK(std::string(smzi::kernels::active().name) == "scalar");
    CHECK_FALSE(smzi::kernels::select("no-such-kernel"));
    CHECK(smzi::kernels::select("auto"));
}
