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

#include <cmath>

#include "smzi/errors.hpp"
#include "smzi/haar.hpp"

TEST_CASE("one-mode sampler returns a unit-modulus scalar") {
    const auto u = smzi::haar_random_unitary(1, 77);
    CHECK(std::abs(std::abs(u.mat().at(0, 0)) - 1.0) < 1e-15);
}

TEST_CASE("sampler is deterministic per (m, seed)") {
    const auto a = smzi::haar_random_unitary(8, 42);
    const auto b = smzi::haar_random_unitary(8, 42);
    for (std::size_t i = 0; i < a.mat().data().size(); ++i) {
        CHECK(a.mat().data()[i] == b.mat().data()[i]);
    }
    const auto c = smzi::haar_random_unitary(8, 43);
    CHECK(smzi::max_abs_diff(a.mat(), c.mat()) > 1e-3);
}

TEST_CASE("unitarity certification for every size up to 64") {
    for (std::size_t m = 1; m <= 64; ++m) {
        const auto u = smzi::haar_random_unitary(m, 1000 + m);
        CHECK(u.certified_tol() < 1e-12);
    }
    const auto big = smzi::haar_random_unitary(64, 4);
    CHECK(smzi::UnitaryMatrix::unitarity_deviation(big.mat()) < 1e-12);
}

TEST_CASE("zero-dimension request is rejected") {
    CHECK_THROWS_AS((void)smzi::haar_random_unitary(0, 1), smzi::DimensionError);
}
