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

#include "oracles.hpp"
#include "smzi/decompose_reck.hpp"
#include "smzi/errors.hpp"
#include "smzi/haar.hpp"
#include "smzi/rng.hpp"

using smzi::ComplexMat;
using smzi::cplx;

TEST_CASE("identity hand trace") {
    const auto u = smzi::UnitaryMatrix::certify(ComplexMat::identity(2), 1e-15);
    const auto d = smzi::decompose_reck(u);

    CHECK(d.setting(1, 1).delta() == doctest::Approx(smzi::kPi / 2));
    CHECK(d.setting(1, 1).sigma() == doctest::Approx(0.0));
    CHECK(d.setting(1, 1).theta1 == doctest::Approx(smzi::kPi / 2));
    CHECK(d.setting(1, 1).theta2 == doctest::Approx(-smzi::kPi / 2));
    CHECK(d.phi(1) == 0.0);
    // zeta_2 realizes e^{i zeta} = -1; the canonical branch stores +pi.
    CHECK(std::abs(std::polar(1.0, d.zeta(2)) - cplx{-1.0, 0.0}) < 1e-15);
    CHECK(d.global_phase == 0.0);

    CHECK(smzi::global_phase_distance(smzi::reconstruct_reck(d), u) < 1e-11);
}

TEST_CASE("swap hand trace") {
    ComplexMat swap(2, 2);
    swap.at(0, 1) = 1.0;
    swap.at(1, 0) = 1.0;
    const auto u = smzi::UnitaryMatrix::certify(std::move(swap), 1e-15);
    const auto d = smzi::decompose_reck(u);
    CHECK(d.setting(1, 1).theta1 == 0.0);
    CHECK(d.setting(1, 1).theta2 == 0.0);
    CHECK(d.phi(1) == 0.0);
    CHECK(d.zeta(2) == 0.0);
    CHECK(smzi::global_phase_distance(smzi::reconstruct_reck(d), u) < 1e-12);
}

TEST_CASE("haar round trip") {
    const auto u = smzi::haar_random_unitary(8, 7);
    const auto d = smzi::decompose_reck(u);
    CHECK(smzi::global_phase_distance(smzi::reconstruct_reck(d), u) < 1e-10);
}

TEST_CASE("round trips and elimination invariants across sizes") {
    for (int m = 2; m <= 8; ++m) {
        for (std::uint64_t t = 0; t < 10; ++t) {
            const auto u = smzi::haar_random_unitary(static_cast<std::size_t>(m), 10 * m + t);
            smzi::ElimDiagnostics diag;
            const auto d = smzi::decompose_reck(u, &diag);
            CHECK(smzi::global_phase_distance(smzi::reconstruct_reck(d), u) < 1e-9);

            // Phase matching held before every zeroing step.
            for (const auto& step : diag.steps) {
                const bool matched = step.phase_mismatch < 1e-9 || step.smaller_mag < 1e-12;
                CHECK(matched);
                CHECK(step.residual_after < 1e-10);
            }
            // Zeros persist and the working matrix stays unitary.
            for (double r : diag.zeroed_residual_by_diagonal) {
                CHECK(r < 1e-10);
            }
            for (double dev : diag.unitarity_by_diagonal) {
                CHECK(dev < 1e-10);
            }
        }
    }
}

TEST_CASE("table shape and canonical redundancy") {
    const auto u = smzi::haar_random_unitary(6, 101);
    const auto d = smzi::decompose_reck(u);
    CHECK(d.m == 6);
    CHECK(d.smzi_total() == 15);
    CHECK(d.phi_in.size() == 5);
    CHECK(d.zeta_out.size() == 5);
    int count = 0;
    for (int j = 1; j <= 5; ++j) {
        for (int k = 1; k <= j; ++k) {
            const auto& s = d.setting(j, k);
            CHECK(std::abs(s.theta1) <= smzi::kPi + 1e-12);
            CHECK(std::abs(s.theta2) <= smzi::kPi + 1e-12);
            ++count;
        }
        // The last sigma of every diagonal is fixed to zero.
        CHECK(d.setting(j, j).sigma() == doctest::Approx(0.0).epsilon(1e-15));
    }
    CHECK(count == 15);
}

TEST_CASE("determinism of the tables") {
    const auto u = smzi::haar_random_unitary(7, 5150);
    const auto a = smzi::decompose_reck(u);
    const auto b = smzi::decompose_reck(u);
    for (int j = 1; j <= 6; ++j) {
        for (int k = 1; k <= j; ++k) {
            CHECK(a.setting(j, k).theta1 == b.setting(j, k).theta1);
            CHECK(a.setting(j, k).theta2 == b.setting(j, k).theta2);
        }
    }
    for (std::size_t i = 0; i < a.phi_in.size(); ++i) {
        CHECK(a.phi_in[i] == b.phi_in[i]);
    }
    CHECK(a.global_phase == b.global_phase);
}

TEST_CASE("reconstruction equals the explicit operator product") {
    // Random tables, evaluated against a full embedded-matrix product in the
    // triangular operator order.
    smzi::Rng rng(777);
    const int m = 5;
    smzi::ReckDecomposition d(m);
    for (int j = 1; j <= m - 1; ++j) {
        for (int k = 1; k <= j; ++k) {
            d.setting(j, k) = smzi::SmziSetting{rng.next_angle(), rng.next_angle()};
        }
        d.phi(j) = rng.next_angle();
    }
    for (int j = 2; j <= m; ++j) {
        d.zeta(j) = rng.next_angle();
    }
    d.global_phase = rng.next_angle();

    std::vector<ComplexMat> factors; // input side first
    for (int j = 1; j <= m - 1; ++j) {
        factors.push_back(oracles::embed_phase(m, static_cast<std::size_t>(j + 1), d.phi(j)));
        for (int k = 1; k <= j; ++k) {
            factors.push_back(oracles::embed2(m, smzi::smzi_block(d.setting(j, k)),
                                              static_cast<std::size_t>(j - k + 1)));
        }
    }
    for (int j = 2; j <= m; ++j) {
        factors.push_back(oracles::embed_phase(m, static_cast<std::size_t>(j), d.zeta(j)));
    }
    ComplexMat expect = oracles::ordered_product(m, factors);
    expect.scale(std::polar(1.0, -d.global_phase));

    CHECK(smzi::max_abs_diff(smzi::reconstruct_reck(d).mat(), expect) < 1e-13);
}

TEST_CASE("free parameter count") {
    CHECK(smzi::free_parameter_count(2) == 3);
    CHECK(smzi::free_parameter_count(5) == 24);
    CHECK(smzi::free_parameter_count(3) == 8);
    CHECK_THROWS_AS((void)smzi::free_parameter_count(1), smzi::DimensionError);
}

TEST_CASE("non-unitary inputs are rejected up front") {
    // A certificate looser than the decomposition gate is refused.
    ComplexMat near = ComplexMat::identity(3);
    near.at(0, 0) = 1.0 + 5e-9;
    const auto loose = smzi::UnitaryMatrix::certify(std::move(near), 1e-7);
    CHECK_THROWS_AS((void)smzi::decompose_reck(loose), smzi::ValidationError);
}
