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
#include "smzi/complex_mat.hpp"
#include "smzi/errors.hpp"
#include "smzi/haar.hpp"

using smzi::ComplexMat;
using smzi::cplx;

TEST_CASE("arg0 conventions") {
    CHECK(smzi::arg0(cplx{0.0, 0.0}) == 0.0);
    CHECK(smzi::arg0(cplx{-1.0, 0.0}) == doctest::Approx(smzi::kPi));
    CHECK(smzi::arg0(cplx{1.0, 1.0}) == doctest::Approx(smzi::kPi / 4.0));
}

TEST_CASE("wrap_angle lands on (-pi, pi]") {
    CHECK(smzi::wrap_angle(smzi::kPi) == doctest::Approx(smzi::kPi));
    CHECK(smzi::wrap_angle(-smzi::kPi) == doctest::Approx(smzi::kPi));
    CHECK(smzi::wrap_angle(3.0 * smzi::kPi) == doctest::Approx(smzi::kPi));
    CHECK(smzi::wrap_angle(0.25) == 0.25);
    CHECK(smzi::wrap_angle(-0.25) == -0.25);
}

TEST_CASE("mat_mul identity and swap") {
    const ComplexMat x = oracles::random_mat(3, 3, 42);
    const ComplexMat ix = smzi::mat_mul(ComplexMat::identity(3), x);
    CHECK(smzi::max_abs_diff(ix, x) == 0.0);

    ComplexMat swap(2, 2);
    swap.at(0, 1) = 1.0;
    swap.at(1, 0) = 1.0;
    const ComplexMat sq = smzi::mat_mul(swap, swap);
    CHECK(smzi::max_abs_diff(sq, ComplexMat::identity(2)) == 0.0);
}

TEST_CASE("mat_mul matches the triple-loop oracle") {
    const ComplexMat a = oracles::random_mat(4, 4, 7);
    const ComplexMat b = oracles::random_mat(4, 4, 8);
    CHECK(smzi::max_abs_diff(smzi::mat_mul(a, b), oracles::brute_mul(a, b)) < 1e-14);
}

TEST_CASE("mat_mul shape errors") {
    const ComplexMat a = oracles::random_mat(3, 4, 1);
    const ComplexMat b = oracles::random_mat(3, 4, 2);
    CHECK_THROWS_AS((void)smzi::mat_mul(a, b), smzi::DimensionError);
}

TEST_CASE("mat_mul associativity on random triples") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const ComplexMat a = oracles::random_mat(5, 5, 100 + seed);
        const ComplexMat b = oracles::random_mat(5, 5, 200 + seed);
        const ComplexMat c = oracles::random_mat(5, 5, 300 + seed);
        const ComplexMat left = smzi::mat_mul(smzi::mat_mul(a, b), c);
        const ComplexMat right = smzi::mat_mul(a, smzi::mat_mul(b, c));
        CHECK(smzi::max_abs_diff(left, right) < 1e-12);
    }
}

TEST_CASE("apply_pair_right basics") {
    const smzi::Block2 id{cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{1, 0}};
    const ComplexMat i3 = ComplexMat::identity(3);
    CHECK(smzi::max_abs_diff(smzi::apply_pair_right(i3, id, 1), i3) == 0.0);

    const smzi::Block2 swap{cplx{0, 0}, cplx{1, 0}, cplx{1, 0}, cplx{0, 0}};
    const ComplexMat swapped = smzi::apply_pair_right(ComplexMat::identity(2), swap, 1);
    CHECK(std::abs(swapped.at(0, 1) - cplx{1, 0}) == 0.0);
    CHECK(std::abs(swapped.at(1, 0) - cplx{1, 0}) == 0.0);
    CHECK(std::abs(swapped.at(0, 0)) == 0.0);
}

TEST_CASE("apply_pair_right matches full embedding") {
    const ComplexMat v = oracles::random_mat(5, 5, 31);
    const smzi::Block2 b = oracles::random_block(32);
    const ComplexMat fast = smzi::apply_pair_right(v, b, 3);
    const ComplexMat slow = oracles::brute_mul(v, oracles::embed2(5, b, 3));
    CHECK(smzi::max_abs_diff(fast, slow) < 1e-14);

    // Untouched columns stay bit-identical.
    for (std::size_t r = 0; r < 5; ++r) {
        for (std::size_t c : {std::size_t{0}, std::size_t{1}, std::size_t{4}}) {
            CHECK(fast.at(r, c) == v.at(r, c));
        }
    }
    CHECK_THROWS_AS((void)smzi::apply_pair_right(v, b, 5), smzi::IndexError);
}

TEST_CASE("apply_pair_left matches full embedding") {
    const ComplexMat v = oracles::random_mat(5, 5, 33);
    const smzi::Block2 b = oracles::random_block(34);
    const ComplexMat fast = smzi::apply_pair_left(v, b, 2);
    const ComplexMat slow = oracles::brute_mul(oracles::embed2(5, b, 2), v);
    CHECK(smzi::max_abs_diff(fast, slow) < 1e-14);

    const smzi::Block2 swap{cplx{0, 0}, cplx{1, 0}, cplx{1, 0}, cplx{0, 0}};
    const ComplexMat swapped = smzi::apply_pair_left(ComplexMat::identity(2), swap, 1);
    CHECK(std::abs(swapped.at(0, 1) - cplx{1, 0}) == 0.0);
    CHECK_THROWS_AS((void)smzi::apply_pair_left(v, b, 0), smzi::IndexError);

    const smzi::Block2 bad{cplx{std::nan(""), 0}, cplx{0, 0}, cplx{0, 0}, cplx{1, 0}};
    CHECK_THROWS_AS((void)smzi::apply_pair_left(v, bad, 1), smzi::ValidationError);
}

TEST_CASE("unitarity certification") {
    CHECK_THROWS_AS((void)smzi::UnitaryMatrix::certify(oracles::random_mat(3, 3, 5)),
                    smzi::ValidationError);
    ComplexMat nonsquare = oracles::random_mat(2, 3, 5);
    CHECK_THROWS_AS((void)smzi::UnitaryMatrix::certify(nonsquare), smzi::ValidationError);

    ComplexMat bad = ComplexMat::identity(2);
    bad.at(0, 0) = cplx{std::nan(""), 0.0};
    CHECK_THROWS_AS((void)smzi::UnitaryMatrix::certify(bad), smzi::ValidationError);

    const auto u = smzi::UnitaryMatrix::certify(ComplexMat::identity(4), 1e-15);
    CHECK(u.certified_tol() == 0.0);
}

TEST_CASE("global_phase_distance basics") {
    const auto u = smzi::haar_random_unitary(5, 9);
    CHECK(smzi::global_phase_distance(u, u) < 1e-15);

    ComplexMat rotated = u.mat();
    rotated.scale(std::polar(1.0, smzi::kPi / 3.0));
    const auto ru = smzi::UnitaryMatrix::certify(std::move(rotated), 1e-11);
    CHECK(smzi::global_phase_distance(u, ru) < 1e-15);

    ComplexMat zmat = ComplexMat::identity(2);
    zmat.at(1, 1) = -1.0;
    const auto z = smzi::UnitaryMatrix::certify(std::move(zmat), 1e-15);
    const auto i2 = smzi::UnitaryMatrix::certify(ComplexMat::identity(2), 1e-15);
    CHECK(smzi::global_phase_distance(i2, z) == doctest::Approx(1.0).epsilon(1e-12));

    // The scanned minimum over gamma agrees with the closed form.
    const double scanned = oracles::scan_phase_distance(i2.mat(), z.mat(), 1000000);
    CHECK(std::abs(scanned - smzi::global_phase_distance(i2, z)) < 1e-9);

    const auto a = smzi::haar_random_unitary(4, 21);
    const auto b = smzi::haar_random_unitary(4, 22);
    const double scanned_ab = oracles::scan_phase_distance(a.mat(), b.mat(), 200000);
    CHECK(std::abs(scanned_ab - smzi::global_phase_distance(a, b)) < 1e-8);

    const auto c3 = smzi::haar_random_unitary(3, 1);
    CHECK_THROWS_AS((void)smzi::global_phase_distance(a, c3), smzi::DimensionError);
}

TEST_CASE("global_phase_distance symmetry and unit-scalar invariance") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const auto a = smzi::haar_random_unitary(4, 50 + seed);
        const auto b = smzi::haar_random_unitary(4, 60 + seed);
        const double dab = smzi::global_phase_distance(a, b);
        const double dba = smzi::global_phase_distance(b, a);
        CHECK(std::abs(dab - dba) < 1e-13);

        ComplexMat am = a.mat();
        am.scale(std::polar(1.0, 1.234));
        const auto a2 = smzi::UnitaryMatrix::certify(std::move(am), 1e-11);
        CHECK(std::abs(smzi::global_phase_distance(a2, b) - dab) < 1e-13);

        ComplexMat bm = b.mat();
        bm.scale(std::polar(1.0, -2.6));
        const auto b2 = smzi::UnitaryMatrix::certify(std::move(bm), 1e-11);
        CHECK(std::abs(smzi::global_phase_distance(a, b2) - dab) < 1e-13);
    }
}
