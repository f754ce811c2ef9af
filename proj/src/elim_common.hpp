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

#include <cmath>

#include "smzi/complex_mat.hpp"
#include "smzi/decompose_reck.hpp"

namespace smzi::detail {

/// Solve p*sin(delta) + q*cos(delta) = 0 for two collinear complex values,
/// projecting onto the dominant phase so a stray imaginary residue cannot
/// flip the branch. Returns delta in (-pi/2, pi/2]; the pi-ambiguity is
/// absorbed by the sigma chosen afterwards.
inline double solve_delta(cplx p, cplx q) {
    const double ap = std::abs(p);
    const double aq = std::abs(q);
    if (ap == 0.0 && aq == 0.0) {
        return 0.0;
    }
    const cplx rot = std::polar(1.0, -(ap >= aq ? std::arg(p) : std::arg(q)));
    const double a = (p * rot).real();
    const double b = (q * rot).real();
    double delta = std::atan2(-b, a);
    if (delta <= -kPi / 2.0) {
        delta += kPi;
    } else if (delta > kPi / 2.0) {
        delta -= kPi;
    }
    return delta;
}

/// The sigma = 0 mixing block [[sin d, cos d], [cos d, -sin d]].
inline Block2 rotation_block(double delta) {
    const double sd = std::sin(delta);
    const double cd = std::cos(delta);
    return Block2{cplx{sd, 0.0}, cplx{cd, 0.0}, cplx{cd, 0.0}, cplx{-sd, 0.0}};
}

inline ElimStepRecord make_step_record(int j, int k, int x, int y, cplx p, cplx q) {
    ElimStepRecord rec;
    rec.j = j;
    rec.k = k;
    rec.x = x;
    rec.y = y;
    rec.phase_mismatch = std::abs(wrap_angle(arg0(p) - arg0(q)));
    rec.smaller_mag = std::min(std::abs(p), std::abs(q));
    rec.residual_after = 0.0;
    return rec;
}

} // namespace smzi::detail
