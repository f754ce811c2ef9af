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

#include "smzi/decompose_reck.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "elim_common.hpp"
#include "smzi/errors.hpp"

namespace smzi {

ReckDecomposition::ReckDecomposition(int m_) : m(m_) {
    if (m < 0) {
        throw ValidationError("negative mode count");
    }
    smzi.resize(m > 0 ? static_cast<std::size_t>(m - 1) : 0);
    for (int j = 1; j <= m - 1; ++j) {
        smzi[static_cast<std::size_t>(j - 1)].resize(static_cast<std::size_t>(j));
    }
    phi_in.assign(m > 0 ? static_cast<std::size_t>(m - 1) : 0, 0.0);
    zeta_out.assign(m > 0 ? static_cast<std::size_t>(m - 1) : 0, 0.0);
}

void ReckDecomposition::validate() const {
    if (m < 1) {
        throw ValidationError("decomposition has no modes");
    }
    if (smzi.size() != static_cast<std::size_t>(m - 1) ||
        phi_in.size() != static_cast<std::size_t>(m - 1) ||
        zeta_out.size() != static_cast<std::size_t>(m - 1)) {
        throw ValidationError("decomposition index sets do not match m");
    }
    for (int j = 1; j <= m - 1; ++j) {
        if (smzi[static_cast<std::size_t>(j - 1)].size() != static_cast<std::size_t>(j)) {
            throw ValidationError("diagonal " + std::to_string(j) + " has wrong length");
        }
    }
}

ReckDecomposition decompose_reck(const UnitaryMatrix& u, ElimDiagnostics* diag) {
    if (u.certified_tol() > kDecomposeInputTol) {
        throw ValidationError("input unitarity certificate exceeds 1e-10");
    }
    const int m = static_cast<int>(u.dim());
    ReckDecomposition d(m);
    ComplexMat v = u.mat().conjugate();

    std::vector<std::pair<int, int>> zeroed; // 0-based positions already eliminated

    for (int j = 1; j <= m - 1; ++j) {
        int x = m;
        int y = j;

        // Input phase on mode y+1 aligns the first target pair of the diagonal.
        const double phi =
            wrap_angle(arg0(v.at(x - 1, y - 1)) - arg0(v.at(x - 1, y)));
        scale_col_inplace(v, static_cast<std::size_t>(y + 1), std::polar(1.0, phi));
        d.phi(j) = phi;

        for (int k = 1; k <= j; ++k) {
            const cplx p = v.at(x - 1, y - 1);
            const cplx q = v.at(x - 1, y);
            ElimStepRecord rec = detail::make_step_record(j, k, x, y, p, q);

            const double delta = detail::solve_delta(p, q);
            mix_cols_inplace(v, static_cast<std::size_t>(y), detail::rotation_block(delta));

            rec.residual_after = std::abs(v.at(x - 1, y - 1));
            if (rec.residual_after > kZeroFailureTol) {
                throw NumericalError("failed to zero matrix element", j, k, x, y);
            }

            // Sigma of this sMZI aligns the next target pair; the last choice
            // in a diagonal is redundant and fixed to zero.
            double sigma = 0.0;
            if (k < j) {
                sigma = wrap_angle(arg0(v.at(x - 2, y - 2)) - arg0(v.at(x - 2, y - 1)));
                const cplx ph = std::polar(1.0, sigma);
                scale_col_inplace(v, static_cast<std::size_t>(y), ph);
                scale_col_inplace(v, static_cast<std::size_t>(y + 1), ph);
            }
            d.setting(j, k) = SmziSetting::from_sigma_delta(sigma, delta).wrapped();

            zeroed.emplace_back(x - 1, y - 1);
            if (diag != nullptr) {
                diag->steps.push_back(rec);
            }
            x -= 1;
            y -= 1;
        }

        if (diag != nullptr) {
            diag->unitarity_by_diagonal.push_back(UnitaryMatrix::unitarity_deviation(v));
            double worst = 0.0;
            for (const auto& [zr, zc] : zeroed) {
                worst = std::max(worst, std::abs(v.at(zr, zc)));
            }
            diag->zeroed_residual_by_diagonal.push_back(worst);
        }
    }

    for (const auto& [zr, zc] : zeroed) {
        if (std::abs(v.at(zr, zc)) > kZeroFailureTol) {
            throw NumericalError("eliminated element drifted", 0, 0, zr + 1, zc + 1);
        }
    }

    for (int j = 2; j <= m; ++j) {
        const double zeta = wrap_angle(arg0(v.at(0, 0)) - arg0(v.at(j - 1, j - 1)));
        scale_col_inplace(v, static_cast<std::size_t>(j), std::polar(1.0, zeta));
        d.zeta(j) = zeta;
    }
    d.global_phase = wrap_angle(arg0(v.at(0, 0)));
    return d;
}

MeshCircuit build_reck_circuit(const ReckDecomposition& d) {
    d.validate();
    if (d.m < 2) {
        throw ValidationError("reck circuit requires m >= 2");
    }
    MeshCircuit c = reck_layout(d.m);
    for (MeshElement& e : c.columns.front()) {
        e.phi = wrap_angle(d.phi(e.top_mode - 1));
    }
    // reck_layout fills the interior columns in reck_placements order, so the
    // same traversal lines the settings up with their elements.
    std::vector<std::size_t> fill(c.columns.size(), 0);
    for (const ReckPlacement& p : reck_placements(d.m)) {
        auto& column = c.columns[static_cast<std::size_t>(p.column - 1)];
        MeshElement& e = column[fill[static_cast<std::size_t>(p.column - 1)]++];
        if (e.kind != MeshElement::Kind::Smzi || e.top_mode != p.top_mode) {
            throw InternalError("reck placement does not line up with reck_layout");
        }
        e.smzi = d.setting(p.j, p.k).wrapped();
    }
    for (MeshElement& e : c.columns.back()) {
        e.phi = wrap_angle(d.zeta(e.top_mode));
    }
    return c;
}

UnitaryMatrix reconstruct_reck(const ReckDecomposition& d) {
    const MeshCircuit c = build_reck_circuit(d);
    UnitaryMatrix u = evaluate(c);
    ComplexMat out = u.mat();
    out.scale(std::polar(1.0, -d.global_phase));
    return UnitaryMatrix::certify(std::move(out), 1e-11);
}

int free_parameter_count(int m) {
    if (m < 2) {
        throw DimensionError("free_parameter_count requires m >= 2");
    }
    return (m - 1) * (m - 1) + 2 * (m - 1);
}

} // namespace smzi
