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

#include "smzi/decompose_clements.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "elim_common.hpp"
#include "smzi/errors.hpp"

namespace smzi {

ClementsDecomposition::ClementsDecomposition(int m_) : m(m_) {
    if (m < 0) {
        throw ValidationError("negative mode count");
    }
    smzi.resize(m > 0 ? static_cast<std::size_t>(m - 1) : 0);
    for (int j = 1; j <= m - 1; ++j) {
        smzi[static_cast<std::size_t>(j - 1)].resize(static_cast<std::size_t>(j));
    }
    phi_side.assign(m > 0 ? static_cast<std::size_t>(m - 1) : 0, 0.0);
    zeta_mid.assign(m > 0 ? static_cast<std::size_t>(m - 1) : 0, 0.0);
}

void ClementsDecomposition::validate() const {
    if (m < 1) {
        throw ValidationError("decomposition has no modes");
    }
    if (smzi.size() != static_cast<std::size_t>(m - 1) ||
        phi_side.size() != static_cast<std::size_t>(m - 1) ||
        zeta_mid.size() != static_cast<std::size_t>(m - 1)) {
        throw ValidationError("decomposition index sets do not match m");
    }
    for (int j = 1; j <= m - 1; ++j) {
        if (smzi[static_cast<std::size_t>(j - 1)].size() != static_cast<std::size_t>(j)) {
            throw ValidationError("diagonal " + std::to_string(j) + " has wrong length");
        }
    }
}

ClementsDecomposition decompose_clements_smzi(const UnitaryMatrix& u, ElimDiagnostics* diag) {
    if (u.certified_tol() > kDecomposeInputTol) {
        throw ValidationError("input unitarity certificate exceeds 1e-10");
    }
    const int m = static_cast<int>(u.dim());
    ClementsDecomposition d(m);
    ComplexMat v = u.mat().conjugate();

    std::vector<std::pair<int, int>> zeroed;

    for (int j = 1; j <= m - 1; ++j) {
        if (j % 2 == 1) {
            // Odd diagonal: right multiplications mix adjacent columns,
            // marching the target up-left from (m, j).
            int x = m;
            int y = j;
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
        } else {
            // Even diagonal: left multiplications mix adjacent rows, marching
            // the target down-right from (m-j+1, 1). The block sits at rows
            // (x-1, x) and phi acts on row x-1, the unique choice under which
            // the arg-matching conditions enable each zeroing step.
            int x = m - j + 1;
            int y = 1;
            const double phi =
                wrap_angle(arg0(v.at(x - 1, y - 1)) - arg0(v.at(x - 2, y - 1)));
            scale_row_inplace(v, static_cast<std::size_t>(x - 1), std::polar(1.0, phi));
            d.phi(j) = phi;

            for (int k = 1; k <= j; ++k) {
                const cplx target = v.at(x - 1, y - 1);
                const cplx above = v.at(x - 2, y - 1);
                ElimStepRecord rec = detail::make_step_record(j, k, x, y, target, above);

                const double delta = detail::solve_delta(-target, above);
                mix_rows_inplace(v, static_cast<std::size_t>(x - 1),
                                 detail::rotation_block(delta));
                rec.residual_after = std::abs(v.at(x - 1, y - 1));
                if (rec.residual_after > kZeroFailureTol) {
                    throw NumericalError("failed to zero matrix element", j, k, x, y);
                }

                double sigma = 0.0;
                if (k < j) {
                    sigma = wrap_angle(arg0(v.at(x, y)) - arg0(v.at(x - 1, y)));
                    const cplx ph = std::polar(1.0, sigma);
                    scale_row_inplace(v, static_cast<std::size_t>(x - 1), ph);
                    scale_row_inplace(v, static_cast<std::size_t>(x), ph);
                }
                d.setting(j, k) = SmziSetting::from_sigma_delta(sigma, delta).wrapped();

                zeroed.emplace_back(x - 1, y - 1);
                if (diag != nullptr) {
                    diag->steps.push_back(rec);
                }
                x += 1;
                y += 1;
            }
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

UnitaryMatrix reconstruct_clements(const ClementsDecomposition& d) {
    d.validate();
    const int m = d.m;
    ComplexMat a = ComplexMat::identity(static_cast<std::size_t>(m));

    for (int j = 1; j <= m - 1; j += 2) {
        scale_row_inplace(a, static_cast<std::size_t>(j + 1), std::polar(1.0, d.phi(j)));
        for (int k = 1; k <= j; ++k) {
            const int y = j - k + 1;
            mix_rows_inplace(a, static_cast<std::size_t>(y), smzi_block(d.setting(j, k)));
        }
    }
    for (int j = 2; j <= m; ++j) {
        scale_row_inplace(a, static_cast<std::size_t>(j), std::polar(1.0, d.zeta(j)));
    }
    for (int j = ((m - 1) % 2 == 0) ? m - 1 : m - 2; j >= 2; j -= 2) {
        for (int k = j; k >= 1; --k) {
            const int x = m - j + k;
            mix_rows_inplace(a, static_cast<std::size_t>(x - 1), smzi_block(d.setting(j, k)));
        }
        scale_row_inplace(a, static_cast<std::size_t>(m - j), std::polar(1.0, d.phi(j)));
    }

    a.scale(std::polar(1.0, -d.global_phase));
    return UnitaryMatrix::certify(std::move(a), 1e-11);
}

AmziDecomposition::AmziDecomposition(int m_) : m(m_) {
    if (m < 0) {
        throw ValidationError("negative mode count");
    }
    cells.resize(m > 0 ? static_cast<std::size_t>(m - 1) : 0);
    for (int j = 1; j <= m - 1; ++j) {
        cells[static_cast<std::size_t>(j - 1)].resize(static_cast<std::size_t>(j));
    }
    diag_phases.assign(m > 0 ? static_cast<std::size_t>(m) : 0, 0.0);
}

void AmziDecomposition::validate() const {
    if (m < 1) {
        throw ValidationError("decomposition has no modes");
    }
    if (cells.size() != static_cast<std::size_t>(m - 1) ||
        diag_phases.size() != static_cast<std::size_t>(m)) {
        throw ValidationError("decomposition index sets do not match m");
    }
    for (int j = 1; j <= m - 1; ++j) {
        if (cells[static_cast<std::size_t>(j - 1)].size() != static_cast<std::size_t>(j)) {
            throw ValidationError("diagonal " + std::to_string(j) + " has wrong length");
        }
    }
}

Block2 amzi_block(const AmziCell& cell) {
    const cplx ph = std::polar(1.0, cell.phi);
    const double ct = std::cos(cell.theta);
    const double st = std::sin(cell.theta);
    return Block2{ph * ct, cplx{-st, 0.0}, ph * st, cplx{ct, 0.0}};
}

namespace {

Block2 adjoint_block(const Block2& b) {
    return Block2{std::conj(b[0]), std::conj(b[2]), std::conj(b[1]), std::conj(b[3])};
}

} // namespace

AmziDecomposition decompose_clements_amzi(const UnitaryMatrix& u) {
    if (u.certified_tol() > kDecomposeInputTol) {
        throw ValidationError("input unitarity certificate exceeds 1e-10");
    }
    const int m = static_cast<int>(u.dim());
    AmziDecomposition d(m);
    ComplexMat w = u.mat();

    for (int j = 1; j <= m - 1; ++j) {
        if (j % 2 == 1) {
            int x = m;
            int y = j;
            for (int k = 1; k <= j; ++k) {
                AmziCell cell;
                cell.phi = wrap_angle(arg0(w.at(x - 1, y - 1)) - arg0(w.at(x - 1, y)));
                cell.theta = std::atan2(std::abs(w.at(x - 1, y - 1)), std::abs(w.at(x - 1, y)));
                mix_cols_inplace(w, static_cast<std::size_t>(y), adjoint_block(amzi_block(cell)));
                if (std::abs(w.at(x - 1, y - 1)) > kZeroFailureTol) {
                    throw NumericalError("failed to zero matrix element", j, k, x, y);
                }
                d.cell(j, k) = cell;
                x -= 1;
                y -= 1;
            }
        } else {
            int x = m - j + 1;
            int y = 1;
            for (int k = 1; k <= j; ++k) {
                AmziCell cell;
                cell.phi = wrap_angle(arg0(-w.at(x - 1, y - 1)) - arg0(w.at(x - 2, y - 1)));
                cell.theta = std::atan2(std::abs(w.at(x - 1, y - 1)), std::abs(w.at(x - 2, y - 1)));
                mix_rows_inplace(w, static_cast<std::size_t>(x - 1), amzi_block(cell));
                if (std::abs(w.at(x - 1, y - 1)) > kZeroFailureTol) {
                    throw NumericalError("failed to zero matrix element", j, k, x, y);
                }
                d.cell(j, k) = cell;
                x += 1;
                y += 1;
            }
        }
    }

    for (int mode = 1; mode <= m; ++mode) {
        d.diag_phases[static_cast<std::size_t>(mode - 1)] =
            arg0(w.at(mode - 1, mode - 1));
    }
    return d;
}

UnitaryMatrix reconstruct_amzi(const AmziDecomposition& d) {
    d.validate();
    const int m = d.m;
    ComplexMat a = ComplexMat::identity(static_cast<std::size_t>(m));

    for (int j = 1; j <= m - 1; j += 2) {
        for (int k = 1; k <= j; ++k) {
            const int y = j - k + 1;
            mix_rows_inplace(a, static_cast<std::size_t>(y), amzi_block(d.cell(j, k)));
        }
    }
    for (int mode = 1; mode <= m; ++mode) {
        scale_row_inplace(a, static_cast<std::size_t>(mode),
                          std::polar(1.0, d.diag_phases[static_cast<std::size_t>(mode - 1)]));
    }
    for (int j = ((m - 1) % 2 == 0) ? m - 1 : m - 2; j >= 2; j -= 2) {
        for (int k = j; k >= 1; --k) {
            const int x = m - j + k;
            mix_rows_inplace(a, static_cast<std::size_t>(x - 1),
                             adjoint_block(amzi_block(d.cell(j, k))));
        }
    }
    return UnitaryMatrix::certify(std::move(a), 1e-11);
}

} // namespace smzi
