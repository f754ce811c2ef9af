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

#include <array>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace smzi {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Principal argument in (-pi, pi], with arg0(0) = 0. The zero convention
/// makes every phase-matching step of the decompositions total: when the
/// involved element vanishes, any phase satisfies the matching condition.
double arg0(cplx z);

/// Wrap an angle to the canonical branch (-pi, pi].
double wrap_angle(double x);

/// A 2x2 complex block in row-major order: [b00, b01, b10, b11].
using Block2 = std::array<cplx, 4>;

/// Dense row-major complex matrix. Element access is 0-based; the pair-mixing
/// helpers below take 1-based mode indices to match the mesh conventions.
class ComplexMat {
  public:
    ComplexMat() = default;
    ComplexMat(std::size_t rows, std::size_t cols);

    static ComplexMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    cplx* row_ptr(std::size_t r) { return data_.data() + r * cols_; }
    const cplx* row_ptr(std::size_t r) const { return data_.data() + r * cols_; }

    std::span<cplx> data() { return data_; }
    std::span<const cplx> data() const { return data_; }

    bool all_finite() const;

    ComplexMat conjugate() const;
    ComplexMat adjoint() const;

    /// In-place scale of the whole matrix by a scalar.
    void scale(cplx a);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

/// Standard dense product. Throws DimensionError on shape mismatch.
ComplexMat mat_mul(const ComplexMat& a, const ComplexMat& b);

/// Largest entry modulus of (a - b). Shapes must match.
double max_abs_diff(const ComplexMat& a, const ComplexMat& b);

/// Largest entry modulus.
double max_abs(const ComplexMat& a);

/// v * B embedded at columns (y, y+1), 1-based: mixes two adjacent columns,
/// leaving every other column bit-identical. Requires 1 <= y <= cols-1.
ComplexMat apply_pair_right(const ComplexMat& v, const Block2& block, std::size_t y);

/// B * v embedded at rows (x, x+1), 1-based: the row-mixing mirror.
ComplexMat apply_pair_left(const ComplexMat& v, const Block2& block, std::size_t x);

// In-place versions used on the hot paths.
void mix_cols_inplace(ComplexMat& v, std::size_t y, const Block2& block);
void mix_rows_inplace(ComplexMat& v, std::size_t x, const Block2& block);
void scale_col_inplace(ComplexMat& v, std::size_t col, cplx a);
void scale_row_inplace(ComplexMat& v, std::size_t row, cplx a);

/// A square matrix whose unitarity has been measured at construction.
class UnitaryMatrix {
  public:
    /// Certifies that max |U'U - I| <= max_tol (and all entries are finite);
    /// throws ValidationError otherwise. The stored certified_tol is the
    /// measured deviation, not the bound.
    static UnitaryMatrix certify(ComplexMat mat, double max_tol = 1e-10);

    std::size_t dim() const { return mat_.rows(); }
    const ComplexMat& mat() const { return mat_; }
    double certified_tol() const { return certified_tol_; }

    /// max-entry modulus of (U'U - I) for a square matrix.
    static double unitarity_deviation(const ComplexMat& mat);

  private:
    UnitaryMatrix(ComplexMat mat, double tol) : mat_(std::move(mat)), certified_tol_(tol) {}

    ComplexMat mat_;
    double certified_tol_;
};

/// Global-phase-invariant distance between two same-sized unitaries:
///   d(a, b) = min over gamma of |a - e^{i gamma} b|_F^2 / (2 m)
///           = 1 - |tr(b' a)| / m,
/// minimized at gamma = arg tr(b' a). Zero iff a = e^{i gamma} b; at most 2.
double global_phase_distance(const ComplexMat& a, const ComplexMat& b);
double global_phase_distance(const UnitaryMatrix& a, const UnitaryMatrix& b);

/// tr(b' a); the argument of this trace is the aligning global phase.
cplx phase_alignment(const ComplexMat& a, const ComplexMat& b);

} // namespace smzi
