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

#include "smzi/complex_mat.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "smzi/errors.hpp"
#include "smzi/kernels.hpp"

namespace smzi {

double arg0(cplx z) {
    if (z.real() == 0.0 && z.imag() == 0.0) {
        return 0.0;
    }
    return std::arg(z);
}

double wrap_angle(double x) {
    double r = std::remainder(x, kTwoPi);
    if (r <= -kPi) {
        r += kTwoPi;
    }
    return r;
}

ComplexMat::ComplexMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    if (rows == 0 || cols == 0) {
        throw DimensionError("matrix dimensions must be at least 1x1");
    }
    data_.assign(rows * cols, cplx{0.0, 0.0});
}

ComplexMat ComplexMat::identity(std::size_t n) {
    ComplexMat out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        out.at(i, i) = 1.0;
    }
    return out;
}

bool ComplexMat::all_finite() const {
    for (const cplx& z : data_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            return false;
        }
    }
    return true;
}

ComplexMat ComplexMat::conjugate() const {
    ComplexMat out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) {
        out.data_[i] = std::conj(data_[i]);
    }
    return out;
}

ComplexMat ComplexMat::adjoint() const {
    ComplexMat out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out.at(c, r) = std::conj(at(r, c));
        }
    }
    return out;
}

void ComplexMat::scale(cplx a) {
    kernels::active().cscale(data_.data(), a, data_.size());
}

ComplexMat mat_mul(const ComplexMat& a, const ComplexMat& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("mat_mul: inner dimensions differ (" + std::to_string(a.cols()) +
                             " vs " + std::to_string(b.rows()) + ")");
    }
    const auto& ops = kernels::active();
    ComplexMat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        cplx* ci = c.row_ptr(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            ops.caxpy(ci, a.at(i, k), b.row_ptr(k), b.cols());
        }
    }
    return c;
}

double max_abs_diff(const ComplexMat& a, const ComplexMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("max_abs_diff: shape mismatch");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    }
    return worst;
}

double max_abs(const ComplexMat& a) {
    double worst = 0.0;
    for (const cplx& z : a.data()) {
        worst = std::max(worst, std::abs(z));
    }
    return worst;
}

namespace {

void check_block_finite(const Block2& block) {
    for (const cplx& z : block) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw ValidationError("2x2 block has non-finite entries");
        }
    }
}

} // namespace

void mix_cols_inplace(ComplexMat& v, std::size_t y, const Block2& block) {
    if (y < 1 || y + 1 > v.cols()) {
        throw IndexError("column pair index out of range: y=" + std::to_string(y));
    }
    kernels::active().pair_mix_adjacent(v.row_ptr(0) + (y - 1), v.rows(), v.cols(), block.data());
}

void mix_rows_inplace(ComplexMat& v, std::size_t x, const Block2& block) {
    if (x < 1 || x + 1 > v.rows()) {
        throw IndexError("row pair index out of range: x=" + std::to_string(x));
    }
    kernels::active().pair_mix(v.row_ptr(x - 1), v.row_ptr(x), v.cols(), block.data());
}

void scale_col_inplace(ComplexMat& v, std::size_t col, cplx a) {
    if (col < 1 || col > v.cols()) {
        throw IndexError("column index out of range");
    }
    cplx* p = v.row_ptr(0) + (col - 1);
    for (std::size_t r = 0; r < v.rows(); ++r, p += v.cols()) {
        *p *= a;
    }
}

void scale_row_inplace(ComplexMat& v, std::size_t row, cplx a) {
    if (row < 1 || row > v.rows()) {
        throw IndexError("row index out of range");
    }
    kernels::active().cscale(v.row_ptr(row - 1), a, v.cols());
}

ComplexMat apply_pair_right(const ComplexMat& v, const Block2& block, std::size_t y) {
    check_block_finite(block);
    ComplexMat out = v;
    mix_cols_inplace(out, y, block);
    return out;
}

ComplexMat apply_pair_left(const ComplexMat& v, const Block2& block, std::size_t x) {
    check_block_finite(block);
    ComplexMat out = v;
    mix_rows_inplace(out, x, block);
    return out;
}

double UnitaryMatrix::unitarity_deviation(const ComplexMat& mat) {
    if (mat.rows() != mat.cols()) {
        throw DimensionError("unitarity check requires a square matrix");
    }
    const ComplexMat gram = mat_mul(mat.adjoint(), mat);
    double worst = 0.0;
    for (std::size_t r = 0; r < gram.rows(); ++r) {
        for (std::size_t c = 0; c < gram.cols(); ++c) {
            const cplx expect = (r == c) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
            worst = std::max(worst, std::abs(gram.at(r, c) - expect));
        }
    }
    return worst;
}

UnitaryMatrix UnitaryMatrix::certify(ComplexMat mat, double max_tol) {
    if (mat.rows() != mat.cols()) {
        throw ValidationError("unitary matrix must be square");
    }
    if (!mat.all_finite()) {
        throw ValidationError("unitary matrix has non-finite entries");
    }
    const double dev = unitarity_deviation(mat);
    if (!(dev <= max_tol)) {
        throw ValidationError("matrix fails unitarity: max |U'U - I| = " + std::to_string(dev) +
                              " exceeds " + std::to_string(max_tol));
    }
    return UnitaryMatrix(std::move(mat), dev);
}

cplx phase_alignment(const ComplexMat& a, const ComplexMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("phase_alignment: shape mismatch");
    }
    // tr(b' a) = sum over entries of conj(b) * a.
    return kernels::active().cdotc(b.data().data(), a.data().data(), a.data().size());
}

double global_phase_distance(const ComplexMat& a, const ComplexMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
        throw DimensionError("global_phase_distance: dimension mismatch");
    }
    const double m = static_cast<double>(a.rows());
    const double d = 1.0 - std::abs(phase_alignment(a, b)) / m;
    return std::max(0.0, d);
}

double global_phase_distance(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    return global_phase_distance(a.mat(), b.mat());
}

} // namespace smzi
