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

#include <string_view>
#include <vector>

#include "smzi/complex_mat.hpp"

namespace smzi {

/// The two internal phases of a symmetric MZI. sigma = (theta1 + theta2)/2
/// sets the common output phase, delta = (theta1 - theta2)/2 the splitting.
struct SmziSetting {
    double theta1 = 0.0;
    double theta2 = 0.0;

    double sigma() const { return 0.5 * (theta1 + theta2); }
    double delta() const { return 0.5 * (theta1 - theta2); }

    static SmziSetting from_sigma_delta(double sigma, double delta) {
        return {sigma + delta, sigma - delta};
    }

    SmziSetting shifted(double phi) const { return {theta1 + phi, theta2 + phi}; }
    SmziSetting wrapped() const { return {wrap_angle(theta1), wrap_angle(theta2)}; }
};

/// A single-mode phase shifter. Modes are 1-based, top mode = 1.
struct PhaseSetting {
    double phi = 0.0;
    int mode = 1;

    PhaseSetting wrapped() const { return {wrap_angle(phi), mode}; }
};

/// One element of a mesh column: an sMZI on (top_mode, top_mode+1), a
/// single-mode phase, or a bare stretch of waveguide.
struct MeshElement {
    enum class Kind { Smzi, Phase, Bare };

    Kind kind = Kind::Bare;
    int top_mode = 1; // Smzi: upper mode of its pair; Phase/Bare: the mode itself
    SmziSetting smzi;
    double phi = 0.0;

    static MeshElement make_smzi(int top_mode, SmziSetting s = {}) {
        MeshElement e;
        e.kind = Kind::Smzi;
        e.top_mode = top_mode;
        e.smzi = s;
        return e;
    }
    static MeshElement make_phase(int mode, double phi = 0.0) {
        MeshElement e;
        e.kind = Kind::Phase;
        e.top_mode = mode;
        e.phi = phi;
        return e;
    }
    static MeshElement make_bare(int mode) {
        MeshElement e;
        e.kind = Kind::Bare;
        e.top_mode = mode;
        return e;
    }

    int low_mode() const { return top_mode; }
    int high_mode() const { return kind == Kind::Smzi ? top_mode + 1 : top_mode; }
};

enum class MeshLayout { Reck, Clements, ClementsEdge, Custom };

std::string_view layout_name(MeshLayout layout);
MeshLayout layout_from_name(std::string_view name);

/// A physical layout: ordered columns of elements. The leftmost column acts
/// first on the input state, so the operator product runs right-to-left.
struct MeshCircuit {
    int m = 0;
    MeshLayout layout = MeshLayout::Custom;
    std::vector<std::vector<MeshElement>> columns;

    /// Structural invariants: disjoint modes per column, indices in range;
    /// for ClementsEdge additionally full per-column mode coverage.
    void validate() const;

    /// Copy with every angle wrapped to (-pi, pi].
    MeshCircuit wrapped() const;

    int smzi_count() const;
    int phase_count() const;
};

/// Transfer block of one sMZI:
///   e^{i sigma} * [[sin delta, cos delta], [cos delta, -sin delta]].
/// Unitary and equal to its own transpose.
Block2 smzi_block(const SmziSetting& s);

/// Identity except entry (mode, mode) = e^{i phi}.
UnitaryMatrix phase_matrix(const PhaseSetting& p, std::size_t m);

/// Multiply out the circuit, leftmost column first, and certify the result.
UnitaryMatrix evaluate(const MeshCircuit& c, double certify_tol = 1e-11);

/// Apply one column to an accumulator by left multiplication (the workhorse
/// behind evaluate; exposed for reconstruction code).
void apply_column_inplace(ComplexMat& acc, const std::vector<MeshElement>& column);

/// Rectangular Clements-style mesh with edge phase slots: m columns; odd
/// columns host sMZIs at top modes 1,3,5,..., even columns at 2,4,...; every
/// uncovered mode carries a zero-initialized phase shifter.
MeshCircuit clements_edge_layout(int m);

/// Triangular mesh: diagonals j = 1..m-1 with j sMZIs each, plus input and
/// output phase slots on every mode except the first.
MeshCircuit reck_layout(int m);

/// Column assignment of one Reck sMZI: diagonal j, element k within it, the
/// greedily packed physical column (column 1 holds the input phases), and the
/// top mode of its pair.
struct ReckPlacement {
    int j;
    int k;
    int column;
    int top_mode;
};

std::vector<ReckPlacement> reck_placements(int m);

/// Top modes of the sMZIs in column `col` (1-based) of the rectangular mesh.
std::vector<int> clements_column_tops(int m, int col);

/// Modes of column `col` not covered by an sMZI.
std::vector<int> clements_column_slots(int m, int col);

} // namespace smzi
