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

#include <vector>

#include "smzi/decompose_reck.hpp"

namespace smzi {

/// Phase tables of the rectangular sMZI scheme. Odd diagonals run like the
/// triangular scheme (right multiplications, input-side phi on mode j+1);
/// even diagonals run in reverse (left multiplications, output-side phi on
/// mode m-j). The zeta residuals land mid-circuit instead of at the outputs.
struct ClementsDecomposition {
    int m = 0;
    std::vector<std::vector<SmziSetting>> smzi; // [j-1][k-1], j = 1..m-1, k = 1..j
    std::vector<double> phi_side;               // [j-1], j = 1..m-1
    std::vector<double> zeta_mid;               // [j-2], j = 2..m
    double global_phase = 0.0;

    explicit ClementsDecomposition(int m_ = 0);

    SmziSetting& setting(int j, int k) { return smzi[j - 1][k - 1]; }
    const SmziSetting& setting(int j, int k) const { return smzi[j - 1][k - 1]; }

    double& phi(int j) { return phi_side[j - 1]; }
    double phi(int j) const { return phi_side[j - 1]; }

    double& zeta(int j) { return zeta_mid[j - 2]; }
    double zeta(int j) const { return zeta_mid[j - 2]; }

    /// Mode carrying phi for diagonal j: input mode j+1 when j is odd,
    /// output mode m-j when j is even.
    int phi_mode(int j) const { return (j % 2 == 1) ? j + 1 : m - j; }

    void validate() const;
};

ClementsDecomposition decompose_clements_smzi(const UnitaryMatrix& u,
                                              ElimDiagnostics* diag = nullptr);

/// Operator product with the even-diagonal factors left of the mid-circuit
/// residual phases and the odd factors right of them, times
/// e^{-i global_phase}.
UnitaryMatrix reconstruct_clements(const ClementsDecomposition& d);

/// One cell of the reference aMZI scheme: internal phase theta (splitting)
/// and external phase phi.
struct AmziCell {
    double theta = 0.0;
    double phi = 0.0;
};

/// Reference rectangular decomposition into aMZI cells: odd-diagonal cells
/// realized directly, even-diagonal cells realized inverted, and a diagonal
/// of m residual phases in the middle of the circuit.
struct AmziDecomposition {
    int m = 0;
    std::vector<std::vector<AmziCell>> cells; // [j-1][k-1], j = 1..m-1, k = 1..j
    std::vector<double> diag_phases;          // [mode-1], size m

    explicit AmziDecomposition(int m_ = 0);

    AmziCell& cell(int j, int k) { return cells[j - 1][k - 1]; }
    const AmziCell& cell(int j, int k) const { return cells[j - 1][k - 1]; }

    void validate() const;
};

AmziDecomposition decompose_clements_amzi(const UnitaryMatrix& u);

UnitaryMatrix reconstruct_amzi(const AmziDecomposition& d);

/// Transfer block of one aMZI cell: [[e^{i phi} cos t, -sin t],
/// [e^{i phi} sin t, cos t]].
Block2 amzi_block(const AmziCell& cell);

} // namespace smzi
