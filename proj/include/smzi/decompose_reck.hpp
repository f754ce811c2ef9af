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

#include "smzi/complex_mat.hpp"
#include "smzi/mesh.hpp"

namespace smzi {

// Tolerance ladder shared by both decomposition schemes: input validation,
// internal zero classification, hard failure, and the reconstruction
// assertion used in tests. Three decades of slack between stages keeps one
// noisy step from cascading into false failures.
inline constexpr double kDecomposeInputTol = 1e-10;
inline constexpr double kZeroThreshold = 1e-12;
inline constexpr double kZeroFailureTol = 1e-8;
inline constexpr double kReconstructTol = 1e-9;

/// Phase tables of the triangular scheme: one sMZI per (j, k) with j = 1..m-1
/// and k = 1..j, input phases phi_in[j] on mode j+1, output phases zeta_out[j]
/// on mode j for j = 2..m, and the residual global phase.
struct ReckDecomposition {
    int m = 0;
    std::vector<std::vector<SmziSetting>> smzi; // [j-1][k-1]
    std::vector<double> phi_in;                 // [j-1], j = 1..m-1
    std::vector<double> zeta_out;               // [j-2], j = 2..m
    double global_phase = 0.0;

    explicit ReckDecomposition(int m_ = 0);

    SmziSetting& setting(int j, int k) { return smzi[j - 1][k - 1]; }
    const SmziSetting& setting(int j, int k) const { return smzi[j - 1][k - 1]; }

    double& phi(int j) { return phi_in[j - 1]; }
    double phi(int j) const { return phi_in[j - 1]; }

    double& zeta(int j) { return zeta_out[j - 2]; }
    double zeta(int j) const { return zeta_out[j - 2]; }

    int smzi_total() const { return m * (m - 1) / 2; }

    /// Index-set shape check; throws ValidationError.
    void validate() const;
};

/// Per-step instrumentation for the elimination loops, collected on demand
/// so property tests can check the paper-level invariants directly.
struct ElimStepRecord {
    int j, k, x, y;
    double phase_mismatch;  // |wrapped arg difference| of the target pair before the step
    double smaller_mag;     // smaller modulus of the target pair
    double residual_after;  // |V(x, y)| after the mixing step
};

struct ElimDiagnostics {
    std::vector<ElimStepRecord> steps;
    std::vector<double> unitarity_by_diagonal;    // after each j
    std::vector<double> zeroed_residual_by_diagonal; // max residual over all prior targets
};

/// Triangular elimination of the conjugated target. Requires u certified at
/// 1e-10. Throws NumericalError with (j, k, x, y) diagnostics if a target
/// element cannot be zeroed below 1e-8.
ReckDecomposition decompose_reck(const UnitaryMatrix& u, ElimDiagnostics* diag = nullptr);

/// Populate a reck_layout mesh with the tables and evaluate it, times
/// e^{-i global_phase}.
UnitaryMatrix reconstruct_reck(const ReckDecomposition& d);

/// The populated mesh itself (input phases, packed triangle, output phases).
MeshCircuit build_reck_circuit(const ReckDecomposition& d);

/// (m-1)^2 + 2(m-1) = m^2 - 1, the free parameter count of the scheme.
int free_parameter_count(int m);

} // namespace smzi
