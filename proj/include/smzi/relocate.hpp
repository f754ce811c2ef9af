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

#include "smzi/decompose_clements.hpp"
#include "smzi/mesh.hpp"

namespace smzi {

/// A single-mode phase waiting between two mesh columns. Boundary 0 is the
/// circuit input, boundary ncols the output.
struct PendingPhase {
    int column_boundary = 0;
    int mode = 1;
    double phi = 0.0;
};

/// Move one pending phase into the mesh without changing its unitary: edge
/// slots absorb it directly; otherwise the neighboring sMZI whose top port
/// carries the mode takes +phi on both internal phases and hands -phi to its
/// other port at the same boundary, walking the residue to an edge slot.
/// Residues at boundary 0 or ncols become input/output phase columns.
/// Only sigmas move; every delta is left untouched.
MeshCircuit relocate_one(const MeshCircuit& c, const PendingPhase& p);

/// Realize a rectangular sMZI decomposition as a clements_edge_layout mesh
/// whose only single-mode phases sit on edge slots plus input/output phase
/// columns. The result evaluates to the decomposed unitary exactly (the
/// residual global phase is folded into the input phases).
MeshCircuit relocate_all(const ClementsDecomposition& d);

/// Same, starting from the reference aMZI tables: every cell splits into an
/// sMZI plus single-mode phases, and all of those phases are relocated.
MeshCircuit absorb_amzi_externals(const AmziDecomposition& d);

/// Distance between evaluate(c) and evaluate(c with one column's chosen
/// shifter zeroed by subtracting its value from every phase and both thetas
/// of every sMZI in that column). A full column shifts by a global phase
/// only, so the result stays below 1e-12.
double layer_redundancy_check(const MeshCircuit& c, int column);

} // namespace smzi
