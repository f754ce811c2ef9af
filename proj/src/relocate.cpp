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

#include "smzi/relocate.hpp"

#include <cmath>
#include <string>

#include "smzi/errors.hpp"

namespace smzi {
namespace {

// Working form of a rectangular mesh during relocation: interior columns plus
// per-mode input/output boundary phases that materialize as phase columns.
struct EdgeMesh {
    int m = 0;
    std::vector<std::vector<MeshElement>> columns;
    std::vector<double> input_phase;  // [mode-1]
    std::vector<double> output_phase; // [mode-1]
};

MeshElement* find_phase(std::vector<MeshElement>& column, int mode) {
    for (MeshElement& e : column) {
        if (e.kind == MeshElement::Kind::Phase && e.top_mode == mode) {
            return &e;
        }
    }
    return nullptr;
}

MeshElement* find_smzi_with_top(std::vector<MeshElement>& column, int top) {
    for (MeshElement& e : column) {
        if (e.kind == MeshElement::Kind::Smzi && e.top_mode == top) {
            return &e;
        }
    }
    return nullptr;
}

// The zig-zag of Fig-4 style absorption. Each hop adds +phi to both internal
// phases of the absorbing sMZI and leaves -phi on its partner mode at the
// same boundary; the walk is strictly monotone in the mode index, so 2m hops
// is already unreachable on a well-formed layout.
void zigzag_absorb(EdgeMesh& em, PendingPhase p) {
    if (p.phi == 0.0) {
        return;
    }
    const int ncols = static_cast<int>(em.columns.size());
    if (p.column_boundary < 0 || p.column_boundary > ncols) {
        throw IndexError("pending phase boundary out of range");
    }
    if (p.mode < 1 || p.mode > em.m) {
        throw IndexError("pending phase mode out of range");
    }

    for (int hops = 0; hops <= 2 * em.m; ++hops) {
        const int b = p.column_boundary;
        if (b == 0) {
            em.input_phase[static_cast<std::size_t>(p.mode - 1)] += p.phi;
            return;
        }
        if (b == ncols) {
            em.output_phase[static_cast<std::size_t>(p.mode - 1)] += p.phi;
            return;
        }

        auto& left = em.columns[static_cast<std::size_t>(b - 1)];
        auto& right = em.columns[static_cast<std::size_t>(b)];

        if (MeshElement* slot = find_phase(left, p.mode)) {
            slot->phi += p.phi;
            return;
        }
        if (MeshElement* slot = find_phase(right, p.mode)) {
            slot->phi += p.phi;
            return;
        }

        // Absorb through the neighbor whose sMZI has this mode on its top
        // port; the residue then moves down one mode. The bottom-port fall
        // back only fires on non-canonical layouts and walks upward instead.
        MeshElement* absorber = find_smzi_with_top(left, p.mode);
        if (absorber == nullptr) {
            absorber = find_smzi_with_top(right, p.mode);
        }
        int next_mode = p.mode + 1;
        if (absorber == nullptr) {
            absorber = find_smzi_with_top(left, p.mode - 1);
            if (absorber == nullptr) {
                absorber = find_smzi_with_top(right, p.mode - 1);
            }
            next_mode = p.mode - 1;
        }
        if (absorber == nullptr) {
            throw RelocationError("no adjacent sMZI or edge slot for mode " +
                                  std::to_string(p.mode) + " at boundary " + std::to_string(b));
        }
        absorber->smzi = absorber->smzi.shifted(p.phi);
        p = PendingPhase{b, next_mode, -p.phi};
    }
    throw InternalError("phase relocation did not terminate");
}

MeshCircuit materialize(const EdgeMesh& em, bool force_boundary_columns) {
    MeshCircuit c;
    c.m = em.m;
    c.layout = MeshLayout::ClementsEdge;

    const auto nonzero = [](const std::vector<double>& v) {
        for (double x : v) {
            if (x != 0.0) {
                return true;
            }
        }
        return false;
    };

    if (force_boundary_columns || nonzero(em.input_phase)) {
        std::vector<MeshElement> col;
        for (int mode = 1; mode <= em.m; ++mode) {
            col.push_back(
                MeshElement::make_phase(mode, em.input_phase[static_cast<std::size_t>(mode - 1)]));
        }
        c.columns.push_back(std::move(col));
    }
    for (const auto& column : em.columns) {
        c.columns.push_back(column);
    }
    if (force_boundary_columns || nonzero(em.output_phase)) {
        std::vector<MeshElement> col;
        for (int mode = 1; mode <= em.m; ++mode) {
            col.push_back(
                MeshElement::make_phase(mode, em.output_phase[static_cast<std::size_t>(mode - 1)]));
        }
        c.columns.push_back(std::move(col));
    }
    c.validate();
    return c;
}

// One physical element of the pre-relocation sequence: an sMZI destined for
// the rectangle, or a single-mode phase that will be relocated.
struct SeqOp {
    bool is_smzi = false;
    int mode = 1; // top mode for sMZIs
    SmziSetting setting;
    double phi = 0.0;

    static SeqOp smzi(int top, SmziSetting s) { return {true, top, s, 0.0}; }
    static SeqOp phase(int mode, double phi) { return {false, mode, {}, phi}; }
};

// Greedy earliest-column placement of the sMZIs; every phase op becomes a
// pending phase pinned at the frontier of its mode at that point in the
// sequence. The canonical decomposition orders pack exactly into the
// m-column rectangle of clements_edge_layout.
MeshCircuit relocate_sequence(int m, const std::vector<SeqOp>& seq, double folded_global) {
    std::vector<int> frontier(static_cast<std::size_t>(m) + 1, 0);
    struct Placement {
        int column;
        int top;
        SmziSetting setting;
    };
    std::vector<Placement> placements;
    std::vector<PendingPhase> pendings;
    int ncols = 0;

    for (const SeqOp& op : seq) {
        if (op.is_smzi) {
            const int col = std::max(frontier[static_cast<std::size_t>(op.mode)],
                                     frontier[static_cast<std::size_t>(op.mode + 1)]) +
                            1;
            placements.push_back({col, op.mode, op.setting});
            frontier[static_cast<std::size_t>(op.mode)] = col;
            frontier[static_cast<std::size_t>(op.mode + 1)] = col;
            ncols = std::max(ncols, col);
        } else {
            pendings.push_back(
                PendingPhase{frontier[static_cast<std::size_t>(op.mode)], op.mode, op.phi});
        }
    }

    EdgeMesh em;
    em.m = m;
    em.columns.assign(static_cast<std::size_t>(ncols), {});
    em.input_phase.assign(static_cast<std::size_t>(m), folded_global);
    em.output_phase.assign(static_cast<std::size_t>(m), 0.0);
    for (const Placement& p : placements) {
        em.columns[static_cast<std::size_t>(p.column - 1)].push_back(
            MeshElement::make_smzi(p.top, p.setting));
    }
    // Edge slots on every uncovered mode of every interior column.
    for (auto& column : em.columns) {
        std::vector<bool> covered(static_cast<std::size_t>(m) + 1, false);
        for (const MeshElement& e : column) {
            covered[static_cast<std::size_t>(e.low_mode())] = true;
            covered[static_cast<std::size_t>(e.high_mode())] = true;
        }
        for (int mode = 1; mode <= m; ++mode) {
            if (!covered[static_cast<std::size_t>(mode)]) {
                column.push_back(MeshElement::make_phase(mode, 0.0));
            }
        }
    }

    for (const PendingPhase& p : pendings) {
        zigzag_absorb(em, p);
    }
    return materialize(em, /*force_boundary_columns=*/true).wrapped();
}

std::vector<SeqOp> clements_sequence(const ClementsDecomposition& d) {
    const int m = d.m;
    std::vector<SeqOp> seq;
    for (int j = 1; j <= m - 1; j += 2) {
        seq.push_back(SeqOp::phase(j + 1, d.phi(j)));
        for (int k = 1; k <= j; ++k) {
            seq.push_back(SeqOp::smzi(j - k + 1, d.setting(j, k)));
        }
    }
    for (int j = 2; j <= m; ++j) {
        seq.push_back(SeqOp::phase(j, d.zeta(j)));
    }
    for (int j = ((m - 1) % 2 == 0) ? m - 1 : m - 2; j >= 2; j -= 2) {
        for (int k = j; k >= 1; --k) {
            seq.push_back(SeqOp::smzi(m - j + k - 1, d.setting(j, k)));
        }
        seq.push_back(SeqOp::phase(m - j, d.phi(j)));
    }
    return seq;
}

std::vector<SeqOp> amzi_sequence(const AmziDecomposition& d) {
    // Each direct cell T(theta, phi) factors exactly as
    //   B_smzi(sigma=pi, delta=pi/2-theta) * P_top(phi - pi),
    // and each inverted cell as P_top(pi - phi) * B_smzi(pi, pi/2-theta).
    const int m = d.m;
    std::vector<SeqOp> seq;
    for (int j = 1; j <= m - 1; j += 2) {
        for (int k = 1; k <= j; ++k) {
            const int y = j - k + 1;
            const AmziCell& cell = d.cell(j, k);
            seq.push_back(SeqOp::phase(y, cell.phi - kPi));
            seq.push_back(SeqOp::smzi(y, SmziSetting::from_sigma_delta(kPi, kPi / 2 - cell.theta)));
        }
    }
    for (int mode = 1; mode <= m; ++mode) {
        seq.push_back(SeqOp::phase(mode, d.diag_phases[static_cast<std::size_t>(mode - 1)]));
    }
    for (int j = ((m - 1) % 2 == 0) ? m - 1 : m - 2; j >= 2; j -= 2) {
        for (int k = j; k >= 1; --k) {
            const int x = m - j + k;
            const AmziCell& cell = d.cell(j, k);
            seq.push_back(
                SeqOp::smzi(x - 1, SmziSetting::from_sigma_delta(kPi, kPi / 2 - cell.theta)));
            seq.push_back(SeqOp::phase(x - 1, kPi - cell.phi));
        }
    }
    return seq;
}

} // namespace

MeshCircuit relocate_one(const MeshCircuit& c, const PendingPhase& p) {
    c.validate();
    if (c.layout != MeshLayout::ClementsEdge) {
        throw LayoutError("relocate_one requires a clements-edge layout");
    }
    if (p.phi == 0.0) {
        return c;
    }
    EdgeMesh em;
    em.m = c.m;
    em.columns = c.columns;
    em.input_phase.assign(static_cast<std::size_t>(c.m), 0.0);
    em.output_phase.assign(static_cast<std::size_t>(c.m), 0.0);
    zigzag_absorb(em, p);
    return materialize(em, /*force_boundary_columns=*/false);
}

MeshCircuit relocate_all(const ClementsDecomposition& d) {
    d.validate();
    if (d.m < 2) {
        throw ValidationError("relocate_all requires m >= 2");
    }
    // Folding -global_phase into every input phase makes the mesh evaluate
    // to the decomposed unitary with no global offset at all.
    return relocate_sequence(d.m, clements_sequence(d), -d.global_phase);
}

MeshCircuit absorb_amzi_externals(const AmziDecomposition& d) {
    d.validate();
    if (d.m < 2) {
        throw ValidationError("absorb_amzi_externals requires m >= 2");
    }
    return relocate_sequence(d.m, amzi_sequence(d), 0.0);
}

double layer_redundancy_check(const MeshCircuit& c, int column) {
    c.validate();
    if (column < 1 || static_cast<std::size_t>(column) > c.columns.size()) {
        throw IndexError("column index out of range");
    }
    const auto& col = c.columns[static_cast<std::size_t>(column - 1)];
    if (col.empty()) {
        throw LayoutError("layer_redundancy_check: empty column");
    }
    int covered = 0;
    for (const MeshElement& e : col) {
        if (e.kind == MeshElement::Kind::Bare) {
            throw LayoutError("layer_redundancy_check: column has a bare mode");
        }
        covered += (e.kind == MeshElement::Kind::Smzi) ? 2 : 1;
    }
    if (covered != c.m) {
        throw LayoutError("layer_redundancy_check: column does not cover every mode");
    }

    double phi0 = 0.0;
    bool found = false;
    for (const MeshElement& e : col) {
        if (e.kind == MeshElement::Kind::Phase) {
            phi0 = e.phi;
            found = true;
            break;
        }
    }
    if (!found) {
        phi0 = col.front().smzi.theta1;
    }

    MeshCircuit shifted = c;
    for (MeshElement& e : shifted.columns[static_cast<std::size_t>(column - 1)]) {
        if (e.kind == MeshElement::Kind::Smzi) {
            e.smzi = e.smzi.shifted(-phi0);
        } else {
            e.phi -= phi0;
        }
    }
    return global_phase_distance(evaluate(c), evaluate(shifted));
}

} // namespace smzi
