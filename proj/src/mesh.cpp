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

#include "smzi/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "smzi/errors.hpp"

namespace smzi {

std::string_view layout_name(MeshLayout layout) {
    switch (layout) {
    case MeshLayout::Reck: return "reck";
    case MeshLayout::Clements: return "clements";
    case MeshLayout::ClementsEdge: return "clements-edge";
    case MeshLayout::Custom: return "custom";
    }
    return "custom";
}

MeshLayout layout_from_name(std::string_view name) {
    if (name == "reck") return MeshLayout::Reck;
    if (name == "clements") return MeshLayout::Clements;
    if (name == "clements-edge") return MeshLayout::ClementsEdge;
    if (name == "custom") return MeshLayout::Custom;
    throw SchemaError("unknown mesh layout: " + std::string(name));
}

void MeshCircuit::validate() const {
    if (m < 1) {
        throw LayoutError("mesh must have at least one mode");
    }
    for (std::size_t c = 0; c < columns.size(); ++c) {
        std::vector<bool> used(static_cast<std::size_t>(m) + 1, false);
        for (const MeshElement& e : columns[c]) {
            if (e.low_mode() < 1 || e.high_mode() > m) {
                throw LayoutError("element mode out of range in column " + std::to_string(c + 1));
            }
            for (int mode = e.low_mode(); mode <= e.high_mode(); ++mode) {
                if (used[static_cast<std::size_t>(mode)]) {
                    throw LayoutError("overlapping elements in column " + std::to_string(c + 1));
                }
                used[static_cast<std::size_t>(mode)] = true;
            }
        }
        if (layout == MeshLayout::ClementsEdge) {
            for (int mode = 1; mode <= m; ++mode) {
                if (!used[static_cast<std::size_t>(mode)]) {
                    throw LayoutError("clements-edge column " + std::to_string(c + 1) +
                                      " leaves mode " + std::to_string(mode) + " uncovered");
                }
            }
        }
    }
}

MeshCircuit MeshCircuit::wrapped() const {
    MeshCircuit out = *this;
    for (auto& column : out.columns) {
        for (MeshElement& e : column) {
            if (e.kind == MeshElement::Kind::Smzi) {
                e.smzi = e.smzi.wrapped();
            } else if (e.kind == MeshElement::Kind::Phase) {
                e.phi = wrap_angle(e.phi);
            }
        }
    }
    return out;
}

int MeshCircuit::smzi_count() const {
    int n = 0;
    for (const auto& column : columns) {
        for (const MeshElement& e : column) {
            n += (e.kind == MeshElement::Kind::Smzi) ? 1 : 0;
        }
    }
    return n;
}

int MeshCircuit::phase_count() const {
    int n = 0;
    for (const auto& column : columns) {
        for (const MeshElement& e : column) {
            n += (e.kind == MeshElement::Kind::Phase) ? 1 : 0;
        }
    }
    return n;
}

Block2 smzi_block(const SmziSetting& s) {
    const double sigma = s.sigma();
    const double delta = s.delta();
    const cplx phase = std::polar(1.0, sigma);
    const double sd = std::sin(delta);
    const double cd = std::cos(delta);
    return Block2{phase * sd, phase * cd, phase * cd, -phase * sd};
}

UnitaryMatrix phase_matrix(const PhaseSetting& p, std::size_t m) {
    if (p.mode < 1 || static_cast<std::size_t>(p.mode) > m) {
        throw IndexError("phase mode out of range: " + std::to_string(p.mode));
    }
    ComplexMat out = ComplexMat::identity(m);
    out.at(static_cast<std::size_t>(p.mode - 1), static_cast<std::size_t>(p.mode - 1)) =
        std::polar(1.0, p.phi);
    return UnitaryMatrix::certify(std::move(out), 1e-14);
}

void apply_column_inplace(ComplexMat& acc, const std::vector<MeshElement>& column) {
    for (const MeshElement& e : column) {
        switch (e.kind) {
        case MeshElement::Kind::Smzi:
            mix_rows_inplace(acc, static_cast<std::size_t>(e.top_mode), smzi_block(e.smzi));
            break;
        case MeshElement::Kind::Phase:
            scale_row_inplace(acc, static_cast<std::size_t>(e.top_mode), std::polar(1.0, e.phi));
            break;
        case MeshElement::Kind::Bare:
            break;
        }
    }
}

UnitaryMatrix evaluate(const MeshCircuit& c, double certify_tol) {
    c.validate();
    ComplexMat acc = ComplexMat::identity(static_cast<std::size_t>(c.m));
    for (const auto& column : c.columns) {
        apply_column_inplace(acc, column);
    }
    return UnitaryMatrix::certify(std::move(acc), certify_tol);
}

std::vector<int> clements_column_tops(int m, int col) {
    std::vector<int> tops;
    for (int top = (col % 2 == 1) ? 1 : 2; top + 1 <= m; top += 2) {
        tops.push_back(top);
    }
    return tops;
}

std::vector<int> clements_column_slots(int m, int col) {
    std::vector<bool> covered(static_cast<std::size_t>(m) + 1, false);
    for (int top : clements_column_tops(m, col)) {
        covered[static_cast<std::size_t>(top)] = true;
        covered[static_cast<std::size_t>(top) + 1] = true;
    }
    std::vector<int> slots;
    for (int mode = 1; mode <= m; ++mode) {
        if (!covered[static_cast<std::size_t>(mode)]) {
            slots.push_back(mode);
        }
    }
    return slots;
}

MeshCircuit clements_edge_layout(int m) {
    if (m < 2) {
        throw DimensionError("clements_edge_layout requires m >= 2");
    }
    MeshCircuit c;
    c.m = m;
    c.layout = MeshLayout::ClementsEdge;
    c.columns.resize(static_cast<std::size_t>(m));
    for (int col = 1; col <= m; ++col) {
        auto& column = c.columns[static_cast<std::size_t>(col - 1)];
        for (int top : clements_column_tops(m, col)) {
            column.push_back(MeshElement::make_smzi(top));
        }
        for (int slot : clements_column_slots(m, col)) {
            column.push_back(MeshElement::make_phase(slot, 0.0));
        }
    }
    return c;
}

std::vector<ReckPlacement> reck_placements(int m) {
    // Greedy earliest-column packing of the diagonal ordering. Column 1 is
    // reserved for the input phases on modes 2..m.
    std::vector<int> frontier(static_cast<std::size_t>(m) + 1, 1);
    frontier[1] = 0;
    std::vector<ReckPlacement> out;
    for (int j = 1; j <= m - 1; ++j) {
        for (int k = 1; k <= j; ++k) {
            const int y = j - k + 1;
            const int col = std::max(frontier[static_cast<std::size_t>(y)],
                                     frontier[static_cast<std::size_t>(y + 1)]) +
                            1;
            frontier[static_cast<std::size_t>(y)] = col;
            frontier[static_cast<std::size_t>(y + 1)] = col;
            out.push_back(ReckPlacement{j, k, col, y});
        }
    }
    return out;
}

MeshCircuit reck_layout(int m) {
    if (m < 2) {
        throw DimensionError("reck_layout requires m >= 2");
    }
    const std::vector<ReckPlacement> placements = reck_placements(m);
    int last_mzi_col = 1;
    for (const ReckPlacement& p : placements) {
        last_mzi_col = std::max(last_mzi_col, p.column);
    }

    MeshCircuit c;
    c.m = m;
    c.layout = MeshLayout::Reck;
    c.columns.resize(static_cast<std::size_t>(last_mzi_col) + 1);
    for (int mode = 2; mode <= m; ++mode) {
        c.columns.front().push_back(MeshElement::make_phase(mode, 0.0));
    }
    for (const ReckPlacement& p : placements) {
        c.columns[static_cast<std::size_t>(p.column - 1)].push_back(
            MeshElement::make_smzi(p.top_mode));
    }
    auto& out_col = c.columns.back();
    for (int mode = 2; mode <= m; ++mode) {
        out_col.push_back(MeshElement::make_phase(mode, 0.0));
    }
    return c;
}

} // namespace smzi
