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

#include "smzi/fldzhyan.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "smzi/errors.hpp"
#include "smzi/rng.hpp"

namespace smzi {
namespace {

Block2 splitter_block(double eta) {
    const double c = std::cos(eta);
    const double s = std::sin(eta);
    return Block2{cplx{c, 0.0}, cplx{0.0, s}, cplx{0.0, s}, cplx{c, 0.0}};
}

void apply_phase_layer(ComplexMat& a, const std::vector<double>& phases) {
    for (std::size_t mode = 0; mode < phases.size(); ++mode) {
        if (phases[mode] != 0.0) {
            scale_row_inplace(a, mode + 1, std::polar(1.0, phases[mode]));
        }
    }
}

} // namespace

std::vector<int> AlternatingCircuit::splitter_tops(int m, int layer) {
    std::vector<int> tops;
    for (int top = (layer % 2 == 1) ? 1 : 2; top + 1 <= m; top += 2) {
        tops.push_back(top);
    }
    return tops;
}

std::vector<int> compact_kept_positions(int depth) {
    std::vector<int> kept;
    for (int p = 0; p <= depth; ++p) {
        if (p % 2 == 0 || p == depth) {
            kept.push_back(p);
        }
    }
    return kept;
}

std::vector<int> AlternatingCircuit::kept_positions() const {
    if (form == PhaseForm::Full) {
        std::vector<int> all(static_cast<std::size_t>(depth) + 1);
        for (int p = 0; p <= depth; ++p) {
            all[static_cast<std::size_t>(p)] = p;
        }
        return all;
    }
    return compact_kept_positions(depth);
}

AlternatingCircuit AlternatingCircuit::balanced(int m, int depth, PhaseForm form) {
    if (m < 1) {
        throw DimensionError("alternating circuit needs at least one mode");
    }
    if (depth < 0) {
        throw DimensionError("negative depth");
    }
    AlternatingCircuit c;
    c.m = m;
    c.depth = depth;
    c.form = form;
    for (int layer = 1; layer <= depth; ++layer) {
        c.splitter_angles.emplace_back(splitter_tops(m, layer).size(), kPi / 4.0);
    }
    c.phase_layers.assign(c.kept_positions().size(),
                          std::vector<double>(static_cast<std::size_t>(m), 0.0));
    return c;
}

void AlternatingCircuit::validate() const {
    if (m < 1) {
        throw DimensionError("alternating circuit needs at least one mode");
    }
    if (depth < 0) {
        throw DimensionError("negative depth");
    }
    if (splitter_angles.size() != static_cast<std::size_t>(depth)) {
        throw DimensionError("splitter layer count does not match depth");
    }
    for (int layer = 1; layer <= depth; ++layer) {
        const auto expected = splitter_tops(m, layer).size();
        if (splitter_angles[static_cast<std::size_t>(layer - 1)].size() != expected) {
            throw DimensionError("splitter layer " + std::to_string(layer) + " has wrong size");
        }
        for (double eta : splitter_angles[static_cast<std::size_t>(layer - 1)]) {
            if (!std::isfinite(eta)) {
                throw ValidationError("non-finite splitter angle");
            }
        }
    }
    if (phase_layers.size() != kept_positions().size()) {
        throw DimensionError("phase layer count does not match the form");
    }
    for (const auto& layer : phase_layers) {
        if (layer.size() != static_cast<std::size_t>(m)) {
            throw DimensionError("phase layer has wrong length");
        }
        for (double phi : layer) {
            if (!std::isfinite(phi)) {
                throw ValidationError("non-finite phase");
            }
        }
    }
}

UnitaryMatrix evaluate_alternating(const AlternatingCircuit& c) {
    c.validate();
    const std::vector<int> kept = c.kept_positions();
    ComplexMat a = ComplexMat::identity(static_cast<std::size_t>(c.m));

    std::size_t next = 0;
    if (next < kept.size() && kept[next] == 0) {
        apply_phase_layer(a, c.phase_layers[next]);
        ++next;
    }
    for (int layer = 1; layer <= c.depth; ++layer) {
        const std::vector<int> tops = AlternatingCircuit::splitter_tops(c.m, layer);
        const auto& angles = c.splitter_angles[static_cast<std::size_t>(layer - 1)];
        for (std::size_t i = 0; i < tops.size(); ++i) {
            mix_rows_inplace(a, static_cast<std::size_t>(tops[i]), splitter_block(angles[i]));
        }
        if (next < kept.size() && kept[next] == layer) {
            apply_phase_layer(a, c.phase_layers[next]);
            ++next;
        }
    }
    return UnitaryMatrix::certify(std::move(a), 1e-11);
}

namespace {

// Block id per mode for one splitter layer: pairs share an id, uncovered
// modes get their own.
std::vector<int> layer_blocks(int m, int layer, int& num_blocks) {
    std::vector<int> block(static_cast<std::size_t>(m), -1);
    int next = 0;
    for (int top : AlternatingCircuit::splitter_tops(m, layer)) {
        block[static_cast<std::size_t>(top - 1)] = next;
        block[static_cast<std::size_t>(top)] = next;
        ++next;
    }
    for (int mode = 0; mode < m; ++mode) {
        if (block[static_cast<std::size_t>(mode)] < 0) {
            block[static_cast<std::size_t>(mode)] = next++;
        }
    }
    num_blocks = next;
    return block;
}

// Split phi into a part constant on the left layer's blocks and one constant
// on the right layer's blocks. The block incidence graph is a path, so one
// anchor per component pins everything and each equation is solved exactly.
void split_removed_layer(int m, const std::vector<double>& phi, const std::vector<int>& bl,
                         int nl, const std::vector<int>& br, int nr, std::vector<double>& c_out,
                         std::vector<double>& d_out) {
    std::vector<double> c_val(static_cast<std::size_t>(nl), 0.0);
    std::vector<double> d_val(static_cast<std::size_t>(nr), 0.0);
    std::vector<bool> c_known(static_cast<std::size_t>(nl), false);
    std::vector<bool> d_known(static_cast<std::size_t>(nr), false);

    bool changed = true;
    while (changed) {
        changed = false;
        for (int mode = 0; mode < m; ++mode) {
            const int l = bl[static_cast<std::size_t>(mode)];
            const int r = br[static_cast<std::size_t>(mode)];
            if (c_known[static_cast<std::size_t>(l)] && !d_known[static_cast<std::size_t>(r)]) {
                d_val[static_cast<std::size_t>(r)] =
                    phi[static_cast<std::size_t>(mode)] - c_val[static_cast<std::size_t>(l)];
                d_known[static_cast<std::size_t>(r)] = true;
                changed = true;
            } else if (!c_known[static_cast<std::size_t>(l)] &&
                       d_known[static_cast<std::size_t>(r)]) {
                c_val[static_cast<std::size_t>(l)] =
                    phi[static_cast<std::size_t>(mode)] - d_val[static_cast<std::size_t>(r)];
                c_known[static_cast<std::size_t>(l)] = true;
                changed = true;
            }
        }
        if (!changed) {
            // Anchor the first untouched component through its right block.
            for (int mode = 0; mode < m; ++mode) {
                const int l = bl[static_cast<std::size_t>(mode)];
                const int r = br[static_cast<std::size_t>(mode)];
                if (!c_known[static_cast<std::size_t>(l)] &&
                    !d_known[static_cast<std::size_t>(r)]) {
                    d_val[static_cast<std::size_t>(r)] = 0.0;
                    d_known[static_cast<std::size_t>(r)] = true;
                    changed = true;
                    break;
                }
            }
        }
        bool done = true;
        for (int mode = 0; mode < m; ++mode) {
            if (!c_known[static_cast<std::size_t>(bl[static_cast<std::size_t>(mode)])] ||
                !d_known[static_cast<std::size_t>(br[static_cast<std::size_t>(mode)])]) {
                done = false;
                break;
            }
        }
        if (done) {
            break;
        }
    }

    c_out.assign(static_cast<std::size_t>(m), 0.0);
    d_out.assign(static_cast<std::size_t>(m), 0.0);
    for (int mode = 0; mode < m; ++mode) {
        c_out[static_cast<std::size_t>(mode)] =
            c_val[static_cast<std::size_t>(bl[static_cast<std::size_t>(mode)])];
        d_out[static_cast<std::size_t>(mode)] =
            d_val[static_cast<std::size_t>(br[static_cast<std::size_t>(mode)])];
        const double resid = phi[static_cast<std::size_t>(mode)] -
                             c_out[static_cast<std::size_t>(mode)] -
                             d_out[static_cast<std::size_t>(mode)];
        if (std::abs(resid) > 1e-9) {
            throw InternalError("phase-layer split failed to close");
        }
    }
}

} // namespace

AlternatingCircuit compactify(const AlternatingCircuit& c) {
    c.validate();
    if (c.form != PhaseForm::Full) {
        throw ValidationError("compactify expects a FULL-form circuit");
    }
    AlternatingCircuit out;
    out.m = c.m;
    out.depth = c.depth;
    out.form = PhaseForm::Compact;
    out.splitter_angles = c.splitter_angles;

    const std::vector<int> kept = compact_kept_positions(c.depth);
    out.phase_layers.resize(kept.size());
    std::vector<int> slot_of_position(static_cast<std::size_t>(c.depth) + 1, -1);
    for (std::size_t i = 0; i < kept.size(); ++i) {
        out.phase_layers[i] = c.phase_layers[static_cast<std::size_t>(kept[i])];
        slot_of_position[static_cast<std::size_t>(kept[i])] = static_cast<int>(i);
    }

    for (int p = 1; p <= c.depth - 1; p += 2) {
        const auto& phi = c.phase_layers[static_cast<std::size_t>(p)];
        int nl = 0;
        int nr = 0;
        const std::vector<int> bl = layer_blocks(c.m, p, nl);      // splitter layer p, to the left
        const std::vector<int> br = layer_blocks(c.m, p + 1, nr);  // splitter layer p+1, to the right
        std::vector<double> c_part;
        std::vector<double> d_part;
        split_removed_layer(c.m, phi, bl, nl, br, nr, c_part, d_part);

        auto& left = out.phase_layers[static_cast<std::size_t>(slot_of_position[static_cast<std::size_t>(p - 1)])];
        auto& right = out.phase_layers[static_cast<std::size_t>(slot_of_position[static_cast<std::size_t>(p + 1)])];
        for (int mode = 0; mode < c.m; ++mode) {
            left[static_cast<std::size_t>(mode)] += c_part[static_cast<std::size_t>(mode)];
            right[static_cast<std::size_t>(mode)] += d_part[static_cast<std::size_t>(mode)];
        }
    }
    return out;
}

AlternatingCircuit expand_compact(const AlternatingCircuit& c) {
    c.validate();
    if (c.form != PhaseForm::Compact) {
        throw ValidationError("expand_compact expects a COMPACT-form circuit");
    }
    AlternatingCircuit out;
    out.m = c.m;
    out.depth = c.depth;
    out.form = PhaseForm::Full;
    out.splitter_angles = c.splitter_angles;
    out.phase_layers.assign(static_cast<std::size_t>(c.depth) + 1,
                            std::vector<double>(static_cast<std::size_t>(c.m), 0.0));
    const std::vector<int> kept = compact_kept_positions(c.depth);
    for (std::size_t i = 0; i < kept.size(); ++i) {
        out.phase_layers[static_cast<std::size_t>(kept[i])] = c.phase_layers[i];
    }
    return out;
}

double infidelity(const AlternatingCircuit& c, const UnitaryMatrix& target) {
    if (c.m != static_cast<int>(target.dim())) {
        throw DimensionError("infidelity: circuit and target dimensions differ");
    }
    const UnitaryMatrix e = evaluate_alternating(c);
    const double md = static_cast<double>(c.m);
    const double overlap = std::abs(phase_alignment(e.mat(), target.mat()));
    return std::max(0.0, 1.0 - (overlap * overlap) / (md * md));
}

std::vector<std::size_t> fldzhyan_layer_sizes(int m, int depth) {
    std::vector<std::size_t> sizes;
    for (int layer = 1; layer <= depth; ++layer) {
        sizes.push_back(AlternatingCircuit::splitter_tops(m, layer).size());
    }
    return sizes;
}

std::vector<std::vector<double>> sample_imbalance(const ImbalanceModel& model,
                                                  const std::vector<std::size_t>& layer_sizes) {
    if (model.sigma < 0.0) {
        throw ValidationError("imbalance sigma must be nonnegative");
    }
    Rng rng(mix_seed(model.seed, 0x1b5ce77e5ULL));
    std::vector<std::vector<double>> out;
    for (std::size_t size : layer_sizes) {
        std::vector<double> layer(size, kPi / 4.0);
        for (double& eta : layer) {
            if (model.dist == ImbalanceModel::Dist::Gaussian) {
                eta += model.sigma * rng.next_gaussian();
            } else {
                eta += model.sigma * std::sqrt(3.0) * (2.0 * rng.next_unit() - 1.0);
            }
        }
        out.push_back(std::move(layer));
    }
    return out;
}

LayeredCircuit to_layered(const AlternatingCircuit& skeleton) {
    skeleton.validate();
    LayeredCircuit lc;
    lc.m = skeleton.m;
    const std::vector<int> kept = skeleton.kept_positions();

    std::size_t next = 0;
    if (next < kept.size() && kept[next] == 0) {
        lc.add_phase_layer();
        ++next;
    }
    for (int layer = 1; layer <= skeleton.depth; ++layer) {
        LayeredCircuit::FixedStage fixed;
        const std::vector<int> tops = AlternatingCircuit::splitter_tops(skeleton.m, layer);
        const auto& angles = skeleton.splitter_angles[static_cast<std::size_t>(layer - 1)];
        for (std::size_t i = 0; i < tops.size(); ++i) {
            fixed.blocks.emplace_back(tops[i], splitter_block(angles[i]));
        }
        lc.add_fixed(std::move(fixed));
        if (next < kept.size() && kept[next] == layer) {
            lc.add_phase_layer();
            ++next;
        }
    }
    return lc;
}

std::vector<std::vector<double>> params_to_phase_layers(const AlternatingCircuit& skeleton,
                                                        const std::vector<double>& params) {
    const std::size_t layers = skeleton.kept_positions().size();
    if (params.size() != layers * static_cast<std::size_t>(skeleton.m)) {
        throw DimensionError("parameter vector does not match the layout");
    }
    std::vector<std::vector<double>> out(layers);
    for (std::size_t l = 0; l < layers; ++l) {
        out[l].assign(params.begin() + static_cast<std::ptrdiff_t>(l * skeleton.m),
                      params.begin() + static_cast<std::ptrdiff_t>((l + 1) * skeleton.m));
    }
    return out;
}

std::vector<double> phase_layers_to_params(const AlternatingCircuit& c) {
    std::vector<double> out;
    for (const auto& layer : c.phase_layers) {
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

OptimizeResult optimize_phases(const UnitaryMatrix& target, const AlternatingCircuit& skeleton,
                               const OptimizeOptions& opts) {
    skeleton.validate();
    if (skeleton.m != static_cast<int>(target.dim())) {
        throw DimensionError("optimize_phases: dimension mismatch");
    }
    if (skeleton.depth < 1) {
        throw ValidationError("optimize_phases: depth must be at least 1");
    }
    if (opts.restarts < 1) {
        throw ValidationError("optimize_phases: need at least one restart");
    }

    const LayeredCircuit lc = to_layered(skeleton);
    const ComplexMat target_adj = target.mat().adjoint();

    MinimizeOptions mopts;
    mopts.max_iters = opts.max_iters;
    mopts.tol = opts.tol;

    OptimizeResult result;
    int best_restart = -1;
    MinimizeResult best;

    for (int r = 0; r < opts.restarts; ++r) {
        const std::uint64_t rseed = mix_seed(opts.seed, static_cast<std::uint64_t>(r));
        std::vector<double> init(static_cast<std::size_t>(lc.num_params));
        if (r == 0 && opts.init_from_skeleton) {
            init = phase_layers_to_params(skeleton);
        } else {
            Rng rng(rseed);
            for (double& v : init) {
                v = rng.next_angle();
            }
        }
        MinimizeResult mr = minimize_infidelity(lc, target_adj, init, mopts);
        result.per_restart.push_back(RestartReport{rseed, mr.best_infidelity, mr.iterations});
        if (best_restart < 0 || mr.best_infidelity < best.best_infidelity) {
            best = std::move(mr);
            best_restart = r;
        }
    }

    result.phases = params_to_phase_layers(skeleton, best.params);
    result.achieved_infidelity = best.best_infidelity;
    result.iterations = best.iterations;
    return result;
}

} // namespace smzi
