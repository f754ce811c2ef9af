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

#include <cstdint>
#include <vector>

#include "smzi/complex_mat.hpp"
#include "smzi/optimize.hpp"

namespace smzi {

enum class PhaseForm { Full, Compact };

/// Alternating-layer design: fixed beam-splitter layers (balanced at pi/4,
/// possibly imbalanced) interleaved with tunable phase layers. Splitter
/// layer L couples modes (1,2),(3,4),... when L is odd and (2,3),(4,5),...
/// when L is even, like the rectangular mesh. In FULL form there is a phase
/// layer before and after every splitter layer (depth+1 vectors); in COMPACT
/// form the interior odd-position layers have been merged away.
struct AlternatingCircuit {
    int m = 0;
    int depth = 0;                                   // number of splitter layers
    PhaseForm form = PhaseForm::Full;
    std::vector<std::vector<double>> splitter_angles; // [layer][slot], layer = 1..depth
    std::vector<std::vector<double>> phase_layers;    // FULL: depth+1 of size m

    /// All-zero phases and balanced pi/4 splitters.
    static AlternatingCircuit balanced(int m, int depth, PhaseForm form = PhaseForm::Full);

    /// Phase-layer positions (0..depth) present in this form.
    std::vector<int> kept_positions() const;

    /// Top modes of the splitters in layer L (1-based).
    static std::vector<int> splitter_tops(int m, int layer);

    void validate() const;
};

/// Positions 0..depth that survive compaction: everything except the
/// interior odd positions.
std::vector<int> compact_kept_positions(int depth);

/// Ordered product of phase-layer and splitter-layer matrices; certifies
/// unitarity at 1e-11.
UnitaryMatrix evaluate_alternating(const AlternatingCircuit& c);

/// FULL -> COMPACT. Each removed layer splits exactly into a part constant
/// on the left splitter layer's mode pairs (pushed left) and one constant on
/// the right layer's pairs (pushed right); holds for any splitting ratios.
AlternatingCircuit compactify(const AlternatingCircuit& c);

/// COMPACT -> FULL, reinserting the removed layers as zeros.
AlternatingCircuit expand_compact(const AlternatingCircuit& c);

/// 1 - |tr(target' C)|^2 / m^2; zero iff the circuit hits the target up to a
/// global phase.
double infidelity(const AlternatingCircuit& c, const UnitaryMatrix& target);

struct ImbalanceModel {
    enum class Dist { Gaussian, Uniform };

    double sigma = 0.0; // std-dev of the splitter-angle deviation from pi/4
    std::uint64_t seed = 0;
    Dist dist = Dist::Gaussian;
};

/// Per-layer splitter counts for an (m, depth) alternating layout.
std::vector<std::size_t> fldzhyan_layer_sizes(int m, int depth);

/// Splitter angles pi/4 + eps with eps drawn per the model; deterministic
/// for a fixed seed.
std::vector<std::vector<double>> sample_imbalance(const ImbalanceModel& model,
                                                  const std::vector<std::size_t>& layer_sizes);

struct OptimizeOptions {
    int max_iters = 2000;
    double tol = 1e-10;
    int restarts = 10;
    std::uint64_t seed = 0;
    bool init_from_skeleton = false; // restart 0 starts at the skeleton's phases
};

struct RestartReport {
    std::uint64_t seed = 0;
    double infidelity = 1.0;
    int iterations = 0;
};

struct OptimizeResult {
    std::vector<std::vector<double>> phases; // best-of-restarts phase layers
    double achieved_infidelity = 1.0;
    int iterations = 0; // iterations of the winning restart
    std::vector<RestartReport> per_restart;
};

/// Numerically program the circuit's phase layers toward a target unitary.
/// Splitter angles stay fixed. Deterministic for fixed options; restart r
/// always draws from seed mixed with r, independent of execution order.
OptimizeResult optimize_phases(const UnitaryMatrix& target, const AlternatingCircuit& skeleton,
                               const OptimizeOptions& opts = {});

/// The skeleton as a generic layered circuit with one parameter per phase
/// entry (layer-major), plus the mapping back to phase layers.
LayeredCircuit to_layered(const AlternatingCircuit& skeleton);
std::vector<std::vector<double>> params_to_phase_layers(const AlternatingCircuit& skeleton,
                                                        const std::vector<double>& params);
std::vector<double> phase_layers_to_params(const AlternatingCircuit& c);

} // namespace smzi
