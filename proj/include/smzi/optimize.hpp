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
#include <span>
#include <vector>

#include "smzi/complex_mat.hpp"

namespace smzi {

/// A circuit of alternating fixed 2x2 layers and tunable diagonal phase
/// layers, the common shape behind both the alternating-splitter design and
/// a rectangular mesh with imperfect splitters. Phase entries either map to
/// an optimizable parameter or stay at a fixed value.
struct LayeredCircuit {
    struct FixedStage {
        std::vector<std::pair<int, Block2>> blocks; // (top mode, block)
    };
    struct PhaseStage {
        std::vector<int> param_of_mode;  // [mode-1], -1 when not tunable
        std::vector<double> fixed_value; // [mode-1], used when param is -1
    };
    struct Stage {
        bool is_phase = false;
        FixedStage fixed;
        PhaseStage phase;
    };

    int m = 0;
    std::vector<Stage> stages;
    int num_params = 0;

    /// Append a fixed layer of blocks.
    void add_fixed(FixedStage stage);

    /// Append a phase layer where every mode is a fresh parameter. Returns
    /// the index of the first parameter.
    int add_phase_layer();

    /// Append a phase layer with an explicit parameter map.
    void add_phase_layer(PhaseStage stage);

    ComplexMat eval(std::span<const double> params) const;

    /// 1 - |tr(target_adj * E)|^2 / m^2 for E = eval(params).
    double infidelity(const ComplexMat& target_adj, std::span<const double> params) const;

    /// Same value plus its analytic gradient with respect to the parameters.
    double infidelity_grad(const ComplexMat& target_adj, std::span<const double> params,
                           std::span<double> grad) const;
};

struct MinimizeOptions {
    int max_iters = 2000;
    double tol = 1e-10;      // stop once the infidelity falls below this
    int history = 8;         // L-BFGS memory
};

struct MinimizeResult {
    std::vector<double> params;
    double best_infidelity = 1.0;
    int iterations = 0;
};

/// L-BFGS with Armijo backtracking on the infidelity landscape. Keeps and
/// returns the best iterate seen, so the reported value never regresses.
MinimizeResult minimize_infidelity(const LayeredCircuit& circuit, const ComplexMat& target_adj,
                                   std::span<const double> init, const MinimizeOptions& opts);

} // namespace smzi
