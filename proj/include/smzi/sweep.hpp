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
#include <string>
#include <vector>

#include "smzi/optimize.hpp"

namespace smzi {

/// Robustness harness: draw Haar targets, perturb every splitter, reoptimize
/// the scheme's tunable phases, and record the infidelity actually reached.
struct SweepOptions {
    int m = 4;
    std::vector<double> sigmas;
    int trials = 10;
    std::vector<std::string> schemes = {"clements-smzi", "fldzhyan"};
    std::uint64_t seed = 0;
    int restarts = 4;
    int max_iters = 1000;
    double tol = 1e-10;
};

struct SweepRow {
    std::string scheme;
    int m = 0;
    double sigma = 0.0;
    std::uint64_t trial_seed = 0;
    double infidelity = 1.0;
};

struct SweepAggregate {
    std::string scheme;
    int m = 0;
    double sigma = 0.0;
    double median = 0.0;
    double p90 = 0.0;
};

struct SweepReport {
    std::vector<SweepRow> rows;          // sorted by (scheme, sigma, trial)
    std::vector<SweepAggregate> aggregates;
};

SweepReport run_sweep(const SweepOptions& opts);

/// Rows as CSV with header "scheme,m,sigma,trial_seed,infidelity".
std::string sweep_to_csv(const SweepReport& report);

/// The rectangular edge-layout mesh with physically modeled sMZIs (two
/// imperfect splitters around the internal phases) as a layered circuit:
/// boundary phases, per-column splitter/phase/splitter stages, boundary
/// phases. All phases are tunable parameters.
LayeredCircuit mesh_layered_circuit(int m, const std::vector<std::vector<double>>& splitter_angles);

/// Splitter-layer sizes of that mesh model (two layers per column).
std::vector<std::size_t> mesh_layer_sizes(int m);

/// The mesh parameters realizing a Haar target exactly at zero imbalance,
/// extracted from decompose + relocate; used to warm-start the reoptimizer.
std::vector<double> mesh_warm_start(const UnitaryMatrix& target);

} // namespace smzi
