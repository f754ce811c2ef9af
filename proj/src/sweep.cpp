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

#include "smzi/sweep.hpp"

#include <algorithm>
#include <cmath>

#include "smzi/errors.hpp"
#include "smzi/fldzhyan.hpp"
#include "smzi/haar.hpp"
#include "smzi/io.hpp"
#include "smzi/relocate.hpp"
#include "smzi/rng.hpp"

namespace smzi {
namespace {

Block2 splitter_block(double eta) {
    const double c = std::cos(eta);
    const double s = std::sin(eta);
    return Block2{cplx{c, 0.0}, cplx{0.0, s}, cplx{0.0, s}, cplx{c, 0.0}};
}

double percentile(std::vector<double> values, double q) {
    std::sort(values.begin(), values.end());
    if (values.empty()) {
        return 0.0;
    }
    const double pos = q * static_cast<double>(values.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return values[lo] * (1.0 - frac) + values[hi] * frac;
}

} // namespace

std::vector<std::size_t> mesh_layer_sizes(int m) {
    std::vector<std::size_t> sizes;
    for (int col = 1; col <= m; ++col) {
        const std::size_t n = clements_column_tops(m, col).size();
        sizes.push_back(n);
        sizes.push_back(n);
    }
    return sizes;
}

LayeredCircuit mesh_layered_circuit(int m,
                                    const std::vector<std::vector<double>>& splitter_angles) {
    if (splitter_angles.size() != static_cast<std::size_t>(2 * m)) {
        throw DimensionError("mesh model needs two splitter layers per column");
    }
    LayeredCircuit lc;
    lc.m = m;
    lc.add_phase_layer(); // input boundary
    for (int col = 1; col <= m; ++col) {
        const std::vector<int> tops = clements_column_tops(m, col);
        for (int half = 0; half < 2; ++half) {
            const auto& angles = splitter_angles[static_cast<std::size_t>(2 * (col - 1) + half)];
            if (angles.size() != tops.size()) {
                throw DimensionError("splitter layer size mismatch");
            }
            LayeredCircuit::FixedStage fixed;
            for (std::size_t i = 0; i < tops.size(); ++i) {
                fixed.blocks.emplace_back(tops[i], splitter_block(angles[i]));
            }
            lc.add_fixed(std::move(fixed));
            if (half == 0) {
                lc.add_phase_layer(); // internal thetas plus edge slots
            }
        }
    }
    lc.add_phase_layer(); // output boundary
    return lc;
}

std::vector<double> mesh_warm_start(const UnitaryMatrix& target) {
    const int m = static_cast<int>(target.dim());
    const MeshCircuit mesh = relocate_all(decompose_clements_smzi(target));
    // relocate_all materializes [input phases] + m interior columns +
    // [output phases]; map those values onto the layered parameter order:
    // one m-vector per phase stage, stages ordered input, columns 1..m, output.
    if (mesh.columns.size() != static_cast<std::size_t>(m) + 2) {
        throw InternalError("unexpected relocated mesh shape");
    }
    std::vector<double> params;
    params.reserve(static_cast<std::size_t>((m + 2) * m));

    const auto push_phase_column = [&](const std::vector<MeshElement>& col) {
        std::vector<double> v(static_cast<std::size_t>(m), 0.0);
        for (const MeshElement& e : col) {
            v[static_cast<std::size_t>(e.top_mode - 1)] = e.phi;
        }
        params.insert(params.end(), v.begin(), v.end());
    };

    push_phase_column(mesh.columns.front());
    for (int col = 1; col <= m; ++col) {
        const auto& column = mesh.columns[static_cast<std::size_t>(col)];
        std::vector<double> v(static_cast<std::size_t>(m), 0.0);
        for (const MeshElement& e : column) {
            if (e.kind == MeshElement::Kind::Smzi) {
                // A balanced splitter-phase-splitter sandwich realizes the
                // sMZI block of (theta + pi/2) on both arms, so the mesh
                // thetas shift down by pi/2 here.
                v[static_cast<std::size_t>(e.top_mode - 1)] = e.smzi.theta1 - kPi / 2.0;
                v[static_cast<std::size_t>(e.top_mode)] = e.smzi.theta2 - kPi / 2.0;
            } else if (e.kind == MeshElement::Kind::Phase) {
                v[static_cast<std::size_t>(e.top_mode - 1)] = e.phi;
            }
        }
        params.insert(params.end(), v.begin(), v.end());
    }
    push_phase_column(mesh.columns.back());
    return params;
}

SweepReport run_sweep(const SweepOptions& opts) {
    if (opts.trials < 1) {
        throw ValidationError("sweep needs at least one trial");
    }
    if (opts.sigmas.empty()) {
        throw ValidationError("sweep needs a sigma grid");
    }
    for (double sigma : opts.sigmas) {
        if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
            throw ValidationError("sweep sigmas must be nonnegative");
        }
    }
    if (opts.m < 2) {
        throw ValidationError("sweep needs m >= 2");
    }
    std::vector<std::string> schemes = opts.schemes;
    std::sort(schemes.begin(), schemes.end());
    for (const std::string& scheme : schemes) {
        if (scheme != "clements-smzi" && scheme != "fldzhyan") {
            throw ValidationError("unknown sweep scheme: " + scheme);
        }
    }
    std::vector<double> sigmas = opts.sigmas;
    std::sort(sigmas.begin(), sigmas.end());

    MinimizeOptions mopts;
    mopts.max_iters = opts.max_iters;
    mopts.tol = opts.tol;

    SweepReport report;
    for (const std::string& scheme : schemes) {
        for (std::size_t si = 0; si < sigmas.size(); ++si) {
            const double sigma = sigmas[si];
            std::vector<double> values;
            for (int trial = 0; trial < opts.trials; ++trial) {
                const std::uint64_t trial_seed = opts.seed ^ static_cast<std::uint64_t>(trial);
                const UnitaryMatrix target = haar_random_unitary(
                    static_cast<std::size_t>(opts.m), trial_seed);
                const ComplexMat target_adj = target.mat().adjoint();

                ImbalanceModel model;
                model.sigma = sigma;
                model.seed = mix_seed(trial_seed, 977 + si);

                double achieved = 1.0;
                if (scheme == "clements-smzi") {
                    const auto angles = sample_imbalance(model, mesh_layer_sizes(opts.m));
                    const LayeredCircuit lc = mesh_layered_circuit(opts.m, angles);
                    for (int r = 0; r < opts.restarts; ++r) {
                        std::vector<double> init;
                        if (r == 0) {
                            init = mesh_warm_start(target);
                        } else {
                            Rng rng(mix_seed(trial_seed, 31 * si + static_cast<std::size_t>(r)));
                            init.resize(static_cast<std::size_t>(lc.num_params));
                            for (double& v : init) {
                                v = rng.next_angle();
                            }
                        }
                        const MinimizeResult mr =
                            minimize_infidelity(lc, target_adj, init, mopts);
                        achieved = std::min(achieved, mr.best_infidelity);
                        if (achieved <= opts.tol) {
                            break;
                        }
                    }
                } else {
                    AlternatingCircuit skeleton =
                        AlternatingCircuit::balanced(opts.m, 2 * opts.m, PhaseForm::Full);
                    skeleton.splitter_angles =
                        sample_imbalance(model, fldzhyan_layer_sizes(opts.m, 2 * opts.m));
                    OptimizeOptions oopts;
                    oopts.max_iters = opts.max_iters;
                    oopts.tol = opts.tol;
                    oopts.restarts = opts.restarts;
                    oopts.seed = mix_seed(trial_seed, 577 + si);
                    const OptimizeResult res = optimize_phases(target, skeleton, oopts);
                    achieved = res.achieved_infidelity;
                }

                report.rows.push_back(SweepRow{scheme, opts.m, sigma, trial_seed, achieved});
                values.push_back(achieved);
            }
            report.aggregates.push_back(SweepAggregate{
                scheme, opts.m, sigma, percentile(values, 0.5), percentile(values, 0.9)});
        }
    }
    return report;
}

std::string sweep_to_csv(const SweepReport& report) {
    std::string out = "scheme,m,sigma,trial_seed,infidelity\n";
    for (const SweepRow& row : report.rows) {
        out += row.scheme + "," + std::to_string(row.m) + "," + io::format_double(row.sigma) +
               "," + std::to_string(row.trial_seed) + "," + io::format_double(row.infidelity) +
               "\n";
    }
    return out;
}

} // namespace smzi
