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

#include "smzi/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "smzi/errors.hpp"

namespace smzi {

void LayeredCircuit::add_fixed(FixedStage stage) {
    Stage s;
    s.is_phase = false;
    s.fixed = std::move(stage);
    stages.push_back(std::move(s));
}

int LayeredCircuit::add_phase_layer() {
    PhaseStage p;
    p.param_of_mode.resize(static_cast<std::size_t>(m));
    p.fixed_value.assign(static_cast<std::size_t>(m), 0.0);
    const int first = num_params;
    for (int mode = 0; mode < m; ++mode) {
        p.param_of_mode[static_cast<std::size_t>(mode)] = num_params++;
    }
    add_phase_layer(std::move(p));
    return first;
}

void LayeredCircuit::add_phase_layer(PhaseStage stage) {
    Stage s;
    s.is_phase = true;
    s.phase = std::move(stage);
    stages.push_back(std::move(s));
}

namespace {

void apply_stage_left(const LayeredCircuit::Stage& stage, ComplexMat& a,
                      std::span<const double> params) {
    if (stage.is_phase) {
        for (int mode = 0; mode < static_cast<int>(a.rows()); ++mode) {
            const int p = stage.phase.param_of_mode[static_cast<std::size_t>(mode)];
            const double phi =
                (p >= 0) ? params[static_cast<std::size_t>(p)]
                         : stage.phase.fixed_value[static_cast<std::size_t>(mode)];
            if (phi != 0.0) {
                scale_row_inplace(a, static_cast<std::size_t>(mode + 1), std::polar(1.0, phi));
            }
        }
    } else {
        for (const auto& [top, block] : stage.fixed.blocks) {
            mix_rows_inplace(a, static_cast<std::size_t>(top), block);
        }
    }
}

// Right-multiply s <- s * Stage, used by the backward sweep.
void apply_stage_right(const LayeredCircuit::Stage& stage, ComplexMat& s,
                       std::span<const double> params) {
    if (stage.is_phase) {
        for (int mode = 0; mode < static_cast<int>(s.cols()); ++mode) {
            const int p = stage.phase.param_of_mode[static_cast<std::size_t>(mode)];
            const double phi =
                (p >= 0) ? params[static_cast<std::size_t>(p)]
                         : stage.phase.fixed_value[static_cast<std::size_t>(mode)];
            if (phi != 0.0) {
                scale_col_inplace(s, static_cast<std::size_t>(mode + 1), std::polar(1.0, phi));
            }
        }
    } else {
        for (const auto& [top, block] : stage.fixed.blocks) {
            mix_cols_inplace(s, static_cast<std::size_t>(top), block);
        }
    }
}

} // namespace

ComplexMat LayeredCircuit::eval(std::span<const double> params) const {
    if (static_cast<int>(params.size()) != num_params) {
        throw DimensionError("parameter vector has wrong length");
    }
    ComplexMat a = ComplexMat::identity(static_cast<std::size_t>(m));
    for (const Stage& stage : stages) {
        apply_stage_left(stage, a, params);
    }
    return a;
}

namespace {

cplx trace_of_product(const ComplexMat& a, const ComplexMat& b) {
    cplx tr{0.0, 0.0};
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t t = 0; t < a.cols(); ++t) {
            tr += a.at(i, t) * b.at(t, i);
        }
    }
    return tr;
}

} // namespace

double LayeredCircuit::infidelity(const ComplexMat& target_adj,
                                  std::span<const double> params) const {
    const ComplexMat e = eval(params);
    const cplx tr = trace_of_product(target_adj, e);
    const double md = static_cast<double>(m);
    return std::max(0.0, 1.0 - std::norm(tr) / (md * md));
}

double LayeredCircuit::infidelity_grad(const ComplexMat& target_adj,
                                       std::span<const double> params,
                                       std::span<double> grad) const {
    if (static_cast<int>(grad.size()) != num_params) {
        throw DimensionError("gradient vector has wrong length");
    }
    // Forward sweep, snapshotting the partial product after each phase stage.
    std::vector<ComplexMat> after_phase;
    after_phase.reserve(stages.size());
    ComplexMat a = ComplexMat::identity(static_cast<std::size_t>(m));
    for (const Stage& stage : stages) {
        apply_stage_left(stage, a, params);
        if (stage.is_phase) {
            after_phase.push_back(a);
        }
    }

    const cplx tr = trace_of_product(target_adj, a);
    const double md = static_cast<double>(m);

    // Backward sweep: s = target_adj * (product of stages after the current
    // one). For a phase stage with snapshot F, d tr / d phi_mode =
    // i * (F * s)_{mode, mode}, and the diagonal costs only O(m^2).
    ComplexMat s = target_adj;
    std::size_t phase_idx = after_phase.size();
    for (std::size_t si = stages.size(); si-- > 0;) {
        const Stage& stage = stages[si];
        if (stage.is_phase) {
            --phase_idx;
            const ComplexMat& f = after_phase[phase_idx];
            for (int mode = 0; mode < m; ++mode) {
                const int p = stage.phase.param_of_mode[static_cast<std::size_t>(mode)];
                if (p < 0) {
                    continue;
                }
                cplx k{0.0, 0.0};
                for (int t = 0; t < m; ++t) {
                    k += f.at(static_cast<std::size_t>(mode), static_cast<std::size_t>(t)) *
                         s.at(static_cast<std::size_t>(t), static_cast<std::size_t>(mode));
                }
                grad[static_cast<std::size_t>(p)] =
                    (2.0 / (md * md)) * (std::conj(tr) * k).imag();
            }
        }
        apply_stage_right(stage, s, params);
    }

    return std::max(0.0, 1.0 - std::norm(tr) / (md * md));
}

MinimizeResult minimize_infidelity(const LayeredCircuit& circuit, const ComplexMat& target_adj,
                                   std::span<const double> init, const MinimizeOptions& opts) {
    const int n = circuit.num_params;
    if (static_cast<int>(init.size()) != n) {
        throw DimensionError("initial parameter vector has wrong length");
    }
    std::vector<double> x(init.begin(), init.end());
    std::vector<double> g(static_cast<std::size_t>(n), 0.0);
    double f = circuit.infidelity_grad(target_adj, x, g);

    MinimizeResult best;
    best.params = x;
    best.best_infidelity = f;

    struct Pair {
        std::vector<double> s, y;
        double rho;
    };
    std::deque<Pair> history;

    const auto dot = [](const std::vector<double>& a, const std::vector<double>& b) {
        double acc = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            acc += a[i] * b[i];
        }
        return acc;
    };

    int iter = 0;
    int stall = 0;
    for (; iter < opts.max_iters && best.best_infidelity > opts.tol; ++iter) {
        // Two-loop recursion for the search direction.
        std::vector<double> q = g;
        std::vector<double> alpha(history.size());
        for (std::size_t h = history.size(); h-- > 0;) {
            alpha[h] = history[h].rho * dot(history[h].s, q);
            for (std::size_t i = 0; i < q.size(); ++i) {
                q[i] -= alpha[h] * history[h].y[i];
            }
        }
        if (!history.empty()) {
            const double gamma =
                dot(history.back().s, history.back().y) / dot(history.back().y, history.back().y);
            for (double& qi : q) {
                qi *= gamma;
            }
        }
        for (std::size_t h = 0; h < history.size(); ++h) {
            const double beta = history[h].rho * dot(history[h].y, q);
            for (std::size_t i = 0; i < q.size(); ++i) {
                q[i] += history[h].s[i] * (alpha[h] - beta);
            }
        }
        for (double& qi : q) {
            qi = -qi;
        }

        double slope = dot(g, q);
        if (!(slope < 0.0)) {
            // Fall back to steepest descent when curvature information is bad.
            for (std::size_t i = 0; i < q.size(); ++i) {
                q[i] = -g[i];
            }
            slope = dot(g, q);
            history.clear();
            if (!(slope < 0.0)) {
                break; // gradient is numerically zero
            }
        }

        // Armijo backtracking.
        double step = 1.0;
        std::vector<double> x_new(x.size());
        double f_new = f;
        bool accepted = false;
        for (int ls = 0; ls < 40; ++ls) {
            for (std::size_t i = 0; i < x.size(); ++i) {
                x_new[i] = x[i] + step * q[i];
            }
            f_new = circuit.infidelity(target_adj, x_new);
            if (f_new <= f + 1e-4 * step * slope) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            break;
        }

        std::vector<double> g_new(g.size());
        f_new = circuit.infidelity_grad(target_adj, x_new, g_new);

        Pair pair;
        pair.s.resize(x.size());
        pair.y.resize(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            pair.s[i] = x_new[i] - x[i];
            pair.y[i] = g_new[i] - g[i];
        }
        const double sy = dot(pair.s, pair.y);
        if (sy > 1e-14 * std::sqrt(dot(pair.s, pair.s)) * std::sqrt(dot(pair.y, pair.y))) {
            pair.rho = 1.0 / sy;
            history.push_back(std::move(pair));
            if (static_cast<int>(history.size()) > opts.history) {
                history.pop_front();
            }
        }

        const double improvement = f - f_new;
        x.swap(x_new);
        g.swap(g_new);
        f = f_new;
        if (f < best.best_infidelity) {
            best.best_infidelity = f;
            best.params = x;
        }
        if (improvement < 1e-18) {
            if (++stall >= 25) {
                break;
            }
        } else {
            stall = 0;
        }
    }

    best.iterations = iter;
    return best;
}

} // namespace smzi
