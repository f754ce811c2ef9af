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

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "smzi/decompose_clements.hpp"
#include "smzi/decompose_reck.hpp"
#include "smzi/errors.hpp"
#include "smzi/fldzhyan.hpp"
#include "smzi/haar.hpp"
#include "smzi/io.hpp"
#include "smzi/relocate.hpp"
#include "smzi/rng.hpp"
#include "smzi/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNonUnitary = 3;
constexpr int kExitNumerical = 4;

// Matrices are accepted when unitary to 1e-8; the decompositions re-validate
// at their own 1e-10 gate. Nothing is ever renormalized: an input that fails
// either gate is rejected rather than silently projected.
constexpr double kCliUnitaryTol = 1e-8;

smzi::UnitaryMatrix load_unitary(const std::string& path) {
    const smzi::ComplexMat mat = smzi::io::matrix_from_json(smzi::io::read_file(path));
    return smzi::UnitaryMatrix::certify(mat, kCliUnitaryTol);
}

int run_haar(int m, std::uint64_t seed, const std::string& out) {
    const smzi::UnitaryMatrix u = smzi::haar_random_unitary(static_cast<std::size_t>(m), seed);
    smzi::io::write_file(out, smzi::io::matrix_to_json(u.mat()));
    return kExitOk;
}

int run_decompose(const std::string& scheme, const std::string& in, const std::string& out) {
    const smzi::UnitaryMatrix u = load_unitary(in);
    if (u.dim() < 2) {
        std::cerr << "decompose requires at least two modes\n";
        return kExitUsage;
    }
    std::string table;
    smzi::UnitaryMatrix recon = u; // placeholder, reassigned below
    if (scheme == "reck-smzi") {
        const smzi::ReckDecomposition d = smzi::decompose_reck(u);
        recon = smzi::reconstruct_reck(d);
        table = smzi::io::reck_to_json(d);
    } else if (scheme == "clements-smzi") {
        const smzi::ClementsDecomposition d = smzi::decompose_clements_smzi(u);
        recon = smzi::reconstruct_clements(d);
        table = smzi::io::clements_to_json(d);
    } else if (scheme == "clements-amzi") {
        const smzi::AmziDecomposition d = smzi::decompose_clements_amzi(u);
        recon = smzi::reconstruct_amzi(d);
        table = smzi::io::amzi_to_json(d);
    } else {
        std::cerr << "unknown scheme: " << scheme << "\n";
        return kExitUsage;
    }
    smzi::io::write_file(out, table);
    std::cout << smzi::io::format_double(smzi::global_phase_distance(recon, u)) << "\n";
    return kExitOk;
}

int run_reconstruct(const std::string& in, const std::string& out) {
    const smzi::io::TableFile t = smzi::io::table_from_json(smzi::io::read_file(in));
    smzi::ComplexMat mat(1, 1);
    switch (t.kind) {
    case smzi::io::TableFile::Kind::Reck:
        mat = smzi::reconstruct_reck(t.reck).mat();
        break;
    case smzi::io::TableFile::Kind::Clements:
        mat = smzi::reconstruct_clements(t.clements).mat();
        break;
    case smzi::io::TableFile::Kind::Amzi:
        mat = smzi::reconstruct_amzi(t.amzi).mat();
        break;
    case smzi::io::TableFile::Kind::Mesh:
        mat = smzi::evaluate(t.mesh).mat();
        break;
    case smzi::io::TableFile::Kind::Alternating:
        mat = smzi::evaluate_alternating(t.alternating).mat();
        break;
    }
    smzi::io::write_file(out, smzi::io::matrix_to_json(mat));
    return kExitOk;
}

int run_relocate(const std::string& in, const std::string& out) {
    const smzi::ClementsDecomposition d =
        smzi::io::clements_from_json(smzi::io::read_file(in));
    const smzi::MeshCircuit mesh = smzi::relocate_all(d);
    const smzi::UnitaryMatrix target = smzi::reconstruct_clements(d);
    const double discrepancy = smzi::max_abs_diff(smzi::evaluate(mesh).mat(), target.mat());
    smzi::io::write_file(out, smzi::io::mesh_to_json(mesh));
    std::cout << smzi::io::format_double(discrepancy) << "\n";
    return kExitOk;
}

int run_optimize(const std::string& in, int depth, double sigma, std::uint64_t seed, int restarts,
                 const std::string& out) {
    const smzi::UnitaryMatrix target = load_unitary(in);
    const int m = static_cast<int>(target.dim());

    smzi::AlternatingCircuit skeleton =
        smzi::AlternatingCircuit::balanced(m, depth, smzi::PhaseForm::Full);
    if (sigma > 0.0) {
        smzi::ImbalanceModel model;
        model.sigma = sigma;
        model.seed = smzi::mix_seed(seed, 1);
        skeleton.splitter_angles =
            smzi::sample_imbalance(model, smzi::fldzhyan_layer_sizes(m, depth));
    }

    smzi::OptimizeOptions opts;
    opts.seed = seed;
    opts.restarts = restarts;
    const smzi::OptimizeResult res = smzi::optimize_phases(target, skeleton, opts);

    smzi::AlternatingCircuit solved = skeleton;
    solved.phase_layers = res.phases;

    std::string report = "{\n  \"m\": " + std::to_string(m) +
                         ",\n  \"depth\": " + std::to_string(depth) +
                         ",\n  \"sigma\": " + smzi::io::format_double(sigma) +
                         ",\n  \"seed\": " + std::to_string(seed) +
                         ",\n  \"restarts\": " + std::to_string(restarts) +
                         ",\n  \"achieved_infidelity\": " +
                         smzi::io::format_double(res.achieved_infidelity) +
                         ",\n  \"iterations\": " + std::to_string(res.iterations) +
                         ",\n  \"per_restart\": [";
    for (std::size_t r = 0; r < res.per_restart.size(); ++r) {
        report += (r == 0) ? "\n" : ",\n";
        report += "    {\"restart\": " + std::to_string(r) +
                  ", \"seed\": " + std::to_string(res.per_restart[r].seed) +
                  ", \"infidelity\": " + smzi::io::format_double(res.per_restart[r].infidelity) +
                  ", \"iterations\": " + std::to_string(res.per_restart[r].iterations) + "}";
    }
    report += "\n  ],\n  \"circuit\": ";
    {
        std::string circuit = smzi::io::alternating_to_json(solved);
        if (!circuit.empty() && circuit.back() == '\n') {
            circuit.pop_back();
        }
        report += circuit;
    }
    report += "\n}\n";

    smzi::io::write_file(out, report);
    std::cout << smzi::io::format_double(res.achieved_infidelity) << "\n";
    return kExitOk;
}

int run_sweep_cmd(int m, const std::vector<double>& sigmas, int trials,
                  const std::vector<std::string>& schemes, std::uint64_t seed, int restarts,
                  int iters, const std::string& out) {
    smzi::SweepOptions opts;
    opts.m = m;
    opts.sigmas = sigmas;
    opts.trials = trials;
    if (!schemes.empty()) {
        opts.schemes = schemes;
    }
    opts.seed = seed;
    opts.restarts = restarts;
    opts.max_iters = iters;
    const smzi::SweepReport report = smzi::run_sweep(opts);
    smzi::io::write_file(out, smzi::sweep_to_csv(report));
    for (const smzi::SweepAggregate& agg : report.aggregates) {
        std::cout << agg.scheme << " m=" << agg.m
                  << " sigma=" << smzi::io::format_double(agg.sigma)
                  << " median=" << smzi::io::format_double(agg.median)
                  << " p90=" << smzi::io::format_double(agg.p90) << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"smzi: compile unitaries into symmetric-MZI mesh phase settings"};
    app.require_subcommand(1);

    std::string scheme = "clements-smzi";
    std::string in_path;
    std::string out_path;
    int m = 4;
    std::uint64_t seed = 0;
    int depth = 0;
    double sigma = 0.0;
    int trials = 10;
    int restarts = 10;
    int iters = 1000;
    std::vector<double> sigmas;
    std::vector<std::string> schemes;

    CLI::App* haar = app.add_subcommand("haar", "Write a Haar-random unitary matrix file");
    haar->add_option("--m", m, "mode count")->required()->check(CLI::PositiveNumber);
    haar->add_option("--seed", seed, "RNG seed");
    haar->add_option("--out", out_path, "output matrix file")->required();

    CLI::App* dec = app.add_subcommand("decompose", "Decompose a unitary into phase tables");
    dec->add_option("--scheme", scheme, "reck-smzi | clements-smzi | clements-amzi")
        ->check(CLI::IsMember({"reck-smzi", "clements-smzi", "clements-amzi"}));
    dec->add_option("--in", in_path, "input matrix file")->required();
    dec->add_option("--out", out_path, "output table file")->required();

    CLI::App* rec = app.add_subcommand("reconstruct", "Evaluate a table/mesh file to a matrix");
    rec->add_option("--in", in_path, "input table file")->required();
    rec->add_option("--out", out_path, "output matrix file")->required();

    CLI::App* rel =
        app.add_subcommand("relocate", "Move residual phases of a clements-smzi table to edges");
    rel->add_option("--in", in_path, "input clements-smzi table")->required();
    rel->add_option("--out", out_path, "output mesh file")->required();

    CLI::App* opt = app.add_subcommand("optimize", "Program an alternating-layer circuit");
    opt->add_option("--in", in_path, "target matrix file")->required();
    opt->add_option("--depth", depth, "number of splitter layers")->required();
    opt->add_option("--sigma", sigma, "splitter imbalance std-dev");
    opt->add_option("--seed", seed, "RNG seed");
    opt->add_option("--restarts", restarts, "optimizer restarts");
    opt->add_option("--out", out_path, "output report file")->required();

    CLI::App* swp = app.add_subcommand("sweep", "Robustness sweep over imbalance levels");
    swp->add_option("--m", m, "mode count")->required();
    swp->add_option("--sigma", sigmas, "imbalance grid (repeatable)")->required();
    swp->add_option("--trials", trials, "trials per point")->required();
    swp->add_option("--scheme", schemes, "clements-smzi and/or fldzhyan (repeatable)");
    swp->add_option("--seed", seed, "base seed");
    swp->add_option("--restarts", restarts, "reoptimization restarts");
    swp->add_option("--iters", iters, "optimizer iteration cap");
    swp->add_option("--out", out_path, "output CSV file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*haar) {
            return run_haar(m, seed, out_path);
        }
        if (*dec) {
            return run_decompose(scheme, in_path, out_path);
        }
        if (*rec) {
            return run_reconstruct(in_path, out_path);
        }
        if (*rel) {
            return run_relocate(in_path, out_path);
        }
        if (*opt) {
            if (depth < 1) {
                std::cerr << "invalid layout: depth must be at least 1\n";
                return kExitUsage;
            }
            if (sigma < 0.0) {
                std::cerr << "sigma must be nonnegative\n";
                return kExitUsage;
            }
            if (restarts < 1) {
                std::cerr << "restarts must be at least 1\n";
                return kExitUsage;
            }
            return run_optimize(in_path, depth, sigma, seed, restarts, out_path);
        }
        if (*swp) {
            if (trials < 1) {
                std::cerr << "trials must be at least 1\n";
                return kExitUsage;
            }
            if (m < 2) {
                std::cerr << "sweep requires m >= 2\n";
                return kExitUsage;
            }
            for (double s : sigmas) {
                if (s < 0.0) {
                    std::cerr << "bad sigma grid: entries must be nonnegative\n";
                    return kExitUsage;
                }
            }
            for (const std::string& s : schemes) {
                if (s != "clements-smzi" && s != "fldzhyan") {
                    std::cerr << "unknown scheme: " << s << "\n";
                    return kExitUsage;
                }
            }
            return run_sweep_cmd(m, sigmas, trials, schemes, seed, restarts, iters, out_path);
        }
    } catch (const smzi::SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const smzi::LayoutError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const smzi::IndexError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const smzi::DimensionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const smzi::ValidationError& e) {
        std::cerr << "non-unitary input: " << e.what() << "\n";
        return kExitNonUnitary;
    } catch (const smzi::Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}
