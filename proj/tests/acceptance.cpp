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

// Acceptance suite: one pass/fail line per criterion. Criterion 9 is a
// reported comparison rather than a gate. Pass the CLI binary path as the
// first argument to enable the fault-injection criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "smzi/decompose_clements.hpp"
#include "smzi/decompose_reck.hpp"
#include "smzi/fldzhyan.hpp"
#include "smzi/haar.hpp"
#include "smzi/io.hpp"
#include "smzi/relocate.hpp"
#include "smzi/rng.hpp"
#include "smzi/sweep.hpp"

namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << detail
              << std::endl;
    if (!pass) {
        ++g_failures;
    }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void criterion_1_reck_round_trip() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int m = 2; m <= 12; ++m) {
        for (std::uint64_t trial = 0; trial < 100; ++trial) {
            const auto u = smzi::haar_random_unitary(static_cast<std::size_t>(m),
                                                     1000 * static_cast<std::uint64_t>(m) + trial);
            const auto d = smzi::decompose_reck(u);
            worst = std::max(worst, smzi::global_phase_distance(smzi::reconstruct_reck(d), u));
        }
    }
    const double secs = seconds_since(t0);
    report(1, worst < 1e-9 && secs < 30.0,
           "reck round trip, 100 Haar targets per m in 2..12: worst distance " +
               smzi::io::format_double(worst) + ", " + smzi::io::format_double(secs) + " s");
}

void criterion_2_clements_round_trip() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int m = 2; m <= 12; ++m) {
        for (std::uint64_t trial = 0; trial < 100; ++trial) {
            const auto u = smzi::haar_random_unitary(static_cast<std::size_t>(m),
                                                     2000 * static_cast<std::uint64_t>(m) + trial);
            const auto d = smzi::decompose_clements_smzi(u);
            worst =
                std::max(worst, smzi::global_phase_distance(smzi::reconstruct_clements(d), u));
        }
    }
    const double secs = seconds_since(t0);
    report(2, worst < 1e-9 && secs < 30.0,
           "clements round trip, 100 Haar targets per m in 2..12: worst distance " +
               smzi::io::format_double(worst) + ", " + smzi::io::format_double(secs) + " s");
}

void criterion_3_relocation() {
    double worst = 0.0;
    bool structure_ok = true;
    for (int m = 3; m <= 10; ++m) {
        for (std::uint64_t trial = 0; trial < 50; ++trial) {
            const auto u = smzi::haar_random_unitary(static_cast<std::size_t>(m),
                                                     3000 * static_cast<std::uint64_t>(m) + trial);
            const smzi::MeshCircuit mesh = smzi::relocate_all(smzi::decompose_clements_smzi(u));
            worst = std::max(worst, smzi::global_phase_distance(smzi::evaluate(mesh), u));

            // Interior columns may carry single-mode phases only on their
            // canonical edge slots.
            if (mesh.columns.size() != static_cast<std::size_t>(m) + 2) {
                structure_ok = false;
                continue;
            }
            for (int col = 1; col <= m; ++col) {
                const auto slots = smzi::clements_column_slots(m, col);
                for (const smzi::MeshElement& e : mesh.columns[static_cast<std::size_t>(col)]) {
                    if (e.kind == smzi::MeshElement::Kind::Phase &&
                        std::find(slots.begin(), slots.end(), e.top_mode) == slots.end()) {
                        structure_ok = false;
                    }
                }
            }
        }
    }
    report(3, worst < 1e-10 && structure_ok,
           "relocation, 50 Haar targets per m in 3..10: worst distance " +
               smzi::io::format_double(worst) +
               (structure_ok ? ", no interior phases off the edge slots"
                             : ", STRUCTURE VIOLATION"));
}

void criterion_4_parameter_counts() {
    bool ok = true;
    for (int m = 2; m <= 12; ++m) {
        const auto u = smzi::haar_random_unitary(static_cast<std::size_t>(m),
                                                 static_cast<std::uint64_t>(40 + m));
        const auto d = smzi::decompose_reck(u);
        int smzis = 0;
        for (const auto& diag : d.smzi) {
            smzis += static_cast<int>(diag.size());
        }
        const int externals = static_cast<int>(d.phi_in.size() + d.zeta_out.size());
        ok = ok && smzis == m * (m - 1) / 2 && externals == 2 * (m - 1);

        // The emitted table file carries exactly the same counts.
        const auto round = smzi::io::reck_from_json(smzi::io::reck_to_json(d));
        int smzis_file = 0;
        for (const auto& diag : round.smzi) {
            smzis_file += static_cast<int>(diag.size());
        }
        ok = ok && smzis_file == smzis;
    }
    report(4, ok, "reck tables carry m(m-1)/2 sMZIs and 2(m-1) external phases for m in 2..12");
}

void criterion_5_commutation() {
    smzi::Rng rng(0xC0117);
    // Angles drawn on a dyadic grid (spacing 2^-26 rad) so theta + phi is
    // exact and the check measures the identity itself, not the rounding of
    // the random inputs.
    const auto grid_angle = [&rng] {
        return std::ldexp(std::round(std::ldexp(rng.next_angle(), 26)), -26);
    };
    double worst = 0.0;
    for (int i = 0; i < 100000; ++i) {
        const smzi::SmziSetting s{grid_angle(), grid_angle()};
        const double phi = grid_angle();
        const auto shifted = smzi::smzi_block(s.shifted(phi));
        auto common = smzi::smzi_block(s);
        const smzi::cplx ph = std::polar(1.0, phi);
        for (auto& z : common) {
            z *= ph;
        }
        for (int e = 0; e < 4; ++e) {
            worst = std::max(worst, std::abs(common[static_cast<std::size_t>(e)] -
                                             shifted[static_cast<std::size_t>(e)]));
        }
    }
    report(5, worst < 1e-15,
           "equal-phase commutation identity over 1e5 random pairs: worst deviation " +
               smzi::io::format_double(worst));
}

void criterion_6_layer_redundancy() {
    smzi::Rng rng(606);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const int m = 4 + trial % 5;
        smzi::MeshCircuit c = smzi::clements_edge_layout(m);
        for (auto& column : c.columns) {
            for (smzi::MeshElement& e : column) {
                if (e.kind == smzi::MeshElement::Kind::Smzi) {
                    e.smzi = smzi::SmziSetting{rng.next_angle(), rng.next_angle()};
                } else if (e.kind == smzi::MeshElement::Kind::Phase) {
                    e.phi = rng.next_angle();
                }
            }
        }
        for (int col = 1; col <= m; ++col) {
            worst = std::max(worst, smzi::layer_redundancy_check(c, col));
        }
    }
    report(6, worst < 1e-12,
           "layer redundancy on every column of 20 random meshes (m in 4..8): worst " +
               smzi::io::format_double(worst));
}

void criterion_7_compactification() {
    smzi::Rng rng(707);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const int m = 3 + trial % 4;
        const int depth = 2 * m;
        smzi::AlternatingCircuit full =
            smzi::AlternatingCircuit::balanced(m, depth, smzi::PhaseForm::Full);
        if (trial % 2 == 1) {
            smzi::ImbalanceModel model;
            model.sigma = 0.1;
            model.seed = static_cast<std::uint64_t>(trial);
            full.splitter_angles =
                smzi::sample_imbalance(model, smzi::fldzhyan_layer_sizes(m, depth));
        }
        for (auto& layer : full.phase_layers) {
            for (double& phi : layer) {
                phi = rng.next_angle();
            }
        }
        const auto reference = smzi::evaluate_alternating(full).mat();
        const auto compact = smzi::compactify(full);
        worst = std::max(worst,
                         smzi::max_abs_diff(smzi::evaluate_alternating(compact).mat(), reference));
        const auto back = smzi::expand_compact(compact);
        worst = std::max(worst,
                         smzi::max_abs_diff(smzi::evaluate_alternating(back).mat(), reference));
    }
    report(7, worst < 1e-13,
           "compactify/expand exactness over 100 circuits (m in 3..6, half at sigma 0.1): worst " +
               smzi::io::format_double(worst));
}

void criterion_8_programmability() {
    const auto t0 = std::chrono::steady_clock::now();
    const smzi::AlternatingCircuit skeleton = smzi::AlternatingCircuit::balanced(4, 8);
    int hits = 0;
    double worst = 0.0;
    for (std::uint64_t target_idx = 0; target_idx < 20; ++target_idx) {
        const auto target = smzi::haar_random_unitary(4, 8800 + target_idx);
        smzi::OptimizeOptions opts;
        opts.restarts = 10;
        opts.seed = 99 + target_idx;
        const auto res = smzi::optimize_phases(target, skeleton, opts);
        worst = std::max(worst, res.achieved_infidelity);
        if (res.achieved_infidelity < 1e-6) {
            ++hits;
        }
    }
    const double secs = seconds_since(t0);
    report(8, hits >= 19 && secs < 300.0,
           "programmability m=4 depth=8: " + std::to_string(hits) +
               "/20 targets below 1e-6 (worst " + smzi::io::format_double(worst) + "), " +
               smzi::io::format_double(secs) + " s");
}

void criterion_9_robustness_ordering() {
    smzi::SweepOptions opts;
    opts.m = 4;
    opts.sigmas = {0.05};
    opts.trials = 50;
    opts.seed = 4242;
    opts.restarts = 4;
    opts.max_iters = 800;
    const smzi::SweepReport rep = smzi::run_sweep(opts);

    double med_clements = -1.0;
    double med_fldzhyan = -1.0;
    for (const auto& agg : rep.aggregates) {
        if (agg.scheme == "clements-smzi") {
            med_clements = agg.median;
        } else if (agg.scheme == "fldzhyan") {
            med_fldzhyan = agg.median;
        }
    }
    const bool ordered = med_fldzhyan <= med_clements;
    // Reported, not gated: the quantitative robustness figures live outside
    // this artifact; only the qualitative ordering is of interest here.
    std::cout << "REPORT criterion 9: sweep m=4 sigma=0.05 (50 trials): median infidelity "
              << "fldzhyan=" << smzi::io::format_double(med_fldzhyan)
              << " clements-smzi=" << smzi::io::format_double(med_clements) << " -> "
              << (ordered ? "fldzhyan <= clements-smzi (expected ordering)"
                          : "ordering NOT observed")
              << std::endl;
    report(9, true, "robustness ordering reported above (soft criterion)");
}

int run_cli(const std::string& cli, const fs::path& dir, const std::string& args) {
    const std::string cmd = cli + " " + args + " >" + (dir / "out.txt").string() + " 2>" +
                            (dir / "err.txt").string();
    const int status = std::system(cmd.c_str());
    return status < 0 ? -1 : WEXITSTATUS(status);
}

void criterion_10_fault_injection(const char* cli_path) {
    if (cli_path == nullptr) {
        report(10, false, "fault injection needs the CLI binary path as argv[1]");
        return;
    }
    const std::string cli = cli_path;
    const fs::path dir = fs::temp_directory_path() / "smzi_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);

    const auto write = [&](const std::string& name, const std::string& text) {
        std::ofstream out(dir / name);
        out << text;
    };

    bool ok = true;
    std::string detail;
    const auto expect = [&](int got, int want, const std::string& what,
                            const std::string& no_output) {
        if (got != want) {
            ok = false;
            detail += " [" + what + ": got exit " + std::to_string(got) + ", want " +
                      std::to_string(want) + "]";
        }
        if (!no_output.empty() && fs::exists(dir / no_output)) {
            ok = false;
            detail += " [" + what + ": left a partial output file]";
        }
    };

    expect(run_cli(cli, dir, "haar --m 4 --seed 1 --out " + (dir / "u.json").string()), 0,
           "haar", "");

    write("nonunitary.json", "{\"m\": 2, \"re\": [[1, 0.3], [0, 1]], \"im\": [[0,0],[0,0]]}");
    expect(run_cli(cli, dir,
                   "decompose --scheme reck-smzi --in " + (dir / "nonunitary.json").string() +
                       " --out " + (dir / "o1.json").string()),
           3, "non-unitary input", "o1.json");

    write("garbage.json", "this is not json");
    expect(run_cli(cli, dir,
                   "reconstruct --in " + (dir / "garbage.json").string() + " --out " +
                       (dir / "o2.json").string()),
           2, "malformed JSON", "o2.json");

    write("badmesh.json",
          "{\"m\": 3, \"layout\": \"clements-edge\", \"columns\": "
          "[[{\"type\": \"smzi\", \"top_mode\": 3, \"theta1\": 0, \"theta2\": 0}]]}");
    expect(run_cli(cli, dir,
                   "reconstruct --in " + (dir / "badmesh.json").string() + " --out " +
                       (dir / "o3.json").string()),
           2, "out-of-range mesh index", "o3.json");

    expect(run_cli(cli, dir,
                   "decompose --scheme clements-smzi --in " + (dir / "u.json").string() +
                       " --out " + (dir / "t.json").string()),
           0, "decompose for table faults", "");
    {
        std::ifstream in(dir / "t.json");
        std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        const auto jpos = text.find("\"j\": 1");
        text.replace(jpos, 6, "\"j\": 8");
        write("badtable.json", text);
    }
    expect(run_cli(cli, dir,
                   "reconstruct --in " + (dir / "badtable.json").string() + " --out " +
                       (dir / "o4.json").string()),
           2, "out-of-range table index", "o4.json");

    expect(run_cli(cli, dir,
                   "optimize --in " + (dir / "u.json").string() + " --depth 0 --out " +
                       (dir / "o5.json").string()),
           2, "depth 0", "o5.json");
    expect(run_cli(cli, dir,
                   "sweep --m 4 --sigma 0.1 --trials 0 --out " + (dir / "o6.csv").string()),
           2, "zero trials", "o6.csv");

    report(10, ok, ok ? "documented exit codes, no partial outputs" : "faults" + detail);
}

} // namespace

int main(int argc, char** argv) {
    criterion_1_reck_round_trip();
    criterion_2_clements_round_trip();
    criterion_3_relocation();
    criterion_4_parameter_counts();
    criterion_5_commutation();
    criterion_6_layer_redundancy();
    criterion_7_compactification();
    criterion_8_programmability();
    criterion_9_robustness_ordering();
    criterion_10_fault_injection(argc > 1 ? argv[1] : nullptr);

    std::cout << (g_failures == 0 ? "ACCEPTANCE: all criteria passed"
                                  : "ACCEPTANCE: " + std::to_string(g_failures) +
                                        " criteria failed")
              << std::endl;
    return g_failures == 0 ? 0 : 1;
}
