// Copyright 2026 The graphdiag Authors
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

#include "cli.h"

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "graphdiag/chain.h"
#include "graphdiag/dense.h"
#include "graphdiag/distill.h"
#include "graphdiag/graph_io.h"
#include "graphdiag/oracle_checks.h"
#include "graphdiag/ppt.h"
#include "graphdiag/separability.h"
#include "graphdiag/star.h"
#include "graphdiag/states.h"
#include "graphdiag/witness.h"
#include "json.hpp"

namespace graphdiag {

namespace {

using Json = nlohmann::ordered_json;
using Config = std::vector<std::pair<std::string, std::string>>;

struct ModelOptions {
    std::string model = "thermal";
    double s = 0.1;
    std::string svals;
    double alpha = 1;
    double p = 0.5;
    std::string table;

    void add_to(CLI::App *cmd) {
        cmd->add_option("--model", model, "thermal, inhomogeneous, global, local or explicit")
            ->check(CLI::IsMember({"thermal", "inhomogeneous", "global", "local", "explicit"}));
        cmd->add_option("--s", s, "thermal s = tanh(beta Delta / 2)");
        cmd->add_option("--svals", svals, "comma separated per-vertex s for the inhomogeneous model");
        cmd->add_option("--alpha", alpha, "global depolarised alpha");
        cmd->add_option("--p", p, "local depolarising strength");
        cmd->add_option("--table", table, "CSV of (bit string, s_y) rows for the explicit model");
    }

    DiagonalState build(const Graph &g) const {
        if (model == "thermal") {
            return DiagonalState::thermal(g, s);
        }
        if (model == "inhomogeneous") {
            std::vector<double> v;
            std::stringstream ss(svals);
            std::string item;
            while (std::getline(ss, item, ',')) {
                v.push_back(std::stod(item));
            }
            return DiagonalState::inhomogeneous(g, v);
        }
        if (model == "global") {
            return DiagonalState::global_depolarised(g, alpha);
        }
        if (model == "local") {
            return DiagonalState::local_depolarised(g, p);
        }
        if (table.empty()) {
            throw std::invalid_argument("the explicit model needs --table <csv>");
        }
        return DiagonalState::explicit_table(g, load_explicit_table_csv(table, g.num_vertices()));
    }

    void describe(Config &config) const {
        config.emplace_back("model", model);
        if (model == "thermal") {
            config.emplace_back("s", format_number(s));
        } else if (model == "inhomogeneous") {
            config.emplace_back("svals", svals);
        } else if (model == "global") {
            config.emplace_back("alpha", format_number(alpha));
        } else if (model == "local") {
            config.emplace_back("p", format_number(p));
        } else {
            config.emplace_back("table", table);
        }
    }
};

Json config_json(const Config &config) {
    Json j = Json::object();
    for (const auto &[k, v] : config) {
        j[k] = v;
    }
    return j;
}

Json complex_json(std::complex<double> c) {
    return Json::array({c.real(), c.imag()});
}

/// Smallest parameter t in [0, 1] where min over (x, z) of f_{x,z} turns negative.
RootResult brute_threshold(const std::function<DiagonalState(double)> &make, int threads) {
    return critical_s([&](double t) { return brute_min_over_xz(make(t), threads).value; }, 0, 1, 256, 1e-12);
}

struct Context {
    int threads = 1;
    std::string output;
    std::ostream *out = nullptr;
    std::unique_ptr<std::ofstream> file;

    std::ostream &stream() {
        if (!output.empty() && !file) {
            file = std::make_unique<std::ofstream>(output);
            if (!*file) {
                throw std::invalid_argument("cannot open output file '" + output + "'");
            }
        }
        return file ? *file : *out;
    }
};

int cmd_ppt_threshold(Context &ctx, const std::string &graph_spec, const ModelOptions &m) {
    Graph g = parse_graph_spec(graph_spec);
    Config config{{"command", "ppt-threshold"}, {"graph", graph_spec}, {"model", m.model},
                  {"threads", std::to_string(ctx.threads)}};
    Json j;
    j["config"] = config_json(config);
    if (m.model == "thermal") {
        RootResult r = thermal_critical_s(g, {ctx.threads, false});
        j["found"] = r.found;
        j["physical"] = r.physical;
        if (r.found) {
            j["s_crit"] = r.s;
            if (r.physical) {
                Temperature t = Temperature::from_s(r.s);
                j["beta_delta"] = t.beta_delta;
                j["t_over_delta"] = t.t_over_delta;
            }
        }
    } else if (m.model == "global") {
        double dim = std::ldexp(1.0, g.num_vertices());
        // t = alpha / (2^N + alpha) is the common value of every s_y, y != 0.
        RootResult r = brute_threshold(
            [&](double t) { return DiagonalState::global_depolarised(g, t >= 1 ? 1e300 : dim * t / (1 - t)); },
            ctx.threads);
        j["found"] = r.found && r.s < 1 - 1e-9;
        if (r.found && r.s < 1 - 1e-9) {
            j["alpha_crit"] = dim * r.s / (1 - r.s);
        }
    } else if (m.model == "local") {
        RootResult r = brute_threshold([&](double q) { return DiagonalState::local_depolarised(g, 1 - q); }, ctx.threads);
        j["found"] = r.found;
        if (r.found) {
            j["p_crit"] = 1 - r.s;
        }
    } else {
        throw std::invalid_argument("ppt-threshold supports the thermal, global and local models");
    }
    ctx.stream() << j.dump(2) << "\n";
    return EXIT_OK;
}

int cmd_chain_scan(Context &ctx, int n_min, int n_max) {
    if (n_min < 2 || n_max < n_min) {
        throw std::invalid_argument("chain-scan needs 2 <= --n-min <= --n-max");
    }
    auto series = chain_critical_series(n_max);
    std::ostream &out = ctx.stream();
    write_config_header(out, {{"command", "chain-scan"},
                              {"figure", "fig1"},
                              {"n_min", std::to_string(n_min)},
                              {"n_max", std::to_string(n_max)}});
    out << "n,s_crit,T_over_delta\n";
    for (int n = n_min; n <= n_max; n++) {
        double s = series[n - 1];
        out << n << "," << format_number(s) << "," << format_number(Temperature::from_s(s).t_over_delta) << "\n";
    }
    return EXIT_OK;
}

int cmd_lattice_scan(Context &ctx, int m_min, int m_max, bool cosets) {
    if (m_min < 1 || m_max < m_min || m_max > 7) {
        throw std::invalid_argument("lattice-scan needs 1 <= --m-min <= --m-max <= 7");
    }
    std::ostream &out = ctx.stream();
    write_config_header(out, {{"command", "lattice-scan"},
                              {"figure", "fig3"},
                              {"m_min", std::to_string(m_min)},
                              {"m_max", std::to_string(m_max)},
                              {"cosets", cosets ? "1" : "0"}});
    out << "m,n,s_crit,T_over_delta\n";
    for (int m = m_min; m <= m_max; m++) {
        RootResult r = thermal_critical_s(Graph::lattice(m, m), {ctx.threads, cosets});
        double t = r.found && r.physical ? Temperature::from_s(r.s).t_over_delta : 0.0;
        out << m << "," << m * m << "," << format_number(r.s) << "," << format_number(t) << "\n";
    }
    return EXIT_OK;
}

int cmd_perturb_scan(Context &ctx, int n_min, int n_max, double sigma, int samples, uint64_t seed) {
    if (n_min < 2 || n_max < n_min) {
        throw std::invalid_argument("perturb-scan needs 2 <= --n-min <= --n-max");
    }
    std::ostream &out = ctx.stream();
    write_config_header(out, {{"command", "perturb-scan"},
                              {"figure", "fig2"},
                              {"n_min", std::to_string(n_min)},
                              {"n_max", std::to_string(n_max)},
                              {"sigma", format_number(sigma)},
                              {"samples", std::to_string(samples)},
                              {"seed", std::to_string(seed)}});
    out << "n,mean,std,min,max,seed\n";
    for (int n = n_min; n <= n_max; n++) {
        auto st = perturbation_scan(n, sigma, samples, seed, ctx.threads);
        out << n << "," << format_number(st.mean) << "," << format_number(st.std_dev) << "," << format_number(st.min)
            << "," << format_number(st.max) << "," << seed << "\n";
    }
    return EXIT_OK;
}

bool is_centre_star(const Graph &g) {
    if ((int)g.num_edges() != g.num_vertices() - 1) {
        return false;
    }
    for (int v = 1; v < g.num_vertices(); v++) {
        if (g.degree(v) != 1) {
            return false;
        }
    }
    return g.num_vertices() >= 2;
}

int cmd_decompose(Context &ctx, const std::string &graph_spec, const ModelOptions &m, std::string method) {
    Graph g = parse_graph_spec(graph_spec);
    DiagonalState st = m.build(g);
    bool thermal = m.model == "thermal";
    if (method == "auto") {
        if (thermal && g.is_forest()) {
            method = "tree";
        } else if (thermal && two_colouring(g) && g.num_vertices() <= 14) {
            method = "two-colourable";
        } else if (is_centre_star(g)) {
            method = "star";
        } else {
            method = "block";
        }
    }
    if ((method == "tree" || method == "two-colourable") && !thermal) {
        throw std::invalid_argument("--method " + method + " needs the thermal model");
    }
    Config config{{"command", "decompose"}, {"graph", graph_spec}, {"method", method}};
    m.describe(config);
    Json j;
    j["config"] = config_json(config);
    Decomposition d;
    if (method == "tree") {
        d = tree_decomposition(g, m.s);
    } else if (method == "two-colourable") {
        d = two_colourable_decomposition(g, m.s);
    } else if (method == "block") {
        d = block_decomposition(st);
    } else if (method == "optimised") {
        d = optimised_block_decomposition(st).decomposition;
    } else if (method == "star") {
        StarDecomposition sd = star_decomposition(st);
        d = sd.decomposition;
        j["star_margin"] = sd.margin;
        if (sd.three_qubit_sign_condition) {
            j["three_qubit_sign_condition"] = *sd.three_qubit_sign_condition;
        }
    } else {
        throw std::invalid_argument("unknown --method '" + method +
                                    "'; choose auto, tree, two-colourable, block, optimised or star");
    }
    j["identity"] = d.identity;
    j["min_coefficient"] = d.min_coefficient();
    j["nonnegative"] = d.is_nonnegative();
    j["reconstruction_error"] = reconstruction_error(d, st);
    j["decomposition"] = Json::parse(d.to_json());
    ctx.stream() << j.dump(2) << "\n";
    return EXIT_OK;
}

int cmd_witness(Context &ctx, const std::string &graph_spec, const ModelOptions &m, std::string x_text,
                std::string z_text, bool circuit) {
    Graph g = parse_graph_spec(graph_spec);
    DiagonalState st = m.build(g);
    WitnessLabels labels = optimal_thermal_witness_labels(g);
    BitString x = x_text.empty() ? labels.x : BitString::from_string(x_text);
    if (z_text.empty() && !labels.z) {
        throw std::invalid_argument("graph is not two-colourable; pass --z explicitly");
    }
    BitString z = z_text.empty() ? *labels.z : BitString::from_string(z_text);
    WitnessSpec w{g, x, z};
    w.validate();
    Config config{{"command", "witness"}, {"graph", graph_spec}, {"x", x.str()}, {"z", z.str()}};
    m.describe(config);
    Json j;
    j["config"] = config_json(config);
    double value = witness_expectation(w, st, ctx.threads);
    j["expectation"] = value;
    j["pt_eigenvalue"] = std::ldexp(value, g.num_vertices());
    double tol = 1e-12;
    j["entangled"] = value < -tol;
    if (circuit) {
        if (g.num_vertices() > 6) {
            throw std::invalid_argument("--circuit simulation supports at most 6 qubits");
        }
        CircuitResult c = simulate_witness_circuit(w, build_state(st));
        j["circuit_p0"] = c.p0;
        j["circuit_implied_trace"] = c.implied_trace;
        if (m.model == "thermal") {
            CircuitResult t = simulate_threshold_circuit(g, x, z, m.s);
            j["threshold_circuit_p0"] = t.p0;
            j["threshold_circuit_f"] = t.implied_trace * std::pow(1 + m.s, g.num_vertices());
        }
    }
    ctx.stream() << j.dump(2) << "\n";
    return value < -tol ? EXIT_ENTANGLED : EXIT_OK;
}

int cmd_distill(Context &ctx, int nA, int nB, double alpha, int max_steps, const std::string &range) {
    if (!range.empty()) {
        std::vector<double> parts;
        std::stringstream ss(range);
        std::string item;
        while (std::getline(ss, item, ',')) {
            parts.push_back(std::stod(item));
        }
        if (parts.size() != 3 || parts[2] < 1) {
            throw std::invalid_argument("--alpha-range expects lo,hi,count");
        }
        int count = (int)parts[2];
        std::ostream &out = ctx.stream();
        write_config_header(out, {{"command", "distill"},
                                  {"nA", std::to_string(nA)},
                                  {"nB", std::to_string(nB)},
                                  {"alpha_range", range},
                                  {"max_steps", std::to_string(max_steps)}});
        out << "alpha,attractor,iterations\n";
        for (int k = 0; k < count; k++) {
            double a = count == 1 ? parts[0] : parts[0] + (parts[1] - parts[0]) * k / (count - 1);
            DistillRun run = verify_distillation(nA, nB, a, max_steps);
            out << format_number(a) << "," << attractor_name(run.attractor) << "," << run.steps << "\n";
        }
        return EXIT_OK;
    }
    DistillRun run = verify_distillation(nA, nB, alpha, max_steps);
    Json j;
    j["config"] = config_json({{"command", "distill"},
                               {"nA", std::to_string(nA)},
                               {"nB", std::to_string(nB)},
                               {"alpha", format_number(alpha)},
                               {"max_steps", std::to_string(max_steps)}});
    j["attractor"] = attractor_name(run.attractor);
    j["iterations"] = run.steps;
    j["final"] = {{"l00", run.final.l00}, {"lx0", run.final.lx0}, {"l0x", run.final.l0x}, {"lxx", run.final.lxx}};
    auto threshold = distillability_threshold(nA, nB);
    if (threshold) {
        j["alpha_threshold"] = *threshold;
    }
    ctx.stream() << j.dump(2) << "\n";
    return EXIT_OK;
}

int cmd_oracle_check(Context &ctx, const std::string &suite, uint64_t seed) {
    auto results = run_oracle_suite(suite, seed);
    std::ostream &out = ctx.stream();
    write_config_header(out, {{"command", "oracle-check"}, {"suite", suite}, {"seed", std::to_string(seed)}});
    out << "check,passed,cases,worst\n";
    bool ok = true;
    for (const auto &r : results) {
        out << r.name << "," << (r.passed ? "yes" : "no") << "," << r.cases << "," << format_number(r.worst) << "\n";
        ok = ok && r.passed;
    }
    return ok ? EXIT_OK : EXIT_ERROR;
}

int cmd_ising(Context &ctx, const std::string &graph_spec, double s) {
    Graph g = parse_graph_spec(graph_spec);
    IsingParameters p = ising_parameters(g, s);
    Json j;
    j["config"] = config_json({{"command", "ising-params"}, {"graph", graph_spec}, {"s", format_number(s)}});
    j["beta_J"] = complex_json(p.beta_J);
    j["beta_k"] = complex_json(p.beta_k);
    j["beta_h"] = Json::array();
    for (auto h : p.beta_h) {
        j["beta_h"].push_back(complex_json(h));
    }
    if (g.num_vertices() <= 20) {
        std::complex<double> z = ising_partition_check(g, s);
        double f = signed_edge_sum(g, s, ctx.threads);
        j["partition_function"] = complex_json(z);
        j["f"] = f;
        j["residual"] = std::abs(z - f);
    }
    ctx.stream() << j.dump(2) << "\n";
    return EXIT_OK;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"graphdiag: PPT spectra, thresholds, separable decompositions, witnesses and distillation "
                 "for graph-diagonal states"};
    app.require_subcommand(1);
    Context ctx;
    ctx.out = &out;
    app.add_option("--threads", ctx.threads, "worker threads (results do not depend on this)")
        ->check(CLI::Range(1, 256));
    app.add_option("-o,--output", ctx.output, "write results to this file instead of stdout");

    std::string graph_spec;
    ModelOptions model;

    auto *ppt = app.add_subcommand("ppt-threshold", "critical s, beta*Delta and T/Delta (or alpha, p) for a graph");
    ppt->add_option("graph", graph_spec, "chain:N, ring:N, star:N, lattice:MxK, tree:<parents> or JSON file")
        ->required();
    ppt->add_option("--model", model.model, "thermal, global or local")
        ->check(CLI::IsMember({"thermal", "global", "local"}));

    int n_min = 2, n_max = 20;
    auto *chain = app.add_subcommand("chain-scan", "CSV n,s_crit,T_over_delta of chain thresholds");
    chain->add_option("--n-min", n_min, "first chain length");
    chain->add_option("--n-max", n_max, "last chain length");

    int m_min = 2, m_max = 4;
    bool cosets = false;
    auto *lattice = app.add_subcommand("lattice-scan", "CSV m,n,s_crit,T_over_delta for M x M lattices");
    lattice->add_option("--m-min", m_min, "smallest lattice side");
    lattice->add_option("--m-max", m_max, "largest lattice side");
    lattice->add_flag("--cosets", cosets, "sum kernel cosets of the fast evaluator together");

    double sigma = 0.1;
    int samples = 100;
    uint64_t seed = 1;
    int pn_min = 2, pn_max = 10;
    auto *perturb = app.add_subcommand("perturb-scan", "CSV n,mean,std,min,max,seed of perturbed chain T/Delta");
    perturb->add_option("--n-min", pn_min, "first chain length");
    perturb->add_option("--n-max", pn_max, "last chain length");
    perturb->add_option("--sigma", sigma, "standard deviation of each Delta_n around 1");
    perturb->add_option("--samples", samples, "samples per chain length");
    perturb->add_option("--seed", seed, "random seed (recorded in the output)");

    std::string method = "auto";
    auto *decompose = app.add_subcommand("decompose", "separable decomposition JSON with a positivity report");
    decompose->add_option("--graph", graph_spec, "graph spec or JSON file")->required();
    decompose->add_option("--method", method, "auto, tree, two-colourable, block, optimised or star");
    model.add_to(decompose);

    std::string x_text, z_text;
    bool circuit = false;
    auto *witness = app.add_subcommand("witness", "witness expectation; exit code 2 when entanglement is detected");
    witness->add_option("--graph", graph_spec, "graph spec or JSON file")->required();
    witness->add_option("--x", x_text, "eigenvector label, vertex 0 first (default all ones)");
    witness->add_option("--z", z_text, "bipartition, vertex 0 first (default two colouring)");
    witness->add_flag("--circuit", circuit, "also simulate the Hadamard test circuits (n <= 6)");
    model.add_to(witness);

    int nA = 2, nB = 2, max_steps = 10000;
    double alpha = 5;
    std::string alpha_range;
    auto *distill = app.add_subcommand("distill", "attractor of the P1/P2 recurrence for global depolarising");
    distill->add_option("--nA", nA, "size of colour class A");
    distill->add_option("--nB", nB, "size of colour class B");
    distill->add_option("--alpha", alpha, "depolarising parameter");
    distill->add_option("--max-steps", max_steps, "iteration cap");
    distill->add_option("--alpha-range", alpha_range, "lo,hi,count: CSV alpha,attractor,iterations");

    std::string suite = "all";
    uint64_t oracle_seed = 1;
    auto *oracle = app.add_subcommand("oracle-check", "cross-check formulas against the dense oracle");
    oracle->add_option("--suite", suite, "all, spectra, coefficients, channel, decompositions or witness");
    oracle->add_option("--seed", oracle_seed, "random seed");

    double ising_s = 0.2;
    auto *ising = app.add_subcommand("ising-params", "complex Ising couplings equivalent to f(s)");
    ising->add_option("--graph", graph_spec, "graph spec or JSON file")->required();
    ising->add_option("--s", ising_s, "thermal s");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? EXIT_OK : EXIT_ERROR;
    }

    try {
        if (*ppt) {
            return cmd_ppt_threshold(ctx, graph_spec, model);
        }
        if (*chain) {
            return cmd_chain_scan(ctx, n_min, n_max);
        }
        if (*lattice) {
            return cmd_lattice_scan(ctx, m_min, m_max, cosets);
        }
        if (*perturb) {
            return cmd_perturb_scan(ctx, pn_min, pn_max, sigma, samples, seed);
        }
        if (*decompose) {
            return cmd_decompose(ctx, graph_spec, model, method);
        }
        if (*witness) {
            return cmd_witness(ctx, graph_spec, model, x_text, z_text, circuit);
        }
        if (*distill) {
            return cmd_distill(ctx, nA, nB, alpha, max_steps, alpha_range);
        }
        if (*oracle) {
            return cmd_oracle_check(ctx, suite, oracle_seed);
        }
        if (*ising) {
            return cmd_ising(ctx, graph_spec, ising_s);
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_ERROR;
    }
    return EXIT_ERROR;
}

}  // namespace graphdiag
