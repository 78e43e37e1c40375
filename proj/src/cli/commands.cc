// Copyright 2026 The zzsim Authors
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

#include <algorithm>
#include <ostream>

#include "CLI11.hpp"
#include "zzsim/cli.h"
#include "zzsim/errors.h"

namespace zzsim::cli {

namespace {

struct Options {
    std::string config_path;

    std::string bounds_input;

    std::string plan_method = "lp";
    std::string plan_input;

    std::string verify_schedule;
    std::string verify_drift;
    std::string verify_target;
    std::optional<double> verify_epsilon;
    int verify_steps = 1;

    std::string invert_input;
    bool invert_general = false;

    std::string depth_circuit;
    std::string depth_hamiltonian;
    double depth_dt = 1.0;
};

Json one_based(const std::vector<int> &v) {
    Json out = Json::array();
    for (int x : v) {
        out.push_back(x + 1);
    }
    return out;
}

VerifyOptions verify_options(const Config &cfg) {
    VerifyOptions o;
    o.tol = cfg.tol;
    o.caps = cfg.caps();
    return o;
}

WeightedGraph as_zz_graph(const HamiltonianInput &h, bool is_graph, const char *what) {
    if (is_graph) {
        return zz_weights(h.j);
    }
    if (!h.j.is_pure_zz() || !h.fields.empty()) {
        throw ValidationError(std::string(what) + ": a sign schedule needs a pure zz target without fields");
    }
    return zz_weights(h.j);
}

WeightedGraph clique_target(const CliqueInput &c) {
    WeightedGraph g{c.n, {}};
    for (const auto &set : c.cliques) {
        for (size_t a = 0; a < set.size(); a++) {
            for (size_t b = a + 1; b < set.size(); b++) {
                g.edges.push_back({set[a], set[b], 1.0});
            }
        }
    }
    return canonicalize(std::move(g));
}

Json sign_plan_report(const std::string &method, const SignSchedule &s, const WeightedGraph &target,
                      const Config &cfg) {
    return {{"method", method},
            {"mu", s.overhead()},
            {"schedule", schedule_to_json(s)},
            {"verification", report_to_json(verify(s, target, verify_options(cfg)))}};
}

int command_bounds(const Options &o, const Config &cfg, std::ostream &out) {
    WeightedGraph g = parse_graph(read_file(o.bounds_input));
    BoundsReport b = bounds_report(g, {cfg.lp_cap_n, cfg.exact_coloring_edge_cap, cfg.tol});
    Json report = bounds_to_json(b);
    report["n"] = g.n;
    out << report.dump(2) << "\n";
    return kExitOk;
}

int command_plan(const Options &o, const Config &cfg, std::ostream &out) {
    const std::string text = read_file(o.plan_input);
    Json report;
    if (o.plan_method == "lp") {
        WeightedGraph target = parse_graph(text);
        LpSolution sol = optimal_zz_plan(target, {cfg.lp_cap_n});
        report = sign_plan_report("lp", sol.schedule, target, cfg);
        report["mu"] = sol.mu;
        report["status"] = to_string(sol.status);
        report["iterations"] = sol.iterations;
        Json basis = Json::array();
        for (uint32_t p : sol.basis) {
            basis.push_back(sign_string(sign_pattern(target.n, p)));
        }
        report["basis"] = basis;
        report["dual"] = sol.dual;
        out << report.dump(2) << "\n";
        return sol.status == LpStatus::optimal ? kExitOk : kExitFailure;
    }
    if (o.plan_method == "rank1") {
        std::vector<double> jz = parse_jz(text);
        SignSchedule s = rank_one_schedule(jz);
        WeightedGraph target{static_cast<int>(jz.size()), {}};
        for (int k = 0; k < target.n; k++) {
            for (int l = k + 1; l < target.n; l++) {
                if (jz[k] * jz[l] != 0) {
                    target.edges.push_back({k, l, jz[k] * jz[l]});
                }
            }
        }
        report = sign_plan_report("rank1", s, target, cfg);
    } else if (o.plan_method == "walsh" || o.plan_method == "hadamard") {
        CliqueInput c = parse_cliques(text);
        SignSchedule s =
            o.plan_method == "walsh" ? clique_walsh_schedule(c.n, c.cliques) : hadamard_schedule(c.n, c.cliques);
        report = sign_plan_report(o.plan_method, s, clique_target(c), cfg);
    } else if (o.plan_method == "pair") {
        HamiltonianInput h = parse_hamiltonian(text);
        if (h.j.n != 2) {
            throw ValidationError("plan --method pair: expected a two-qubit Hamiltonian");
        }
        Vec3 a = h.fields.empty() ? Vec3{} : h.fields[0];
        Vec3 b = h.fields.empty() ? Vec3{} : h.fields[1];
        TwoQubitPlan plan = two_qubit_plan(h.j.block(0, 1), a, b);
        VerificationReport v = verify(plan.schedule, graph_to_jmatrix(WeightedGraph::complete(2)), h.j, h.fields,
                                      verify_options(cfg));
        report = {{"method", "pair"},
                  {"mu", plan.mu},
                  {"singular_values", Json::array({plan.svd.s[0], plan.svd.s[1], plan.svd.s[2]})},
                  {"pair_norm", pair_norm(h.j.block(0, 1), a, b)},
                  {"schedule", schedule_to_json(plan.schedule)},
                  {"verification", report_to_json(v)}};
    } else {
        throw ValidationError("plan: unknown method \"" + o.plan_method + "\"");
    }
    out << report.dump(2) << "\n";
    return kExitOk;
}

int command_verify(const Options &o, const Config &cfg, std::ostream &out) {
    AnySchedule schedule = parse_schedule(read_file(o.verify_schedule));
    bool is_graph = false;
    HamiltonianInput target = parse_target(read_file(o.verify_target), &is_graph);
    VerifyOptions vo = verify_options(cfg);
    vo.epsilon = o.verify_epsilon;
    vo.trotter_steps = o.verify_steps;

    VerificationReport r;
    if (const auto *s = std::get_if<SignSchedule>(&schedule)) {
        if (!o.verify_drift.empty()) {
            throw ValidationError("verify: --drift applies to frame schedules only");
        }
        r = verify(*s, as_zz_graph(target, is_graph, "verify"), vo);
    } else {
        const auto &c = std::get<ConjugationSchedule>(schedule);
        JMatrix drift = o.verify_drift.empty() ? graph_to_jmatrix(WeightedGraph::complete(c.n))
                                               : parse_target(read_file(o.verify_drift)).j;
        r = verify(c, drift, target.j, target.fields, vo);
    }
    out << report_to_json(r).dump(2) << "\n";
    return kExitOk;
}

bool is_complete_unit(const JMatrix &j) {
    if (!j.is_pure_zz() || j.n < 2) {
        return false;
    }
    WeightedGraph g = zz_weights(j);
    return g == WeightedGraph::complete(j.n);
}

int command_invert(const Options &o, const Config &cfg, std::ostream &out, std::ostream &err) {
    HamiltonianInput drift = parse_target(read_file(o.invert_input));
    const JMatrix negated = drift.j.scaled(-1);
    try {
        InversionPlan plan = invert_plan(drift.j, o.invert_general);
        VerificationReport v = verify(plan.schedule, drift.j, negated, {}, verify_options(cfg));
        Json report{{"bipartite", true},
                    {"mode", o.invert_general ? "general" : "pure"},
                    {"mu", plan.mu},
                    {"x", one_based(plan.parts.x)},
                    {"y", one_based(plan.parts.y)},
                    {"schedule", schedule_to_json(plan.schedule)},
                    {"verification", report_to_json(v)}};
        out << report.dump(2) << "\n";
        return kExitOk;
    } catch (const NonBipartiteError &e) {
        if (!is_complete_unit(drift.j)) {
            err << "zzplan: " << e.what() << "\n";
            return kExitValidation;
        }
        // A complete zz drift can still be inverted by sign schedules.
        WeightedGraph target = WeightedGraph::complete(drift.j.n).negated();
        LpSolution sol = optimal_zz_plan(target, {cfg.lp_cap_n});
        Json report = sign_plan_report("lp", sol.schedule, target, cfg);
        report["bipartite"] = false;
        report["odd_cycle"] = one_based(e.odd_cycle);
        report["mu"] = sol.mu;
        report["status"] = to_string(sol.status);
        report["inversion_lower"] = inversion_lower_bound(WeightedGraph::complete(drift.j.n));
        out << report.dump(2) << "\n";
        return sol.status == LpStatus::optimal ? kExitOk : kExitFailure;
    }
}

Json depth_report(const Circuit &c, const Config &cfg) {
    Json steps = Json::array();
    for (const auto &step : c.steps) {
        double angle = 0;
        for (const auto &g : step) {
            angle = std::max(angle, gate_angle(g.u, cfg.tol));
        }
        StepPlan plan = circuit_step_plan(c.n, step, cfg.tol);
        steps.push_back({{"gates", step.size()}, {"angle", angle}, {"plan_mu", plan.mu}});
    }
    return {{"n", c.n}, {"weighted_depth", weighted_depth(c, cfg.tol)}, {"steps", steps}};
}

int command_depth(const Options &o, const Config &cfg, std::ostream &out) {
    if (o.depth_circuit.empty() == o.depth_hamiltonian.empty()) {
        throw ValidationError("depth: give exactly one of --circuit and --hamiltonian");
    }
    Json report;
    if (!o.depth_circuit.empty()) {
        report = depth_report(parse_circuit(read_file(o.depth_circuit)), cfg);
    } else {
        HamiltonianInput h = parse_hamiltonian(read_file(o.depth_hamiltonian));
        Circuit c = compile_parallel_circuit(h.j, o.depth_dt, cfg.exact_coloring_edge_cap);
        report = depth_report(c, cfg);
        report["dt"] = o.depth_dt;
        report["circuit"] = circuit_to_json(c);
    }
    out << report.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    Options o;
    CLI::App app{"Plan and verify zz-drift Hamiltonian simulation schedules", "zzplan"};
    app.require_subcommand(1);
    app.add_option("--config", o.config_path, "JSON configuration file")->check(CLI::ExistingFile);

    auto *bounds = app.add_subcommand("bounds", "Overhead bounds for a zz target graph");
    bounds->add_option("graph", o.bounds_input, "Target graph file")->required();

    auto *plan = app.add_subcommand("plan", "Build and verify a simulation schedule");
    plan->add_option("--method", o.plan_method, "lp | rank1 | walsh | hadamard | pair")
        ->check(CLI::IsMember({"lp", "rank1", "walsh", "hadamard", "pair"}));
    plan->add_option("input", o.plan_input, "Graph, jz, cliques or Hamiltonian file")->required();

    auto *verify_cmd = app.add_subcommand("verify", "Verify a schedule against a target");
    verify_cmd->add_option("--schedule", o.verify_schedule, "Schedule or plan report file")->required();
    verify_cmd->add_option("--epsilon", o.verify_epsilon, "Evolution time for propagator checks");
    verify_cmd->add_option("--steps", o.verify_steps, "Trotter steps per epsilon")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--drift", o.verify_drift, "Drift Hamiltonian (frame schedules)");
    verify_cmd->add_option("target", o.verify_target, "Target graph or Hamiltonian file")->required();

    auto *invert = app.add_subcommand("invert", "Invert a drift Hamiltonian");
    invert->add_flag("--general", o.invert_general, "Allow arbitrary couplings (sigma_x, sigma_y, sigma_z)");
    invert->add_option("drift", o.invert_input, "Drift graph or Hamiltonian file")->required();

    auto *depth = app.add_subcommand("depth", "Weighted depth and per-step overheads of a circuit");
    depth->add_option("--circuit", o.depth_circuit, "Circuit file");
    depth->add_option("--hamiltonian", o.depth_hamiltonian, "Hamiltonian to compile into a parallel circuit");
    depth->add_option("--dt", o.depth_dt, "Evolution time for --hamiltonian");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        Config cfg = o.config_path.empty() ? Config{} : load_config(o.config_path);
        if (bounds->parsed()) {
            return command_bounds(o, cfg, out);
        }
        if (plan->parsed()) {
            return command_plan(o, cfg, out);
        }
        if (verify_cmd->parsed()) {
            return command_verify(o, cfg, out);
        }
        if (invert->parsed()) {
            return command_invert(o, cfg, out, err);
        }
        return command_depth(o, cfg, out);
    } catch (const ValidationError &e) {
        err << "zzplan: " << e.what() << "\n";
        return kExitValidation;
    } catch (const CapExceededError &e) {
        err << "zzplan: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::exception &e) {
        err << "zzplan: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace zzsim::cli
