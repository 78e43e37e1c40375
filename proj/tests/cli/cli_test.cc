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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/expect.h"
#include "zzsim/cli.h"
#include "zzsim/linalg.h"

namespace zzsim::cli {
namespace {

using testing::throws_with;

const std::string kData = ZZSIM_TEST_DATA_DIR;
const std::string kGolden = ZZSIM_TEST_GOLDEN_DIR;

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome zzplan(std::vector<std::string> args) {
    args.insert(args.begin(), "zzplan");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string &name) {
    return kData + "/" + name;
}

// Writes `text` to a fresh file under the test temp directory.
std::string temp_file(const std::string &name, const std::string &text) {
    auto dir = std::filesystem::temp_directory_path() / "zzsim_cli_test";
    std::filesystem::create_directories(dir);
    auto path = (dir / name).string();
    std::ofstream(path) << text;
    return path;
}

// Rounds every number to 12 significant digits so goldens survive
// last-bit differences between compilers.
Json canonical(const Json &j) {
    if (j.is_object()) {
        Json r = Json::object();
        for (const auto &[k, v] : j.items()) {
            r[k] = canonical(v);
        }
        return r;
    }
    if (j.is_array()) {
        Json r = Json::array();
        for (const auto &v : j) {
            r.push_back(canonical(v));
        }
        return r;
    }
    if (j.is_number_float()) {
        double x = j.get<double>();
        if (std::abs(x) < 1e-12) {
            return 0.0;
        }
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.11e", x);
        return std::strtod(buf, nullptr);
    }
    if (j.is_number_integer()) {
        return static_cast<double>(j.get<long long>());
    }
    return j;
}

void expect_golden(const std::vector<std::string> &args, const std::string &golden) {
    Outcome o = zzplan(args);
    ASSERT_EQ(o.code, 0) << o.err;
    Json expected = Json::parse(read_file(kGolden + "/" + golden));
    EXPECT_EQ(canonical(Json::parse(o.out)), canonical(expected)) << golden;
}

TEST(ParseGraph, TextExample) {
    WeightedGraph g = parse_graph("n 2\n1 2 1.0\n");
    EXPECT_EQ(g, WeightedGraph::complete(2));
}

TEST(ParseGraph, CommentsAndBlankLines) {
    WeightedGraph g = parse_graph("# header\n\nn 3  # three qubits\n2 3 -0.5\n");
    EXPECT_EQ(g.n, 3);
    ASSERT_EQ(g.edges.size(), 1u);
    EXPECT_EQ(g.weight(1, 2), -0.5);
}

TEST(ParseGraph, ErrorsCarryLineNumbers) {
    EXPECT_TRUE(throws_with([] { parse_graph(read_file(data("self_loop.graph"))); }, "line 3: self-loop"));
    EXPECT_TRUE(throws_with([] { parse_graph(read_file(data("bad_weight.graph"))); }, "line 3"));
    EXPECT_TRUE(throws_with([] { parse_graph("n 2\n1 3 1\n"); }, "line 2"));
    EXPECT_TRUE(throws_with([] { parse_graph("1 2 1\n"); }, "line 1"));
    EXPECT_TRUE(throws_with([] { parse_graph("n 2\n1 2 1\n2 1 1\n"); }, "duplicate"));
}

TEST(ParseGraph, JsonMatchesText) {
    EXPECT_EQ(parse_graph(read_file(data("k3.json"))), WeightedGraph::complete(3));
    WeightedGraph g = parse_graph(read_file(data("star5.graph")));
    EXPECT_EQ(parse_graph(graph_to_json(g).dump()), g);
}

TEST(ParseHamiltonian, ReadsBlocksAndFields) {
    HamiltonianInput h = parse_hamiltonian(read_file(data("pair.json")));
    EXPECT_EQ(h.j.n, 2);
    EXPECT_EQ(h.j.block(0, 1)(2, 2), 0.7);
    EXPECT_EQ(h.j.block(1, 0)(0, 2), 0.1);
    ASSERT_EQ(h.fields.size(), 2u);
    EXPECT_EQ(h.fields[1][1], 0.3);
    EXPECT_TRUE(throws_with(
        [] {
            parse_hamiltonian(R"({"n": 2, "blocks": [{"pair": [1, 2], "J": [[1,0,0],[0,1,0],[0,0,1]]},
                                                     {"pair": [2, 1], "J": [[1,0,0],[0,1,0],[0,0,1]]}]})");
        },
        "duplicate"));
}

TEST(ParseConfig, DefaultsAndRejections) {
    Config c = parse_config("{}");
    EXPECT_EQ(c.tol, 1e-9);
    EXPECT_EQ(parse_config(R"({"lp_cap_n": 8})").lp_cap_n, 8);
    EXPECT_TRUE(throws_with([] { parse_config(R"({"frobnicate": 1})"); }, "unknown key"));
    EXPECT_TRUE(throws_with([] { parse_config(R"({"tol": -1})"); }, "positive"));
    EXPECT_TRUE(throws_with([] { parse_config(R"({"tol": "x"})"); }, "wrong type"));
    EXPECT_TRUE(throws_with([] { parse_config("[1"); }, "config"));
}

TEST(Frames, JsonRoundTrip) {
    std::mt19937_64 rng(21);
    std::normal_distribution<double> gauss;
    for (int trial = 0; trial < 50; trial++) {
        Vec3 axis{{gauss(rng), gauss(rng), gauss(rng)}};
        Mat2c u = so3_to_su2(rotation_about(axis, gauss(rng)));
        Mat2c back = su2_from_json(su2_to_json(u));
        EXPECT_LT((back - u).max_abs(), 1e-12);
    }
    EXPECT_TRUE(throws_with([] { su2_from_json(Json{{"axis", {0, 0, 0}}, {"angle", 1.0}}); }, "axis"));
}

TEST(Schedules, SignScheduleRoundTrip) {
    SignSchedule s{3, {{{1, -1, 1}, 0.25}, {{1, 1, -1}, 0.75}}};
    auto back = std::get<SignSchedule>(parse_schedule(schedule_to_json(s).dump()));
    EXPECT_EQ(back.n, 3);
    ASSERT_EQ(back.intervals.size(), 2u);
    EXPECT_EQ(back.intervals[1].signs, s.intervals[1].signs);
    EXPECT_EQ(back.intervals[1].duration, 0.75);
}

TEST(Schedules, RejectsMalformed) {
    EXPECT_TRUE(throws_with([] { parse_schedule(R"({"type": "sign", "n": 2})"); }, "intervals"));
    EXPECT_TRUE(throws_with(
        [] { parse_schedule(R"({"type": "sign", "n": 2, "intervals": [{"signs": "+-", "duration": -1}]})"); },
        "duration"));
    EXPECT_TRUE(throws_with([] { parse_schedule(R"({"type": "banana"})"); }, "type"));
}

TEST(Run, ExitCodes) {
    EXPECT_EQ(zzplan({"bounds", data("k3.json")}).code, kExitOk);
    EXPECT_EQ(zzplan({"bounds", data("self_loop.graph")}).code, kExitValidation);
    EXPECT_EQ(zzplan({"bounds", data("no_such_file.graph")}).code, kExitValidation);
    EXPECT_EQ(zzplan({"plan", "--method", "bogus", data("k3.json")}).code, kExitValidation);
    EXPECT_EQ(zzplan({}).code, kExitValidation);
    EXPECT_EQ(zzplan({"--config", data("unknown_key.json"), "bounds", data("k3.json")}).code, kExitValidation);
    EXPECT_EQ(zzplan({"--help"}).code, kExitOk);
}

TEST(Run, LpCapReturnsExitThree) {
    Outcome o = zzplan({"--config", data("small_lp_cap.json"), "plan", "--method", "lp", data("star5.graph")});
    EXPECT_EQ(o.code, kExitCap);
    EXPECT_NE(o.err.find("cap"), std::string::npos) << o.err;
    EXPECT_TRUE(o.out.empty());
}

TEST(Run, ValidationMessageNamesTheLine) {
    Outcome o = zzplan({"bounds", data("self_loop.graph")});
    EXPECT_NE(o.err.find("line 3: self-loop at vertex 2"), std::string::npos) << o.err;
}

TEST(Run, NonUnitOddDriftIsNotInvertible) {
    Outcome o = zzplan({"invert", data("weighted_triangle.graph")});
    EXPECT_EQ(o.code, kExitValidation);
    EXPECT_NE(o.err.find("bipartite"), std::string::npos) << o.err;
}

TEST(Golden, Bounds) {
    expect_golden({"bounds", data("star5.graph")}, "bounds_star5.json");
    expect_golden({"bounds", data("k3.json")}, "bounds_k3.json");
}

TEST(Golden, Plans) {
    expect_golden({"plan", "--method", "lp", data("star5.graph")}, "plan_lp_star5.json");
    expect_golden({"plan", "--method", "walsh", data("cliques6.json")}, "plan_walsh_cliques6.json");
    expect_golden({"plan", "--method", "rank1", data("jz3.json")}, "plan_rank1_jz3.json");
}

TEST(Golden, Inversion) {
    expect_golden({"invert", data("path4.graph")}, "invert_path4.json");
    expect_golden({"invert", data("k4.graph")}, "invert_k4.json");
}

TEST(Golden, Depth) {
    expect_golden({"depth", "--circuit", data("circuit.json")}, "depth_circuit.json");
}

// A schedule emitted by plan re-parses and re-verifies to the same report.
TEST(RoundTrip, PlanThenVerify) {
    struct Case {
        std::vector<std::string> plan;
        std::string target;
    };
    std::string star = data("star5.graph");
    for (const auto &c : std::vector<Case>{{{"plan", "--method", "lp", star}, star},
                                           {{"invert", data("path4.graph")}, ""},
                                           {{"plan", "--method", "pair", data("pair.json")}, data("pair.json")}}) {
        Outcome p = zzplan(c.plan);
        ASSERT_EQ(p.code, 0) << p.err;
        Json plan = Json::parse(p.out);
        std::string sched = temp_file("roundtrip.json", p.out);
        std::vector<std::string> args{"verify", "--schedule", sched};
        std::string target = c.target;
        if (target.empty()) {
            // The inversion target is the negated drift.
            Json neg = Json::parse(graph_to_json(parse_graph(read_file(data("path4.graph")))).dump());
            for (auto &e : neg["edges"]) {
                e[2] = -e[2].get<double>();
            }
            target = temp_file("negated.json", neg.dump());
            args.insert(args.end(), {"--drift", data("path4.graph")});
        }
        args.push_back(target);
        Outcome v = zzplan(args);
        ASSERT_EQ(v.code, 0) << v.err;
        Json report = Json::parse(v.out);
        EXPECT_EQ(canonical(report), canonical(plan["verification"])) << p.out;
        EXPECT_FALSE(report["mismatch"].get<bool>());
    }
}

TEST(RoundTrip, TamperedScheduleIsReportedNotRejected) {
    Outcome p = zzplan({"plan", "--method", "lp", data("star5.graph")});
    ASSERT_EQ(p.code, 0);
    Json plan = Json::parse(p.out);
    auto &d = plan["schedule"]["intervals"][0]["duration"];
    d = d.get<double>() + 0.1;
    Outcome v = zzplan({"verify", "--schedule", temp_file("tampered.json", plan.dump()), data("star5.graph")});
    EXPECT_EQ(v.code, kExitOk);
    Json report = Json::parse(v.out);
    EXPECT_TRUE(report["mismatch"].get<bool>());
    EXPECT_NEAR(report["avg_hamiltonian_error"].get<double>(), 0.1, 1e-12);
}

TEST(RoundTrip, DepthFromHamiltonianMatchesEmittedCircuit) {
    Outcome h = zzplan({"depth", "--hamiltonian", data("heisenberg3.json"), "--dt", "0.1"});
    ASSERT_EQ(h.code, 0) << h.err;
    Json r = Json::parse(h.out);
    std::string circ = temp_file("circuit.json", r["circuit"].dump());
    Outcome c = zzplan({"depth", "--circuit", circ});
    ASSERT_EQ(c.code, 0) << c.err;
    EXPECT_NEAR(Json::parse(c.out)["weighted_depth"].get<double>(), r["weighted_depth"].get<double>(), 1e-12);
}

}  // namespace
}  // namespace zzsim::cli
