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

#pragma once

// File formats and the zzplan command-line front end. Vertices are 1-based
// in every file and report; the library is 0-based.

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "zzsim/circuit.h"
#include "zzsim/graph.h"
#include "zzsim/jmatrix.h"
#include "zzsim/planner.h"
#include "zzsim/schedule.h"
#include "zzsim/verifier.h"

namespace zzsim::cli {

using Json = nlohmann::json;

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitValidation = 2,
    kExitCap = 3,
};

struct Config {
    double tol = 1e-9;
    int lp_cap_n = kLpMaxQubits;
    int exact_coloring_edge_cap = kDefaultExactColoringEdges;
    int sim_cap_diagonal = 10;
    int sim_cap_general = 6;

    SimulationCaps caps() const {
        return {sim_cap_diagonal, sim_cap_general};
    }
};

void validate(const Config &c);

/// Reads a JSON object whose keys are the Config field names. Unknown keys
/// are rejected.
Config parse_config(const std::string &text);
Config load_config(const std::string &path);

std::string read_file(const std::string &path);

/// Text (`n <count>` then `k l w` lines; `#` starts a comment) or JSON
/// ({"n": ..., "edges": [[k, l, w], ...]}). Returns a canonical graph.
WeightedGraph parse_graph(const std::string &text);
Json graph_to_json(const WeightedGraph &g);

/// {"n": ..., "cliques": [[1, 2], [3], ...]}
struct CliqueInput {
    int n = 0;
    std::vector<std::vector<int>> cliques;
};
CliqueInput parse_cliques(const std::string &text);

/// {"jz": [..]}
std::vector<double> parse_jz(const std::string &text);

/// {"n": ..., "blocks": [{"pair": [k, l], "J": [[3], [3], [3]]}, ...],
///  "fields": [[hx, hy, hz], ...]} with optional fields.
struct HamiltonianInput {
    JMatrix j;
    LocalFields fields;
};
HamiltonianInput parse_hamiltonian(const std::string &text);
Json hamiltonian_to_json(const JMatrix &j, const LocalFields &fields);

/// A target file: a graph (text or JSON) or a Hamiltonian JSON (has "blocks").
HamiltonianInput parse_target(const std::string &text, bool *is_graph = nullptr);

/// Frames serialize per qubit as {"axis": unit 3-vector, "angle": radians}
/// with u = cos(angle / 2) I - i sin(angle / 2) axis . sigma.
Json frame_to_json(const LocalFrame &f);
LocalFrame frame_from_json(const Json &j);
Json su2_to_json(const Mat2c &u);
Mat2c su2_from_json(const Json &j);

using AnySchedule = std::variant<SignSchedule, ConjugationSchedule>;

/// {"type": "sign", "n", "intervals": [{"signs": "+-", "duration"}]} or
/// {"type": "frames", "n", "intervals": [{"frame": [...], "duration"}],
///  "local_fields": [...], "trailing": [...]}.
Json schedule_to_json(const SignSchedule &s);
Json schedule_to_json(const ConjugationSchedule &s);
/// Accepts a schedule object or a plan report carrying one under "schedule".
AnySchedule parse_schedule(const std::string &text);

/// {"n", "steps": [[{"pair": [k, l], "u": {"re": 4x4, "im": 4x4}}
///   | {"pair": [k, l], "generator": {"J", "a", "b"}, "t": t}, ...], ...]}
Circuit parse_circuit(const std::string &text);
Json circuit_to_json(const Circuit &c);

Json report_to_json(const VerificationReport &r);
Json bounds_to_json(const BoundsReport &b);

/// Runs zzplan with the given arguments (argv[0] is the program name).
/// The JSON report goes to `out`, diagnostics to `err`.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace zzsim::cli
