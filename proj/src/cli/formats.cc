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

#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "zzsim/cli.h"
#include "zzsim/errors.h"

namespace zzsim::cli {

namespace {

Json parse_json(const std::string &text, const char *what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw ValidationError(std::string(what) + ": invalid JSON: " + e.what());
    }
}

const Json &field(const Json &j, const char *key, const std::string &where) {
    if (!j.is_object() || !j.contains(key)) {
        throw ValidationError(where + ": missing \"" + key + "\"");
    }
    return j.at(key);
}

double as_number(const Json &j, const std::string &where) {
    if (!j.is_number()) {
        throw ValidationError(where + ": expected a number");
    }
    double v = j.get<double>();
    if (!std::isfinite(v)) {
        throw ValidationError(where + ": non-finite number");
    }
    return v;
}

int as_int(const Json &j, const std::string &where) {
    if (!j.is_number_integer()) {
        throw ValidationError(where + ": expected an integer");
    }
    return j.get<int>();
}

const Json &as_array(const Json &j, size_t size, const std::string &where) {
    if (!j.is_array() || (size > 0 && j.size() != size)) {
        throw ValidationError(where + ": expected an array" + (size > 0 ? " of " + std::to_string(size) : ""));
    }
    return j;
}

Vec3 as_vec3(const Json &j, const std::string &where) {
    as_array(j, 3, where);
    return {as_number(j[0], where), as_number(j[1], where), as_number(j[2], where)};
}

Mat3 as_mat3(const Json &j, const std::string &where) {
    as_array(j, 3, where);
    Mat3 m;
    for (int r = 0; r < 3; r++) {
        Vec3 row = as_vec3(j[r], where);
        for (int c = 0; c < 3; c++) {
            m(r, c) = row[c];
        }
    }
    return m;
}

int as_qubit_count(const Json &j, const std::string &where) {
    int n = as_int(j, where + ": n");
    if (n < 1) {
        throw ValidationError(where + ": n must be at least 1");
    }
    return n;
}

// 1-based vertex from a file, returned 0-based.
int as_vertex(const Json &j, int n, const std::string &where) {
    int v = as_int(j, where);
    if (v < 1 || v > n) {
        throw ValidationError(where + ": vertex " + std::to_string(v) + " out of range [1, " + std::to_string(n) + "]");
    }
    return v - 1;
}

std::pair<int, int> as_pair(const Json &j, int n, const std::string &where) {
    as_array(j, 2, where + ": pair");
    int k = as_vertex(j[0], n, where);
    int l = as_vertex(j[1], n, where);
    if (k == l) {
        throw ValidationError(where + ": pair uses vertex " + std::to_string(k + 1) + " twice");
    }
    return {k, l};
}

Json vec_json(const Vec3 &v) {
    return Json::array({v[0], v[1], v[2]});
}

Json mat_json(const Mat3 &m) {
    Json rows = Json::array();
    for (int r = 0; r < 3; r++) {
        rows.push_back(Json::array({m(r, 0), m(r, 1), m(r, 2)}));
    }
    return rows;
}

Json number_or_null(std::optional<double> v) {
    if (!v || !std::isfinite(*v)) {
        return nullptr;
    }
    return *v;
}

std::vector<std::string> tokens(const std::string &line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) {
        out.push_back(t);
    }
    return out;
}

template <typename T>
bool parse_number(const std::string &s, T &out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

WeightedGraph parse_graph_text(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_n = false;
    WeightedGraph g;
    while (std::getline(in, line)) {
        line_no++;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        auto tok = tokens(line);
        if (tok.empty()) {
            continue;
        }
        std::string where = "line " + std::to_string(line_no);
        if (!have_n) {
            if (tok.size() != 2 || tok[0] != "n" || !parse_number(tok[1], g.n) || g.n < 1) {
                throw ValidationError(where + ": expected 'n <count>' with count >= 1");
            }
            have_n = true;
            continue;
        }
        int k = 0;
        int l = 0;
        double w = 0;
        if (tok.size() != 3 || !parse_number(tok[0], k) || !parse_number(tok[1], l) || !parse_number(tok[2], w)) {
            throw ValidationError(where + ": expected 'k l w'");
        }
        if (!std::isfinite(w)) {
            throw ValidationError(where + ": non-finite weight");
        }
        for (int v : {k, l}) {
            if (v < 1 || v > g.n) {
                throw ValidationError(where + ": vertex " + std::to_string(v) + " out of range [1, " +
                                      std::to_string(g.n) + "]");
            }
        }
        if (k == l) {
            throw ValidationError(where + ": self-loop at vertex " + std::to_string(k));
        }
        g.edges.push_back({k - 1, l - 1, w});
    }
    if (!have_n) {
        throw ValidationError("graph: missing 'n <count>' line");
    }
    return canonicalize(std::move(g));
}

WeightedGraph parse_graph_json(const Json &j) {
    WeightedGraph g;
    g.n = as_qubit_count(field(j, "n", "graph"), "graph");
    const Json &edges = as_array(field(j, "edges", "graph"), 0, "graph: edges");
    for (size_t i = 0; i < edges.size(); i++) {
        std::string where = "graph: edge #" + std::to_string(i + 1);
        as_array(edges[i], 3, where);
        int k = as_vertex(edges[i][0], g.n, where);
        int l = as_vertex(edges[i][1], g.n, where);
        if (k == l) {
            throw ValidationError(where + ": self-loop at vertex " + std::to_string(k + 1));
        }
        g.edges.push_back({k, l, as_number(edges[i][2], where)});
    }
    return canonicalize(std::move(g));
}

bool looks_like_json(const std::string &text) {
    auto pos = text.find_first_not_of(" \t\r\n");
    return pos != std::string::npos && (text[pos] == '{' || text[pos] == '[');
}

HamiltonianInput parse_hamiltonian_json(const Json &j) {
    HamiltonianInput h;
    h.j.n = as_qubit_count(field(j, "n", "hamiltonian"), "hamiltonian");
    const Json &blocks = as_array(field(j, "blocks", "hamiltonian"), 0, "hamiltonian: blocks");
    std::set<std::pair<int, int>> seen;
    for (size_t i = 0; i < blocks.size(); i++) {
        std::string where = "hamiltonian: block #" + std::to_string(i + 1);
        auto [k, l] = as_pair(field(blocks[i], "pair", where), h.j.n, where);
        if (!seen.insert({std::min(k, l), std::max(k, l)}).second) {
            throw ValidationError(where + ": duplicate pair (" + std::to_string(k + 1) + "," + std::to_string(l + 1) +
                                  ")");
        }
        h.j.set_block(k, l, as_mat3(field(blocks[i], "J", where), where + ": J"));
    }
    if (j.contains("fields") && !j.at("fields").is_null()) {
        const Json &f = as_array(j.at("fields"), h.j.n, "hamiltonian: fields");
        for (size_t q = 0; q < f.size(); q++) {
            h.fields.push_back(as_vec3(f[q], "hamiltonian: fields #" + std::to_string(q + 1)));
        }
    }
    validate(h.j);
    return h;
}

ConjugationSchedule parse_frames_schedule(const Json &j) {
    ConjugationSchedule s;
    s.n = as_qubit_count(field(j, "n", "schedule"), "schedule");
    const Json &ivs = as_array(field(j, "intervals", "schedule"), 0, "schedule: intervals");
    for (size_t i = 0; i < ivs.size(); i++) {
        std::string where = "schedule: interval #" + std::to_string(i + 1);
        FrameInterval iv;
        iv.frame = frame_from_json(field(ivs[i], "frame", where));
        iv.duration = as_number(field(ivs[i], "duration", where), where + ": duration");
        s.intervals.push_back(std::move(iv));
    }
    if (j.contains("local_fields") && !j.at("local_fields").is_null()) {
        const Json &f = as_array(j.at("local_fields"), 0, "schedule: local_fields");
        for (size_t q = 0; q < f.size(); q++) {
            s.local_fields.push_back(as_vec3(f[q], "schedule: local_fields #" + std::to_string(q + 1)));
        }
    }
    if (j.contains("trailing") && !j.at("trailing").is_null()) {
        s.trailing = frame_from_json(j.at("trailing"));
    }
    validate(s);
    return s;
}

SignSchedule parse_sign_schedule(const Json &j) {
    SignSchedule s;
    s.n = as_qubit_count(field(j, "n", "schedule"), "schedule");
    const Json &ivs = as_array(field(j, "intervals", "schedule"), 0, "schedule: intervals");
    for (size_t i = 0; i < ivs.size(); i++) {
        std::string where = "schedule: interval #" + std::to_string(i + 1);
        const Json &signs = field(ivs[i], "signs", where);
        if (!signs.is_string()) {
            throw ValidationError(where + ": signs must be a string over {+,-}");
        }
        SignInterval iv;
        try {
            iv.signs = parse_sign_string(signs.get<std::string>());
        } catch (const ValidationError &e) {
            throw ValidationError(where + ": " + e.what());
        }
        iv.duration = as_number(field(ivs[i], "duration", where), where + ": duration");
        s.intervals.push_back(std::move(iv));
    }
    validate(s);
    return s;
}

CMatrix as_complex4(const Json &j, const std::string &where) {
    const Json &re = as_array(field(j, "re", where), 4, where + ": re");
    const Json &im = as_array(field(j, "im", where), 4, where + ": im");
    CMatrix u(4, 4);
    for (size_t r = 0; r < 4; r++) {
        as_array(re[r], 4, where + ": re");
        as_array(im[r], 4, where + ": im");
        for (size_t c = 0; c < 4; c++) {
            u(r, c) = Complex{as_number(re[r][c], where), as_number(im[r][c], where)};
        }
    }
    return u;
}

}  // namespace

WeightedGraph parse_graph(const std::string &text) {
    if (looks_like_json(text)) {
        return parse_graph_json(parse_json(text, "graph"));
    }
    return parse_graph_text(text);
}

Json graph_to_json(const WeightedGraph &g) {
    Json edges = Json::array();
    for (const auto &e : g.edges) {
        edges.push_back(Json::array({e.k + 1, e.l + 1, e.w}));
    }
    return {{"n", g.n}, {"edges", edges}};
}

CliqueInput parse_cliques(const std::string &text) {
    Json j = parse_json(text, "cliques");
    CliqueInput c;
    c.n = as_qubit_count(field(j, "n", "cliques"), "cliques");
    const Json &sets = as_array(field(j, "cliques", "cliques"), 0, "cliques: cliques");
    for (size_t i = 0; i < sets.size(); i++) {
        std::string where = "cliques: set #" + std::to_string(i + 1);
        std::vector<int> set;
        for (const auto &v : as_array(sets[i], 0, where)) {
            set.push_back(as_vertex(v, c.n, where));
        }
        c.cliques.push_back(std::move(set));
    }
    validate_partition(c.n, c.cliques);
    return c;
}

std::vector<double> parse_jz(const std::string &text) {
    Json j = parse_json(text, "jz");
    std::vector<double> jz;
    const Json &arr = as_array(field(j, "jz", "jz"), 0, "jz");
    for (size_t i = 0; i < arr.size(); i++) {
        jz.push_back(as_number(arr[i], "jz: component " + std::to_string(i + 1)));
    }
    return jz;
}

HamiltonianInput parse_hamiltonian(const std::string &text) {
    return parse_hamiltonian_json(parse_json(text, "hamiltonian"));
}

Json hamiltonian_to_json(const JMatrix &j, const LocalFields &fields) {
    Json blocks = Json::array();
    for (const auto &[key, m] : j.blocks) {
        blocks.push_back({{"pair", Json::array({key.first + 1, key.second + 1})}, {"J", mat_json(m)}});
    }
    Json out{{"n", j.n}, {"blocks", blocks}};
    if (!fields.empty()) {
        Json f = Json::array();
        for (const auto &v : fields) {
            f.push_back(vec_json(v));
        }
        out["fields"] = f;
    }
    return out;
}

HamiltonianInput parse_target(const std::string &text, bool *is_graph) {
    if (looks_like_json(text)) {
        Json j = parse_json(text, "target");
        if (j.is_object() && j.contains("blocks")) {
            if (is_graph) {
                *is_graph = false;
            }
            return parse_hamiltonian_json(j);
        }
        if (is_graph) {
            *is_graph = true;
        }
        return {graph_to_jmatrix(parse_graph_json(j)), {}};
    }
    if (is_graph) {
        *is_graph = true;
    }
    return {graph_to_jmatrix(parse_graph_text(text)), {}};
}

Json su2_to_json(const Mat2c &u) {
    // u = w I - i v . sigma with w = cos(angle / 2), v = sin(angle / 2) axis.
    double w = u.trace().real() / 2;
    Vec3 v{};
    for (int a = 0; a < 3; a++) {
        v[a] = -(u * pauli(a)).trace().imag() / 2;
    }
    double len = norm(v);
    Vec3 axis{0, 0, 1};
    if (len > 1e-15) {
        axis = {v[0] / len, v[1] / len, v[2] / len};
    }
    return {{"axis", vec_json(axis)}, {"angle", 2 * std::atan2(len, w)}};
}

Mat2c su2_from_json(const Json &j) {
    Vec3 axis = as_vec3(field(j, "axis", "frame"), "frame: axis");
    double angle = as_number(field(j, "angle", "frame"), "frame: angle");
    double len = norm(axis);
    if (!(len > 0)) {
        throw ValidationError("frame: axis must be nonzero");
    }
    double c = std::cos(angle / 2);
    double s = std::sin(angle / 2) / len;
    Mat2c u = Complex{c} * Mat2c::identity();
    for (int a = 0; a < 3; a++) {
        u = u - Complex{0, s * axis[a]} * pauli(a);
    }
    return u;
}

Json frame_to_json(const LocalFrame &f) {
    Json out = Json::array();
    for (const auto &u : f.u) {
        out.push_back(su2_to_json(u));
    }
    return out;
}

LocalFrame frame_from_json(const Json &j) {
    as_array(j, 0, "frame");
    LocalFrame f;
    for (const auto &u : j) {
        f.u.push_back(su2_from_json(u));
    }
    return f;
}

Json schedule_to_json(const SignSchedule &s) {
    Json ivs = Json::array();
    for (const auto &iv : s.intervals) {
        ivs.push_back({{"signs", sign_string(iv.signs)}, {"duration", iv.duration}});
    }
    return {{"type", "sign"}, {"n", s.n}, {"intervals", ivs}, {"mu", s.overhead()}};
}

Json schedule_to_json(const ConjugationSchedule &s) {
    Json ivs = Json::array();
    for (const auto &iv : s.intervals) {
        ivs.push_back({{"frame", frame_to_json(iv.frame)}, {"duration", iv.duration}});
    }
    Json out{{"type", "frames"}, {"n", s.n}, {"intervals", ivs}, {"mu", s.overhead()}};
    if (!s.local_fields.empty()) {
        Json f = Json::array();
        for (const auto &v : s.local_fields) {
            f.push_back(vec_json(v));
        }
        out["local_fields"] = f;
    }
    if (s.trailing) {
        out["trailing"] = frame_to_json(*s.trailing);
    }
    return out;
}

AnySchedule parse_schedule(const std::string &text) {
    Json j = parse_json(text, "schedule");
    if (j.is_object() && j.contains("schedule") && j.at("schedule").is_object()) {
        j = j.at("schedule");
    }
    const Json &type = field(j, "type", "schedule");
    if (type == "sign") {
        return parse_sign_schedule(j);
    }
    if (type == "frames") {
        return parse_frames_schedule(j);
    }
    throw ValidationError("schedule: type must be \"sign\" or \"frames\"");
}

Circuit parse_circuit(const std::string &text) {
    Json j = parse_json(text, "circuit");
    Circuit c;
    c.n = as_qubit_count(field(j, "n", "circuit"), "circuit");
    const Json &steps = as_array(field(j, "steps", "circuit"), 0, "circuit: steps");
    for (size_t s = 0; s < steps.size(); s++) {
        CircuitStep step;
        const Json &gates = as_array(steps[s], 0, "circuit: step #" + std::to_string(s + 1));
        for (size_t g = 0; g < gates.size(); g++) {
            std::string where = "circuit: step #" + std::to_string(s + 1) + " gate #" + std::to_string(g + 1);
            auto [k, l] = as_pair(field(gates[g], "pair", where), c.n, where);
            Gate gate{k, l, {}};
            if (gates[g].contains("u")) {
                gate.u = as_complex4(gates[g].at("u"), where + ": u");
            } else {
                const Json &gen = field(gates[g], "generator", where);
                PairMatrix jm = as_mat3(field(gen, "J", where), where + ": J");
                Vec3 a = gen.contains("a") ? as_vec3(gen.at("a"), where + ": a") : Vec3{};
                Vec3 b = gen.contains("b") ? as_vec3(gen.at("b"), where + ": b") : Vec3{};
                double t = gates[g].contains("t") ? as_number(gates[g].at("t"), where + ": t") : 1.0;
                gate.u = pair_exponential(jm, t, a, b);
            }
            step.push_back(std::move(gate));
        }
        c.steps.push_back(std::move(step));
    }
    validate(c);
    return c;
}

Json circuit_to_json(const Circuit &c) {
    Json steps = Json::array();
    for (const auto &step : c.steps) {
        Json gates = Json::array();
        for (const auto &g : step) {
            Json re = Json::array();
            Json im = Json::array();
            for (size_t r = 0; r < 4; r++) {
                Json rr = Json::array();
                Json ii = Json::array();
                for (size_t col = 0; col < 4; col++) {
                    rr.push_back(g.u(r, col).real());
                    ii.push_back(g.u(r, col).imag());
                }
                re.push_back(rr);
                im.push_back(ii);
            }
            gates.push_back({{"pair", Json::array({g.k + 1, g.l + 1})}, {"u", {{"re", re}, {"im", im}}}});
        }
        steps.push_back(gates);
    }
    return {{"n", c.n}, {"steps", steps}};
}

Json report_to_json(const VerificationReport &r) {
    return {
        {"avg_hamiltonian_error", r.avg_hamiltonian_error},
        {"unitary_error", number_or_null(r.unitary_error)},
        {"trotter_ratio", number_or_null(r.trotter_ratio)},
        {"psd_ok", r.psd_ok},
        {"mu", r.mu},
        {"mismatch", r.mismatch},
    };
}

Json bounds_to_json(const BoundsReport &b) {
    return {
        {"lower_spectral", b.lower_spectral},
        {"upper_chromatic", b.upper_chromatic},
        {"chromatic_exact", b.chromatic_exact},
        {"clique_index", b.clique_index},
        {"clique_exact", b.clique_exact},
        {"upper_clique", number_or_null(b.upper_clique)},
        {"lp_optimum", number_or_null(b.lp_optimum)},
        {"inversion_lower", number_or_null(b.inversion_lower)},
        {"consistent", b.consistent},
    };
}

}  // namespace zzsim::cli
