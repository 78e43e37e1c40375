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
#include <bit>
#include <cmath>
#include <string>

#include "zzsim/planner.h"

namespace zzsim {

namespace {

struct PairTimeline {
    int k = 0;
    int l = 0;
    TwoQubitPlan plan;
    /// ends[i] is the cumulative time at which interval i finishes.
    std::vector<double> ends;
};

// Factors a local gate as A (x) B with A, B in SU(2), up to a global phase.
std::pair<Mat2c, Mat2c> factor_local(const CMatrix &u) {
    size_t bp = 0;
    size_t bq = 0;
    auto realigned = [&](size_t p, size_t q) {
        // R[(i1 j1), (i2 j2)] = u[(i1 i2), (j1 j2)]
        size_t i1 = p / 2, j1 = p % 2, i2 = q / 2, j2 = q % 2;
        return u(2 * i1 + i2, 2 * j1 + j2);
    };
    for (size_t p = 0; p < 4; p++) {
        for (size_t q = 0; q < 4; q++) {
            if (std::abs(realigned(p, q)) > std::abs(realigned(bp, bq))) {
                bp = p;
                bq = q;
            }
        }
    }
    Mat2c a;
    Mat2c b;
    Complex pivot = realigned(bp, bq);
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            a(i, j) = realigned(2 * i + j, bq);
            b(i, j) = realigned(bp, 2 * i + j) / pivot;
        }
    }
    for (Mat2c *m : {&a, &b}) {
        *m = (Complex{1} / std::sqrt(m->det())) * *m;
        if (m->trace().real() < 0) {
            *m = Complex{-1} * *m;
        }
    }
    return {a, b};
}

// f with exp(i f . sigma) = m for m in SU(2) with nonnegative real trace.
Vec3 su2_log(const Mat2c &m) {
    double c = std::clamp(m.trace().real() / 2, -1.0, 1.0);
    double theta = std::acos(c);
    double s = std::sin(theta);
    if (s < 1e-15) {
        return {0, 0, 0};
    }
    Vec3 f{};
    for (int a = 0; a < 3; a++) {
        f[a] = theta / s * (m * pauli(a)).trace().imag() / 2;
    }
    return f;
}

Vec3 add(const Vec3 &x, const Vec3 &y) {
    return {x[0] + y[0], x[1] + y[1], x[2] + y[2]};
}

}  // namespace

StepPlan circuit_step_plan(int n, const CircuitStep &step, double tol) {
    validate(step, n, std::max(tol, 1e-12) * 10);
    StepPlan out;
    out.target = JMatrix::zero(n);
    LocalFields fields(n, Vec3{});

    std::vector<PairTimeline> pairs;
    for (const auto &g : step) {
        if (is_local_gate(g.u, tol)) {
            auto [a, b] = factor_local(g.u);
            fields[g.k] = add(fields[g.k], su2_log(a));
            fields[g.l] = add(fields[g.l], su2_log(b));
            continue;
        }
        GateGenerator gen = gate_generator(g.u, tol);
        out.target.add_to_block(g.k, g.l, gen.terms.j);
        fields[g.k] = add(fields[g.k], gen.terms.a);
        fields[g.l] = add(fields[g.l], gen.terms.b);
        PairTimeline t{g.k, g.l, two_qubit_plan(gen.terms.j), {}};
        double clock = 0;
        for (const auto &iv : t.plan.schedule.intervals) {
            clock += iv.duration;
            t.ends.push_back(clock);
        }
        out.mu = std::max(out.mu, t.plan.mu);
        pairs.push_back(std::move(t));
    }
    bool any_field = std::any_of(fields.begin(), fields.end(), [](const Vec3 &f) {
        return norm(f) != 0;
    });
    if (any_field) {
        out.fields = fields;
    }

    out.schedule.n = n;
    out.schedule.local_fields = out.fields;
    std::vector<double> cuts{0.0};
    for (const auto &p : pairs) {
        cuts.insert(cuts.end(), p.ends.begin(), p.ends.end());
    }
    std::sort(cuts.begin(), cuts.end());
    const Mat2c flip{{Complex{0}, Complex{0, 1}, Complex{0, 1}, Complex{0}}};

    for (size_t c = 0; c + 1 < cuts.size(); c++) {
        const double t0 = cuts[c];
        const double len = cuts[c + 1] - t0;
        if (len <= kPruneDuration) {
            continue;
        }
        const double mid = t0 + len / 2;
        LocalFrame base = LocalFrame::identity(n);
        std::vector<int> clique_of(n, -1);
        std::vector<std::vector<int>> cliques;
        for (const auto &p : pairs) {
            auto it = std::upper_bound(p.ends.begin(), p.ends.end(), mid);
            if (it == p.ends.end()) {
                continue;  // this pair has finished
            }
            const LocalFrame &f = p.plan.schedule.intervals[it - p.ends.begin()].frame;
            base.u[p.k] = f.u[0];
            base.u[p.l] = f.u[1];
            clique_of[p.k] = clique_of[p.l] = static_cast<int>(cliques.size());
            cliques.push_back({p.k, p.l});
        }
        for (int q = 0; q < n; q++) {
            if (clique_of[q] < 0) {
                clique_of[q] = static_cast<int>(cliques.size());
                cliques.push_back({q});
            }
        }
        // Sylvester rows decouple distinct cliques; within a clique the signs agree.
        const uint32_t order = std::bit_ceil(static_cast<uint32_t>(cliques.size()));
        for (uint32_t m = 0; m < order; m++) {
            LocalFrame f = base;
            for (int q = 0; q < n; q++) {
                if (std::popcount(static_cast<uint32_t>(clique_of[q]) & m) % 2) {
                    f.u[q] = f.u[q] * flip;
                }
            }
            out.schedule.intervals.push_back({std::move(f), len / order});
        }
    }
    return out;
}

Circuit compile_parallel_circuit(const JMatrix &h, double dt, int exact_edge_cap) {
    validate(h);
    if (!(dt > 0)) {
        throw ValidationError("compile_parallel_circuit: dt must be positive");
    }
    if (h.n < 2) {
        throw ValidationError("compile_parallel_circuit: need at least two qubits");
    }
    Circuit c{h.n, {}};
    NormLevels lv = norm_levels(h);
    for (size_t i = 0; i + 1 < lv.levels.size(); i++) {
        const double width = lv.levels[i + 1] - lv.levels[i];
        WeightedGraph g = lv.graph_above(h.n, static_cast<int>(i));
        ChromaticIndexResult ci = chromatic_index(g, exact_edge_cap);
        for (int color = 0; color < ci.coloring.colors; color++) {
            CircuitStep step;
            for (size_t e = 0; e < g.edges.size(); e++) {
                if (ci.coloring.color[e] != color) {
                    continue;
                }
                const Edge &edge = g.edges[e];
                PairMatrix j = h.block(edge.k, edge.l);
                PairMatrix unit = j * (1 / pair_norm(j));
                step.push_back({edge.k, edge.l, pair_exponential(unit, width * dt)});
            }
            c.steps.push_back(std::move(step));
        }
    }
    return c;
}

}  // namespace zzsim
