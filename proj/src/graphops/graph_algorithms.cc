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
#include <cmath>
#include <numeric>
#include <queue>

#include "zzsim/errors.h"
#include "zzsim/graphops.h"
#include "zzsim/verifier.h"

namespace zzsim {

namespace {

constexpr double kLevelRelTol = 1e-12;

}  // namespace

WeightedGraph threshold_graph(const JMatrix &h, double r) {
    if (!(r >= 0)) {
        throw ValidationError("threshold_graph: threshold must be nonnegative");
    }
    WeightedGraph g{h.n, {}};
    for (const auto &[key, m] : h.blocks) {
        if (pair_norm(m) > r) {
            g.edges.push_back({key.first, key.second, 1.0});
        }
    }
    return g;
}

NormLevels norm_levels(const JMatrix &h) {
    NormLevels out;
    for (const auto &[key, m] : h.blocks) {
        out.pairs.push_back({key.first, key.second, pair_norm(m)});
    }
    std::vector<size_t> order(out.pairs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return out.pairs[a].w < out.pairs[b].w;
    });
    double max_norm = 0;
    for (const auto &p : out.pairs) {
        max_norm = std::max(max_norm, p.w);
    }

    out.levels.push_back(0);
    out.level_of.assign(out.pairs.size(), 0);
    for (size_t idx : order) {
        double w = out.pairs[idx].w;
        if (w <= kLevelRelTol * max_norm) {
            out.level_of[idx] = 0;
            continue;
        }
        double &last = out.levels.back();
        if (out.levels.size() > 1 && w - last <= kLevelRelTol * w) {
            last = std::max(last, w);
        } else {
            out.levels.push_back(w);
        }
        out.level_of[idx] = static_cast<int>(out.levels.size()) - 1;
    }
    return out;
}

WeightedGraph NormLevels::graph_above(int n, int i) const {
    WeightedGraph g{n, {}};
    for (size_t p = 0; p < pairs.size(); p++) {
        if (level_of[p] > i) {
            g.edges.push_back({pairs[p].k, pairs[p].l, 1.0});
        }
    }
    return g;
}

WeightedChromaticIndex weighted_chromatic_index(const JMatrix &h, int exact_edge_cap) {
    NormLevels lv = norm_levels(h);
    WeightedChromaticIndex out;
    for (size_t i = 0; i + 1 < lv.levels.size(); i++) {
        auto ci = chromatic_index(lv.graph_above(h.n, static_cast<int>(i)), exact_edge_cap);
        out.exact = out.exact && ci.exact;
        out.value += (lv.levels[i + 1] - lv.levels[i]) * ci.chromatic_index;
    }
    return out;
}

Bipartition bipartition(const WeightedGraph &g) {
    auto adj = g.neighbors();
    std::vector<int> side(g.n, -1);
    std::vector<int> parent(g.n, -1);
    std::vector<int> depth(g.n, 0);
    Bipartition out;
    for (int root = 0; root < g.n; root++) {
        if (side[root] >= 0) {
            continue;
        }
        side[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u]) {
                if (side[v] < 0) {
                    side[v] = 1 - side[u];
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    q.push(v);
                } else if (side[v] == side[u]) {
                    // Walk both tree paths up to their common ancestor.
                    std::vector<int> left{u};
                    std::vector<int> right{v};
                    int a = u;
                    int b = v;
                    while (depth[a] > depth[b]) {
                        a = parent[a];
                        left.push_back(a);
                    }
                    while (depth[b] > depth[a]) {
                        b = parent[b];
                        right.push_back(b);
                    }
                    while (a != b) {
                        a = parent[a];
                        b = parent[b];
                        left.push_back(a);
                        right.push_back(b);
                    }
                    right.pop_back();
                    out.bipartite = false;
                    out.odd_cycle = left;
                    out.odd_cycle.insert(out.odd_cycle.end(), right.rbegin(), right.rend());
                    // Rotate so the cycle starts at its smallest vertex.
                    auto mn = std::min_element(out.odd_cycle.begin(), out.odd_cycle.end());
                    std::rotate(out.odd_cycle.begin(), mn, out.odd_cycle.end());
                    return out;
                }
            }
        }
    }
    out.bipartite = true;
    for (int v = 0; v < g.n; v++) {
        (side[v] == 0 ? out.x : out.y).push_back(v);
    }
    return out;
}

std::vector<std::vector<int>> connected_components(const WeightedGraph &g) {
    auto adj = g.neighbors();
    std::vector<bool> seen(g.n, false);
    std::vector<std::vector<int>> comps;
    for (int root = 0; root < g.n; root++) {
        if (seen[root]) {
            continue;
        }
        std::vector<int> comp;
        std::queue<int> q;
        q.push(root);
        seen[root] = true;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int v : adj[u]) {
                if (!seen[v]) {
                    seen[v] = true;
                    q.push(v);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

WeightedGraph induced_subgraph(const WeightedGraph &g, const std::vector<int> &vertices) {
    std::vector<int> index(g.n, -1);
    for (size_t i = 0; i < vertices.size(); i++) {
        index[vertices[i]] = static_cast<int>(i);
    }
    WeightedGraph out{static_cast<int>(vertices.size()), {}};
    for (const auto &e : g.edges) {
        if (index[e.k] >= 0 && index[e.l] >= 0) {
            out.edges.push_back({index[e.k], index[e.l], e.w});
        }
    }
    return canonicalize(std::move(out));
}

}  // namespace zzsim
