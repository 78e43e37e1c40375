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
#include <cstdint>
#include <map>
#include <set>

#include "zzsim/graphops.h"

namespace zzsim {

namespace {

constexpr int kMaxExactEdges = 64;

std::vector<int> intersect(const std::vector<int> &a, const std::vector<int> &b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

void bron_kerbosch(const std::vector<std::vector<int>> &adj, std::vector<int> &r, std::vector<int> p,
                   std::vector<int> x, std::vector<std::vector<int>> &out) {
    if (p.empty() && x.empty()) {
        std::vector<int> c = r;
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
        return;
    }
    // Pivot: the vertex of P or X with the most neighbors in P.
    int pivot = -1;
    size_t best = 0;
    for (const auto *set : {&p, &x}) {
        for (int u : *set) {
            size_t cnt = intersect(adj[u], p).size();
            if (pivot < 0 || cnt > best) {
                pivot = u;
                best = cnt;
            }
        }
    }
    std::vector<int> candidates;
    std::set_difference(p.begin(), p.end(), adj[pivot].begin(), adj[pivot].end(), std::back_inserter(candidates));
    for (int v : candidates) {
        r.push_back(v);
        bron_kerbosch(adj, r, intersect(p, adj[v]), intersect(x, adj[v]), out);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.insert(std::upper_bound(x.begin(), x.end(), v), v);
    }
}

class EdgeIndex {
   public:
    explicit EdgeIndex(const WeightedGraph &g) : n_(g.n), index_(static_cast<size_t>(g.n) * g.n, -1) {
        for (size_t i = 0; i < g.edges.size(); i++) {
            index_[static_cast<size_t>(g.edges[i].k) * n_ + g.edges[i].l] = static_cast<int>(i);
            index_[static_cast<size_t>(g.edges[i].l) * n_ + g.edges[i].k] = static_cast<int>(i);
        }
    }
    int operator()(int a, int b) const {
        return index_[static_cast<size_t>(a) * n_ + b];
    }

   private:
    int n_;
    std::vector<int> index_;
};

struct Candidate {
    std::vector<int> vertices;
    uint64_t edges = 0;
};

class CliqueSearch {
   public:
    CliqueSearch(const WeightedGraph &g, std::vector<Candidate> candidates, int best)
        : g_(g), candidates_(std::move(candidates)), best_(best), vertex_colors_(g.n, 0) {
        const int m = static_cast<int>(g.edges.size());
        by_edge_.resize(m);
        for (size_t c = 0; c < candidates_.size(); c++) {
            for (int e = 0; e < m; e++) {
                if (candidates_[c].edges >> e & 1) {
                    by_edge_[e].push_back(static_cast<int>(c));
                }
            }
        }
        // Larger cliques first.
        for (auto &list : by_edge_) {
            std::stable_sort(list.begin(), list.end(), [&](int a, int b) {
                return candidates_[a].vertices.size() > candidates_[b].vertices.size();
            });
        }
        full_ = m == 64 ? ~uint64_t{0} : (uint64_t{1} << m) - 1;
    }

    /// Returns true when a coloring with fewer than the initial `best` colors was found.
    bool run() {
        dfs(0, 0);
        return found_;
    }

    int best() const {
        return best_;
    }
    const CliqueColoring &witness() const {
        return witness_;
    }

   private:
    void dfs(uint64_t covered, int opened) {
        if (opened >= best_) {
            return;
        }
        if (covered == full_) {
            best_ = opened;
            found_ = true;
            witness_.cliques.clear();
            witness_.colors.clear();
            for (auto [c, color] : chosen_) {
                witness_.cliques.push_back(candidates_[c].vertices);
                witness_.colors.push_back(color);
            }
            witness_.num_colors = opened;
            return;
        }
        int e = std::countr_one(covered);
        for (int c : by_edge_[e]) {
            const Candidate &cand = candidates_[c];
            if (cand.edges & covered) {
                continue;
            }
            uint64_t busy = 0;
            for (int v : cand.vertices) {
                busy |= vertex_colors_[v];
            }
            int limit = std::min(best_ - 1, opened + 1);
            for (int color = 0; color < limit; color++) {
                if (busy >> color & 1) {
                    continue;
                }
                for (int v : cand.vertices) {
                    vertex_colors_[v] |= uint64_t{1} << color;
                }
                chosen_.emplace_back(c, color);
                dfs(covered | cand.edges, std::max(opened, color + 1));
                chosen_.pop_back();
                for (int v : cand.vertices) {
                    vertex_colors_[v] &= ~(uint64_t{1} << color);
                }
                limit = std::min(limit, best_ - 1);
            }
        }
    }

    const WeightedGraph &g_;
    std::vector<Candidate> candidates_;
    std::vector<std::vector<int>> by_edge_;
    uint64_t full_ = 0;
    int best_;
    bool found_ = false;
    CliqueColoring witness_;
    std::vector<uint64_t> vertex_colors_;
    std::vector<std::pair<int, int>> chosen_;
};

CliqueColoring greedy_clique_coloring(const WeightedGraph &g) {
    EdgeIndex index(g);
    std::vector<char> covered(g.edges.size(), 0);
    std::vector<std::set<int>> vertex_colors(g.n);
    CliqueColoring out;
    for (size_t i = 0; i < g.edges.size(); i++) {
        if (covered[i]) {
            continue;
        }
        std::vector<int> clique{g.edges[i].k, g.edges[i].l};
        for (int v = 0; v < g.n; v++) {
            if (std::find(clique.begin(), clique.end(), v) != clique.end()) {
                continue;
            }
            bool ok = true;
            for (int u : clique) {
                int e = index(u, v);
                if (e < 0 || covered[e]) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                clique.push_back(v);
            }
        }
        std::sort(clique.begin(), clique.end());
        for (size_t a = 0; a < clique.size(); a++) {
            for (size_t b = a + 1; b < clique.size(); b++) {
                covered[index(clique[a], clique[b])] = 1;
            }
        }
        int color = 0;
        while (std::any_of(clique.begin(), clique.end(), [&](int v) {
            return vertex_colors[v].count(color) > 0;
        })) {
            color++;
        }
        for (int v : clique) {
            vertex_colors[v].insert(color);
        }
        out.cliques.push_back(std::move(clique));
        out.colors.push_back(color);
        out.num_colors = std::max(out.num_colors, color + 1);
    }
    return out;
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const WeightedGraph &g) {
    auto adj = g.neighbors();
    for (auto &a : adj) {
        std::sort(a.begin(), a.end());
    }
    std::vector<int> p(g.n);
    for (int v = 0; v < g.n; v++) {
        p[v] = v;
    }
    std::vector<int> r;
    std::vector<std::vector<int>> out;
    bron_kerbosch(adj, r, p, {}, out);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_valid_clique_coloring(const WeightedGraph &g, const CliqueColoring &c) {
    if (c.cliques.size() != c.colors.size()) {
        return false;
    }
    EdgeIndex index(g);
    std::vector<int> cover(g.edges.size(), 0);
    std::vector<std::set<int>> vertex_colors(g.n);
    for (size_t i = 0; i < c.cliques.size(); i++) {
        const auto &q = c.cliques[i];
        if (q.size() < 2 || !std::is_sorted(q.begin(), q.end()) || c.colors[i] < 0 || c.colors[i] >= c.num_colors) {
            return false;
        }
        for (size_t a = 0; a < q.size(); a++) {
            if (q[a] < 0 || q[a] >= g.n || (a > 0 && q[a] == q[a - 1])) {
                return false;
            }
            if (!vertex_colors[q[a]].insert(c.colors[i]).second) {
                return false;
            }
            for (size_t b = a + 1; b < q.size(); b++) {
                int e = index(q[a], q[b]);
                if (e < 0) {
                    return false;
                }
                cover[e]++;
            }
        }
    }
    return std::all_of(cover.begin(), cover.end(), [](int x) {
        return x == 1;
    });
}

CliqueColoringResult clique_coloring_index(const WeightedGraph &g, int exact_limit) {
    CliqueColoringResult out;
    out.witness = greedy_clique_coloring(g);
    out.index = out.witness.num_colors;
    const int m = static_cast<int>(g.edges.size());
    if (m == 0) {
        return out;
    }
    if (m > std::min(exact_limit, kMaxExactEdges)) {
        out.exact = out.index <= 1;
        return out;
    }

    // Every sub-clique (size >= 2) of a maximal clique is a candidate block.
    EdgeIndex index(g);
    std::map<std::vector<int>, uint64_t> seen;
    for (const auto &mc : maximal_cliques(g)) {
        const int s = static_cast<int>(mc.size());
        if (s < 2) {
            continue;
        }
        for (uint32_t mask = 0; mask < (uint32_t{1} << s); mask++) {
            if (std::popcount(mask) < 2) {
                continue;
            }
            std::vector<int> verts;
            for (int i = 0; i < s; i++) {
                if (mask >> i & 1) {
                    verts.push_back(mc[i]);
                }
            }
            if (seen.count(verts)) {
                continue;
            }
            uint64_t edges = 0;
            for (size_t a = 0; a < verts.size(); a++) {
                for (size_t b = a + 1; b < verts.size(); b++) {
                    edges |= uint64_t{1} << index(verts[a], verts[b]);
                }
            }
            seen.emplace(std::move(verts), edges);
        }
    }
    std::vector<Candidate> candidates;
    for (auto &[verts, edges] : seen) {
        candidates.push_back({verts, edges});
    }
    CliqueSearch search(g, std::move(candidates), out.index);
    if (search.run()) {
        out.index = search.best();
        out.witness = search.witness();
    }
    out.exact = true;
    return out;
}

}  // namespace zzsim
