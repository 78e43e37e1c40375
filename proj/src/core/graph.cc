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

#include "zzsim/graph.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zzsim/errors.h"

namespace zzsim {

namespace {

std::string edge_location(size_t index, const Edge &e) {
    std::ostringstream ss;
    ss << "edge #" << (index + 1) << " (" << (e.k + 1) << "," << (e.l + 1) << ")";
    return ss.str();
}

bool edge_key_less(const Edge &a, const Edge &b) {
    return a.k != b.k ? a.k < b.k : a.l < b.l;
}

}  // namespace

WeightedGraph WeightedGraph::complete(int n, double w) {
    WeightedGraph g{n, {}};
    for (int k = 0; k < n; k++) {
        for (int l = k + 1; l < n; l++) {
            g.edges.push_back({k, l, w});
        }
    }
    return g;
}

WeightedGraph WeightedGraph::empty(int n) {
    return {n, {}};
}

Matrix WeightedGraph::adjacency() const {
    Matrix a(n, n);
    for (const auto &e : edges) {
        a(e.k, e.l) = e.w;
        a(e.l, e.k) = e.w;
    }
    return a;
}

double WeightedGraph::weight(int k, int l) const {
    if (k > l) {
        std::swap(k, l);
    }
    auto it = std::lower_bound(edges.begin(), edges.end(), Edge{k, l, 0}, edge_key_less);
    if (it != edges.end() && it->k == k && it->l == l) {
        return it->w;
    }
    return 0;
}

bool WeightedGraph::has_edge(int k, int l) const {
    if (k > l) {
        std::swap(k, l);
    }
    auto it = std::lower_bound(edges.begin(), edges.end(), Edge{k, l, 0}, edge_key_less);
    return it != edges.end() && it->k == k && it->l == l;
}

WeightedGraph WeightedGraph::negated() const {
    WeightedGraph g = *this;
    for (auto &e : g.edges) {
        e.w = -e.w;
    }
    return g;
}

WeightedGraph WeightedGraph::support() const {
    WeightedGraph g{n, {}};
    for (const auto &e : edges) {
        if (e.w != 0) {
            g.edges.push_back({e.k, e.l, 1.0});
        }
    }
    return g;
}

std::vector<std::vector<int>> WeightedGraph::neighbors() const {
    std::vector<std::vector<int>> adj(n);
    for (const auto &e : edges) {
        adj[e.k].push_back(e.l);
        adj[e.l].push_back(e.k);
    }
    for (auto &a : adj) {
        std::sort(a.begin(), a.end());
    }
    return adj;
}

int WeightedGraph::max_degree() const {
    std::vector<int> deg(n, 0);
    for (const auto &e : edges) {
        deg[e.k]++;
        deg[e.l]++;
    }
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

double WeightedGraph::max_abs_weight() const {
    double m = 0;
    for (const auto &e : edges) {
        m = std::max(m, std::abs(e.w));
    }
    return m;
}

void validate(const WeightedGraph &g) {
    if (g.n < 1) {
        throw ValidationError("graph: qubit count must be at least 1, got " + std::to_string(g.n));
    }
    for (size_t i = 0; i < g.edges.size(); i++) {
        const Edge &e = g.edges[i];
        if (e.k < 0 || e.k >= g.n || e.l < 0 || e.l >= g.n) {
            throw ValidationError("graph: " + edge_location(i, e) + ": vertex out of range [1, " +
                                  std::to_string(g.n) + "]");
        }
        if (e.k == e.l) {
            throw ValidationError("graph: " + edge_location(i, e) + ": self-loop");
        }
        if (e.k > e.l) {
            throw ValidationError("graph: " + edge_location(i, e) + ": not canonical (expected k < l)");
        }
        if (!std::isfinite(e.w)) {
            throw ValidationError("graph: " + edge_location(i, e) + ": non-finite weight");
        }
        if (i > 0) {
            const Edge &p = g.edges[i - 1];
            if (p.k == e.k && p.l == e.l) {
                throw ValidationError("graph: " + edge_location(i, e) + ": duplicate edge");
            }
            if (!edge_key_less(p, e)) {
                throw ValidationError("graph: " + edge_location(i, e) + ": edges not sorted");
            }
        }
    }
}

WeightedGraph canonicalize(WeightedGraph g) {
    if (g.n < 1) {
        throw ValidationError("graph: qubit count must be at least 1, got " + std::to_string(g.n));
    }
    for (size_t i = 0; i < g.edges.size(); i++) {
        Edge &e = g.edges[i];
        if (e.k == e.l) {
            throw ValidationError("graph: " + edge_location(i, e) + ": self-loop");
        }
        if (e.k > e.l) {
            std::swap(e.k, e.l);
        }
    }
    std::stable_sort(g.edges.begin(), g.edges.end(), edge_key_less);
    validate(g);
    return g;
}

}  // namespace zzsim
