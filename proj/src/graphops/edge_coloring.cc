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
#include <cstdint>

#include "zzsim/graphops.h"

namespace zzsim {

bool is_valid_edge_coloring(const WeightedGraph &g, const EdgeColoring &c) {
    if (c.color.size() != g.edges.size()) {
        return false;
    }
    for (size_t i = 0; i < g.edges.size(); i++) {
        if (c.color[i] < 0 || c.color[i] >= c.colors) {
            return false;
        }
        for (size_t j = i + 1; j < g.edges.size(); j++) {
            const Edge &a = g.edges[i];
            const Edge &b = g.edges[j];
            bool adjacent = a.k == b.k || a.k == b.l || a.l == b.k || a.l == b.l;
            if (adjacent && c.color[i] == c.color[j]) {
                return false;
            }
        }
    }
    return true;
}

namespace {

class MisraGries {
   public:
    explicit MisraGries(const WeightedGraph &g)
        : n_(g.n),
          palette_(g.max_degree() + 1),
          adj_(g.neighbors()),
          color_(static_cast<size_t>(g.n) * g.n, -1),
          used_(static_cast<size_t>(g.n) * palette_, 0) {
    }

    void color_edge(int u, int v) {
        std::vector<int> fan = maximal_fan(u, v);
        int c = first_free(u);
        int d = first_free(fan.back());
        if (c != d) {
            invert_path(u, c, d);
        }
        // After the inversion some prefix of the fan ends at a vertex where d is free.
        size_t w = 0;
        for (size_t i = 0; i < fan.size(); i++) {
            if (!is_fan_prefix(u, fan, i)) {
                break;
            }
            if (is_free(fan[i], d)) {
                w = i;
                break;
            }
        }
        for (size_t j = 0; j < w; j++) {
            int next = color(u, fan[j + 1]);
            set_color(u, fan[j + 1], -1);
            set_color(u, fan[j], next);
        }
        set_color(u, fan[w], d);
    }

    int color(int a, int b) const {
        return color_[static_cast<size_t>(a) * n_ + b];
    }
    int palette() const {
        return palette_;
    }

   private:
    bool is_free(int x, int c) const {
        return !used_[static_cast<size_t>(x) * palette_ + c];
    }

    int first_free(int x) const {
        for (int c = 0; c < palette_; c++) {
            if (is_free(x, c)) {
                return c;
            }
        }
        return palette_;  // unreachable: degree < palette
    }

    void set_color(int a, int b, int c) {
        int old = color(a, b);
        if (old >= 0) {
            used_[static_cast<size_t>(a) * palette_ + old] = 0;
            used_[static_cast<size_t>(b) * palette_ + old] = 0;
        }
        color_[static_cast<size_t>(a) * n_ + b] = c;
        color_[static_cast<size_t>(b) * n_ + a] = c;
        if (c >= 0) {
            used_[static_cast<size_t>(a) * palette_ + c] = 1;
            used_[static_cast<size_t>(b) * palette_ + c] = 1;
        }
    }

    std::vector<int> maximal_fan(int u, int v) const {
        std::vector<int> fan{v};
        std::vector<char> in_fan(n_, 0);
        in_fan[v] = 1;
        bool grew = true;
        while (grew) {
            grew = false;
            for (int w : adj_[u]) {
                int cw = color(u, w);
                if (!in_fan[w] && cw >= 0 && is_free(fan.back(), cw)) {
                    fan.push_back(w);
                    in_fan[w] = 1;
                    grew = true;
                    break;
                }
            }
        }
        return fan;
    }

    bool is_fan_prefix(int u, const std::vector<int> &fan, size_t end) const {
        for (size_t j = 1; j <= end; j++) {
            int cj = color(u, fan[j]);
            if (cj < 0 || !is_free(fan[j - 1], cj)) {
                return false;
            }
        }
        return true;
    }

    // Swaps c and d along the maximal path from u whose edges alternate d, c, d, ...
    void invert_path(int u, int c, int d) {
        std::vector<std::pair<int, int>> path;
        int x = u;
        int prev = -1;
        int want = d;
        while (true) {
            int next = -1;
            for (int y : adj_[x]) {
                if (y != prev && color(x, y) == want) {
                    next = y;
                    break;
                }
            }
            if (next < 0) {
                break;
            }
            path.emplace_back(x, next);
            prev = x;
            x = next;
            want = want == d ? c : d;
        }
        std::vector<int> old;
        for (auto [a, b] : path) {
            old.push_back(color(a, b));
            set_color(a, b, -1);
        }
        for (size_t i = 0; i < path.size(); i++) {
            set_color(path[i].first, path[i].second, old[i] == c ? d : c);
        }
    }

    int n_;
    int palette_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> color_;
    std::vector<uint8_t> used_;
};

// Depth-first search for a proper coloring with at most k colors. Edges are
// colored in order; a new color is only opened as the next unused index.
class ExactColorer {
   public:
    ExactColorer(const WeightedGraph &g, int k) : g_(g), k_(k), color_(g.edges.size(), -1), mask_(g.n, 0) {
    }

    bool run() {
        return dfs(0, 0);
    }

    const std::vector<int> &colors() const {
        return color_;
    }

   private:
    bool dfs(size_t i, int opened) {
        if (i == g_.edges.size()) {
            return true;
        }
        const Edge &e = g_.edges[i];
        uint64_t busy = mask_[e.k] | mask_[e.l];
        int limit = std::min(k_, opened + 1);
        for (int c = 0; c < limit; c++) {
            if (busy & (uint64_t{1} << c)) {
                continue;
            }
            color_[i] = c;
            mask_[e.k] |= uint64_t{1} << c;
            mask_[e.l] |= uint64_t{1} << c;
            if (dfs(i + 1, std::max(opened, c + 1))) {
                return true;
            }
            mask_[e.k] &= ~(uint64_t{1} << c);
            mask_[e.l] &= ~(uint64_t{1} << c);
        }
        color_[i] = -1;
        return false;
    }

    const WeightedGraph &g_;
    int k_;
    std::vector<int> color_;
    std::vector<uint64_t> mask_;
};

}  // namespace

EdgeColoring misra_gries_coloring(const WeightedGraph &g) {
    EdgeColoring out;
    if (g.edges.empty()) {
        return out;
    }
    MisraGries mg(g);
    for (const auto &e : g.edges) {
        mg.color_edge(e.k, e.l);
    }
    out.color.reserve(g.edges.size());
    for (const auto &e : g.edges) {
        out.color.push_back(mg.color(e.k, e.l));
    }
    out.colors = 1 + *std::max_element(out.color.begin(), out.color.end());
    return out;
}

ChromaticIndexResult chromatic_index(const WeightedGraph &g, int exact_edge_cap) {
    ChromaticIndexResult out;
    out.lower_bound = g.max_degree();
    if (g.edges.empty()) {
        return out;
    }
    if (static_cast<int>(g.edges.size()) <= exact_edge_cap && out.lower_bound < 63) {
        // Vizing: Delta + 1 colors always suffice.
        for (int k = out.lower_bound; k <= out.lower_bound + 1; k++) {
            ExactColorer ec(g, k);
            if (ec.run()) {
                out.coloring.color = ec.colors();
                out.coloring.colors = k;
                out.chromatic_index = k;
                out.exact = true;
                return out;
            }
        }
    }
    out.coloring = misra_gries_coloring(g);
    out.chromatic_index = out.coloring.colors;
    out.exact = out.coloring.colors == out.lower_bound;
    return out;
}

}  // namespace zzsim
