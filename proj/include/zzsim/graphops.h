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

#include <vector>

#include "zzsim/graph.h"
#include "zzsim/jmatrix.h"

namespace zzsim {

inline constexpr int kDefaultExactColoringEdges = 12;

/// Unweighted graph on the pairs whose pair-term operator norm exceeds r.
/// Throws ValidationError for negative r.
WeightedGraph threshold_graph(const JMatrix &h, double r);

/// color[i] is the color of g.edges[i], in [0, colors).
struct EdgeColoring {
    std::vector<int> color;
    int colors = 0;
};

bool is_valid_edge_coloring(const WeightedGraph &g, const EdgeColoring &c);

struct ChromaticIndexResult {
    /// Number of colors used by `coloring`; the chromatic index when exact.
    int chromatic_index = 0;
    EdgeColoring coloring;
    bool exact = true;
    /// Maximum degree, always a lower bound.
    int lower_bound = 0;
};

/// Exact search (depth-first over edges with symmetry breaking) when the
/// graph has at most `exact_edge_cap` edges, Misra-Gries (Delta + 1) beyond.
/// A Misra-Gries coloring that happens to use Delta colors is reported exact.
ChromaticIndexResult chromatic_index(const WeightedGraph &g, int exact_edge_cap = kDefaultExactColoringEdges);

/// Proper edge coloring with at most max_degree + 1 colors.
EdgeColoring misra_gries_coloring(const WeightedGraph &g);

/// Pair norms grouped into distinct levels 0 = levels[0] < levels[1] < ...
/// Norms within a relative 1e-12 of each other share a level.
struct NormLevels {
    std::vector<double> levels;
    /// One entry per stored block of the source; `w` holds the pair norm.
    std::vector<Edge> pairs;
    /// pairs[i] sits at levels[level_of[i]].
    std::vector<int> level_of;

    /// Interaction graph above levels[i]: the pairs at strictly higher levels.
    WeightedGraph graph_above(int n, int i) const;
};

NormLevels norm_levels(const JMatrix &h);

/// Integral over r of the chromatic index of the interaction graph at r,
/// evaluated exactly on the piecewise-constant levels. When a level's graph
/// exceeds the exact cap the Misra-Gries count is used, which keeps the value
/// a valid upper bound; `exact` reports whether that happened.
struct WeightedChromaticIndex {
    double value = 0;
    bool exact = true;
};

WeightedChromaticIndex weighted_chromatic_index(const JMatrix &h, int exact_edge_cap = kDefaultExactColoringEdges);

/// Edge partition into cliques of g plus a coloring in which cliques that
/// share a vertex get different colors.
struct CliqueColoring {
    /// Sorted vertex sets, each of size >= 2 and complete in g.
    std::vector<std::vector<int>> cliques;
    std::vector<int> colors;
    int num_colors = 0;
};

bool is_valid_clique_coloring(const WeightedGraph &g, const CliqueColoring &c);

struct CliqueColoringResult {
    int index = 0;
    CliqueColoring witness;
    bool exact = true;
};

/// Smallest number of colors over clique partitions of the edge set.
/// Branch and bound when g has at most `exact_limit` edges (capped at 64),
/// greedy clique growth otherwise.
CliqueColoringResult clique_coloring_index(const WeightedGraph &g, int exact_limit = kDefaultExactColoringEdges);

/// Bron-Kerbosch with pivoting; each clique sorted, list in lexicographic order.
std::vector<std::vector<int>> maximal_cliques(const WeightedGraph &g);

struct Bipartition {
    bool bipartite = false;
    std::vector<int> x;
    std::vector<int> y;
    /// Vertices of an odd cycle in order (only when not bipartite).
    std::vector<int> odd_cycle;
};

/// BFS 2-coloring; isolated vertices land in x.
Bipartition bipartition(const WeightedGraph &g);

/// Components ordered by smallest vertex; each component sorted.
std::vector<std::vector<int>> connected_components(const WeightedGraph &g);

/// Subgraph induced by `vertices` (sorted), relabeled 0..size-1.
WeightedGraph induced_subgraph(const WeightedGraph &g, const std::vector<int> &vertices);

}  // namespace zzsim
