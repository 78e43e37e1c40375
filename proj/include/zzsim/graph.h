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

#include "zzsim/matrix.h"

namespace zzsim {

/// An undirected weighted edge. Vertices are 0-based; canonical edges have k < l.
struct Edge {
    int k = 0;
    int l = 0;
    double w = 1.0;

    bool operator==(const Edge &) const = default;
};

/// A zz-coupling graph on qubits 0..n-1. Used both for targets and for drifts
/// (the default drift is the complete graph with unit weights). An unweighted
/// graph is a weighted graph whose weights are all 1.
///
/// Canonical form: every edge has k < l, edges are sorted by (k, l) and keys
/// are unique. Use `canonicalize` to produce one from arbitrary input.
struct WeightedGraph {
    int n = 0;
    std::vector<Edge> edges;

    static WeightedGraph complete(int n, double w = 1.0);
    static WeightedGraph empty(int n);

    /// Symmetric n x n adjacency matrix with zero diagonal.
    Matrix adjacency() const;

    /// Weight of (k, l) in either order; 0 when absent.
    double weight(int k, int l) const;
    bool has_edge(int k, int l) const;

    /// Same edge set with every weight multiplied by -1.
    WeightedGraph negated() const;
    /// Edges with nonzero weight, all weights set to 1.
    WeightedGraph support() const;

    std::vector<std::vector<int>> neighbors() const;
    int max_degree() const;
    double max_abs_weight() const;

    bool operator==(const WeightedGraph &) const = default;
};

/// Checks every invariant of a canonical graph and throws ValidationError
/// naming the first violation (vertex numbers in messages are 1-based).
void validate(const WeightedGraph &g);

/// Orients each edge as k < l, sorts, and validates. Duplicate keys are an
/// error rather than being merged.
WeightedGraph canonicalize(WeightedGraph g);

}  // namespace zzsim
