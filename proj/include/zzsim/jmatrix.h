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

#include <map>
#include <utility>
#include <vector>

#include "zzsim/graph.h"
#include "zzsim/matrix.h"

namespace zzsim {

/// Coefficients J_{ab} of sum_{a,b} J_{ab} sigma_a (x) sigma_b for one qubit pair.
using PairMatrix = Mat3;

/// Per-qubit local field h such that the local term is h . sigma.
using LocalFields = std::vector<Vec3>;

/// Block form of a pair-interaction Hamiltonian on n qubits. Only blocks with
/// k < l are stored; block (l, k) is the transpose of block (k, l) and
/// diagonal blocks are zero.
struct JMatrix {
    int n = 0;
    std::map<std::pair<int, int>, PairMatrix> blocks;

    static JMatrix zero(int n) {
        return {n, {}};
    }

    /// Block (k, l) in either orientation; zero when absent or k == l.
    PairMatrix block(int k, int l) const;
    /// Stores (k, l) (transposing when k > l). Requires k != l.
    void set_block(int k, int l, const PairMatrix &m);
    void add_to_block(int k, int l, const PairMatrix &m);

    /// The symmetric 3n x 3n matrix with row index 3k + a.
    Matrix dense() const;

    JMatrix scaled(double s) const;
    bool is_pure_zz(double tol = 0) const;
};

void validate(const JMatrix &j);

/// Embeds each edge weight into the zz entry of its block.
JMatrix graph_to_jmatrix(const WeightedGraph &g);

/// Inverse of graph_to_jmatrix on pure-zz input: one edge per stored block,
/// weight = zz entry.
WeightedGraph zz_weights(const JMatrix &j);

/// Largest entrywise difference over all blocks of a and b (same n).
double max_abs_diff(const JMatrix &a, const JMatrix &b);

}  // namespace zzsim
