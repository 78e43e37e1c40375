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

#include <optional>
#include <vector>

#include "zzsim/matrix.h"

namespace zzsim {

/// Two-point correlation table tr(rho sigma_a^k sigma_b^l), row index 3k + a.
struct CorrelationMatrix {
    int n = 0;
    Matrix values;
};

void validate(const CorrelationMatrix &c, double tol = 1e-9);

struct ProductTerm {
    double weight = 0;
    std::vector<Vec3> bloch;
};

/// Convex mixture of pure product states given by unit Bloch vectors.
struct ProductEnsemble {
    int n = 0;
    std::vector<ProductTerm> terms;

    /// Correlation table of the mixture. Off-diagonal blocks are the
    /// weighted sums of Bloch outer products; the diagonal blocks hold the
    /// symmetric part of tr(rho_k sigma_a sigma_b), i.e. the identity.
    CorrelationMatrix correlations() const;
};

void validate(const ProductEnsemble &e, double tol = 1e-9);

/// Aggregated lower and upper bounds on the overhead of a zz target against
/// the complete unit drift.
struct BoundsReport {
    double lower_spectral = 0;
    double upper_chromatic = 0;
    bool chromatic_exact = true;
    /// Clique coloring index of the support graph.
    int clique_index = 0;
    bool clique_exact = true;
    /// clique_index * w; only sound when every target weight equals the same w > 0.
    std::optional<double> upper_clique;
    std::optional<double> lp_optimum;
    /// Weyl bound r/(-q); set when the target is the negation of the drift.
    std::optional<double> inversion_lower;
    /// lower <= lp <= every present upper bound, within tolerance.
    bool consistent = true;
};

}  // namespace zzsim
