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
#include <string>

#include "zzsim/planner.h"

namespace zzsim {

namespace {

double lower_from(const Matrix &a) {
    if (a.rows() == 0) {
        return 0;
    }
    return std::max(0.0, -sym_eig(a, kDefaultTol, false).smallest());
}

std::vector<double> scaled_spectrum(const Matrix &a, double s) {
    std::vector<double> v = sym_eig(a, kDefaultTol, false).values;
    for (auto &x : v) {
        x *= s;
    }
    return v;
}

bool is_negated_complete(const WeightedGraph &g) {
    if (g.n < 2 || g.edges.size() != static_cast<size_t>(g.n) * (g.n - 1) / 2) {
        return false;
    }
    return std::all_of(g.edges.begin(), g.edges.end(), [](const Edge &e) {
        return e.w == -1;
    });
}

}  // namespace

double spectral_lower_bound(const WeightedGraph &target) {
    validate(target);
    return lower_from(target.adjacency());
}

double spectral_lower_bound(const JMatrix &target) {
    validate(target);
    return lower_from(target.dense());
}

double inversion_lower_bound(const WeightedGraph &drift) {
    validate(drift);
    bool any = std::any_of(drift.edges.begin(), drift.edges.end(), [](const Edge &e) {
        return e.w != 0;
    });
    if (!any) {
        throw ValidationError("inversion_lower_bound: drift has no edges");
    }
    double best = 0;
    for (const auto &comp : connected_components(drift.support())) {
        if (comp.size() < 2) {
            continue;
        }
        Spectrum s = sym_eig(induced_subgraph(drift, comp).adjacency(), kDefaultTol, false);
        if (s.smallest() < 0) {
            best = std::max(best, s.largest() / -s.smallest());
        }
    }
    return best;
}

bool majorization_feasibility(const JMatrix &target, const JMatrix &drift, double mu, double tol) {
    validate(target);
    validate(drift);
    if (target.n != drift.n) {
        throw ValidationError("majorization_feasibility: qubit count mismatch");
    }
    auto x = scaled_spectrum(target.dense(), 1);
    auto y = scaled_spectrum(drift.dense(), mu);
    return majorized_by(x, y, tol);
}

bool majorization_feasibility(const WeightedGraph &target, const WeightedGraph &drift, double mu, double tol) {
    validate(target);
    validate(drift);
    if (target.n != drift.n) {
        throw ValidationError("majorization_feasibility: qubit count mismatch");
    }
    auto x = scaled_spectrum(target.adjacency(), 1);
    auto y = scaled_spectrum(drift.adjacency(), mu);
    return majorized_by(x, y, tol);
}

BoundsReport bounds_report(const WeightedGraph &target, const BoundsOptions &opts) {
    validate(target);
    BoundsReport r;
    r.lower_spectral = spectral_lower_bound(target);

    WeightedChromaticIndex wci = weighted_chromatic_index(graph_to_jmatrix(target), opts.exact_coloring_edge_cap);
    r.upper_chromatic = wci.value;
    r.chromatic_exact = wci.exact;

    WeightedGraph support = target.support();
    CliqueColoringResult cc = clique_coloring_index(support, opts.exact_coloring_edge_cap);
    r.clique_index = cc.index;
    r.clique_exact = cc.exact;
    // Each clique class runs as a block of unit couplings, so the bound is
    // only sound when every present weight is the same positive value.
    std::vector<double> weights;
    for (const auto &e : target.edges) {
        if (e.w != 0) {
            weights.push_back(e.w);
        }
    }
    if (weights.empty()) {
        r.upper_clique = 0.0;
    } else if (weights.front() > 0 && std::all_of(weights.begin(), weights.end(), [&](double w) {
                   return w == weights.front();
               })) {
        r.upper_clique = cc.index * weights.front();
    }

    if (target.n <= opts.lp_cap_n) {
        r.lp_optimum = optimal_zz_plan(target, {opts.lp_cap_n}).mu;
    }
    if (is_negated_complete(target)) {
        r.inversion_lower = inversion_lower_bound(WeightedGraph::complete(target.n));
    }

    const double slack = opts.tol * std::max(1.0, target.max_abs_weight()) * std::max(1, target.n);
    if (r.lp_optimum) {
        double lp = *r.lp_optimum;
        r.consistent = r.lower_spectral <= lp + slack && lp <= r.upper_chromatic + slack &&
                       (!r.upper_clique || lp <= *r.upper_clique + slack) &&
                       (!r.inversion_lower || *r.inversion_lower <= lp + slack);
    } else {
        r.consistent = r.lower_spectral <= r.upper_chromatic + slack &&
                       (!r.upper_clique || r.lower_spectral <= *r.upper_clique + slack);
    }
    return r;
}

}  // namespace zzsim
