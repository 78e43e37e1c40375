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

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "support/expect.h"
#include "support/oracles.h"
#include "zzsim/planner.h"
#include "zzsim/verifier.h"

namespace zzsim {
namespace {

using testing::throws_with;

constexpr double kTol = 1e-9;

WeightedGraph graph(int n, std::vector<Edge> edges) {
    return canonicalize({n, std::move(edges)});
}

WeightedGraph star(int leaves) {
    WeightedGraph g{leaves + 1, {}};
    for (int v = 1; v <= leaves; v++) {
        g.edges.push_back({0, v, 1});
    }
    return g;
}

WeightedGraph cycle(int n) {
    WeightedGraph g{n, {}};
    for (int i = 0; i < n; i++) {
        g.edges.push_back({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n), 1});
    }
    return canonicalize(g);
}

WeightedGraph complete_bipartite(int a, int b) {
    WeightedGraph g{a + b, {}};
    for (int x = 0; x < a; x++) {
        for (int y = a; y < a + b; y++) {
            g.edges.push_back({x, y, 1});
        }
    }
    return g;
}

WeightedGraph petersen() {
    WeightedGraph p{10, {}};
    for (int i = 0; i < 5; i++) {
        p.edges.push_back({i, (i + 1) % 5, 1});
        p.edges.push_back({i, i + 5, 1});
        p.edges.push_back({5 + i, 5 + (i + 2) % 5, 1});
    }
    for (auto &e : p.edges) {
        if (e.k > e.l) {
            std::swap(e.k, e.l);
        }
    }
    return canonicalize(p);
}

/// Largest deviation of a sign schedule's average Hamiltonian from the target.
double sign_error(const SignSchedule &s, const WeightedGraph &target) {
    return max_abs_diff(average_hamiltonian(s, WeightedGraph::complete(s.n)), graph_to_jmatrix(target));
}

CMatrix exp_i(const CMatrix &h, double t = 1) {
    return testing::expm_taylor(h * Complex{0, t});
}

/// Dual feasibility and strong duality of an LP solution.
void expect_dual_certificate(const WeightedGraph &target, const LpSolution &sol) {
    const int n = target.n;
    ASSERT_EQ(sol.dual.size(), static_cast<size_t>(n * (n - 1) / 2));
    double objective = 0;
    size_t r = 0;
    for (int k = 0; k < n; k++) {
        for (int l = k + 1; l < n; l++) {
            objective += sol.dual[r++] * target.weight(k, l);
        }
    }
    EXPECT_NEAR(objective, sol.mu, 1e-9 * std::max(1.0, sol.mu));
    for (uint32_t p = 0; p < (1u << (n - 1)); p++) {
        auto s = sign_pattern(n, p);
        double lhs = 0;
        size_t row = 0;
        for (int k = 0; k < n; k++) {
            for (int l = k + 1; l < n; l++) {
                lhs += sol.dual[row++] * s[k] * s[l];
            }
        }
        ASSERT_LE(lhs, 1 + 1e-9) << "pattern " << p;
    }
}

// ---------------------------------------------------------------------------
// LP

TEST(OptimalPlan, StarNeedsOverheadTwo) {
    LpSolution sol = optimal_zz_plan(star(4));
    EXPECT_EQ(sol.status, LpStatus::optimal);
    EXPECT_NEAR(sol.mu, 2, kTol);
    ASSERT_EQ(sol.schedule.intervals.size(), 4u);
    for (const auto &iv : sol.schedule.intervals) {
        EXPECT_NEAR(iv.duration, 0.5, kTol);
        // One leaf flipped against the center and the other leaves.
        EXPECT_EQ(std::count(iv.signs.begin(), iv.signs.end(), -1), 1);
        EXPECT_EQ(iv.signs[0], 1);
    }
    EXPECT_LE(sign_error(sol.schedule, star(4)), kTol);
}

TEST(OptimalPlan, TriangleIsTheDrift) {
    LpSolution sol = optimal_zz_plan(WeightedGraph::complete(3));
    EXPECT_NEAR(sol.mu, 1, kTol);
    ASSERT_EQ(sol.schedule.intervals.size(), 1u);
    EXPECT_EQ(sign_string(sol.schedule.intervals[0].signs), "+++");
}

TEST(OptimalPlan, NegatedK4NeedsThree) {
    LpSolution sol = optimal_zz_plan(WeightedGraph::complete(4).negated());
    EXPECT_NEAR(sol.mu, 3, kTol);
    EXPECT_LE(sign_error(sol.schedule, WeightedGraph::complete(4).negated()), kTol);
}

TEST(OptimalPlan, MatchesFrozenReferenceOptima) {
    // Optima from an independent LP solver (HiGHS via scipy.optimize.linprog)
    // over the same 2^(n-1) sign-pattern columns.
    struct Case {
        const char *name;
        WeightedGraph g;
        double mu;
    };
    std::vector<Case> cases{
        {"C5", cycle(5), 2.0},
        {"P4", graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}}), 2.0},
        {"W5", graph(5, {{0, 1, 0.7}, {0, 2, -1.3}, {1, 3, 2.0}, {2, 4, 0.4}, {3, 4, -0.9}, {1, 4, 1.1}}), 4.0},
        {"-K3", WeightedGraph::complete(3).negated(), 3.0},
        {"-K4", WeightedGraph::complete(4).negated(), 3.0},
        {"-K5", WeightedGraph::complete(5).negated(), 5.0},
        {"-K6", WeightedGraph::complete(6).negated(), 5.0},
        {"K33", canonicalize(complete_bipartite(3, 3)), 3.0},
        {"Petersen", petersen(), 2.0},
    };
    for (const auto &c : cases) {
        LpSolution sol = optimal_zz_plan(c.g);
        EXPECT_NEAR(sol.mu, c.mu, kTol) << c.name;
        EXPECT_LE(sign_error(sol.schedule, c.g), kTol) << c.name;
        expect_dual_certificate(c.g, sol);
    }
}

TEST(OptimalPlan, MatchesVertexEnumerationOnSmallGraphs) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; trial++) {
        int n = 2 + trial % 3;
        WeightedGraph g = canonicalize(testing::random_graph(rng, n, 0.8, true));
        LpSolution sol = optimal_zz_plan(g);
        ASSERT_NEAR(sol.mu, testing::lp_vertex_enumeration(g), 1e-9) << "trial " << trial;
        ASSERT_LE(sign_error(sol.schedule, g), kTol);
    }
}

TEST(OptimalPlan, DualCertifiesOptimalityOnRandomGraphs) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; trial++) {
        int n = 3 + trial % 6;
        WeightedGraph g = canonicalize(testing::random_graph(rng, n, 0.5, true));
        LpSolution sol = optimal_zz_plan(g);
        ASSERT_EQ(sol.status, LpStatus::optimal);
        expect_dual_certificate(g, sol);
        ASSERT_NEAR(sol.schedule.overhead(), sol.mu, 1e-12 * std::max(1.0, sol.mu));
    }
}

TEST(OptimalPlan, EdgelessTargetHasZeroOverhead) {
    LpSolution sol = optimal_zz_plan(WeightedGraph::empty(5));
    EXPECT_NEAR(sol.mu, 0, kTol);
    EXPECT_TRUE(sol.schedule.intervals.empty());
}

TEST(OptimalPlan, IsDeterministic) {
    WeightedGraph g = cycle(7);
    LpSolution a = optimal_zz_plan(g);
    LpSolution b = optimal_zz_plan(g);
    EXPECT_EQ(a.schedule, b.schedule);
    EXPECT_EQ(a.basis, b.basis);
}

TEST(OptimalPlan, CapIsEnforced) {
    EXPECT_TRUE(throws_with<CapExceededError>([] { optimal_zz_plan(WeightedGraph::empty(17)); }, "cap"));
    EXPECT_TRUE(throws_with<CapExceededError>([] { optimal_zz_plan(WeightedGraph::empty(6), {5}); }, "cap"));
}

TEST(OptimalPlan, SignPatternsFixQubitZero) {
    EXPECT_EQ(sign_string(sign_pattern(4, 0)), "++++");
    EXPECT_EQ(sign_string(sign_pattern(4, 1)), "+-++");
    EXPECT_EQ(sign_string(sign_pattern(4, 6)), "++--");
}

// ---------------------------------------------------------------------------
// Lower bounds and majorization

TEST(SpectralLowerBound, Examples) {
    EXPECT_NEAR(spectral_lower_bound(star(4)), 2, 1e-12);
    for (int n = 2; n <= 7; n++) {
        EXPECT_NEAR(spectral_lower_bound(WeightedGraph::complete(n)), 1, 1e-12);
        EXPECT_NEAR(spectral_lower_bound(WeightedGraph::complete(n).negated()), n - 1, 1e-12);
    }
    EXPECT_EQ(spectral_lower_bound(WeightedGraph::empty(3)), 0);
}

TEST(SpectralLowerBound, JMatrixAgreesWithGraphOnZzTargets) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; trial++) {
        WeightedGraph g = canonicalize(testing::random_graph(rng, 5, 0.6, true));
        EXPECT_NEAR(spectral_lower_bound(graph_to_jmatrix(g)), spectral_lower_bound(g), 1e-10);
    }
}

TEST(InversionLowerBound, Examples) {
    for (int n = 2; n <= 7; n++) {
        EXPECT_NEAR(inversion_lower_bound(WeightedGraph::complete(n)), n - 1, 1e-12);
    }
    EXPECT_NEAR(inversion_lower_bound(graph(2, {{0, 1, 1}})), 1, 1e-12);
    EXPECT_NEAR(inversion_lower_bound(star(4)), 1, 1e-12);
    EXPECT_TRUE(throws_with([] { inversion_lower_bound(WeightedGraph::empty(3)); }, "no edges"));
}

TEST(InversionLowerBound, TakesWorstComponent) {
    // A triangle next to a single edge: the triangle dominates with 2.
    WeightedGraph g = graph(5, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {3, 4, 1}});
    EXPECT_NEAR(inversion_lower_bound(g), 2, 1e-12);
}

TEST(MajorizationFeasibility, Examples) {
    JMatrix k3 = graph_to_jmatrix(WeightedGraph::complete(3));
    EXPECT_TRUE(majorization_feasibility(k3, k3, 1));
    EXPECT_FALSE(majorization_feasibility(WeightedGraph::complete(3).negated(), WeightedGraph::complete(3), 0.5));
    EXPECT_TRUE(majorization_feasibility(WeightedGraph::complete(3).negated(), WeightedGraph::complete(3), 2));
    EXPECT_TRUE(throws_with([&] { majorization_feasibility(k3, graph_to_jmatrix(WeightedGraph::complete(4)), 1); },
                            "mismatch"));
}

TEST(MajorizationFeasibility, HoldsAtLpOptimum) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; trial++) {
        int n = 3 + trial % 5;
        WeightedGraph g = canonicalize(testing::random_graph(rng, n, 0.6, true));
        double mu = optimal_zz_plan(g).mu;
        EXPECT_TRUE(majorization_feasibility(g, WeightedGraph::complete(n), mu, 1e-9)) << "trial " << trial;
        EXPECT_GE(mu, spectral_lower_bound(g) - 1e-9);
    }
}

// ---------------------------------------------------------------------------
// Constructive sign schedules

TEST(RankOneSchedule, AllOnesIsTheDrift) {
    std::vector<double> jz(4, 1.0);
    SignSchedule s = rank_one_schedule(jz);
    ASSERT_EQ(s.intervals.size(), 1u);
    EXPECT_EQ(sign_string(s.intervals[0].signs), "++++");
    EXPECT_DOUBLE_EQ(s.intervals[0].duration, 1);
}

TEST(RankOneSchedule, OppositeSigns) {
    std::vector<double> jz{1, -1};
    SignSchedule s = rank_one_schedule(jz);
    ASSERT_EQ(s.intervals.size(), 1u);
    EXPECT_EQ(sign_string(s.intervals[0].signs), "+-");
    EXPECT_DOUBLE_EQ(average_hamiltonian(s, WeightedGraph::complete(2)).block(0, 1)(2, 2), -1);
}

TEST(RankOneSchedule, ProductWeights) {
    std::vector<double> jz{1, 0.5, 0.5};
    SignSchedule s = rank_one_schedule(jz);
    EXPECT_EQ(s.intervals.size(), 4u);
    JMatrix avg = average_hamiltonian(s, WeightedGraph::complete(3));
    EXPECT_NEAR(avg.block(0, 1)(2, 2), 0.5, 1e-15);
    EXPECT_NEAR(avg.block(0, 2)(2, 2), 0.5, 1e-15);
    EXPECT_NEAR(avg.block(1, 2)(2, 2), 0.25, 1e-15);
    EXPECT_NEAR(s.overhead(), 1, 1e-15);
}

TEST(RankOneSchedule, RandomProductsAreReproduced) {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> d(-1, 1);
    for (int trial = 0; trial < 1000; trial++) {
        int n = 2 + trial % 7;
        std::vector<double> jz(n);
        for (auto &x : jz) {
            x = d(rng);
        }
        SignSchedule s = rank_one_schedule(jz);
        JMatrix avg = average_hamiltonian(s, WeightedGraph::complete(n));
        for (int k = 0; k < n; k++) {
            for (int l = k + 1; l < n; l++) {
                ASSERT_NEAR(avg.block(k, l)(2, 2), jz[k] * jz[l], 1e-12);
            }
        }
        ASSERT_NEAR(s.overhead(), 1, 1e-12);
    }
}

TEST(RankOneSchedule, RejectsOutOfRange) {
    std::vector<double> jz{0.5, 1.5};
    EXPECT_TRUE(throws_with([&] { rank_one_schedule(jz); }, "outside [-1, 1]"));
}

TEST(WalshSchedule, TwoPairs) {
    SignSchedule s = clique_walsh_schedule(4, {{0, 1}, {2, 3}});
    ASSERT_EQ(s.intervals.size(), 2u);
    EXPECT_EQ(sign_string(s.intervals[0].signs), "++++");
    EXPECT_EQ(sign_string(s.intervals[1].signs), "++--");
    EXPECT_EQ(sign_error(s, graph(4, {{0, 1, 1}, {2, 3, 1}})), 0);
}

TEST(WalshSchedule, SingleCliqueIsTheDrift) {
    SignSchedule s = clique_walsh_schedule(3, {{0, 1, 2}});
    ASSERT_EQ(s.intervals.size(), 1u);
    EXPECT_EQ(s.intervals[0].duration, 1);
}

TEST(WalshSchedule, ThreeCliquesDecouple) {
    SignSchedule s = clique_walsh_schedule(5, {{0, 1}, {2}, {3, 4}});
    EXPECT_EQ(s.intervals.size(), 4u);
    for (const auto &iv : s.intervals) {
        EXPECT_EQ(iv.duration, 0.25);
    }
    EXPECT_EQ(sign_error(s, graph(5, {{0, 1, 1}, {3, 4, 1}})), 0);
}

TEST(WalshSchedule, RejectsNonPartitions) {
    EXPECT_TRUE(throws_with([] { clique_walsh_schedule(3, {{0, 1}, {1, 2}}); }, "appears"));
    EXPECT_TRUE(throws_with([] { clique_walsh_schedule(3, {{0, 1}}); }, "not covered"));
    EXPECT_TRUE(throws_with([] { clique_walsh_schedule(3, {{0, 1}, {}, {2}}); }, "empty"));
}

TEST(HadamardSchedule, TwoCliquesMatchWalsh) {
    std::vector<std::vector<int>> c{{0, 2}, {1, 3}};
    EXPECT_EQ(hadamard_schedule(4, c), clique_walsh_schedule(4, c));
}

TEST(HadamardSchedule, FiveCliquesUseEightIntervals) {
    std::vector<std::vector<int>> c{{0}, {1}, {2}, {3}, {4}};
    EXPECT_EQ(hadamard_schedule(5, c).intervals.size(), 8u);
    EXPECT_EQ(clique_walsh_schedule(5, c).intervals.size(), 16u);
    EXPECT_EQ(sign_error(hadamard_schedule(5, c), WeightedGraph::empty(5)), 0);
}

TEST(HadamardSchedule, ThreeCliquesDecouple) {
    SignSchedule s = hadamard_schedule(6, {{0, 1}, {2, 3}, {4, 5}});
    EXPECT_EQ(sign_error(s, graph(6, {{0, 1, 1}, {2, 3, 1}, {4, 5, 1}})), 0);
    EXPECT_EQ(s.overhead(), 1);
}

// ---------------------------------------------------------------------------
// Two-qubit plans

TEST(TwoQubitPlan, ZzIsFree) {
    TwoQubitPlan p = two_qubit_plan(Mat3::diag(0, 0, 1));
    EXPECT_NEAR(p.mu, 1, 1e-12);
    ASSERT_EQ(p.schedule.intervals.size(), 1u);
    // Each frame may only rotate about z, and the zz sign must survive.
    double sign = 1;
    for (const auto &u : p.schedule.intervals[0].frame.u) {
        Vec3 image = adjoint_rotation(u) * Vec3{0, 0, 1};
        EXPECT_NEAR(std::abs(image[2]), 1, 1e-12);
        sign *= image[2];
    }
    EXPECT_NEAR(sign, 1, 1e-12);
}

TEST(TwoQubitPlan, DiagonalCanonicalForm) {
    TwoQubitPlan p = two_qubit_plan(Mat3::diag(0.7, 0.4, 0.2));
    EXPECT_NEAR(p.mu, 1.3, 1e-12);
    JMatrix drift = graph_to_jmatrix(WeightedGraph::complete(2));
    JMatrix target = JMatrix::zero(2);
    target.set_block(0, 1, Mat3::diag(0.7, 0.4, 0.2));
    EXPECT_LE(max_abs_diff(average_hamiltonian(p.schedule, drift), target), 1e-12);
}

TEST(TwoQubitPlan, XxRotatesZToXOnBothQubits) {
    TwoQubitPlan p = two_qubit_plan(Mat3::diag(1, 0, 0));
    EXPECT_NEAR(p.mu, 1, 1e-12);
    ASSERT_EQ(p.schedule.intervals.size(), 1u);
    for (const auto &u : p.schedule.intervals[0].frame.u) {
        Vec3 image = adjoint_rotation(u) * Vec3{0, 0, 1};
        EXPECT_NEAR(std::abs(image[0]), 1, 1e-12);
    }
}

TEST(TwoQubitPlan, RandomTargetsStayBelowPairNorm) {
    std::mt19937_64 rng(1);
    JMatrix drift = graph_to_jmatrix(WeightedGraph::complete(2));
    for (int trial = 0; trial < 300; trial++) {
        Mat3 j = testing::random_mat3(rng);
        TwoQubitPlan p = two_qubit_plan(j);
        double sum = std::abs(p.svd.s[0]) + std::abs(p.svd.s[1]) + std::abs(p.svd.s[2]);
        ASSERT_NEAR(p.mu, sum, 1e-12);
        ASSERT_NEAR(sum, pair_norm(j), 1e-9);
        JMatrix target = JMatrix::zero(2);
        target.set_block(0, 1, j);
        ASSERT_LE(max_abs_diff(average_hamiltonian(p.schedule, drift), target), 1e-12);
    }
}

TEST(TwoQubitPlan, LocalTermsAreFree) {
    std::mt19937_64 rng(2);
    Mat3 j = testing::random_mat3(rng);
    Vec3 a = testing::random_vec3(rng);
    Vec3 b = testing::random_vec3(rng);
    TwoQubitPlan p = two_qubit_plan(j, a, b);
    EXPECT_NEAR(p.mu, two_qubit_plan(j).mu, 1e-15);
    ASSERT_EQ(p.schedule.local_fields.size(), 2u);
    EXPECT_EQ(p.schedule.local_fields[0], a);
    EXPECT_LE(p.mu, pair_norm(j, a, b) + 1e-9);
}

// ---------------------------------------------------------------------------
// Gates and circuits

TEST(GateAngle, Examples) {
    EXPECT_NEAR(gate_angle(CMatrix::identity(4)), 0, 1e-12);
    EXPECT_NEAR(gate_angle(exp_i(pair_hamiltonian(Mat3::diag(0, 0, 1)), 0.3)), 0.3, 1e-12);
}

TEST(GateAngle, RandomGeneratorsBelowHalfPi) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; trial++) {
        Mat3 j = testing::random_mat3(rng);
        Vec3 a = testing::random_vec3(rng);
        Vec3 b = testing::random_vec3(rng);
        double scale = 0.7 / pair_norm(j, a, b);
        CMatrix h = pair_hamiltonian(j * scale, {a[0] * scale, a[1] * scale, a[2] * scale},
                                     {b[0] * scale, b[1] * scale, b[2] * scale});
        ASSERT_NEAR(gate_angle(exp_i(h)), 0.7, 1e-9);
    }
}

TEST(GateAngle, NeverExceedsGeneratorNorm) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> size(0.1, 6.0);
    for (int trial = 0; trial < 300; trial++) {
        Mat3 j = testing::random_mat3(rng);
        Vec3 a = testing::random_vec3(rng, 0.5);
        Vec3 b = testing::random_vec3(rng, 0.5);
        double norm = size(rng);
        double scale = norm / pair_norm(j, a, b);
        CMatrix h = pair_hamiltonian(j * scale, {a[0] * scale, a[1] * scale, a[2] * scale},
                                     {b[0] * scale, b[1] * scale, b[2] * scale});
        double angle = gate_angle(exp_i(h));
        ASSERT_LE(angle, norm + 1e-9);
        if (norm < std::numbers::pi / 2 - 1e-6) {
            ASSERT_NEAR(angle, norm, 1e-9);
        }
    }
}

TEST(GateGenerator, ReproducesGate) {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 100; trial++) {
        Mat3 j = testing::random_mat3(rng, 1.5);
        Vec3 a = testing::random_vec3(rng);
        CMatrix u = exp_i(pair_hamiltonian(j, a, {}));
        GateGenerator g = gate_generator(u);
        CMatrix back = exp_i(pair_hamiltonian(g.terms.j, g.terms.a, g.terms.b));
        // Equal up to a global phase in {1, i, -1, -i}.
        Complex phase = (back.adjoint() * u)(0, 0);
        ASSERT_LE(testing::frobenius(back * phase - u), 1e-8);
        ASSERT_NEAR(g.angle, pair_norm(g.terms.j, g.terms.a, g.terms.b), 1e-8);
    }
}

TEST(GateAngle, RejectsNonUnitary) {
    EXPECT_TRUE(throws_with([] { gate_angle(CMatrix::identity(4) * Complex{2}); }, "unitary"));
    EXPECT_TRUE(throws_with([] { gate_angle(CMatrix::identity(4) * std::polar(1.0, 0.3)); }, "determinant"));
}

TEST(LocalGates, DetectedByRealignment) {
    Mat2c a = so3_to_su2(rotation_about({1, 2, 3}, 0.8));
    Mat2c b = so3_to_su2(rotation_about({0, 1, -1}, 2.1));
    CMatrix u = kron(a.to_dense(), b.to_dense());
    EXPECT_TRUE(is_local_gate(u));
    EXPECT_FALSE(is_local_gate(exp_i(pair_hamiltonian(Mat3::diag(0, 0, 1)), 0.1)));
}

TEST(WeightedDepth, Examples) {
    CMatrix g3 = pair_exponential(Mat3::diag(0, 0, 1), 0.3);
    CMatrix g5 = pair_exponential(Mat3::diag(0, 0, 1), 0.5);
    EXPECT_EQ(weighted_depth(Circuit{4, {}}), 0);
    Circuit one{4, {{{0, 1, g3}, {2, 3, g5}}}};
    EXPECT_NEAR(weighted_depth(one), 0.5, 1e-12);
    Circuit two{4, {{{0, 1, g3}, {2, 3, g5}}, {{0, 1, g3}, {2, 3, g5}}}};
    EXPECT_NEAR(weighted_depth(two), 1.0, 1e-12);
    Circuit mixed{4, {{{0, 1, g3}}, {{2, 3, g5}}}};
    EXPECT_NEAR(weighted_depth(mixed), 0.8, 1e-12);
}

TEST(WeightedDepth, LocalGatesAreFree) {
    Mat2c a = so3_to_su2(rotation_about({1, 0, 0}, 2.0));
    CMatrix local = kron(a.to_dense(), CMatrix::identity(2));
    EXPECT_EQ(weighted_depth(Circuit{2, {{{0, 1, local}}}}), 0);
}

TEST(CircuitStepPlan, SinglePairDecouplesTheRest) {
    const double t = 0.37;
    CircuitStep step{{1, 3, pair_exponential(Mat3::diag(0, 0, 1), t)}};
    StepPlan p = circuit_step_plan(5, step);
    EXPECT_NEAR(p.mu, t, 1e-12);
    JMatrix want = JMatrix::zero(5);
    want.set_block(1, 3, Mat3::diag(0, 0, t));
    EXPECT_LE(max_abs_diff(p.target, want), 1e-12);
    JMatrix avg = average_hamiltonian(p.schedule, graph_to_jmatrix(WeightedGraph::complete(5)));
    EXPECT_LE(max_abs_diff(avg, want), 1e-12);
}

TEST(CircuitStepPlan, FullMatchingOfEqualGates) {
    const Mat3 j = Mat3::diag(0.2, 0.1, 0.4);
    CMatrix u = pair_exponential(j, 1.0);
    CircuitStep step{{0, 1, u}, {2, 3, u}, {4, 5, u}};
    StepPlan p = circuit_step_plan(6, step);
    EXPECT_NEAR(p.mu, gate_angle(u), 1e-9);
    JMatrix avg = average_hamiltonian(p.schedule, graph_to_jmatrix(WeightedGraph::complete(6)));
    EXPECT_LE(max_abs_diff(avg, p.target), 1e-12);
    for (int k : {0, 2, 4}) {
        EXPECT_LE((p.target.block(k, k + 1) - j).max_abs(), 1e-9);
    }
}

TEST(CircuitStepPlan, EmptyStep) {
    StepPlan p = circuit_step_plan(3, {});
    EXPECT_EQ(p.mu, 0);
    EXPECT_TRUE(p.schedule.intervals.empty());
}

TEST(CircuitStepPlan, RandomStepsReproduceTheirGenerators) {
    std::mt19937_64 rng(12);
    JMatrix drift = graph_to_jmatrix(WeightedGraph::complete(6));
    for (int trial = 0; trial < 30; trial++) {
        CircuitStep step;
        for (int k : {0, 2, 4}) {
            if (rng() % 3 != 0) {
                step.push_back({k, k + 1, pair_exponential(testing::random_mat3(rng, 0.5), 1.0,
                                                           testing::random_vec3(rng, 0.3))});
            }
        }
        StepPlan p = circuit_step_plan(6, step);
        ASSERT_LE(max_abs_diff(average_hamiltonian(p.schedule, drift), p.target), 1e-12);
        double worst = 0;
        for (const auto &g : step) {
            worst = std::max(worst, gate_angle(g.u));
        }
        ASSERT_LE(p.mu, worst + 1e-9);
        // Each gate is exp(i (H_kl + local fields)) up to a global phase.
        for (const auto &g : step) {
            Vec3 a = p.fields.empty() ? Vec3{} : p.fields[g.k];
            Vec3 b = p.fields.empty() ? Vec3{} : p.fields[g.l];
            CMatrix back = exp_i(pair_hamiltonian(p.target.block(g.k, g.l), a, b));
            Complex phase = (back.adjoint() * g.u)(0, 0);
            ASSERT_LE(testing::frobenius(back * phase - g.u), 1e-8);
        }
    }
}

TEST(CircuitStepPlan, RejectsOverlap) {
    CMatrix u = pair_exponential(Mat3::diag(0, 0, 1), 0.2);
    EXPECT_TRUE(throws_with([&] { circuit_step_plan(3, {{0, 1, u}, {1, 2, u}}); }, "disjoint"));
}

TEST(CompileParallelCircuit, PerfectMatchingIsOneStep) {
    JMatrix h = graph_to_jmatrix(graph(4, {{0, 1, 1}, {2, 3, -1}}));
    Circuit c = compile_parallel_circuit(h, 0.1);
    EXPECT_EQ(c.steps.size(), 1u);
    EXPECT_NEAR(weighted_depth(c), 0.1, 1e-12);
}

TEST(CompileParallelCircuit, AdjacentEdgesNeedTwoSteps) {
    JMatrix h = graph_to_jmatrix(graph(3, {{0, 1, 1}, {1, 2, 1}}));
    Circuit c = compile_parallel_circuit(h, 0.1);
    EXPECT_EQ(c.steps.size(), 2u);
    EXPECT_NEAR(weighted_depth(c), 0.2, 1e-12);
}

TEST(CompileParallelCircuit, DepthBoundedByWeightedChromaticIndex) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 30; trial++) {
        JMatrix h = JMatrix::zero(5);
        for (int k = 0; k < 5; k++) {
            for (int l = k + 1; l < 5; l++) {
                if (rng() % 2) {
                    h.set_block(k, l, testing::random_mat3(rng));
                }
            }
        }
        if (h.blocks.empty()) {
            continue;
        }
        Circuit c = compile_parallel_circuit(h, 0.05);
        ASSERT_LE(weighted_depth(c), weighted_chromatic_index(h).value * 0.05 + 1e-9);
    }
}

TEST(CompileParallelCircuit, ErrorIsSecondOrderInDt) {
    JMatrix h = JMatrix::zero(3);
    h.set_block(0, 1, Mat3::identity());
    h.set_block(1, 2, Mat3::diag(0.5, 0.2, 0.9));
    std::vector<double> errors;
    for (double dt : {0.1, 0.05, 0.025}) {
        Circuit c = compile_parallel_circuit(h, dt);
        errors.push_back(operator_distance(circuit_unitary(c), unitary_of(h, dt)));
    }
    for (size_t i = 0; i + 1 < errors.size(); i++) {
        double ratio = errors[i] / errors[i + 1];
        EXPECT_GT(ratio, 3.2);
        EXPECT_LT(ratio, 4.8);
    }
}

TEST(CompileParallelCircuit, RejectsNonPositiveDt) {
    EXPECT_TRUE(throws_with([] { compile_parallel_circuit(JMatrix::zero(2), 0); }, "dt"));
}

// ---------------------------------------------------------------------------
// Drift reduction and inversion

TEST(ZzExtraction, HeisenbergKeepsOnlyZz) {
    ZzExtraction x = zz_extraction_plan(Mat3::identity());
    EXPECT_EQ(x.jzz, 1);
    EXPECT_FALSE(x.warning);
    ASSERT_EQ(x.schedule.intervals.size(), 4u);
    JMatrix drift = JMatrix::zero(2);
    drift.set_block(0, 1, Mat3::identity());
    JMatrix avg = average_hamiltonian(x.schedule, drift);
    EXPECT_LE((avg.block(0, 1) - Mat3::diag(0, 0, 1)).max_abs(), 1e-12);
}

TEST(ZzExtraction, RandomPairKeepsItsZzEntry) {
    std::mt19937_64 rng(15);
    Mat3 j = testing::random_mat3(rng);
    ZzExtraction x = zz_extraction_plan(j);
    JMatrix drift = JMatrix::zero(2);
    drift.set_block(0, 1, j);
    JMatrix avg = average_hamiltonian(x.schedule, drift);
    EXPECT_LE((avg.block(0, 1) - Mat3::diag(0, 0, j(2, 2))).max_abs(), 1e-12);
    EXPECT_NEAR(x.schedule.overhead(), 1, 1e-15);
}

TEST(ZzExtraction, PureZzIsUnchangedAndZeroWarns) {
    EXPECT_EQ(zz_extraction_plan(Mat3::diag(0, 0, 2.5)).jzz, 2.5);
    ZzExtraction x = zz_extraction_plan(Mat3::diag(1, 1, 0));
    EXPECT_EQ(x.jzz, 0);
    EXPECT_TRUE(x.warning);
}

TEST(ExtractionScale, SmallestZzMagnitude) {
    JMatrix d = JMatrix::zero(3);
    d.set_block(0, 1, Mat3::diag(1, 1, -0.5));
    d.set_block(1, 2, Mat3::diag(0, 0, 2));
    EXPECT_EQ(extraction_scale(d), 0.5);
}

TEST(InvertPlan, SingleEdge) {
    InversionPlan p = invert_plan(graph(2, {{0, 1, 1}}), false);
    EXPECT_EQ(p.mu, 1);
    ASSERT_EQ(p.schedule.intervals.size(), 1u);
    JMatrix drift = graph_to_jmatrix(graph(2, {{0, 1, 1}}));
    EXPECT_LE(max_abs_diff(average_hamiltonian(p.schedule, drift), drift.scaled(-1)), 1e-15);
}

TEST(InvertPlan, CompleteBipartite) {
    WeightedGraph g = canonicalize(complete_bipartite(2, 3));
    InversionPlan p = invert_plan(g, false);
    EXPECT_EQ(p.mu, 1);
    JMatrix drift = graph_to_jmatrix(g);
    EXPECT_LE(max_abs_diff(average_hamiltonian(p.schedule, drift), drift.scaled(-1)), 1e-15);
}

TEST(InvertPlan, TriangleFallsBackToLp) {
    try {
        invert_plan(WeightedGraph::complete(3), false);
        FAIL() << "expected NonBipartiteError";
    } catch (const NonBipartiteError &e) {
        EXPECT_EQ(e.odd_cycle.size(), 3u);
    }
    double mu = optimal_zz_plan(WeightedGraph::complete(3).negated()).mu;
    EXPECT_GE(mu, 2 - kTol);
    EXPECT_LE(mu, 3 + kTol);
}

TEST(InvertPlan, GeneralModeOnArbitraryCouplings) {
    std::mt19937_64 rng(16);
    JMatrix drift = JMatrix::zero(5);
    for (int x : {0, 1}) {
        for (int y : {2, 3, 4}) {
            drift.set_block(x, y, testing::random_mat3(rng));
        }
    }
    InversionPlan p = invert_plan(drift, true);
    EXPECT_EQ(p.mu, 3);
    EXPECT_EQ(p.schedule.intervals.size(), 3u);
    EXPECT_LE(max_abs_diff(average_hamiltonian(p.schedule, drift), drift.scaled(-1)), 1e-12);
    EXPECT_TRUE(throws_with([&] { invert_plan(drift, false); }, "not pure zz"));
}

// ---------------------------------------------------------------------------
// Bounds report

TEST(BoundsReport, Star) {
    BoundsReport b = bounds_report(star(4));
    EXPECT_NEAR(b.lower_spectral, 2, kTol);
    EXPECT_EQ(b.clique_index, 4);
    ASSERT_TRUE(b.upper_clique.has_value());
    EXPECT_EQ(*b.upper_clique, 4);
    ASSERT_TRUE(b.lp_optimum.has_value());
    EXPECT_NEAR(*b.lp_optimum, 2, kTol);
    EXPECT_NEAR(b.upper_chromatic, 4, 1e-12);
    EXPECT_TRUE(b.consistent);
}

TEST(BoundsReport, DisjointCliques) {
    WeightedGraph g = graph(7, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {3, 4, 1}, {5, 6, 1}});
    BoundsReport b = bounds_report(g);
    EXPECT_GE(b.lower_spectral, 1 - kTol);
    EXPECT_EQ(b.clique_index, 1);
    EXPECT_NEAR(*b.lp_optimum, 1, kTol);
    EXPECT_TRUE(b.consistent);
}

TEST(BoundsReport, Triangle) {
    BoundsReport b = bounds_report(WeightedGraph::complete(3));
    EXPECT_NEAR(*b.lp_optimum, 1, kTol);
    EXPECT_NEAR(b.lower_spectral, 1, kTol);
}

TEST(BoundsReport, NegatedCompleteCarriesWeylBound) {
    BoundsReport b = bounds_report(WeightedGraph::complete(4).negated());
    ASSERT_TRUE(b.inversion_lower.has_value());
    EXPECT_NEAR(*b.inversion_lower, 3, 1e-12);
    EXPECT_FALSE(b.upper_clique.has_value());
    EXPECT_TRUE(b.consistent);
}

TEST(BoundsReport, LpSkippedAboveCap) {
    BoundsReport b = bounds_report(WeightedGraph::complete(6), {5, 12, kTol});
    EXPECT_FALSE(b.lp_optimum.has_value());
}

TEST(BoundsReport, SandwichOnRandomGraphs) {
    std::mt19937_64 rng(18);
    for (int trial = 0; trial < 200; trial++) {
        int n = 2 + trial % 9;
        bool weighted = trial % 2 == 0;
        WeightedGraph g = canonicalize(testing::random_graph(rng, n, 0.5, weighted));
        BoundsReport b = bounds_report(g);
        ASSERT_TRUE(b.lp_optimum.has_value());
        double lp = *b.lp_optimum;
        ASSERT_LE(b.lower_spectral, lp + kTol) << "trial " << trial;
        ASSERT_LE(lp, b.upper_chromatic + kTol) << "trial " << trial;
        if (!weighted) {
            // Mixed weights can beat clique_index * max|w|; see BoundsReport docs.
            ASSERT_LE(lp, b.clique_index * g.max_abs_weight() + kTol) << "trial " << trial;
        }
        if (b.upper_clique) {
            ASSERT_LE(lp, *b.upper_clique + kTol);
        }
        ASSERT_TRUE(b.consistent);
    }
}

}  // namespace
}  // namespace zzsim
