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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "zzsim/certificate.h"
#include "zzsim/circuit.h"
#include "zzsim/errors.h"
#include "zzsim/graph.h"
#include "zzsim/graphops.h"
#include "zzsim/jmatrix.h"
#include "zzsim/linalg.h"
#include "zzsim/schedule.h"
#include "zzsim/verifier.h"

namespace zzsim {

// ---------------------------------------------------------------------------
// Optimal zz plans

inline constexpr int kLpMaxQubits = 16;

/// Sign vector of pattern p on n qubits: qubit 0 is +, qubit i >= 1 is -
/// when bit i - 1 of p is set.
std::vector<int8_t> sign_pattern(int n, uint32_t p);

enum class LpStatus { optimal, iteration_cap };

std::string to_string(LpStatus s);

struct LpSolution {
    double mu = 0;
    SignSchedule schedule;
    /// Patterns with positive duration, ascending; schedule.intervals follows this order.
    std::vector<uint32_t> basis;
    LpStatus status = LpStatus::optimal;
    /// Dual certificate: sum_{k<l} y_kl s_k s_l <= 1 for every pattern, and
    /// sum y_kl w_kl = mu at optimality. Indexed like the pairs (0,1), (0,2), ...
    std::vector<double> dual;
    int iterations = 0;
};

struct LpOptions {
    int max_qubits = kLpMaxQubits;
    int max_iterations = 200000;
};

/// Minimizes sum tau_p subject to sum_p tau_p s_p,k s_p,l = w_kl over all
/// 2^(n-1) sign patterns, by revised primal simplex with Bland's rule.
/// Throws CapExceededError above max_qubits; ConvergenceError when phase one
/// hits the iteration cap (phase two reports status iteration_cap instead).
LpSolution optimal_zz_plan(const WeightedGraph &target, const LpOptions &opts = {});

// ---------------------------------------------------------------------------
// Bounds

/// max(0, -lambda_min) of the adjacency (or 3n x 3n J-matrix).
double spectral_lower_bound(const WeightedGraph &target);
double spectral_lower_bound(const JMatrix &target);

/// Weyl bound r / (-q) for simulating -H_d with H_d, maximized over the
/// connected components that carry edges. Throws ValidationError without edges.
double inversion_lower_bound(const WeightedGraph &drift);

/// Spec(target) majorized by mu * Spec(drift). Necessary for simulating the
/// target with overhead mu; false certifies infeasibility.
bool majorization_feasibility(const JMatrix &target, const JMatrix &drift, double mu, double tol = kDefaultTol);
bool majorization_feasibility(const WeightedGraph &target, const WeightedGraph &drift, double mu,
                              double tol = kDefaultTol);

struct BoundsOptions {
    int lp_cap_n = kLpMaxQubits;
    int exact_coloring_edge_cap = kDefaultExactColoringEdges;
    double tol = kDefaultTol;
};

/// All bounds for a zz target against the complete unit drift.
BoundsReport bounds_report(const WeightedGraph &target, const BoundsOptions &opts = {});

// ---------------------------------------------------------------------------
// Constructive sign schedules

/// Product-weight schedule: sign vector u gets duration prod_i (1 + u_i jz_i) / 2.
/// Realizes J_kl = jz_k jz_l with overhead 1. At most 20 qubits.
SignSchedule rank_one_schedule(std::span<const double> jz);

/// Orthogonal sign rows over 2^(omega-1) intervals: clique 0 is all +, clique
/// i >= 1 is - where bit i - 1 of the interval index is set. Cliques must
/// partition 0..n-1 (singletons allowed).
SignSchedule clique_walsh_schedule(int n, const std::vector<std::vector<int>> &cliques);

/// Rows of the Sylvester-Hadamard matrix of order 2^ceil(log2 omega).
SignSchedule hadamard_schedule(int n, const std::vector<std::vector<int>> &cliques);

/// Throws ValidationError unless `cliques` partitions 0..n-1 into nonempty sets.
void validate_partition(int n, const std::vector<std::vector<int>> &cliques);

// ---------------------------------------------------------------------------
// Two-qubit and circuit plans

struct TwoQubitPlan {
    ConjugationSchedule schedule;
    double mu = 0;
    SignedSvd svd;
};

/// Rotates the drift into each sigma_a (x) sigma_a term of the canonical form
/// J = U diag(s) V and runs it for |s_a|. Local terms become zero-duration
/// local fields.
TwoQubitPlan two_qubit_plan(const PairMatrix &j, const Vec3 &a = {}, const Vec3 &b = {});

/// Minimal operator norm of a traceless Hermitian H with exp(iH) = u.
double gate_angle(const CMatrix &u, double tol = kDefaultTol);

struct GateGenerator {
    PairTerms terms;
    double angle = 0;
};

/// The minimizing generator behind gate_angle, in the Pauli basis.
GateGenerator gate_generator(const CMatrix &u, double tol = kDefaultTol);

/// True when u is a tensor product of one-qubit gates.
bool is_local_gate(const CMatrix &u, double tol = kDefaultTol);

/// Sum over steps of the largest angle of a non-local gate in the step.
double weighted_depth(const Circuit &c, double tol = kDefaultTol);

struct StepPlan {
    ConjugationSchedule schedule;
    double mu = 0;
    /// The simulated generator: exp(i (target + fields)) reproduces the step
    /// up to a global phase.
    JMatrix target;
    LocalFields fields;
};

/// Runs every pair's two-qubit plan in parallel, decoupling everything else
/// with Hadamard sign rows. mu is the largest pair overhead.
StepPlan circuit_step_plan(int n, const CircuitStep &step, double tol = kDefaultTol);

/// Layered circuit whose steps color the interaction graphs above each norm
/// level; the product approximates exp(i H dt).
Circuit compile_parallel_circuit(const JMatrix &h, double dt, int exact_edge_cap = kDefaultExactColoringEdges);

/// exp(i t H) for a two-qubit pair Hamiltonian.
CMatrix pair_exponential(const PairMatrix &j, double t, const Vec3 &a = {}, const Vec3 &b = {});

// ---------------------------------------------------------------------------
// Drift reduction and inversion

struct ZzExtraction {
    ConjugationSchedule schedule;
    double jzz = 0;
    /// Set when J_zz is zero, in which case extraction yields no coupling.
    bool warning = false;
};

/// Averages the pair over conjugations by I, sigma_z on either qubit, and both.
ZzExtraction zz_extraction_plan(const PairMatrix &j, double tol = kDefaultTol);

/// Smallest |J_zz| over the stored drift blocks. Overheads computed for a unit
/// zz drift are divided by this value after extraction.
double extraction_scale(const JMatrix &drift);

struct NonBipartiteError : ValidationError {
    NonBipartiteError(const std::string &what, std::vector<int> cycle)
        : ValidationError(what), odd_cycle(std::move(cycle)) {
    }
    std::vector<int> odd_cycle;
};

struct InversionPlan {
    ConjugationSchedule schedule;
    double mu = 0;
    Bipartition parts;
};

/// Conjugates the X side of a bipartite drift: by sigma_x alone (pure zz,
/// overhead 1) or by sigma_x, sigma_y, sigma_z in turn (general, overhead 3).
/// Throws NonBipartiteError carrying an odd cycle.
InversionPlan invert_plan(const JMatrix &drift, bool general);
InversionPlan invert_plan(const WeightedGraph &drift, bool general);

}  // namespace zzsim
