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

// Independent oracles for plans: exact average Hamiltonians, dense
// propagators, Trotter-error scaling, and separable-state certificates.
// Nothing here calls into the planner.

#include <optional>
#include <span>
#include <vector>

#include "zzsim/certificate.h"
#include "zzsim/circuit.h"
#include "zzsim/graph.h"
#include "zzsim/jmatrix.h"
#include "zzsim/schedule.h"

namespace zzsim {

// ---------------------------------------------------------------------------
// Pauli algebra

/// sigma_x, sigma_y, sigma_z for axis 0, 1, 2.
const Mat2c &pauli(int axis);

/// 4x4 matrix of sum J_ab sigma_a (x) sigma_b + a . sigma (x) I + I (x) b . sigma.
CMatrix pair_hamiltonian(const PairMatrix &j, const Vec3 &a = {}, const Vec3 &b = {});

/// Pauli coefficients of a traceless Hermitian 4x4 matrix.
struct PairTerms {
    PairMatrix j;
    Vec3 a{};
    Vec3 b{};
};
PairTerms decompose_pair(const CMatrix &h);

/// Operator norm of the 4x4 pair term, from the spectrum of its real
/// 8x8 representation [[Re, -Im], [Im, Re]].
double pair_norm(const PairMatrix &j, const Vec3 &a = {}, const Vec3 &b = {});

/// Adjoint action of u on the Pauli vector: R(b, a) = tr(sigma_b u sigma_a u^dagger) / 2.
Mat3 adjoint_rotation(const Mat2c &u);

// ---------------------------------------------------------------------------
// Average Hamiltonians

/// Sum over intervals of duration * (conjugated drift). Sign schedules use
/// integer sign products, so each entry is w_kl * sum_j tau_j s_jk s_jl.
JMatrix average_hamiltonian(const SignSchedule &s, const WeightedGraph &drift);

/// Frame schedules transform each drift block by the adjoint rotations of
/// the two qubits' frames: R_k J_kl R_l^T.
JMatrix average_hamiltonian(const ConjugationSchedule &s, const JMatrix &drift);

// ---------------------------------------------------------------------------
// Propagators

struct SimulationCaps {
    int diagonal = 10;
    int general = 6;
};

/// A 2^n x 2^n unitary, stored as its diagonal when it is diagonal in the
/// computational basis. Qubit 0 is the most significant bit.
struct Unitary {
    int n = 0;
    bool diagonal = false;
    std::vector<Complex> diag;
    CMatrix dense;

    CMatrix to_dense() const;
};

/// Largest singular value (power iteration on A^dagger A, 1e-10 relative
/// convergence; exact eigen-decomposition for dimension <= 64).
double operator_norm(const CMatrix &a);

/// Operator-norm distance ||a - b||.
double operator_distance(const Unitary &a, const Unitary &b);

/// Dense 2^n matrix of a pair Hamiltonian plus local fields.
CMatrix hamiltonian_matrix(const JMatrix &h, const LocalFields &fields = {});

/// exp(i H t). Pure-zz input without fields takes the exact diagonal path
/// (n <= caps.diagonal); anything else is exponentiated through a Hermitian
/// eigen-decomposition (n <= caps.general). Throws CapExceededError.
Unitary unitary_of(const JMatrix &h, double t, const LocalFields &fields = {}, SimulationCaps caps = {});

/// Product of interval propagators for a sign schedule; every interval is
/// diagonal, so the result is exact (no Trotter error) at any epsilon.
Unitary schedule_unitary(const SignSchedule &s, const WeightedGraph &drift, double epsilon, SimulationCaps caps = {});

/// Trotterized product over `trotter_steps` repetitions of the schedule scaled
/// by epsilon / trotter_steps. Each repetition applies the intervals in order,
/// then the local fields; the trailing frame is applied once at the end.
Unitary schedule_unitary(const ConjugationSchedule &s, const JMatrix &drift, double epsilon, int trotter_steps = 1,
                         SimulationCaps caps = {});

/// Product of all gates, steps applied in order.
Unitary circuit_unitary(const Circuit &c, SimulationCaps caps = {});

struct TrotterScaling {
    std::vector<double> epsilons;
    std::vector<double> errors;
    /// errors[i] / errors[i + 1]; NaN when both errors are below 1e-12.
    std::vector<double> ratios;
    /// Every error below 1e-12 (commuting schedule).
    bool exact = false;
};

/// Errors ||schedule_unitary(eps) - exp(i eps target)|| on a halving sequence
/// of epsilons. Throws ValidationError unless there are at least two
/// epsilons and each is half the previous.
TrotterScaling trotter_scaling(const ConjugationSchedule &s, const JMatrix &drift, const JMatrix &target,
                               const LocalFields &target_fields, std::span<const double> epsilons,
                               SimulationCaps caps = {});
TrotterScaling trotter_scaling(const SignSchedule &s, const WeightedGraph &drift, const WeightedGraph &target,
                               std::span<const double> epsilons, SimulationCaps caps = {});

// ---------------------------------------------------------------------------
// Separable-state certificates

struct CorrelationCertificate {
    CorrelationMatrix correlations;
    ProductEnsemble ensemble;
    double mu = 0;
    /// max |correlations - (J_target / mu + I)| over all entries.
    double max_error = 0;
    bool psd_ok = false;
};

/// Builds the product ensemble of a sign schedule against the complete unit
/// drift: interval j contributes weight tau_j / mu, split evenly between the
/// Bloch assignment (0, 0, s_jk) and its antipode. Throws ValidationError when
/// the schedule is empty.
CorrelationCertificate correlation_certificate(const SignSchedule &s, const WeightedGraph &target,
                                               double tol = 1e-9);

// ---------------------------------------------------------------------------
// Reports

struct VerificationReport {
    double avg_hamiltonian_error = 0;
    std::optional<double> unitary_error;
    std::optional<double> trotter_ratio;
    bool psd_ok = false;
    double mu = 0;
    bool mismatch = false;
};

struct VerifyOptions {
    double tol = 1e-9;
    /// When set, compares propagators at this epsilon and measures the
    /// Trotter ratio e(eps) / e(eps / 2).
    std::optional<double> epsilon;
    int trotter_steps = 1;
    SimulationCaps caps;
};

/// Sign schedule against a zz target, drift = complete unit graph.
VerificationReport verify(const SignSchedule &s, const WeightedGraph &target, const VerifyOptions &opts = {});

/// Frame schedule against an arbitrary target and drift. Unitary checks are
/// skipped (left empty) when the size caps are exceeded.
VerificationReport verify(const ConjugationSchedule &s, const JMatrix &drift, const JMatrix &target,
                          const LocalFields &target_fields, const VerifyOptions &opts = {});

}  // namespace zzsim
