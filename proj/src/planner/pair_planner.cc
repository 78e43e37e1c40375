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
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "zzsim/planner.h"

namespace zzsim {

namespace {

constexpr double kPi = std::numbers::pi;

// Rotations taking e_z to e_x, e_y, e_z.
const std::array<Mat3, 3> &axis_rotations() {
    static const std::array<Mat3, 3> r{
        rotation_about({0, 1, 0}, kPi / 2),
        rotation_about({1, 0, 0}, -kPi / 2),
        Mat3::identity(),
    };
    return r;
}

void check_gate(const CMatrix &u, double tol) {
    if (u.rows() != 4 || u.cols() != 4) {
        throw ValidationError("gate: expected a 4x4 matrix");
    }
    if (max_abs_diff(u.adjoint() * u, CMatrix::identity(4)) > std::max(tol, 1e-12) * 10) {
        throw ValidationError("gate: matrix is not unitary");
    }
}

}  // namespace

TwoQubitPlan two_qubit_plan(const PairMatrix &j, const Vec3 &a, const Vec3 &b) {
    TwoQubitPlan out;
    out.svd = svd3_special(j);
    out.schedule.n = 2;
    const Mat3 flip = Mat3::diag(1, -1, -1);
    for (int axis = 0; axis < 3; axis++) {
        double s = out.svd.s[axis];
        if (std::abs(s) <= kPruneDuration) {
            continue;
        }
        Mat3 ra = out.svd.u * axis_rotations()[axis];
        if (s < 0) {
            ra = ra * flip;
        }
        Mat3 rb = out.svd.v.transpose() * axis_rotations()[axis];
        LocalFrame f{{so3_to_su2(ra), so3_to_su2(rb)}};
        out.schedule.intervals.push_back({std::move(f), std::abs(s)});
        out.mu += std::abs(s);
    }
    if (norm(a) != 0 || norm(b) != 0) {
        out.schedule.local_fields = {a, b};
    }
    return out;
}

GateGenerator gate_generator(const CMatrix &u, double tol) {
    check_gate(u, tol);
    UnitaryEigen eig = unitary_eigen(u, tol);
    const auto &th = eig.phases;
    double phase_sum = th[0] + th[1] + th[2] + th[3];
    double det_err = std::abs(std::polar(1.0, phase_sum) - Complex{1});
    if (det_err > std::max(tol, 1e-12) * 100) {
        throw ValidationError("gate: determinant is not 1");
    }

    double best = std::numeric_limits<double>::infinity();
    std::array<double, 4> best_vals{};
    std::array<int, 4> m{};
    for (m[0] = -2; m[0] <= 2; m[0]++) {
        for (m[1] = -2; m[1] <= 2; m[1]++) {
            for (m[2] = -2; m[2] <= 2; m[2]++) {
                for (m[3] = -2; m[3] <= 2; m[3]++) {
                    std::array<double, 4> v{};
                    double sum = 0;
                    double mx = 0;
                    for (int i = 0; i < 4; i++) {
                        v[i] = th[i] + 2 * kPi * m[i];
                        sum += v[i];
                        mx = std::max(mx, std::abs(v[i]));
                    }
                    if (std::abs(sum) <= 1e-6 && mx < best - 1e-12) {
                        best = mx;
                        best_vals = v;
                    }
                }
            }
        }
    }

    // H = V diag(values) V^dagger, then read off its Pauli coefficients.
    CMatrix h(4, 4);
    for (size_t k = 0; k < 4; k++) {
        for (size_t r = 0; r < 4; r++) {
            for (size_t c = 0; c < 4; c++) {
                h(r, c) += eig.vectors(r, k) * best_vals[k] * std::conj(eig.vectors(c, k));
            }
        }
    }
    GateGenerator out;
    out.terms = decompose_pair(h);
    out.angle = best;
    return out;
}

double gate_angle(const CMatrix &u, double tol) {
    return gate_generator(u, tol).angle;
}

CMatrix pair_exponential(const PairMatrix &j, double t, const Vec3 &a, const Vec3 &b) {
    HermitianSpectrum s = herm_eig(pair_hamiltonian(j, a, b));
    CMatrix out(4, 4);
    for (size_t k = 0; k < 4; k++) {
        Complex ph = std::polar(1.0, s.values[k] * t);
        for (size_t r = 0; r < 4; r++) {
            for (size_t c = 0; c < 4; c++) {
                out(r, c) += s.vectors(r, k) * ph * std::conj(s.vectors(c, k));
            }
        }
    }
    return out;
}

bool is_local_gate(const CMatrix &u, double tol) {
    check_gate(u, tol);
    // Realignment R[(i1 j1), (i2 j2)] = u[(i1 i2), (j1 j2)] has rank one iff u = A (x) B.
    CMatrix r(4, 4);
    for (int i1 = 0; i1 < 2; i1++) {
        for (int j1 = 0; j1 < 2; j1++) {
            for (int i2 = 0; i2 < 2; i2++) {
                for (int j2 = 0; j2 < 2; j2++) {
                    r(2 * i1 + j1, 2 * i2 + j2) = u(2 * i1 + i2, 2 * j1 + j2);
                }
            }
        }
    }
    std::vector<double> sv = herm_eig(r.adjoint() * r).values;
    return sv[1] <= std::max(tol, 1e-12) * 1e-3 * sv[0];
}

double weighted_depth(const Circuit &c, double tol) {
    validate(c, std::max(tol, 1e-12) * 10);
    double total = 0;
    for (const auto &step : c.steps) {
        double worst = 0;
        for (const auto &g : step) {
            if (!is_local_gate(g.u, tol)) {
                worst = std::max(worst, gate_angle(g.u, tol));
            }
        }
        total += worst;
    }
    return total;
}

ZzExtraction zz_extraction_plan(const PairMatrix &j, double tol) {
    const Mat2c iz{{Complex{0, 1}, Complex{0}, Complex{0}, Complex{0, -1}}};
    const Mat2c id = Mat2c::identity();
    ZzExtraction out;
    out.schedule.n = 2;
    for (const auto &[a, b] : std::array<std::pair<Mat2c, Mat2c>, 4>{{{id, id}, {id, iz}, {iz, id}, {iz, iz}}}) {
        out.schedule.intervals.push_back({LocalFrame{{a, b}}, 0.25});
    }
    out.jzz = j(2, 2);
    out.warning = std::abs(out.jzz) <= tol;
    return out;
}

double extraction_scale(const JMatrix &drift) {
    double scale = std::numeric_limits<double>::infinity();
    for (const auto &[key, m] : drift.blocks) {
        scale = std::min(scale, std::abs(m(2, 2)));
    }
    return drift.blocks.empty() ? 0.0 : scale;
}

InversionPlan invert_plan(const JMatrix &drift, bool general) {
    validate(drift);
    WeightedGraph support{drift.n, {}};
    for (const auto &[key, m] : drift.blocks) {
        if (m.max_abs() != 0) {
            support.edges.push_back({key.first, key.second, 1.0});
        }
    }
    InversionPlan out;
    out.parts = bipartition(support);
    if (!out.parts.bipartite) {
        std::string cycle;
        for (int v : out.parts.odd_cycle) {
            cycle += (cycle.empty() ? "" : "-") + std::to_string(v + 1);
        }
        throw NonBipartiteError("invert_plan: drift is not bipartite (odd cycle " + cycle +
                                    "); use the LP plan on the negated drift instead",
                                out.parts.odd_cycle);
    }
    if (!general && !drift.is_pure_zz(0)) {
        throw ValidationError("invert_plan: drift is not pure zz; use general mode");
    }
    std::vector<int> flip_axes = general ? std::vector<int>{0, 1, 2} : std::vector<int>{0};
    out.schedule.n = drift.n;
    for (int axis : flip_axes) {
        // i sigma_a has determinant 1 and conjugates like sigma_a.
        Mat2c g = Complex{0, 1} * pauli(axis);
        LocalFrame f = LocalFrame::identity(drift.n);
        for (int q : out.parts.x) {
            f.u[q] = g;
        }
        out.schedule.intervals.push_back({std::move(f), 1.0});
    }
    out.mu = static_cast<double>(flip_axes.size());
    return out;
}

InversionPlan invert_plan(const WeightedGraph &drift, bool general) {
    validate(drift);
    return invert_plan(graph_to_jmatrix(drift), general);
}

}  // namespace zzsim
