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

#include <cmath>
#include <limits>
#include <string>

#include "zzsim/errors.h"
#include "zzsim/linalg.h"
#include "zzsim/verifier.h"

namespace zzsim {

namespace {

constexpr double kExactError = 1e-12;

size_t dim_of(int n) {
    return size_t{1} << n;
}

size_t bit_of(int n, int q) {
    return size_t{1} << (n - 1 - q);
}

// Spin value (+1 for |0>, -1 for |1>) of qubit q in basis state x.
int spin(size_t x, int n, int q) {
    return (x & bit_of(n, q)) ? -1 : 1;
}

void check_cap(int n, int cap, const char *what) {
    if (n > cap) {
        throw CapExceededError(std::string(what) + ": " + std::to_string(n) + " qubits exceeds the cap of " +
                               std::to_string(cap));
    }
}

void check_fields(const LocalFields &fields, int n) {
    if (!fields.empty() && fields.size() != static_cast<size_t>(n)) {
        throw ValidationError("local fields: expected " + std::to_string(n) + " entries");
    }
}

// Adds coeff * P to h, where P is a Pauli string given as (qubit, axis) factors.
void add_pauli_string(CMatrix &h, int n, std::initializer_list<std::pair<int, int>> factors, double coeff) {
    const size_t d = dim_of(n);
    for (size_t x = 0; x < d; x++) {
        size_t y = x;
        Complex phase = coeff;
        for (auto [q, axis] : factors) {
            bool one = x & bit_of(n, q);
            if (axis == 0) {
                y ^= bit_of(n, q);
            } else if (axis == 1) {
                y ^= bit_of(n, q);
                phase *= one ? Complex{0, -1} : Complex{0, 1};
            } else if (one) {
                phase = -phase;
            }
        }
        h(y, x) += phase;
    }
}

bool fields_are_diagonal(const LocalFields &fields) {
    for (const auto &f : fields) {
        if (f[0] != 0 || f[1] != 0) {
            return false;
        }
    }
    return true;
}

// Diagonal energies of a pure-zz Hamiltonian with z fields.
std::vector<double> diagonal_energies(const JMatrix &h, const LocalFields &fields) {
    const size_t d = dim_of(h.n);
    std::vector<double> e(d, 0.0);
    for (size_t x = 0; x < d; x++) {
        double v = 0;
        for (const auto &[key, m] : h.blocks) {
            v += m(2, 2) * spin(x, h.n, key.first) * spin(x, h.n, key.second);
        }
        for (size_t q = 0; q < fields.size(); q++) {
            v += fields[q][2] * spin(x, h.n, static_cast<int>(q));
        }
        e[x] = v;
    }
    return e;
}

Unitary from_diagonal(int n, const std::vector<double> &phases) {
    Unitary u;
    u.n = n;
    u.diagonal = true;
    u.diag.reserve(phases.size());
    for (double p : phases) {
        u.diag.push_back(std::polar(1.0, p));
    }
    return u;
}

// exp(i t H) from a Hermitian eigen-decomposition.
CMatrix exp_from_spectrum(const HermitianSpectrum &s, double t) {
    const size_t d = s.values.size();
    CMatrix out(d, d);
    for (size_t k = 0; k < d; k++) {
        Complex ph = std::polar(1.0, s.values[k] * t);
        for (size_t r = 0; r < d; r++) {
            Complex vr = s.vectors(r, k) * ph;
            if (vr == Complex{}) {
                continue;
            }
            for (size_t c = 0; c < d; c++) {
                out(r, c) += vr * std::conj(s.vectors(c, k));
            }
        }
    }
    return out;
}

// m <- (u on qubit q) m
void apply_1q(CMatrix &m, int n, int q, const Mat2c &u) {
    const size_t b = bit_of(n, q);
    const size_t d = m.rows();
    for (size_t r = 0; r < d; r++) {
        if (r & b) {
            continue;
        }
        auto top = m.row(r);
        auto bot = m.row(r | b);
        for (size_t c = 0; c < m.cols(); c++) {
            Complex x = top[c];
            Complex y = bot[c];
            top[c] = u(0, 0) * x + u(0, 1) * y;
            bot[c] = u(1, 0) * x + u(1, 1) * y;
        }
    }
}

// m <- (g on qubits k, l; k is the more significant factor of g) m
void apply_2q(CMatrix &m, int n, int k, int l, const CMatrix &g) {
    const size_t bk = bit_of(n, k);
    const size_t bl = bit_of(n, l);
    const size_t d = m.rows();
    for (size_t r = 0; r < d; r++) {
        if (r & (bk | bl)) {
            continue;
        }
        const size_t rows[4] = {r, r | bl, r | bk, r | bk | bl};
        for (size_t c = 0; c < m.cols(); c++) {
            Complex in[4];
            for (int i = 0; i < 4; i++) {
                in[i] = m(rows[i], c);
            }
            for (int i = 0; i < 4; i++) {
                Complex acc = 0;
                for (int j = 0; j < 4; j++) {
                    acc += g(i, j) * in[j];
                }
                m(rows[i], c) = acc;
            }
        }
    }
}

void apply_frame(CMatrix &m, const LocalFrame &f, bool adjoint) {
    for (int q = 0; q < f.size(); q++) {
        apply_1q(m, f.size(), q, adjoint ? f.u[q].adjoint() : f.u[q]);
    }
}

// exp(i t f . sigma) = cos(|f| t) I + i sin(|f| t) (f / |f|) . sigma
Mat2c field_rotation(const Vec3 &f, double t) {
    double len = norm(f);
    if (len == 0) {
        return Mat2c::identity();
    }
    double c = std::cos(len * t);
    double s = std::sin(len * t) / len;
    Mat2c out = Complex{c} * Mat2c::identity();
    for (int a = 0; a < 3; a++) {
        out = out + Complex{0, s * f[a]} * pauli(a);
    }
    return out;
}

// Propagator factory for a fixed drift: diagonal energies or a cached spectrum.
class DriftPropagator {
   public:
    DriftPropagator(const JMatrix &drift, SimulationCaps caps) : n_(drift.n) {
        if (drift.is_pure_zz(0)) {
            energies_ = diagonal_energies(drift, {});
        } else {
            check_cap(drift.n, caps.general, "drift propagator");
            spectrum_ = herm_eig(hamiltonian_matrix(drift));
        }
    }

    // m <- exp(i t H_d) m
    void apply(CMatrix &m, double t) const {
        if (!energies_.empty()) {
            for (size_t r = 0; r < m.rows(); r++) {
                Complex ph = std::polar(1.0, energies_[r] * t);
                for (auto &v : m.row(r)) {
                    v *= ph;
                }
            }
        } else {
            m = exp_from_spectrum(spectrum_, t) * m;
        }
    }

   private:
    int n_;
    std::vector<double> energies_;
    HermitianSpectrum spectrum_;
};

void check_halving(std::span<const double> eps) {
    if (eps.size() < 2) {
        throw ValidationError("trotter_scaling: need at least two epsilons");
    }
    for (size_t i = 0; i < eps.size(); i++) {
        if (!(eps[i] > 0)) {
            throw ValidationError("trotter_scaling: epsilons must be positive");
        }
        if (i > 0 && std::abs(eps[i] - eps[i - 1] / 2) > 1e-12 * eps[i - 1]) {
            throw ValidationError("trotter_scaling: each epsilon must halve the previous one");
        }
    }
}

TrotterScaling finish_scaling(std::span<const double> eps, std::vector<double> errors) {
    TrotterScaling out;
    out.epsilons.assign(eps.begin(), eps.end());
    out.errors = std::move(errors);
    out.exact = true;
    for (double e : out.errors) {
        out.exact = out.exact && e <= kExactError;
    }
    for (size_t i = 0; i + 1 < out.errors.size(); i++) {
        if (out.errors[i] <= kExactError && out.errors[i + 1] <= kExactError) {
            out.ratios.push_back(std::numeric_limits<double>::quiet_NaN());
        } else {
            out.ratios.push_back(out.errors[i] / std::max(out.errors[i + 1], std::numeric_limits<double>::min()));
        }
    }
    return out;
}

}  // namespace

CMatrix Unitary::to_dense() const {
    if (!diagonal) {
        return dense;
    }
    CMatrix m(diag.size(), diag.size());
    for (size_t i = 0; i < diag.size(); i++) {
        m(i, i) = diag[i];
    }
    return m;
}

double operator_norm(const CMatrix &a) {
    const size_t d = a.cols();
    if (d == 0 || a.rows() == 0) {
        return 0;
    }
    CMatrix g = a.adjoint() * a;
    if (d <= 64) {
        double top = herm_eig(g).values.front();
        return std::sqrt(std::max(0.0, top));
    }
    // Power iteration on A^dagger A from a fixed, generic start vector.
    std::vector<Complex> v(d);
    for (size_t i = 0; i < d; i++) {
        v[i] = Complex{1.0 + 0.01 * static_cast<double>(i % 7), 0.003 * static_cast<double>(i % 5)};
    }
    double lambda = 0;
    for (int it = 0; it < 10000; it++) {
        double len = 0;
        for (const auto &x : v) {
            len += std::norm(x);
        }
        len = std::sqrt(len);
        if (len == 0) {
            return 0;
        }
        for (auto &x : v) {
            x /= len;
        }
        std::vector<Complex> w(d);
        for (size_t r = 0; r < d; r++) {
            Complex acc = 0;
            for (size_t c = 0; c < d; c++) {
                acc += g(r, c) * v[c];
            }
            w[r] = acc;
        }
        double next = 0;
        for (size_t i = 0; i < d; i++) {
            next += (std::conj(v[i]) * w[i]).real();
        }
        v = std::move(w);
        if (std::abs(next - lambda) <= 1e-10 * std::abs(next)) {
            lambda = next;
            break;
        }
        lambda = next;
    }
    return std::sqrt(std::max(0.0, lambda));
}

double operator_distance(const Unitary &a, const Unitary &b) {
    if (a.n != b.n) {
        throw ValidationError("operator_distance: qubit count mismatch");
    }
    if (a.diagonal && b.diagonal) {
        double m = 0;
        for (size_t i = 0; i < a.diag.size(); i++) {
            m = std::max(m, std::abs(a.diag[i] - b.diag[i]));
        }
        return m;
    }
    return operator_norm(a.to_dense() - b.to_dense());
}

CMatrix hamiltonian_matrix(const JMatrix &h, const LocalFields &fields) {
    validate(h);
    check_fields(fields, h.n);
    const size_t d = dim_of(h.n);
    CMatrix out(d, d);
    for (const auto &[key, m] : h.blocks) {
        for (int a = 0; a < 3; a++) {
            for (int b = 0; b < 3; b++) {
                if (m(a, b) != 0) {
                    add_pauli_string(out, h.n, {{key.first, a}, {key.second, b}}, m(a, b));
                }
            }
        }
    }
    for (size_t q = 0; q < fields.size(); q++) {
        for (int a = 0; a < 3; a++) {
            if (fields[q][a] != 0) {
                add_pauli_string(out, h.n, {{static_cast<int>(q), a}}, fields[q][a]);
            }
        }
    }
    return out;
}

Unitary unitary_of(const JMatrix &h, double t, const LocalFields &fields, SimulationCaps caps) {
    validate(h);
    check_fields(fields, h.n);
    if (h.is_pure_zz(0) && fields_are_diagonal(fields)) {
        check_cap(h.n, caps.diagonal, "unitary_of (diagonal)");
        std::vector<double> e = diagonal_energies(h, fields);
        for (auto &x : e) {
            x *= t;
        }
        return from_diagonal(h.n, e);
    }
    check_cap(h.n, caps.general, "unitary_of");
    Unitary u;
    u.n = h.n;
    u.dense = exp_from_spectrum(herm_eig(hamiltonian_matrix(h, fields)), t);
    return u;
}

Unitary schedule_unitary(const SignSchedule &s, const WeightedGraph &drift, double epsilon, SimulationCaps caps) {
    validate(s);
    validate(drift);
    if (s.n != drift.n) {
        throw ValidationError("schedule_unitary: qubit count mismatch");
    }
    check_cap(s.n, caps.diagonal, "schedule_unitary (diagonal)");
    const size_t d = dim_of(s.n);
    std::vector<double> phase(d, 0.0);
    for (size_t x = 0; x < d; x++) {
        double acc = 0;
        for (const auto &iv : s.intervals) {
            double energy = 0;
            for (const auto &e : drift.edges) {
                int sign = iv.signs[e.k] * iv.signs[e.l] * spin(x, s.n, e.k) * spin(x, s.n, e.l);
                energy += sign > 0 ? e.w : -e.w;
            }
            acc += iv.duration * energy;
        }
        phase[x] = epsilon * acc;
    }
    return from_diagonal(s.n, phase);
}

Unitary schedule_unitary(const ConjugationSchedule &s, const JMatrix &drift, double epsilon, int trotter_steps,
                         SimulationCaps caps) {
    validate(s);
    validate(drift);
    if (s.n != drift.n) {
        throw ValidationError("schedule_unitary: qubit count mismatch");
    }
    if (trotter_steps < 1) {
        throw ValidationError("schedule_unitary: trotter steps must be at least 1");
    }
    check_cap(s.n, caps.general, "schedule_unitary");
    DriftPropagator prop(drift, caps);
    const double dt = epsilon / trotter_steps;
    std::vector<Mat2c> field_ops;
    for (const auto &f : s.local_fields) {
        field_ops.push_back(field_rotation(f, dt));
    }

    CMatrix m = CMatrix::identity(dim_of(s.n));
    for (int step = 0; step < trotter_steps; step++) {
        for (const auto &iv : s.intervals) {
            apply_frame(m, iv.frame, true);
            prop.apply(m, iv.duration * dt);
            apply_frame(m, iv.frame, false);
        }
        for (size_t q = 0; q < field_ops.size(); q++) {
            apply_1q(m, s.n, static_cast<int>(q), field_ops[q]);
        }
    }
    if (s.trailing) {
        apply_frame(m, *s.trailing, false);
    }
    Unitary u;
    u.n = s.n;
    u.dense = std::move(m);
    return u;
}

Unitary circuit_unitary(const Circuit &c, SimulationCaps caps) {
    validate(c);
    check_cap(c.n, caps.general, "circuit_unitary");
    CMatrix m = CMatrix::identity(dim_of(c.n));
    for (const auto &step : c.steps) {
        for (const auto &g : step) {
            apply_2q(m, c.n, g.k, g.l, g.u);
        }
    }
    Unitary u;
    u.n = c.n;
    u.dense = std::move(m);
    return u;
}

TrotterScaling trotter_scaling(const ConjugationSchedule &s, const JMatrix &drift, const JMatrix &target,
                               const LocalFields &target_fields, std::span<const double> epsilons,
                               SimulationCaps caps) {
    check_halving(epsilons);
    std::vector<double> errors;
    for (double eps : epsilons) {
        Unitary got = schedule_unitary(s, drift, eps, 1, caps);
        Unitary want = unitary_of(target, eps, target_fields, caps);
        errors.push_back(operator_distance(got, want));
    }
    return finish_scaling(epsilons, std::move(errors));
}

TrotterScaling trotter_scaling(const SignSchedule &s, const WeightedGraph &drift, const WeightedGraph &target,
                               std::span<const double> epsilons, SimulationCaps caps) {
    check_halving(epsilons);
    JMatrix tj = graph_to_jmatrix(target);
    std::vector<double> errors;
    for (double eps : epsilons) {
        errors.push_back(operator_distance(schedule_unitary(s, drift, eps, caps), unitary_of(tj, eps, {}, caps)));
    }
    return finish_scaling(epsilons, std::move(errors));
}

}  // namespace zzsim
