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
#include <numeric>

#include "zzsim/errors.h"
#include "zzsim/linalg.h"

namespace zzsim {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kEps = 2.220446049250313e-16;

std::vector<size_t> descending_order(const std::vector<double> &values) {
    std::vector<size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return values[a] > values[b];
    });
    return order;
}

template <typename T>
double frobenius(const DenseMatrix<T> &a) {
    double s = 0;
    for (const auto &v : a.data()) {
        s += std::norm(v);
    }
    return std::sqrt(s);
}

template <typename T>
double off_diagonal_sq(const DenseMatrix<T> &a) {
    double s = 0;
    for (size_t p = 0; p < a.rows(); p++) {
        for (size_t q = p + 1; q < a.cols(); q++) {
            s += std::norm(a(p, q));
        }
    }
    return s;
}

// Solves for the Jacobi tangent t that annihilates the (p, q) entry of
// [[app, b], [b, aqq]] with b > 0 real (or any nonzero real b).
double jacobi_tangent(double app, double aqq, double b) {
    double theta = (aqq - app) / (2 * b);
    double t = 1 / (std::abs(theta) + std::sqrt(theta * theta + 1));
    return theta < 0 ? -t : t;
}

}  // namespace

Spectrum sym_eig(const Matrix &input, double tol, bool with_vectors) {
    if (!input.is_square()) {
        throw ValidationError("sym_eig: matrix must be square");
    }
    const size_t n = input.rows();
    double scale = std::max(1.0, max_abs(input));
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            if (std::abs(input(i, j) - input(j, i)) > tol * scale) {
                throw ValidationError("sym_eig: matrix is not symmetric");
            }
        }
    }

    Matrix a = input;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            double m = 0.5 * (a(i, j) + a(j, i));
            a(i, j) = a(j, i) = m;
        }
    }
    Matrix v = Matrix::identity(n);
    const double target = kEps * frobenius(a);

    bool converged = n <= 1;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; sweep++) {
        double off = off_diagonal_sq(a);
        if (std::sqrt(off) <= target) {
            converged = true;
            break;
        }
        // Early sweeps skip small pivots; later sweeps rotate everything nonzero.
        double threshold = sweep < 3 ? 0.2 * std::sqrt(off) / static_cast<double>(n * n) : 0.0;
        for (size_t p = 0; p + 1 < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                double apq = a(p, q);
                if (apq == 0 || std::abs(apq) <= threshold) {
                    continue;
                }
                double t = jacobi_tangent(a(p, p), a(q, q), apq);
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                for (size_t r = 0; r < n; r++) {
                    if (r == p || r == q) {
                        continue;
                    }
                    double arp = a(r, p);
                    double arq = a(r, q);
                    a(r, p) = a(p, r) = c * arp - s * arq;
                    a(r, q) = a(q, r) = s * arp + c * arq;
                }
                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = a(q, p) = 0;
                if (with_vectors) {
                    for (size_t r = 0; r < n; r++) {
                        double vrp = v(r, p);
                        double vrq = v(r, q);
                        v(r, p) = c * vrp - s * vrq;
                        v(r, q) = s * vrp + c * vrq;
                    }
                }
            }
        }
    }
    if (!converged && std::sqrt(off_diagonal_sq(a)) > target) {
        throw ConvergenceError("sym_eig: no convergence after 100 sweeps");
    }

    std::vector<double> diag(n);
    for (size_t i = 0; i < n; i++) {
        diag[i] = a(i, i);
    }
    auto order = descending_order(diag);
    Spectrum out;
    out.values.resize(n);
    for (size_t i = 0; i < n; i++) {
        out.values[i] = diag[order[i]];
    }
    if (with_vectors) {
        Matrix sorted(n, n);
        for (size_t i = 0; i < n; i++) {
            for (size_t r = 0; r < n; r++) {
                sorted(r, i) = v(r, order[i]);
            }
        }
        out.vectors = std::move(sorted);
    }
    return out;
}

HermitianSpectrum herm_eig(const CMatrix &input, double tol) {
    if (!input.is_square()) {
        throw ValidationError("herm_eig: matrix must be square");
    }
    const size_t n = input.rows();
    double scale = std::max(1.0, max_abs(input));
    for (size_t i = 0; i < n; i++) {
        if (std::abs(input(i, i).imag()) > tol * scale) {
            throw ValidationError("herm_eig: matrix is not Hermitian");
        }
        for (size_t j = i + 1; j < n; j++) {
            if (std::abs(input(i, j) - std::conj(input(j, i))) > tol * scale) {
                throw ValidationError("herm_eig: matrix is not Hermitian");
            }
        }
    }

    CMatrix a = input;
    for (size_t i = 0; i < n; i++) {
        a(i, i) = a(i, i).real();
        for (size_t j = i + 1; j < n; j++) {
            Complex m = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = m;
            a(j, i) = std::conj(m);
        }
    }
    CMatrix v = CMatrix::identity(n);
    const double target = kEps * frobenius(a);

    bool converged = n <= 1;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; sweep++) {
        double off = off_diagonal_sq(a);
        if (std::sqrt(off) <= target) {
            converged = true;
            break;
        }
        double threshold = sweep < 3 ? 0.2 * std::sqrt(off) / static_cast<double>(n * n) : 0.0;
        for (size_t p = 0; p + 1 < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                Complex b = a(p, q);
                double mag = std::abs(b);
                if (mag == 0 || mag <= threshold) {
                    continue;
                }
                // Q = diag(1, e^{-i phi}) * [[c, s], [-s, c]] makes the pivot real, then rotates it away.
                Complex phase = b / mag;
                Complex phase_conj = std::conj(phase);
                double app = a(p, p).real();
                double aqq = a(q, q).real();
                double t = jacobi_tangent(app, aqq, mag);
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;
                for (size_t r = 0; r < n; r++) {
                    Complex arp = a(r, p);
                    Complex arq = a(r, q);
                    a(r, p) = c * arp - s * phase_conj * arq;
                    a(r, q) = s * arp + c * phase_conj * arq;
                }
                for (size_t r = 0; r < n; r++) {
                    Complex apr = a(p, r);
                    Complex aqr = a(q, r);
                    a(p, r) = c * apr - s * phase * aqr;
                    a(q, r) = s * apr + c * phase * aqr;
                }
                a(p, p) = app - t * mag;
                a(q, q) = aqq + t * mag;
                a(p, q) = a(q, p) = 0;
                for (size_t r = 0; r < n; r++) {
                    Complex vrp = v(r, p);
                    Complex vrq = v(r, q);
                    v(r, p) = c * vrp - s * phase_conj * vrq;
                    v(r, q) = s * vrp + c * phase_conj * vrq;
                }
            }
        }
    }
    if (!converged && std::sqrt(off_diagonal_sq(a)) > target) {
        throw ConvergenceError("herm_eig: no convergence after 100 sweeps");
    }

    std::vector<double> diag(n);
    for (size_t i = 0; i < n; i++) {
        diag[i] = a(i, i).real();
    }
    auto order = descending_order(diag);
    HermitianSpectrum out{std::vector<double>(n), CMatrix(n, n)};
    for (size_t i = 0; i < n; i++) {
        out.values[i] = diag[order[i]];
        for (size_t r = 0; r < n; r++) {
            out.vectors(r, i) = v(r, order[i]);
        }
    }
    return out;
}

namespace {

// Generic coefficients mixing the cosine and sine parts of a unitary. Two
// distinct eigenphases collide under at most one of them in practice.
constexpr double kMixing[] = {0.6180339887498949, 1.7320508075688772, 0.2718281828459045,
                              3.1415926535897931, 0.4142135623730950, 1.2599210498948732};
constexpr int kMaxRefinements = static_cast<int>(sizeof(kMixing) / sizeof(kMixing[0]));

// Columns V with V^dagger w V diagonal, for a normal (unitary-block) w.
CMatrix diagonalize_normal(const CMatrix &w, int depth) {
    const size_t n = w.rows();
    if (n == 1) {
        return CMatrix::identity(1);
    }
    CMatrix wd = w.adjoint();
    CMatrix h(n, n);
    const Complex half_i_inv{0, -0.5};
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++) {
            Complex cos_part = 0.5 * (w(r, c) + wd(r, c));
            Complex sin_part = half_i_inv * (w(r, c) - wd(r, c));
            h(r, c) = cos_part + kMixing[depth] * sin_part;
        }
    }
    HermitianSpectrum hs = herm_eig(h, 1e-6);
    CMatrix v = hs.vectors;

    const double cluster_tol = 1e-9 * (1 + kMixing[depth]);
    size_t start = 0;
    while (start < n) {
        size_t end = start + 1;
        while (end < n && hs.values[end - 1] - hs.values[end] <= cluster_tol) {
            end++;
        }
        size_t d = end - start;
        if (d > 1 && depth + 1 < kMaxRefinements) {
            CMatrix vc(n, d);
            for (size_t r = 0; r < n; r++) {
                for (size_t c = 0; c < d; c++) {
                    vc(r, c) = v(r, start + c);
                }
            }
            CMatrix block = vc.adjoint() * w * vc;
            double off = 0;
            for (size_t i = 0; i < d; i++) {
                for (size_t j = 0; j < d; j++) {
                    if (i != j) {
                        off = std::max(off, std::abs(block(i, j)));
                    }
                }
            }
            if (off > 1e-12) {
                CMatrix sub = diagonalize_normal(block, depth + 1);
                CMatrix refined = vc * sub;
                for (size_t r = 0; r < n; r++) {
                    for (size_t c = 0; c < d; c++) {
                        v(r, start + c) = refined(r, c);
                    }
                }
            }
        }
        start = end;
    }
    return v;
}

}  // namespace

UnitaryEigen unitary_eigen(const CMatrix &u, double tol) {
    if (!u.is_square()) {
        throw ValidationError("unitary_eigen: matrix must be square");
    }
    if (max_abs_diff(u * u.adjoint(), CMatrix::identity(u.rows())) > tol) {
        throw ValidationError("unitary_eigen: matrix is not unitary");
    }
    CMatrix v = diagonalize_normal(u, 0);
    CMatrix d = v.adjoint() * u * v;
    UnitaryEigen out{std::vector<double>(u.rows()), std::move(v)};
    for (size_t i = 0; i < u.rows(); i++) {
        out.phases[i] = std::arg(d(i, i));
    }
    return out;
}

bool is_psd(const Matrix &a, double tol) {
    if (a.rows() == 0) {
        return true;
    }
    return sym_eig(a, tol, false).smallest() >= -tol;
}

}  // namespace zzsim
