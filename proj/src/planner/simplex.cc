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

// Revised primal simplex over the sign-pattern columns. Columns are read from
// a table of sign products; the basis inverse is kept as a dense m x m matrix.

#include <algorithm>
#include <cmath>
#include <string>

#include "zzsim/planner.h"

namespace zzsim {

namespace {

constexpr double kReducedCostTol = 1e-10;
constexpr double kPivotTol = 1e-10;
constexpr int kRefactorEvery = 64;

class SignLp {
   public:
    SignLp(const WeightedGraph &target, int max_iterations)
        : n_(target.n), m_(n_ * (n_ - 1) / 2), columns_(uint32_t{1} << (n_ - 1)), max_iterations_(max_iterations) {
        for (int k = 0; k < n_; k++) {
            for (int l = k + 1; l < n_; l++) {
                pairs_.emplace_back(k, l);
            }
        }
        signs_.resize(static_cast<size_t>(columns_) * m_);
        for (uint32_t p = 0; p < columns_; p++) {
            std::vector<int8_t> s = sign_pattern(n_, p);
            for (int r = 0; r < m_; r++) {
                signs_[static_cast<size_t>(p) * m_ + r] = static_cast<int8_t>(s[pairs_[r].first] * s[pairs_[r].second]);
            }
        }
        b_.assign(m_, 0.0);
        for (const auto &e : target.edges) {
            b_[pair_index(e.k, e.l)] = e.w;
        }
        // Rows with negative right-hand side are negated so the artificial basis is feasible.
        row_sign_.assign(m_, 1);
        for (int r = 0; r < m_; r++) {
            if (b_[r] < 0) {
                row_sign_[r] = -1;
                b_[r] = -b_[r];
            }
        }
    }

    LpSolution solve() {
        // Phase one: artificial basis, minimize the artificial sum.
        basis_.resize(m_);
        for (int r = 0; r < m_; r++) {
            basis_[r] = columns_ + static_cast<uint32_t>(r);
        }
        binv_ = Matrix::identity(m_);
        xb_ = b_;
        phase_ = 1;
        if (!iterate()) {
            throw ConvergenceError("optimal_zz_plan: iteration cap reached before a feasible schedule was found");
        }
        double infeasibility = 0;
        double scale = 1;
        for (int r = 0; r < m_; r++) {
            scale = std::max(scale, b_[r]);
            if (is_artificial(basis_[r])) {
                infeasibility += xb_[r];
            }
        }
        if (infeasibility > 1e-9 * scale) {
            throw ConvergenceError("optimal_zz_plan: phase one ended infeasible");
        }
        drive_out_artificials();

        phase_ = 2;
        LpSolution out;
        out.status = iterate() ? LpStatus::optimal : LpStatus::iteration_cap;
        refactor();
        out.iterations = iterations_;
        extract(out);
        return out;
    }

   private:
    int pair_index(int k, int l) const {
        // Row-major index of (k, l), k < l, in the upper triangle.
        return k * n_ - k * (k + 1) / 2 + (l - k - 1);
    }

    bool is_artificial(uint32_t var) const {
        return var >= columns_;
    }

    double cost(uint32_t var) const {
        if (phase_ == 1) {
            return is_artificial(var) ? 1.0 : 0.0;
        }
        return is_artificial(var) ? 0.0 : 1.0;
    }

    // Column of variable var in the sign-normalized rows.
    std::vector<double> column(uint32_t var) const {
        std::vector<double> a(m_, 0.0);
        if (is_artificial(var)) {
            a[var - columns_] = 1;
            return a;
        }
        const int8_t *s = &signs_[static_cast<size_t>(var) * m_];
        for (int r = 0; r < m_; r++) {
            a[r] = row_sign_[r] * s[r];
        }
        return a;
    }

    std::vector<double> duals() const {
        std::vector<double> y(m_, 0.0);
        for (int i = 0; i < m_; i++) {
            double c = cost(basis_[i]);
            if (c == 0) {
                continue;
            }
            for (int r = 0; r < m_; r++) {
                y[r] += c * binv_(i, r);
            }
        }
        return y;
    }

    // Smallest-index structural column with negative reduced cost, or -1.
    int64_t entering(const std::vector<double> &y) const {
        std::vector<double> ys(m_);
        for (int r = 0; r < m_; r++) {
            ys[r] = y[r] * row_sign_[r];
        }
        const double c = phase_ == 1 ? 0.0 : 1.0;
        for (uint32_t p = 0; p < columns_; p++) {
            if (in_basis_[p]) {
                continue;
            }
            const int8_t *s = &signs_[static_cast<size_t>(p) * m_];
            double ya = 0;
            for (int r = 0; r < m_; r++) {
                ya += s[r] * ys[r];
            }
            if (c - ya < -kReducedCostTol) {
                return p;
            }
        }
        return -1;
    }

    std::vector<double> ftran(const std::vector<double> &a) const {
        std::vector<double> d(m_, 0.0);
        for (int i = 0; i < m_; i++) {
            double acc = 0;
            for (int r = 0; r < m_; r++) {
                acc += binv_(i, r) * a[r];
            }
            d[i] = acc;
        }
        return d;
    }

    void pivot(int row, uint32_t var, const std::vector<double> &d) {
        double piv = d[row];
        for (int c = 0; c < m_; c++) {
            binv_(row, c) /= piv;
        }
        xb_[row] /= piv;
        for (int i = 0; i < m_; i++) {
            if (i == row || d[i] == 0) {
                continue;
            }
            double f = d[i];
            for (int c = 0; c < m_; c++) {
                binv_(i, c) -= f * binv_(row, c);
            }
            xb_[i] -= f * xb_[row];
        }
        if (!is_artificial(basis_[row])) {
            in_basis_[basis_[row]] = 0;
        }
        basis_[row] = var;
        if (!is_artificial(var)) {
            in_basis_[var] = 1;
        }
        if (++pivots_since_refactor_ >= kRefactorEvery) {
            refactor();
        }
    }

    // Recomputes B^-1 and x_B from the basis by Gauss-Jordan elimination.
    void refactor() {
        pivots_since_refactor_ = 0;
        Matrix a(m_, 2 * m_);
        for (int i = 0; i < m_; i++) {
            std::vector<double> col = column(basis_[i]);
            for (int r = 0; r < m_; r++) {
                a(r, i) = col[r];
            }
            a(i, m_ + i) = 1;
        }
        for (int c = 0; c < m_; c++) {
            int best = c;
            for (int r = c + 1; r < m_; r++) {
                if (std::abs(a(r, c)) > std::abs(a(best, c))) {
                    best = r;
                }
            }
            if (std::abs(a(best, c)) < 1e-14) {
                return;  // keep the product-form inverse
            }
            if (best != c) {
                for (int k = 0; k < 2 * m_; k++) {
                    std::swap(a(best, k), a(c, k));
                }
            }
            double p = a(c, c);
            for (int k = 0; k < 2 * m_; k++) {
                a(c, k) /= p;
            }
            for (int r = 0; r < m_; r++) {
                if (r == c || a(r, c) == 0) {
                    continue;
                }
                double f = a(r, c);
                for (int k = 0; k < 2 * m_; k++) {
                    a(r, k) -= f * a(c, k);
                }
            }
        }
        for (int i = 0; i < m_; i++) {
            for (int r = 0; r < m_; r++) {
                binv_(i, r) = a(i, m_ + r);
            }
        }
        xb_ = ftran(b_);
    }

    // Runs simplex iterations for the current phase; false on iteration cap.
    bool iterate() {
        in_basis_.assign(columns_, 0);
        for (uint32_t v : basis_) {
            if (!is_artificial(v)) {
                in_basis_[v] = 1;
            }
        }
        while (true) {
            if (iterations_ >= max_iterations_) {
                return false;
            }
            std::vector<double> y = duals();
            int64_t q = entering(y);
            if (q < 0) {
                return true;
            }
            std::vector<double> d = ftran(column(static_cast<uint32_t>(q)));
            int leave = -1;
            double best_ratio = 0;
            for (int i = 0; i < m_; i++) {
                if (d[i] <= kPivotTol) {
                    continue;
                }
                double ratio = std::max(0.0, xb_[i]) / d[i];
                bool better = leave < 0 || ratio < best_ratio - 1e-12 ||
                              (ratio <= best_ratio + 1e-12 && basis_[i] < basis_[leave]);
                if (better) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) {
                // Costs are nonnegative, so the objective is bounded below; a
                // direction with no blocking row means numerical breakdown.
                throw ConvergenceError("optimal_zz_plan: unbounded direction");
            }
            pivot(leave, static_cast<uint32_t>(q), d);
            iterations_++;
        }
    }

    // Replaces zero-level artificials by structural columns where possible.
    void drive_out_artificials() {
        for (int r = 0; r < m_; r++) {
            if (!is_artificial(basis_[r])) {
                continue;
            }
            for (uint32_t p = 0; p < columns_; p++) {
                if (in_basis_[p]) {
                    continue;
                }
                std::vector<double> d = ftran(column(p));
                if (std::abs(d[r]) > 1e-9) {
                    pivot(r, p, d);
                    break;
                }
            }
        }
    }

    void extract(LpSolution &out) const {
        std::vector<std::pair<uint32_t, double>> picked;
        for (int i = 0; i < m_; i++) {
            if (!is_artificial(basis_[i]) && xb_[i] > kPruneDuration) {
                picked.emplace_back(basis_[i], xb_[i]);
            }
        }
        std::sort(picked.begin(), picked.end());
        out.schedule.n = n_;
        out.mu = 0;
        for (auto [p, tau] : picked) {
            out.basis.push_back(p);
            out.schedule.intervals.push_back({sign_pattern(n_, p), tau});
            out.mu += tau;
        }
        std::vector<double> y = duals();
        out.dual.resize(m_);
        for (int r = 0; r < m_; r++) {
            out.dual[r] = y[r] * row_sign_[r];
        }
    }

    int n_;
    int m_;
    uint32_t columns_;
    int max_iterations_;
    std::vector<std::pair<int, int>> pairs_;
    /// s_k s_l of pattern p at row r, stored at p * m + r.
    std::vector<int8_t> signs_;
    std::vector<double> b_;
    std::vector<int> row_sign_;
    std::vector<uint32_t> basis_;
    std::vector<char> in_basis_;
    Matrix binv_;
    std::vector<double> xb_;
    int phase_ = 1;
    int iterations_ = 0;
    int pivots_since_refactor_ = 0;
};

}  // namespace

std::vector<int8_t> sign_pattern(int n, uint32_t p) {
    std::vector<int8_t> s(n, 1);
    for (int i = 1; i < n; i++) {
        if (p >> (i - 1) & 1) {
            s[i] = -1;
        }
    }
    return s;
}

std::string to_string(LpStatus s) {
    return s == LpStatus::optimal ? "optimal" : "iteration-cap";
}

LpSolution optimal_zz_plan(const WeightedGraph &target, const LpOptions &opts) {
    validate(target);
    if (target.n > opts.max_qubits) {
        throw CapExceededError("optimal_zz_plan: " + std::to_string(target.n) + " qubits exceeds the cap of " +
                               std::to_string(opts.max_qubits));
    }
    bool all_zero = std::all_of(target.edges.begin(), target.edges.end(), [](const Edge &e) {
        return e.w == 0;
    });
    if (target.n < 2 || all_zero) {
        LpSolution out;
        out.schedule.n = target.n;
        out.dual.assign(target.n * (target.n - 1) / 2, 0.0);
        return out;
    }
    return SignLp(target, opts.max_iterations).solve();
}

}  // namespace zzsim
