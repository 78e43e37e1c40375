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
#include <span>
#include <vector>

#include "zzsim/matrix.h"

namespace zzsim {

inline constexpr double kDefaultTol = 1e-9;

/// Eigenvalues sorted non-increasing (ties keep their original diagonal
/// order). When present, column i of `vectors` is the eigenvector of values[i].
struct Spectrum {
    std::vector<double> values;
    std::optional<Matrix> vectors;

    double largest() const {
        return values.front();
    }
    double smallest() const {
        return values.back();
    }
};

/// Cyclic Jacobi with threshold sweeps, at most 100 sweeps.
/// Throws ValidationError when `a` is not symmetric within `tol`, and
/// ConvergenceError if the sweep cap is hit.
Spectrum sym_eig(const Matrix &a, double tol = kDefaultTol, bool with_vectors = true);

struct HermitianSpectrum {
    std::vector<double> values;
    CMatrix vectors;
};

/// Complex Jacobi for Hermitian matrices; same ordering and error contract as sym_eig.
HermitianSpectrum herm_eig(const CMatrix &a, double tol = kDefaultTol);

/// Eigen-decomposition of a unitary u = V diag(exp(i phases)) V^dagger,
/// phases in (-pi, pi]. Reduced to Hermitian problems: the commuting pair
/// (u + u^dagger)/2 and (u - u^dagger)/2i is diagonalized through a generic
/// real combination, refining any degenerate cluster with a new combination.
struct UnitaryEigen {
    std::vector<double> phases;
    CMatrix vectors;
};

UnitaryEigen unitary_eigen(const CMatrix &u, double tol = kDefaultTol);

/// M = u * diag(s) * v with u, v in SO(3), s[0] >= s[1] >= |s[2]|, and s[2]
/// carrying the sign of det(M).
struct SignedSvd {
    Mat3 u;
    Vec3 s{};
    Mat3 v;
};

SignedSvd svd3_special(const Mat3 &m);

/// Lift of a rotation to SU(2): the returned u satisfies
/// u sigma_a u^dagger = sum_b R(b, a) sigma_b. Unique up to a global sign.
Mat2c so3_to_su2(const Mat3 &r, double tol = kDefaultTol);

/// Rotation by `angle` about the unit `axis` (right-handed).
Mat3 rotation_about(const Vec3 &axis, double angle);

/// True iff x is majorized by y: prefix sums of x sorted non-increasing are
/// bounded by those of y and the totals agree (within tol).
bool majorized_by(std::span<const double> x, std::span<const double> y, double tol = kDefaultTol);

/// Smallest eigenvalue >= -tol. Throws ValidationError on non-symmetric input.
bool is_psd(const Matrix &a, double tol = kDefaultTol);

}  // namespace zzsim
