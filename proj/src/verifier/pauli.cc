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

#include <array>
#include <cmath>

#include "zzsim/errors.h"
#include "zzsim/linalg.h"
#include "zzsim/verifier.h"

namespace zzsim {

namespace {

constexpr Complex kI{0, 1};

const std::array<Mat2c, 3> kPaulis{{
    {{Complex{0}, Complex{1}, Complex{1}, Complex{0}}},
    {{Complex{0}, -kI, kI, Complex{0}}},
    {{Complex{1}, Complex{0}, Complex{0}, Complex{-1}}},
}};

}  // namespace

const Mat2c &pauli(int axis) {
    if (axis < 0 || axis > 2) {
        throw ValidationError("pauli: axis must be 0, 1 or 2");
    }
    return kPaulis[axis];
}

CMatrix pair_hamiltonian(const PairMatrix &j, const Vec3 &a, const Vec3 &b) {
    CMatrix h(4, 4);
    CMatrix id = CMatrix::identity(2);
    for (int x = 0; x < 3; x++) {
        CMatrix px = kPaulis[x].to_dense();
        for (int y = 0; y < 3; y++) {
            if (j(x, y) != 0) {
                h += kron(px, kPaulis[y].to_dense()) * Complex{j(x, y)};
            }
        }
        if (a[x] != 0) {
            h += kron(px, id) * Complex{a[x]};
        }
        if (b[x] != 0) {
            h += kron(id, px) * Complex{b[x]};
        }
    }
    return h;
}

PairTerms decompose_pair(const CMatrix &h) {
    if (h.rows() != 4 || h.cols() != 4) {
        throw ValidationError("decompose_pair: expected a 4x4 matrix");
    }
    auto coeff = [&](const CMatrix &p) {
        // tr(h p) / 4 for Hermitian p.
        Complex t = 0;
        for (size_t r = 0; r < 4; r++) {
            for (size_t c = 0; c < 4; c++) {
                t += h(r, c) * p(c, r);
            }
        }
        return t.real() / 4;
    };
    PairTerms out;
    CMatrix id = CMatrix::identity(2);
    for (int x = 0; x < 3; x++) {
        CMatrix px = kPaulis[x].to_dense();
        for (int y = 0; y < 3; y++) {
            out.j(x, y) = coeff(kron(px, kPaulis[y].to_dense()));
        }
        out.a[x] = coeff(kron(px, id));
        out.b[x] = coeff(kron(id, px));
    }
    return out;
}

double pair_norm(const PairMatrix &j, const Vec3 &a, const Vec3 &b) {
    CMatrix h = pair_hamiltonian(j, a, b);
    Matrix real(8, 8);
    for (size_t r = 0; r < 4; r++) {
        for (size_t c = 0; c < 4; c++) {
            real(r, c) = h(r, c).real();
            real(r + 4, c + 4) = h(r, c).real();
            real(r, c + 4) = -h(r, c).imag();
            real(r + 4, c) = h(r, c).imag();
        }
    }
    Spectrum s = sym_eig(real, kDefaultTol, false);
    return std::max(std::abs(s.largest()), std::abs(s.smallest()));
}

Mat3 adjoint_rotation(const Mat2c &u) {
    Mat3 r;
    Mat2c ud = u.adjoint();
    for (int a = 0; a < 3; a++) {
        Mat2c m = u * kPaulis[a] * ud;
        for (int b = 0; b < 3; b++) {
            r(b, a) = 0.5 * (kPaulis[b] * m).trace().real();
        }
    }
    return r;
}

}  // namespace zzsim
