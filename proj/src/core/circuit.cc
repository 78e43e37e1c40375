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

#include "zzsim/circuit.h"

#include <string>

#include "zzsim/errors.h"

namespace zzsim {

namespace {

// Determinant by Gaussian elimination with partial pivoting.
Complex determinant(CMatrix a) {
    size_t n = a.rows();
    Complex det{1};
    for (size_t c = 0; c < n; c++) {
        size_t piv = c;
        for (size_t r = c + 1; r < n; r++) {
            if (std::abs(a(r, c)) > std::abs(a(piv, c))) {
                piv = r;
            }
        }
        if (a(piv, c) == Complex{}) {
            return {};
        }
        if (piv != c) {
            for (size_t k = 0; k < n; k++) {
                std::swap(a(piv, k), a(c, k));
            }
            det = -det;
        }
        det *= a(c, c);
        for (size_t r = c + 1; r < n; r++) {
            Complex f = a(r, c) / a(c, c);
            for (size_t k = c; k < n; k++) {
                a(r, k) -= f * a(c, k);
            }
        }
    }
    return det;
}

}  // namespace

void validate(const CircuitStep &step, int n, double tol) {
    std::vector<bool> used(n, false);
    for (size_t g = 0; g < step.size(); g++) {
        const Gate &gate = step[g];
        std::string where = "circuit: gate #" + std::to_string(g + 1);
        if (gate.k < 0 || gate.k >= n || gate.l < 0 || gate.l >= n || gate.k == gate.l) {
            throw ValidationError(where + ": invalid qubit pair");
        }
        if (used[gate.k] || used[gate.l]) {
            throw ValidationError(where + ": qubit pairs within a step must be disjoint");
        }
        used[gate.k] = used[gate.l] = true;
        if (gate.u.rows() != 4 || gate.u.cols() != 4) {
            throw ValidationError(where + ": gate must be 4x4");
        }
        if (max_abs_diff(gate.u * gate.u.adjoint(), CMatrix::identity(4)) > tol) {
            throw ValidationError(where + ": gate is not unitary");
        }
        if (std::abs(determinant(gate.u) - Complex{1}) > tol) {
            throw ValidationError(where + ": gate determinant is not 1");
        }
    }
}

void validate(const Circuit &c, double tol) {
    if (c.n < 2) {
        throw ValidationError("circuit: needs at least 2 qubits");
    }
    for (size_t s = 0; s < c.steps.size(); s++) {
        try {
            validate(c.steps[s], c.n, tol);
        } catch (const ValidationError &e) {
            throw ValidationError("step #" + std::to_string(s + 1) + ": " + e.what());
        }
    }
}

}  // namespace zzsim
