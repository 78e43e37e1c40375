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

#include "zzsim/certificate.h"

#include <cmath>
#include <string>

#include "zzsim/errors.h"

namespace zzsim {

void validate(const CorrelationMatrix &c, double tol) {
    size_t d = 3 * static_cast<size_t>(c.n);
    if (c.values.rows() != d || c.values.cols() != d) {
        throw ValidationError("correlation matrix: expected " + std::to_string(d) + "x" + std::to_string(d));
    }
    for (size_t i = 0; i < d; i++) {
        for (size_t j = i + 1; j < d; j++) {
            if (std::abs(c.values(i, j) - c.values(j, i)) > tol) {
                throw ValidationError("correlation matrix: not symmetric at (" + std::to_string(i + 1) + "," +
                                      std::to_string(j + 1) + ")");
            }
        }
    }
}

void validate(const ProductEnsemble &e, double tol) {
    double total = 0;
    for (size_t t = 0; t < e.terms.size(); t++) {
        const auto &term = e.terms[t];
        std::string where = "ensemble: term #" + std::to_string(t + 1);
        if (!(term.weight > 0)) {
            throw ValidationError(where + ": weight must be positive");
        }
        if (term.bloch.size() != static_cast<size_t>(e.n)) {
            throw ValidationError(where + ": expected " + std::to_string(e.n) + " Bloch vectors");
        }
        for (const auto &b : term.bloch) {
            if (std::abs(norm(b) - 1) > tol) {
                throw ValidationError(where + ": Bloch vector is not unit length");
            }
        }
        total += term.weight;
    }
    if (std::abs(total - 1) > tol) {
        throw ValidationError("ensemble: weights sum to " + std::to_string(total) + ", expected 1");
    }
}

CorrelationMatrix ProductEnsemble::correlations() const {
    CorrelationMatrix c{n, Matrix(3 * n, 3 * n)};
    for (int k = 0; k < n; k++) {
        for (int a = 0; a < 3; a++) {
            c.values(3 * k + a, 3 * k + a) = 1;
        }
    }
    for (const auto &term : terms) {
        for (int k = 0; k < n; k++) {
            for (int l = 0; l < n; l++) {
                if (k == l) {
                    continue;
                }
                for (int a = 0; a < 3; a++) {
                    for (int b = 0; b < 3; b++) {
                        c.values(3 * k + a, 3 * l + b) += term.weight * term.bloch[k][a] * term.bloch[l][b];
                    }
                }
            }
        }
    }
    return c;
}

}  // namespace zzsim
