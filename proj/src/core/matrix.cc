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

#include "zzsim/matrix.h"

namespace zzsim {

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            Complex av = a(i, j);
            if (av == Complex{}) {
                continue;
            }
            for (size_t p = 0; p < b.rows(); p++) {
                for (size_t q = 0; q < b.cols(); q++) {
                    out(i * b.rows() + p, j * b.cols() + q) = av * b(p, q);
                }
            }
        }
    }
    return out;
}

CMatrix to_complex(const Matrix &m) {
    CMatrix out(m.rows(), m.cols());
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            out(r, c) = m(r, c);
        }
    }
    return out;
}

}  // namespace zzsim
