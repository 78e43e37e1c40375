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

#include "zzsim/jmatrix.h"

#include <cmath>
#include <string>

#include "zzsim/errors.h"

namespace zzsim {

PairMatrix JMatrix::block(int k, int l) const {
    if (k == l) {
        return {};
    }
    bool swapped = k > l;
    auto it = blocks.find(swapped ? std::make_pair(l, k) : std::make_pair(k, l));
    if (it == blocks.end()) {
        return {};
    }
    return swapped ? it->second.transpose() : it->second;
}

void JMatrix::set_block(int k, int l, const PairMatrix &m) {
    if (k == l) {
        throw ValidationError("jmatrix: diagonal blocks are fixed at zero");
    }
    if (k < l) {
        blocks[{k, l}] = m;
    } else {
        blocks[{l, k}] = m.transpose();
    }
}

void JMatrix::add_to_block(int k, int l, const PairMatrix &m) {
    set_block(k, l, block(k, l) + m);
}

Matrix JMatrix::dense() const {
    Matrix d(3 * n, 3 * n);
    for (const auto &[key, m] : blocks) {
        auto [k, l] = key;
        for (int a = 0; a < 3; a++) {
            for (int b = 0; b < 3; b++) {
                d(3 * k + a, 3 * l + b) = m(a, b);
                d(3 * l + b, 3 * k + a) = m(a, b);
            }
        }
    }
    return d;
}

JMatrix JMatrix::scaled(double s) const {
    JMatrix out = *this;
    for (auto &[key, m] : out.blocks) {
        m *= s;
    }
    return out;
}

bool JMatrix::is_pure_zz(double tol) const {
    for (const auto &[key, m] : blocks) {
        for (int i = 0; i < 8; i++) {
            if (std::abs(m.v[i]) > tol) {
                return false;
            }
        }
    }
    return true;
}

void validate(const JMatrix &j) {
    if (j.n < 1) {
        throw ValidationError("jmatrix: qubit count must be at least 1");
    }
    for (const auto &[key, m] : j.blocks) {
        auto [k, l] = key;
        std::string where = "jmatrix: block (" + std::to_string(k + 1) + "," + std::to_string(l + 1) + ")";
        if (k < 0 || l >= j.n || k >= l) {
            throw ValidationError(where + ": key out of range or not k < l");
        }
        for (double v : m.v) {
            if (!std::isfinite(v)) {
                throw ValidationError(where + ": non-finite entry");
            }
        }
    }
}

JMatrix graph_to_jmatrix(const WeightedGraph &g) {
    JMatrix j = JMatrix::zero(g.n);
    for (const auto &e : g.edges) {
        PairMatrix m;
        m(2, 2) = e.w;
        j.set_block(e.k, e.l, m);
    }
    return j;
}

WeightedGraph zz_weights(const JMatrix &j) {
    WeightedGraph g{j.n, {}};
    for (const auto &[key, m] : j.blocks) {
        g.edges.push_back({key.first, key.second, m(2, 2)});
    }
    return g;
}

double max_abs_diff(const JMatrix &a, const JMatrix &b) {
    if (a.n != b.n) {
        throw ValidationError("jmatrix: qubit count mismatch");
    }
    double m = 0;
    for (const auto &[key, blk] : a.blocks) {
        m = std::max(m, (blk - b.block(key.first, key.second)).max_abs());
    }
    for (const auto &[key, blk] : b.blocks) {
        if (!a.blocks.contains(key)) {
            m = std::max(m, blk.max_abs());
        }
    }
    return m;
}

}  // namespace zzsim
