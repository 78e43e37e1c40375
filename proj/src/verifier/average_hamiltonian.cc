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

#include <string>

#include "zzsim/errors.h"
#include "zzsim/verifier.h"

namespace zzsim {

JMatrix average_hamiltonian(const SignSchedule &s, const WeightedGraph &drift) {
    validate(s);
    validate(drift);
    if (s.n != drift.n) {
        throw ValidationError("average_hamiltonian: schedule has " + std::to_string(s.n) + " qubits, drift has " +
                              std::to_string(drift.n));
    }
    JMatrix out = JMatrix::zero(drift.n);
    for (const auto &e : drift.edges) {
        double sum = 0;
        for (const auto &iv : s.intervals) {
            int product = iv.signs[e.k] * iv.signs[e.l];
            sum += product > 0 ? iv.duration : -iv.duration;
        }
        PairMatrix m;
        m(2, 2) = e.w * sum;
        out.set_block(e.k, e.l, m);
    }
    return out;
}

JMatrix average_hamiltonian(const ConjugationSchedule &s, const JMatrix &drift) {
    validate(s);
    validate(drift);
    if (s.n != drift.n) {
        throw ValidationError("average_hamiltonian: schedule has " + std::to_string(s.n) + " qubits, drift has " +
                              std::to_string(drift.n));
    }
    JMatrix out = JMatrix::zero(drift.n);
    for (const auto &iv : s.intervals) {
        std::vector<Mat3> rot;
        rot.reserve(s.n);
        for (const auto &u : iv.frame.u) {
            rot.push_back(adjoint_rotation(u));
        }
        for (const auto &[key, j] : drift.blocks) {
            auto [k, l] = key;
            out.add_to_block(k, l, iv.duration * (rot[k] * j * rot[l].transpose()));
        }
    }
    return out;
}

}  // namespace zzsim
