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

#include <vector>

#include "zzsim/matrix.h"

namespace zzsim {

/// A two-qubit gate; the first tensor factor of the 4x4 matrix acts on `k`.
struct Gate {
    int k = 0;
    int l = 1;
    CMatrix u;
};

/// Gates on pairwise-disjoint qubit pairs.
using CircuitStep = std::vector<Gate>;

/// Steps applied in order: the implemented unitary is v_s ... v_2 v_1.
struct Circuit {
    int n = 0;
    std::vector<CircuitStep> steps;
};

/// Checks shape, range, SU(4) membership (within tol), and that no qubit is
/// touched twice within one step.
void validate(const CircuitStep &step, int n, double tol = 1e-9);
void validate(const Circuit &c, double tol = 1e-9);

}  // namespace zzsim
