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

#include <bit>
#include <cmath>
#include <string>

#include "zzsim/planner.h"

namespace zzsim {

namespace {

constexpr int kMaxRankOneQubits = 20;
constexpr int kMaxSignRows = 20;

// One interval per column m of the row matrix; qubits in clique i take row i.
SignSchedule rows_schedule(int n, const std::vector<std::vector<int>> &cliques, uint32_t intervals,
                           int (*row_sign)(int, uint32_t)) {
    SignSchedule s{n, {}};
    const double tau = 1.0 / intervals;
    for (uint32_t m = 0; m < intervals; m++) {
        SignInterval iv{std::vector<int8_t>(n, 1), tau};
        for (size_t i = 0; i < cliques.size(); i++) {
            int8_t sign = static_cast<int8_t>(row_sign(static_cast<int>(i), m));
            for (int q : cliques[i]) {
                iv.signs[q] = sign;
            }
        }
        s.intervals.push_back(std::move(iv));
    }
    return s;
}

int walsh_sign(int i, uint32_t m) {
    return i > 0 && (m >> (i - 1) & 1) ? -1 : 1;
}

int sylvester_sign(int i, uint32_t m) {
    return std::popcount(static_cast<uint32_t>(i) & m) % 2 ? -1 : 1;
}

}  // namespace

void validate_partition(int n, const std::vector<std::vector<int>> &cliques) {
    if (n < 1) {
        throw ValidationError("clique partition: qubit count must be at least 1");
    }
    std::vector<int> owner(n, -1);
    for (size_t i = 0; i < cliques.size(); i++) {
        if (cliques[i].empty()) {
            throw ValidationError("clique partition: set #" + std::to_string(i + 1) + " is empty");
        }
        for (int q : cliques[i]) {
            if (q < 0 || q >= n) {
                throw ValidationError("clique partition: vertex " + std::to_string(q + 1) + " out of range");
            }
            if (owner[q] >= 0) {
                throw ValidationError("clique partition: vertex " + std::to_string(q + 1) + " appears in sets #" +
                                      std::to_string(owner[q] + 1) + " and #" + std::to_string(i + 1));
            }
            owner[q] = static_cast<int>(i);
        }
    }
    for (int q = 0; q < n; q++) {
        if (owner[q] < 0) {
            throw ValidationError("clique partition: vertex " + std::to_string(q + 1) + " is not covered");
        }
    }
}

SignSchedule rank_one_schedule(std::span<const double> jz) {
    const int n = static_cast<int>(jz.size());
    if (n < 1) {
        throw ValidationError("rank_one_schedule: need at least one qubit");
    }
    if (n > kMaxRankOneQubits) {
        throw CapExceededError("rank_one_schedule: " + std::to_string(n) + " qubits exceeds the cap of " +
                               std::to_string(kMaxRankOneQubits));
    }
    for (int i = 0; i < n; i++) {
        if (!(std::abs(jz[i]) <= 1)) {
            throw ValidationError("rank_one_schedule: component " + std::to_string(i + 1) + " outside [-1, 1]");
        }
    }
    SignSchedule s{n, {}};
    const uint32_t total = uint32_t{1} << n;
    for (uint32_t x = 0; x < total; x++) {
        SignInterval iv{std::vector<int8_t>(n, 1), 1.0};
        for (int i = 0; i < n; i++) {
            bool minus = x >> i & 1;
            iv.signs[i] = minus ? -1 : 1;
            iv.duration *= minus ? (1 - jz[i]) / 2 : (1 + jz[i]) / 2;
        }
        if (iv.duration > kPruneDuration) {
            s.intervals.push_back(std::move(iv));
        }
    }
    return s;
}

SignSchedule clique_walsh_schedule(int n, const std::vector<std::vector<int>> &cliques) {
    validate_partition(n, cliques);
    const int rows = static_cast<int>(cliques.size()) - 1;
    if (rows > kMaxSignRows) {
        throw CapExceededError("clique_walsh_schedule: too many cliques");
    }
    return rows_schedule(n, cliques, uint32_t{1} << rows, walsh_sign);
}

SignSchedule hadamard_schedule(int n, const std::vector<std::vector<int>> &cliques) {
    validate_partition(n, cliques);
    uint32_t order = std::bit_ceil(static_cast<uint32_t>(cliques.size()));
    return rows_schedule(n, cliques, order, sylvester_sign);
}

}  // namespace zzsim
