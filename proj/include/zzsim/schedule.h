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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zzsim/jmatrix.h"
#include "zzsim/matrix.h"

namespace zzsim {

/// Durations at or below this are dropped from emitted schedules.
inline constexpr double kPruneDuration = 1e-12;

/// One interval of a sign schedule: qubit i is conjugated by sigma_x when
/// signs[i] == -1 and left alone when +1. Equivalently the bipartition
/// X = {+}, Y = {-}.
struct SignInterval {
    std::vector<int8_t> signs;
    double duration = 0;

    bool operator==(const SignInterval &) const = default;
};

struct SignSchedule {
    int n = 0;
    std::vector<SignInterval> intervals;

    /// Total duration (the simulation overhead).
    double overhead() const;
    /// Flips every sign in every interval; the effective Hamiltonian is unchanged.
    SignSchedule negated() const;

    bool operator==(const SignSchedule &) const = default;
};

/// Renders a sign vector as "++-+".
std::string sign_string(const std::vector<int8_t> &signs);
/// Parses "++-+"; throws ValidationError on any other character.
std::vector<int8_t> parse_sign_string(const std::string &s);

void validate(const SignSchedule &s);

/// Per-qubit SU(2) elements; the frame conjugates a Hamiltonian as u H u^dagger.
struct LocalFrame {
    std::vector<Mat2c> u;

    static LocalFrame identity(int n);
    int size() const {
        return static_cast<int>(u.size());
    }
};

void validate(const LocalFrame &f, double tol = 1e-9);

struct FrameInterval {
    LocalFrame frame;
    double duration = 0;
};

/// Piecewise-constant plan: during interval j the system evolves under
/// frame_j H_d frame_j^dagger for `duration`. Local target terms are applied
/// with zero duration (fast local control); `local_fields` holds them, one
/// field per qubit, or is empty. `trailing` is applied once at the end.
struct ConjugationSchedule {
    int n = 0;
    std::vector<FrameInterval> intervals;
    std::optional<LocalFrame> trailing;
    LocalFields local_fields;

    double overhead() const;
};

void validate(const ConjugationSchedule &s, double tol = 1e-9);

/// Converts a sign schedule to frames (i sigma_x for each minus sign).
ConjugationSchedule to_conjugation_schedule(const SignSchedule &s);

}  // namespace zzsim
