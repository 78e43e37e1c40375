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

#include "zzsim/schedule.h"

#include <cmath>

#include "zzsim/errors.h"

namespace zzsim {

namespace {

std::string interval_location(size_t j) {
    return "interval #" + std::to_string(j + 1);
}

void validate_duration(double d, size_t j, const char *what) {
    if (!std::isfinite(d) || d <= 0) {
        throw ValidationError(std::string(what) + ": " + interval_location(j) + ": nonpositive duration");
    }
}

}  // namespace

double SignSchedule::overhead() const {
    double mu = 0;
    for (const auto &iv : intervals) {
        mu += iv.duration;
    }
    return mu;
}

SignSchedule SignSchedule::negated() const {
    SignSchedule out = *this;
    for (auto &iv : out.intervals) {
        for (auto &s : iv.signs) {
            s = static_cast<int8_t>(-s);
        }
    }
    return out;
}

std::string sign_string(const std::vector<int8_t> &signs) {
    std::string s;
    s.reserve(signs.size());
    for (int8_t v : signs) {
        s.push_back(v > 0 ? '+' : '-');
    }
    return s;
}

std::vector<int8_t> parse_sign_string(const std::string &s) {
    std::vector<int8_t> out;
    out.reserve(s.size());
    for (size_t i = 0; i < s.size(); i++) {
        if (s[i] == '+') {
            out.push_back(1);
        } else if (s[i] == '-') {
            out.push_back(-1);
        } else {
            throw ValidationError("sign string: unexpected character '" + std::string(1, s[i]) + "' at position " +
                                  std::to_string(i + 1));
        }
    }
    return out;
}

void validate(const SignSchedule &s) {
    if (s.n < 1) {
        throw ValidationError("sign schedule: qubit count must be at least 1");
    }
    for (size_t j = 0; j < s.intervals.size(); j++) {
        const auto &iv = s.intervals[j];
        if (iv.signs.size() != static_cast<size_t>(s.n)) {
            throw ValidationError("sign schedule: " + interval_location(j) + ": expected " + std::to_string(s.n) +
                                  " signs, got " + std::to_string(iv.signs.size()));
        }
        for (int8_t v : iv.signs) {
            if (v != 1 && v != -1) {
                throw ValidationError("sign schedule: " + interval_location(j) + ": sign must be +1 or -1");
            }
        }
        validate_duration(iv.duration, j, "sign schedule");
    }
}

LocalFrame LocalFrame::identity(int n) {
    return {std::vector<Mat2c>(n, Mat2c::identity())};
}

void validate(const LocalFrame &f, double tol) {
    for (size_t q = 0; q < f.u.size(); q++) {
        const Mat2c &u = f.u[q];
        std::string where = "frame: qubit " + std::to_string(q + 1);
        for (const auto &c : u.v) {
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
                throw ValidationError(where + ": non-finite entry");
            }
        }
        if ((u * u.adjoint() - Mat2c::identity()).max_abs() > tol) {
            throw ValidationError(where + ": not unitary");
        }
        if (std::abs(u.det() - Complex{1}) > tol) {
            throw ValidationError(where + ": determinant is not 1");
        }
    }
}

double ConjugationSchedule::overhead() const {
    double mu = 0;
    for (const auto &iv : intervals) {
        mu += iv.duration;
    }
    return mu;
}

void validate(const ConjugationSchedule &s, double tol) {
    if (s.n < 1) {
        throw ValidationError("conjugation schedule: qubit count must be at least 1");
    }
    for (size_t j = 0; j < s.intervals.size(); j++) {
        const auto &iv = s.intervals[j];
        if (iv.frame.size() != s.n) {
            throw ValidationError("conjugation schedule: " + interval_location(j) + ": frame size mismatch");
        }
        validate(iv.frame, tol);
        validate_duration(iv.duration, j, "conjugation schedule");
    }
    if (s.trailing) {
        if (s.trailing->size() != s.n) {
            throw ValidationError("conjugation schedule: trailing frame size mismatch");
        }
        validate(*s.trailing, tol);
    }
    if (!s.local_fields.empty()) {
        if (s.local_fields.size() != static_cast<size_t>(s.n)) {
            throw ValidationError("conjugation schedule: local field count mismatch");
        }
        for (const auto &h : s.local_fields) {
            for (double v : h) {
                if (!std::isfinite(v)) {
                    throw ValidationError("conjugation schedule: non-finite local field");
                }
            }
        }
    }
}

ConjugationSchedule to_conjugation_schedule(const SignSchedule &s) {
    // i sigma_x has determinant 1 and conjugates like sigma_x.
    Mat2c flip{{Complex{0}, Complex{0, 1}, Complex{0, 1}, Complex{0}}};
    ConjugationSchedule out{s.n, {}, std::nullopt, {}};
    for (const auto &iv : s.intervals) {
        LocalFrame f = LocalFrame::identity(s.n);
        for (int q = 0; q < s.n; q++) {
            if (iv.signs[q] < 0) {
                f.u[q] = flip;
            }
        }
        out.intervals.push_back({std::move(f), iv.duration});
    }
    return out;
}

}  // namespace zzsim
