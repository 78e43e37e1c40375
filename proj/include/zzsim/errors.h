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

#include <stdexcept>
#include <string>

namespace zzsim {

/// A value violates a documented invariant or precondition.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A problem size exceeds a configured cap (LP enumeration, dense simulation).
struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An iterative numerical kernel failed to converge.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace zzsim
