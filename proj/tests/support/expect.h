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

#include <gtest/gtest.h>

#include <string>

#include "zzsim/errors.h"

namespace zzsim::testing {

/// Runs fn and checks that it throws E with `fragment` in the message.
template <typename E = ValidationError, typename Fn>
::testing::AssertionResult throws_with(Fn &&fn, const std::string &fragment) {
    try {
        fn();
    } catch (const E &e) {
        if (std::string(e.what()).find(fragment) != std::string::npos) {
            return ::testing::AssertionSuccess();
        }
        return ::testing::AssertionFailure() << "message \"" << e.what() << "\" lacks \"" << fragment << "\"";
    }
    return ::testing::AssertionFailure() << "no exception thrown";
}

}  // namespace zzsim::testing
