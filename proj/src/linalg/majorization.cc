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

#include <algorithm>
#include <cmath>
#include <functional>

#include "zzsim/errors.h"
#include "zzsim/linalg.h"

namespace zzsim {

bool majorized_by(std::span<const double> x, std::span<const double> y, double tol) {
    if (x.size() != y.size()) {
        throw ValidationError("majorized_by: length mismatch");
    }
    std::vector<double> xs(x.begin(), x.end());
    std::vector<double> ys(y.begin(), y.end());
    std::sort(xs.begin(), xs.end(), std::greater<>());
    std::sort(ys.begin(), ys.end(), std::greater<>());

    double scale = 1;
    for (size_t i = 0; i < xs.size(); i++) {
        scale = std::max({scale, std::abs(xs[i]), std::abs(ys[i])});
    }
    const double slack = tol * scale * static_cast<double>(std::max<size_t>(1, xs.size()));

    double px = 0;
    double py = 0;
    for (size_t k = 0; k < xs.size(); k++) {
        px += xs[k];
        py += ys[k];
        if (px > py + slack) {
            return false;
        }
    }
    return std::abs(px - py) <= slack;
}

}  // namespace zzsim
