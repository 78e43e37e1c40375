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

#include "zzsim/errors.h"
#include "zzsim/linalg.h"

namespace zzsim {

namespace {

Vec3 scale(const Vec3 &a, double s) {
    return {a[0] * s, a[1] * s, a[2] * s};
}

Vec3 sub(const Vec3 &a, const Vec3 &b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

// Unit vector orthogonal to the unit vector `a`.
Vec3 any_orthogonal(const Vec3 &a) {
    int axis = 0;
    for (int i = 1; i < 3; i++) {
        if (std::abs(a[i]) < std::abs(a[axis])) {
            axis = i;
        }
    }
    Vec3 e{};
    e[axis] = 1;
    Vec3 o = cross(a, e);
    return scale(o, 1 / norm(o));
}

}  // namespace

SignedSvd svd3_special(const Mat3 &m) {
    // One-sided (Hestenes) Jacobi: rotate columns of m until pairwise orthogonal.
    Mat3 a = m;
    Mat3 w = Mat3::identity();
    for (int sweep = 0; sweep < 60; sweep++) {
        bool rotated = false;
        for (int i = 0; i < 2; i++) {
            for (int j = i + 1; j < 3; j++) {
                Vec3 ai = a.column(i);
                Vec3 aj = a.column(j);
                double alpha = dot(ai, ai);
                double beta = dot(aj, aj);
                double gamma = dot(ai, aj);
                if (gamma == 0 || std::abs(gamma) <= 1e-15 * std::sqrt(alpha * beta)) {
                    continue;
                }
                rotated = true;
                double zeta = (beta - alpha) / (2 * gamma);
                double t = 1 / (std::abs(zeta) + std::sqrt(1 + zeta * zeta));
                if (zeta < 0) {
                    t = -t;
                }
                double c = 1 / std::sqrt(1 + t * t);
                double s = c * t;
                a.set_column(i, sub(scale(ai, c), scale(aj, s)));
                a.set_column(j, {s * ai[0] + c * aj[0], s * ai[1] + c * aj[1], s * ai[2] + c * aj[2]});
                Vec3 wi = w.column(i);
                Vec3 wj = w.column(j);
                w.set_column(i, sub(scale(wi, c), scale(wj, s)));
                w.set_column(j, {s * wi[0] + c * wj[0], s * wi[1] + c * wj[1], s * wi[2] + c * wj[2]});
            }
        }
        if (!rotated) {
            break;
        }
    }

    // Order columns by decreasing norm.
    std::array<int, 3> order{0, 1, 2};
    std::array<double, 3> norms{norm(a.column(0)), norm(a.column(1)), norm(a.column(2))};
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return norms[x] > norms[y];
    });
    Mat3 as;
    Mat3 ws;
    for (int c = 0; c < 3; c++) {
        as.set_column(c, a.column(order[c]));
        ws.set_column(c, w.column(order[c]));
    }
    if (ws.det() < 0) {
        ws.set_column(2, scale(ws.column(2), -1));
        as.set_column(2, scale(as.column(2), -1));
    }

    const double tiny = 1e-300;
    const double negligible = 1e-15 * std::max(norm(as.column(0)), tiny);
    SignedSvd out;
    Vec3 a0 = as.column(0);
    Vec3 a1 = as.column(1);
    Vec3 a2 = as.column(2);
    double n0 = norm(a0);
    if (n0 <= tiny) {
        out.u = Mat3::identity();
        out.v = ws.transpose();
        out.s = {0, 0, 0};
        return out;
    }
    Vec3 u0 = scale(a0, 1 / n0);
    Vec3 u1;
    Vec3 r1 = sub(a1, scale(u0, dot(u0, a1)));
    if (norm(r1) > negligible) {
        u1 = scale(r1, 1 / norm(r1));
    } else {
        u1 = any_orthogonal(u0);
    }
    if (dot(u1, a1) < 0) {
        u1 = scale(u1, -1);
    }
    Vec3 u2 = cross(u0, u1);

    out.u.set_column(0, u0);
    out.u.set_column(1, u1);
    out.u.set_column(2, u2);
    out.s = {dot(u0, a0), dot(u1, a1), dot(u2, a2)};
    out.v = ws.transpose();
    return out;
}

Mat3 rotation_about(const Vec3 &axis, double angle) {
    double len = norm(axis);
    if (!(len > 0)) {
        throw ValidationError("rotation_about: axis must be nonzero");
    }
    Vec3 n = scale(axis, 1 / len);
    double c = std::cos(angle);
    double s = std::sin(angle);
    double t = 1 - c;
    Mat3 r;
    r(0, 0) = c + n[0] * n[0] * t;
    r(0, 1) = n[0] * n[1] * t - n[2] * s;
    r(0, 2) = n[0] * n[2] * t + n[1] * s;
    r(1, 0) = n[1] * n[0] * t + n[2] * s;
    r(1, 1) = c + n[1] * n[1] * t;
    r(1, 2) = n[1] * n[2] * t - n[0] * s;
    r(2, 0) = n[2] * n[0] * t - n[1] * s;
    r(2, 1) = n[2] * n[1] * t + n[0] * s;
    r(2, 2) = c + n[2] * n[2] * t;
    return r;
}

Mat2c so3_to_su2(const Mat3 &r, double tol) {
    if ((r * r.transpose() - Mat3::identity()).max_abs() > tol || std::abs(r.det() - 1) > tol) {
        throw ValidationError("so3_to_su2: input is not a rotation");
    }
    // Unit quaternion (w, x, y, z) of r, branching on the largest component.
    double tr = r(0, 0) + r(1, 1) + r(2, 2);
    double w, x, y, z;
    if (tr >= r(0, 0) && tr >= r(1, 1) && tr >= r(2, 2)) {
        w = 0.5 * std::sqrt(std::max(0.0, 1 + tr));
        x = (r(2, 1) - r(1, 2)) / (4 * w);
        y = (r(0, 2) - r(2, 0)) / (4 * w);
        z = (r(1, 0) - r(0, 1)) / (4 * w);
    } else if (r(0, 0) >= r(1, 1) && r(0, 0) >= r(2, 2)) {
        x = 0.5 * std::sqrt(std::max(0.0, 1 + r(0, 0) - r(1, 1) - r(2, 2)));
        w = (r(2, 1) - r(1, 2)) / (4 * x);
        y = (r(0, 1) + r(1, 0)) / (4 * x);
        z = (r(0, 2) + r(2, 0)) / (4 * x);
    } else if (r(1, 1) >= r(2, 2)) {
        y = 0.5 * std::sqrt(std::max(0.0, 1 - r(0, 0) + r(1, 1) - r(2, 2)));
        w = (r(0, 2) - r(2, 0)) / (4 * y);
        x = (r(0, 1) + r(1, 0)) / (4 * y);
        z = (r(1, 2) + r(2, 1)) / (4 * y);
    } else {
        z = 0.5 * std::sqrt(std::max(0.0, 1 - r(0, 0) - r(1, 1) + r(2, 2)));
        w = (r(1, 0) - r(0, 1)) / (4 * z);
        x = (r(0, 2) + r(2, 0)) / (4 * z);
        y = (r(1, 2) + r(2, 1)) / (4 * z);
    }
    double len = std::sqrt(w * w + x * x + y * y + z * z);
    w /= len;
    x /= len;
    y /= len;
    z /= len;
    // u = w I - i (x sigma_x + y sigma_y + z sigma_z).
    Mat2c u;
    u(0, 0) = {w, -z};
    u(0, 1) = {-y, -x};
    u(1, 0) = {y, -x};
    u(1, 1) = {w, z};
    return u;
}

}  // namespace zzsim
