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

#include <array>
#include <cassert>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace zzsim {

using Complex = std::complex<double>;

/// Row-major dense matrix. Sizes in this project stay small (at most a few
/// thousand rows), so no expression templates or blocking.
template <typename T>
class DenseMatrix {
   public:
    DenseMatrix() = default;
    DenseMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T{}) {
    }

    static DenseMatrix identity(size_t n) {
        DenseMatrix m(n, n);
        for (size_t i = 0; i < n; i++) {
            m(i, i) = T{1};
        }
        return m;
    }

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }

    T &operator()(size_t r, size_t c) {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }
    const T &operator()(size_t r, size_t c) const {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }

    std::span<T> row(size_t r) {
        return {data_.data() + r * cols_, cols_};
    }
    std::span<const T> row(size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }

    std::span<T> data() {
        return data_;
    }
    std::span<const T> data() const {
        return data_;
    }

    DenseMatrix transpose() const {
        DenseMatrix t(cols_, rows_);
        for (size_t r = 0; r < rows_; r++) {
            for (size_t c = 0; c < cols_; c++) {
                t(c, r) = (*this)(r, c);
            }
        }
        return t;
    }

    /// Conjugate transpose; equals transpose() for real matrices.
    DenseMatrix adjoint() const {
        DenseMatrix t(cols_, rows_);
        for (size_t r = 0; r < rows_; r++) {
            for (size_t c = 0; c < cols_; c++) {
                if constexpr (std::is_same_v<T, Complex>) {
                    t(c, r) = std::conj((*this)(r, c));
                } else {
                    t(c, r) = (*this)(r, c);
                }
            }
        }
        return t;
    }

    DenseMatrix &operator+=(const DenseMatrix &o) {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        for (size_t i = 0; i < data_.size(); i++) {
            data_[i] += o.data_[i];
        }
        return *this;
    }
    DenseMatrix &operator-=(const DenseMatrix &o) {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        for (size_t i = 0; i < data_.size(); i++) {
            data_[i] -= o.data_[i];
        }
        return *this;
    }
    DenseMatrix &operator*=(T s) {
        for (auto &v : data_) {
            v *= s;
        }
        return *this;
    }

    friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix &b) {
        return a += b;
    }
    friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix &b) {
        return a -= b;
    }
    friend DenseMatrix operator*(DenseMatrix a, T s) {
        return a *= s;
    }
    friend DenseMatrix operator*(T s, DenseMatrix a) {
        return a *= s;
    }

    friend DenseMatrix operator*(const DenseMatrix &a, const DenseMatrix &b) {
        assert(a.cols_ == b.rows_);
        DenseMatrix out(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; i++) {
            for (size_t k = 0; k < a.cols_; k++) {
                T v = a(i, k);
                if (v == T{}) {
                    continue;
                }
                for (size_t j = 0; j < b.cols_; j++) {
                    out(i, j) += v * b(k, j);
                }
            }
        }
        return out;
    }

    bool operator==(const DenseMatrix &o) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<T> data_;
};

using Matrix = DenseMatrix<double>;
using CMatrix = DenseMatrix<Complex>;

/// Largest absolute entry of a - b. Shapes must agree.
template <typename T>
double max_abs_diff(const DenseMatrix<T> &a, const DenseMatrix<T> &b) {
    assert(a.rows() == b.rows() && a.cols() == b.cols());
    double m = 0;
    auto da = a.data();
    auto db = b.data();
    for (size_t i = 0; i < da.size(); i++) {
        m = std::max(m, std::abs(da[i] - db[i]));
    }
    return m;
}

template <typename T>
double max_abs(const DenseMatrix<T> &a) {
    double m = 0;
    for (const auto &v : a.data()) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

/// Kronecker product; the left factor indexes the most significant bits.
CMatrix kron(const CMatrix &a, const CMatrix &b);

/// Real part of a complex matrix embedded as complex (helper for tests and I/O).
CMatrix to_complex(const Matrix &m);

using Vec3 = std::array<double, 3>;

/// 3x3 real matrix; rows and columns indexed by Pauli axis x=0, y=1, z=2.
struct Mat3 {
    std::array<double, 9> v{};

    static Mat3 identity() {
        Mat3 m;
        m(0, 0) = m(1, 1) = m(2, 2) = 1;
        return m;
    }
    static Mat3 diag(double a, double b, double c) {
        Mat3 m;
        m(0, 0) = a;
        m(1, 1) = b;
        m(2, 2) = c;
        return m;
    }
    static Mat3 outer(const Vec3 &a, const Vec3 &b) {
        Mat3 m;
        for (int i = 0; i < 3; i++) {
            for (int j = 0; j < 3; j++) {
                m(i, j) = a[i] * b[j];
            }
        }
        return m;
    }

    double &operator()(int r, int c) {
        return v[3 * r + c];
    }
    double operator()(int r, int c) const {
        return v[3 * r + c];
    }

    Vec3 column(int c) const {
        return {(*this)(0, c), (*this)(1, c), (*this)(2, c)};
    }
    void set_column(int c, const Vec3 &x) {
        for (int r = 0; r < 3; r++) {
            (*this)(r, c) = x[r];
        }
    }

    Mat3 transpose() const {
        Mat3 t;
        for (int i = 0; i < 3; i++) {
            for (int j = 0; j < 3; j++) {
                t(i, j) = (*this)(j, i);
            }
        }
        return t;
    }

    double det() const {
        const Mat3 &m = *this;
        return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
               m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    }

    Mat3 &operator+=(const Mat3 &o) {
        for (int i = 0; i < 9; i++) {
            v[i] += o.v[i];
        }
        return *this;
    }
    Mat3 &operator-=(const Mat3 &o) {
        for (int i = 0; i < 9; i++) {
            v[i] -= o.v[i];
        }
        return *this;
    }
    Mat3 &operator*=(double s) {
        for (auto &x : v) {
            x *= s;
        }
        return *this;
    }
    friend Mat3 operator+(Mat3 a, const Mat3 &b) {
        return a += b;
    }
    friend Mat3 operator-(Mat3 a, const Mat3 &b) {
        return a -= b;
    }
    friend Mat3 operator*(Mat3 a, double s) {
        return a *= s;
    }
    friend Mat3 operator*(double s, Mat3 a) {
        return a *= s;
    }
    friend Mat3 operator*(const Mat3 &a, const Mat3 &b) {
        Mat3 out;
        for (int i = 0; i < 3; i++) {
            for (int j = 0; j < 3; j++) {
                double s = 0;
                for (int k = 0; k < 3; k++) {
                    s += a(i, k) * b(k, j);
                }
                out(i, j) = s;
            }
        }
        return out;
    }
    friend Vec3 operator*(const Mat3 &a, const Vec3 &x) {
        Vec3 out{};
        for (int i = 0; i < 3; i++) {
            out[i] = a(i, 0) * x[0] + a(i, 1) * x[1] + a(i, 2) * x[2];
        }
        return out;
    }

    double max_abs() const {
        double m = 0;
        for (double x : v) {
            m = std::max(m, std::abs(x));
        }
        return m;
    }

    bool operator==(const Mat3 &) const = default;
};

inline double dot(const Vec3 &a, const Vec3 &b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline Vec3 cross(const Vec3 &a, const Vec3 &b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline double norm(const Vec3 &a) {
    return std::sqrt(dot(a, a));
}

/// 2x2 complex matrix in row-major order (single-qubit operators).
struct Mat2c {
    std::array<Complex, 4> v{};

    static Mat2c identity() {
        return {{Complex{1}, Complex{0}, Complex{0}, Complex{1}}};
    }

    Complex &operator()(int r, int c) {
        return v[2 * r + c];
    }
    const Complex &operator()(int r, int c) const {
        return v[2 * r + c];
    }

    Mat2c adjoint() const {
        return {{std::conj(v[0]), std::conj(v[2]), std::conj(v[1]), std::conj(v[3])}};
    }
    Complex det() const {
        return v[0] * v[3] - v[1] * v[2];
    }
    Complex trace() const {
        return v[0] + v[3];
    }

    friend Mat2c operator*(const Mat2c &a, const Mat2c &b) {
        Mat2c o;
        o(0, 0) = a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0);
        o(0, 1) = a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1);
        o(1, 0) = a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0);
        o(1, 1) = a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1);
        return o;
    }
    friend Mat2c operator*(Complex s, Mat2c a) {
        for (auto &x : a.v) {
            x *= s;
        }
        return a;
    }
    friend Mat2c operator+(Mat2c a, const Mat2c &b) {
        for (int i = 0; i < 4; i++) {
            a.v[i] += b.v[i];
        }
        return a;
    }
    friend Mat2c operator-(Mat2c a, const Mat2c &b) {
        for (int i = 0; i < 4; i++) {
            a.v[i] -= b.v[i];
        }
        return a;
    }

    double max_abs() const {
        double m = 0;
        for (const auto &x : v) {
            m = std::max(m, std::abs(x));
        }
        return m;
    }

    CMatrix to_dense() const {
        CMatrix m(2, 2);
        for (int r = 0; r < 2; r++) {
            for (int c = 0; c < 2; c++) {
                m(r, c) = (*this)(r, c);
            }
        }
        return m;
    }
};

}  // namespace zzsim
