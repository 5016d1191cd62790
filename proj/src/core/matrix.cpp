// Copyright (c) 2026 hwmap developers
// SPDX-License-Identifier: Apache-2.0

#include "core/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace hwmap {

namespace {
void require_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("matrix shape mismatch");
    }
}
}  // namespace

Matrix& Matrix::operator+=(const Matrix& other) {
    require_same_shape(*this, other);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    require_same_shape(*this, other);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(cxd scalar) {
    for (auto& v : data_) v *= scalar;
    return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(cxd scalar, Matrix m) { return m *= scalar; }

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cxd aik = a(i, k);
            if (aik == cxd{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

Matrix matrix_unit(std::size_t d, std::size_t i, std::size_t j) {
    Matrix m(d, d);
    m(i, j) = 1.0;
    return m;
}

Matrix dagger(const Matrix& m) {
    Matrix out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = std::conj(m(i, j));
    return out;
}

cxd trace(const Matrix& m) {
    if (!m.square()) throw std::invalid_argument("trace requires a square matrix");
    cxd t{0.0, 0.0};
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

cxd hs_inner(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    cxd t{0.0, 0.0};
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t += std::conj(a(i, j)) * b(i, j);
    return t;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cxd aij = a(i, j);
            if (aij == cxd{0.0, 0.0}) continue;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t s = 0; s < b.cols(); ++s)
                    out(i * b.rows() + r, j * b.cols() + s) = aij * b(r, s);
        }
    return out;
}

double max_abs(const Matrix& m) {
    double mx = 0.0;
    for (const auto& v : m.data()) mx = std::max(mx, std::abs(v));
    return mx;
}

double distance(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    double mx = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) mx = std::max(mx, std::abs(a(i, j) - b(i, j)));
    return mx;
}

bool all_finite(const Matrix& m) {
    for (const auto& v : m.data())
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

std::vector<cxd> vectorize(const Matrix& m) {
    std::vector<cxd> v(m.rows() * m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) v[i + j * m.rows()] = m(i, j);
    return v;
}

}  // namespace hwmap
