// Copyright (c) 2026 hwmap developers
// SPDX-License-Identifier: Apache-2.0

#ifndef HWMAP_CORE_MATRIX_HPP
#define HWMAP_CORE_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hwmap {

using cxd = std::complex<double>;

/// Dense complex matrix, row-major. The universal operator carrier for
/// everything in this library; dimensions stay small (d <= ~16, so at most
/// d^2 x d^2 for superoperators and Choi matrices).
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, cxd{0.0, 0.0}) {
        if (rows == 0 || cols == 0) {
            throw std::invalid_argument("matrix dimensions must be >= 1");
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cxd& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cxd& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<cxd>& data() const { return data_; }

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(cxd scalar);

  private:
    std::size_t rows_, cols_;
    std::vector<cxd> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(cxd scalar, Matrix m);

Matrix identity(std::size_t n);
Matrix zeros(std::size_t rows, std::size_t cols);

/// E_{ij}: the d x d matrix unit with a single 1 at (i, j).
Matrix matrix_unit(std::size_t d, std::size_t i, std::size_t j);

Matrix dagger(const Matrix& m);
cxd trace(const Matrix& m);

/// Hilbert-Schmidt pairing Tr(A^dag B).
cxd hs_inner(const Matrix& a, const Matrix& b);

Matrix kron(const Matrix& a, const Matrix& b);

/// Max-abs-entry norm; all tolerance comparisons in this library use it.
double max_abs(const Matrix& m);
double distance(const Matrix& a, const Matrix& b);

bool all_finite(const Matrix& m);

/// Column-stacked vectorization: vec(Y)[i + j*rows] = Y(i, j).
std::vector<cxd> vectorize(const Matrix& m);

}  // namespace hwmap

#endif
