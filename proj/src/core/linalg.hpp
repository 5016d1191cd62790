// Copyright (c) 2026 hwmap developers
// SPDX-License-Identifier: Apache-2.0

#ifndef HWMAP_CORE_LINALG_HPP
#define HWMAP_CORE_LINALG_HPP

#include <vector>

#include "core/matrix.hpp"

namespace hwmap {

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    Matrix vectors;              // columns, matched to values
};

/// Hermitian eigendecomposition by cyclic complex Jacobi rotations.
/// Rejects inputs with ||H - H^dag|| above the asymmetry tolerance.
/// Sized for the matrices this library builds (up to ~50 x 50 Choi matrices).
EigenDecomposition hermitian_eigen(const Matrix& h, double asym_tol = 1e-10);

/// Monic characteristic polynomial det(zI - M) by the Faddeev-LeVerrier
/// trace recursion. Coefficients degree-descending, leading entry exactly 1.
std::vector<cxd> char_poly(const Matrix& m);

/// Largest singular value, via the Hermitian spectrum of M^dag M.
double operator_norm(const Matrix& m);

/// Max coefficientwise distance between two polynomials of equal length.
double poly_distance(const std::vector<cxd>& a, const std::vector<cxd>& b);

}  // namespace hwmap

#endif
