// Copyright (c) 2026 hwmap developers
// SPDX-License-Identifier: Apache-2.0

#include "core/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hwmap {

namespace {

double off_diagonal_frobenius(const Matrix& a) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) acc += std::norm(a(i, j));
    return std::sqrt(acc);
}

double frobenius(const Matrix& a) {
    double acc = 0.0;
    for (const auto& v : a.data()) acc += std::norm(v);
    return std::sqrt(acc);
}

// One complex Jacobi rotation annihilating A(p, q). A <- J^dag A J, V <- V J.
void jacobi_rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
    const cxd g = a(p, q);
    const double abs_g = std::abs(g);
    if (abs_g == 0.0) return;
    const cxd phase = g / abs_g;

    const double alpha = a(p, p).real();
    const double beta = a(q, q).real();
    const double tau = (beta - alpha) / (2.0 * abs_g);
    double t;
    if (tau >= 0.0) {
        t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
    } else {
        t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const std::size_t n = a.rows();
    // Column update: A <- A J with J(p,p)=c, J(q,q)=c, J(p,q)=s*phase, J(q,p)=-s*conj(phase).
    for (std::size_t i = 0; i < n; ++i) {
        const cxd aip = a(i, p), aiq = a(i, q);
        a(i, p) = c * aip - s * std::conj(phase) * aiq;
        a(i, q) = s * phase * aip + c * aiq;
    }
    // Row update: A <- J^dag A.
    for (std::size_t j = 0; j < n; ++j) {
        const cxd apj = a(p, j), aqj = a(q, j);
        a(p, j) = c * apj - s * phase * aqj;
        a(q, j) = s * std::conj(phase) * apj + c * aqj;
    }
    for (std::size_t i = 0; i < v.rows(); ++i) {
        const cxd vip = v(i, p), viq = v(i, q);
        v(i, p) = c * vip - s * std::conj(phase) * viq;
        v(i, q) = s * phase * vip + c * viq;
    }
}

}  // namespace

EigenDecomposition hermitian_eigen(const Matrix& h, double asym_tol) {
    if (!h.square()) throw std::invalid_argument("hermitian_eigen requires a square matrix");
    const double asym = distance(h, dagger(h));
    const double scale = std::max(1.0, max_abs(h));
    if (asym > asym_tol * scale) {
        throw std::invalid_argument("hermitian_eigen: input not Hermitian, asymmetry " +
                                    std::to_string(asym));
    }

    const std::size_t n = h.rows();
    // Symmetrize so the rotations see an exactly Hermitian matrix.
    Matrix a = h;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));

    Matrix v = identity(n);
    const double stop = 1e-14 * std::max(frobenius(a), 1e-300);
    for (int sweep = 0; sweep < 100; ++sweep) {
        if (off_diagonal_frobenius(a) <= stop) break;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&a](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    EigenDecomposition out;
    out.values.resize(n);
    out.vectors = Matrix(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        out.values[c] = a(order[c], order[c]).real();
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = v(r, order[c]);
    }
    return out;
}

std::vector<cxd> char_poly(const Matrix& m) {
    if (!m.square()) throw std::invalid_argument("char_poly requires a square matrix");
    const std::size_t n = m.rows();
    std::vector<cxd> coeffs(n + 1);
    coeffs[0] = 1.0;
    Matrix mk = m;
    for (std::size_t k = 1; k <= n; ++k) {
        coeffs[k] = -trace(mk) / static_cast<double>(k);
        if (k < n) {
            Matrix shifted = mk;
            for (std::size_t i = 0; i < n; ++i) shifted(i, i) += coeffs[k];
            mk = m * shifted;
        }
    }
    return coeffs;
}

double operator_norm(const Matrix& m) {
    const Matrix gram = dagger(m) * m;
    const auto eig = hermitian_eigen(gram);
    const double top = eig.values.empty() ? 0.0 : eig.values.back();
    return std::sqrt(std::max(0.0, top));
}

double poly_distance(const std::vector<cxd>& a, const std::vector<cxd>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("poly_distance: degree mismatch");
    double mx = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) mx = std::max(mx, std::abs(a[i] - b[i]));
    return mx;
}

}  // namespace hwmap
