// Copyright (c) 2026 hwmap developers
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "core/linalg.hpp"
#include "core/rng.hpp"
#include "core/weyl.hpp"

using namespace hwmap;

namespace {

Matrix random_hermitian(SplitMix64& rng, std::size_t n) {
    Matrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = rng.uniform(-1.0, 1.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const cxd z{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
            h(i, j) = z;
            h(j, i) = std::conj(z);
        }
    }
    return h;
}

}  // namespace

TEST_CASE("jacobi eigendecomposition reconstructs random Hermitian matrices") {
    SplitMix64 rng(7);
    for (std::size_t n : {2u, 3u, 5u, 9u, 16u, 25u, 49u}) {
        const Matrix h = random_hermitian(rng, n);
        const auto eig = hermitian_eigen(h);
        REQUIRE(eig.values.size() == n);

        // Eigenvalues come out sorted.
        for (std::size_t i = 1; i < n; ++i) CHECK(eig.values[i - 1] <= eig.values[i]);

        // V D V^dag = H and V^dag V = I.
        Matrix d(n, n);
        for (std::size_t i = 0; i < n; ++i) d(i, i) = eig.values[i];
        const Matrix recon = eig.vectors * d * dagger(eig.vectors);
        const double scale = std::max(1.0, max_abs(h));
        CHECK(distance(recon, h) <= 1e-12 * scale);
        CHECK(distance(dagger(eig.vectors) * eig.vectors, identity(n)) <= 1e-12);
    }
}

TEST_CASE("eigendecomposition rejects non-Hermitian input") {
    Matrix m(2, 2);
    m(0, 1) = 1.0;  // strictly upper triangular, far from Hermitian
    CHECK_THROWS_AS(hermitian_eigen(m), std::invalid_argument);
}

TEST_CASE("phase operator eigenvalues are the d-th roots of unity shifted by chi") {
    // Q_{1,0} = chi Z + conj(chi) Z^dag has eigenvalues
    // sqrt(2) cos(2 pi j / 3 + pi / 4) at d = 3.
    const Matrix q = hw_observable(WeylIndex(1, 0, 3));
    auto eig = hermitian_eigen(q);
    std::vector<double> expected;
    for (int j = 0; j < 3; ++j) {
        expected.push_back(std::sqrt(2.0) *
                           std::cos(2.0 * std::numbers::pi * j / 3.0 + std::numbers::pi / 4.0));
    }
    std::sort(expected.begin(), expected.end());
    for (int j = 0; j < 3; ++j) CHECK(eig.values[j] == doctest::Approx(expected[j]).epsilon(1e-12));
}

TEST_CASE("characteristic polynomial of the phase operator is z^d - 1") {
    const auto coeffs = char_poly(phase_op(3));
    REQUIRE(coeffs.size() == 4);
    CHECK(std::abs(coeffs[0] - cxd{1.0, 0.0}) <= 1e-14);
    CHECK(std::abs(coeffs[1]) <= 1e-13);
    CHECK(std::abs(coeffs[2]) <= 1e-13);
    CHECK(std::abs(coeffs[3] - cxd{-1.0, 0.0}) <= 1e-13);
}

TEST_CASE("characteristic polynomial of the identity is (z - 1)^n") {
    const auto coeffs = char_poly(identity(2));
    REQUIRE(coeffs.size() == 3);
    CHECK(std::abs(coeffs[0] - cxd{1.0, 0.0}) <= 1e-15);
    CHECK(std::abs(coeffs[1] - cxd{-2.0, 0.0}) <= 1e-14);
    CHECK(std::abs(coeffs[2] - cxd{1.0, 0.0}) <= 1e-14);
}

TEST_CASE("unitary matrices have unimodular characteristic constant term") {
    // |det W| = 1 for every Weyl operator; the constant coefficient of the
    // monic characteristic polynomial is (-1)^d det W.
    for (int d : {2, 3, 4, 5}) {
        for (int k = 0; k < d; ++k)
            for (int l = 0; l < d; ++l) {
                const auto coeffs = char_poly(weyl_op(WeylIndex(k, l, d)));
                CHECK(std::abs(std::abs(coeffs.back()) - 1.0) <= 1e-12);
            }
    }
}

TEST_CASE("operator norm is the largest singular value") {
    Matrix m(2, 2);
    m(0, 0) = 3.0;
    m(1, 1) = cxd{0.0, -4.0};
    CHECK(operator_norm(m) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(operator_norm(identity(5)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("polynomial distance is coefficientwise") {
    const std::vector<cxd> a{1.0, 2.0, 3.0};
    const std::vector<cxd> b{1.0, 2.5, 3.0};
    CHECK(poly_distance(a, b) == doctest::Approx(0.5));
    CHECK_THROWS_AS(poly_distance(a, std::vector<cxd>{1.0}), std::invalid_argument);
}
