// Copyright (c) 2026 hwmap developers
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/linalg.hpp"
#include "core/maps.hpp"
#include "core/rng.hpp"

using namespace hwmap;

namespace {

Matrix random_operator(SplitMix64& rng, int d) {
    Matrix y(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) y(i, j) = cxd{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    return y;
}

Matrix unvectorize(const std::vector<cxd>& v, int d) {
    Matrix y(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) y(i, j) = v[static_cast<std::size_t>(j) * d + i];
    return y;
}

std::vector<double> random_probability(SplitMix64& rng, std::size_t n) {
    std::vector<double> p(n);
    double s = 0.0;
    for (auto& x : p) {
        x = rng.uniform() + 1e-9;
        s += x;
    }
    for (auto& x : p) x /= s;
    double resum = 0.0;
    for (double x : p) resum += x;
    p[0] += 1.0 - resum;
    return p;
}

}  // namespace

TEST_CASE("weight vector validation and helpers") {
    CHECK_THROWS_AS(WeightVector(3, std::vector<double>(8, 0.0)), std::invalid_argument);
    WeightVector p = WeightVector::delta_identity(3);
    CHECK(p.at(0, 0) == 1.0);
    CHECK(p.sum() == doctest::Approx(1.0));
    CHECK(p.is_probability());
    CHECK(p.negation_symmetric());

    p.at(1, 2) = 0.5;
    CHECK_FALSE(p.negation_symmetric());
    p.at(2, 1) = 0.5;
    CHECK(p.negation_symmetric());
}

TEST_CASE("bit flip channel at d = 2") {
    // (1 - q) Y + q X Y X via a Weyl mixture.
    const double q = 0.3;
    WeightVector p = WeightVector::zero(2);
    p.at(0, 0) = 1.0 - q;
    p.at(0, 1) = q;  // W_{0,1} = X
    const SandwichMap ch = weyl_channel(p);

    const Matrix x = weyl_op(WeylIndex(0, 1, 2));
    SplitMix64 rng(1);
    for (int trial = 0; trial < 5; ++trial) {
        const Matrix y = random_operator(rng, 2);
        const Matrix expected = (1.0 - q) * y + q * (x * y * x);
        CHECK(distance(apply(ch, y), expected) <= 1e-13);
    }
}

TEST_CASE("uniform Weyl mixture is the completely depolarizing channel") {
    WeightVector p(2, std::vector<double>(4, 0.25));
    const SandwichMap ch = weyl_channel(p);
    SplitMix64 rng(2);
    for (int trial = 0; trial < 5; ++trial) {
        const Matrix y = random_operator(rng, 2);
        const Matrix expected = (trace(y) / 2.0) * identity(2);
        CHECK(distance(apply(ch, y), expected) <= 1e-13);
    }
}

TEST_CASE("weyl_channel rejects signed weights") {
    WeightVector p = WeightVector::zero(2);
    p.at(0, 0) = 1.5;
    p.at(0, 1) = -0.5;
    CHECK_THROWS_AS(weyl_channel(p), std::invalid_argument);
}

TEST_CASE("Choi matrix of the identity map has one eigenvalue d") {
    for (int d : {2, 3, 4}) {
        const SandwichMap id_map = hw_map(WeightVector::delta_identity(d));
        const auto eig = hermitian_eigen(choi(id_map));
        CHECK(std::abs(eig.values.front()) <= 1e-12);
        CHECK(eig.values.back() == doctest::Approx(static_cast<double>(d)).epsilon(1e-12));
        CHECK(is_completely_positive(id_map).completely_positive);
        CHECK(is_unital(id_map) <= 1e-13);
        CHECK(is_trace_preserving(id_map) <= 1e-13);
    }
}

TEST_CASE("superoperator acts like the map on vectorized operators") {
    SplitMix64 rng(3);
    for (int d : {2, 3, 5}) {
        WeightVector p = WeightVector::zero(d);
        for (auto& x : p.values) x = rng.uniform(-0.5, 0.5);
        const SandwichMap map = hw_map(p);
        const Matrix s = superoperator(map);
        for (int trial = 0; trial < 20; ++trial) {
            const Matrix y = random_operator(rng, d);
            const auto v = vectorize(y);
            std::vector<cxd> image(v.size(), cxd{});
            for (std::size_t i = 0; i < v.size(); ++i)
                for (std::size_t j = 0; j < v.size(); ++j) image[i] += s(i, j) * v[j];
            CHECK(distance(unvectorize(image, d), apply(map, y)) <= 1e-11);
        }
    }
}

TEST_CASE("composition superoperator is the product of superoperators") {
    SplitMix64 rng(4);
    WeightVector p1 = WeightVector::zero(3), p2 = WeightVector::zero(3);
    for (auto& x : p1.values) x = rng.uniform(-0.5, 0.5);
    for (auto& x : p2.values) x = rng.uniform(-0.5, 0.5);
    const SandwichMap m1 = hw_map(p1), m2 = hw_map(p2);
    const Matrix composed = compose(m1, m2);
    SplitMix64 rng2(5);
    for (int trial = 0; trial < 5; ++trial) {
        const Matrix y = random_operator(rng2, 3);
        const auto v = vectorize(apply(m1, apply(m2, y)));
        const auto w = vectorize(y);
        std::vector<cxd> image(w.size(), cxd{});
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = 0; j < w.size(); ++j) image[i] += composed(i, j) * w[j];
        for (std::size_t i = 0; i < v.size(); ++i) CHECK(std::abs(image[i] - v[i]) <= 1e-11);
    }
}

TEST_CASE("generalized Pauli channel: observable and projector forms agree") {
    SplitMix64 rng(6);
    for (int d : {3, 5}) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto p = random_probability(rng, static_cast<std::size_t>(d) + 2);
            const Matrix a = superoperator(gen_pauli_channel_hw(p, d));
            const Matrix b = superoperator(gen_pauli_channel_mub(p, d));
            CHECK(distance(a, b) <= 1e-12);
        }
    }
}

TEST_CASE("generalized Pauli channels are unital quantum channels") {
    SplitMix64 rng(7);
    for (int d : {2, 3, 5}) {
        const auto p = random_probability(rng, static_cast<std::size_t>(d) + 2);
        const SandwichMap ch = gen_pauli_channel_hw(p, d);
        CHECK(is_completely_positive(ch).completely_positive);
        CHECK(is_trace_preserving(ch) <= 1e-11);
        CHECK(is_unital(ch) <= 1e-11);
    }
    CHECK_THROWS_AS(gen_pauli_channel_hw({0.5, 0.5}, 3), std::invalid_argument);
    CHECK_THROWS_AS(gen_pauli_channel_hw(std::vector<double>(6, 1.0 / 6.0), 4),
                    std::invalid_argument);
}

TEST_CASE("refined mixture with equal pair weights collapses to the Pauli channel") {
    SplitMix64 rng(8);
    const int d = 5;
    const auto p = random_probability(rng, d + 2);
    std::vector<double> pair_weights;
    for (int family = 1; family <= d + 1; ++family)
        pair_weights.insert(pair_weights.end(), (d - 1) / 2, p[family]);
    const Matrix a = superoperator(refined_map(p[0], pair_weights, d));
    const Matrix b = superoperator(gen_pauli_channel_hw(p, d));
    CHECK(distance(a, b) <= 1e-12);

    CHECK_THROWS_AS(refined_map(0.5, {0.1, 0.2}, 5), std::invalid_argument);
    CHECK_THROWS_AS(refined_map(0.5, {0.1}, 4), std::invalid_argument);
}

TEST_CASE("d = 3 complete positivity matches the sign conditions on samples") {
    SplitMix64 rng(9);
    int checked = 0;
    while (checked < 200) {
        const double q1 = rng.uniform(-0.3, 0.5), q3 = rng.uniform(-0.3, 0.5);
        const double q4 = rng.uniform(-0.3, 0.5), q5 = rng.uniform(-0.3, 0.5);
        const double p0 = 1.0 - 2.0 * (q1 + q3 + q4 + q5);
        if (std::min({std::abs(q1), std::abs(q3), std::abs(q4), std::abs(q5), std::abs(p0)}) <
            1e-6)
            continue;
        ++checked;
        WeightVector p(3, {p0, q1, q1, q3, q4, q5, q3, q5, q4});
        const bool signs = p0 >= 0 && q1 >= 0 && q3 >= 0 && q4 >= 0 && q5 >= 0;
        CHECK(is_completely_positive(hw_map(p)).completely_positive == signs);
    }
}

TEST_CASE("symmetric weights with matched identity weight give unital maps") {
    SplitMix64 rng(10);
    for (int d : {2, 3, 4}) {
        WeightVector p = WeightVector::zero(d);
        for (int k = 0; k < d; ++k)
            for (int l = 0; l < d; ++l) {
                if (k == 0 && l == 0) continue;
                const double v = rng.uniform(-0.2, 0.3);
                p.at(k, l) = v;
                p.at((d - k) % d, (d - l) % d) = v;
            }
        p.at(0, 0) = 1.0 - (p.sum() - p.at(0, 0));
        CHECK(unitality_sufficient(p, 1e-10));
        CHECK(is_unital(hw_map(p)) <= 1e-11);

        p.at(0, 0) += 0.1;
        CHECK_FALSE(unitality_sufficient(p, 1e-10));
    }
}
