// Copyright (c) 2026 hwmap developers
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "core/linalg.hpp"
#include "core/rmatrix.hpp"
#include "core/rng.hpp"

using namespace hwmap;

namespace {

const CaseStudyWeights kReduction{{-1.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0,
                                   1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0}};

WeightVector to_weight_vector(const CaseStudyWeights& w) {
    WeightVector p = WeightVector::zero(3);
    for (int i = 0; i < 9; ++i) p.values[i] = w.p[i];
    return p;
}

Matrix r_as_matrix(const RMatrix& r) {
    Matrix m(r.n, r.n);
    for (std::size_t b = 0; b < r.n; ++b)
        for (std::size_t a = 0; a < r.n; ++a) m(b, a) = r.at(b, a);
    return m;
}

WeightVector random_symmetric_unital(SplitMix64& rng, int d) {
    WeightVector p = WeightVector::zero(d);
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
            if (k == 0 && l == 0) continue;
            const double v = rng.uniform(-0.2, 0.3);
            p.at(k, l) = v;
            p.at((d - k) % d, (d - l) % d) = v;
        }
    p.at(0, 0) = 1.0 - (p.sum() - p.at(0, 0));
    return p;
}

}  // namespace

TEST_CASE("basis construction yields unit-normalized Hermitian operators") {
    const auto basis = HWBasis::build(3);
    REQUIRE(basis.ops.size() == 9);
    for (const auto& op : basis.ops) {
        CHECK(distance(op, dagger(op)) <= 1e-13);
        CHECK(std::abs(hs_inner(op, op) - cxd{1.0, 0.0}) <= 1e-12);
    }
}

TEST_CASE("transfer matrix of the identity map is the identity") {
    const RMatrix r = r_matrix(hw_map(WeightVector::delta_identity(3)));
    for (std::size_t b = 0; b < r.n; ++b)
        for (std::size_t a = 0; a < r.n; ++a) {
            CHECK(std::abs(r.at(b, a) - (a == b ? 1.0 : 0.0)) <= 1e-12);
        }
    const auto verdict = unital_tp_characterize(r.blocks);
    CHECK(verdict.unital);
    CHECK(verdict.trace_preserving);
    const auto gate = positivity_sufficient(r.blocks, 3, 3);
    CHECK_FALSE(gate.holds);  // lhs = sqrt(4) ||Delta||_op = 2 > 1; inconclusive by design
}

TEST_CASE("transfer matrix of a composition is the product of transfer matrices") {
    SplitMix64 rng(11);
    const WeightVector p1 = random_symmetric_unital(rng, 3);
    WeightVector p2 = WeightVector::zero(3);
    for (auto& x : p2.values) x = rng.uniform(-0.4, 0.4);

    const SandwichMap m1 = hw_map(p1), m2 = hw_map(p2);
    SandwichMap composed;
    composed.d = 3;
    for (const auto& t1 : m1.terms)
        for (const auto& t2 : m2.terms) {
            composed.terms.push_back(
                {t1.weight * t2.weight, t1.left * t2.left, t2.right * t1.right});
        }

    const Matrix lhs = r_as_matrix(r_matrix(composed));
    const Matrix rhs = r_as_matrix(r_matrix(m1)) * r_as_matrix(r_matrix(m2));
    CHECK(distance(lhs, rhs) <= 1e-11);
}

TEST_CASE("pair-map eigenvalue formula at frozen points") {
    CHECK(eigenvalue_formula(1, 0, 0, 1, 3) ==
          doctest::Approx(2.0 * std::cos(2.0 * std::numbers::pi / 3.0)));
    CHECK(eigenvalue_formula(0, 0, 1, 1, 5) == doctest::Approx(2.0));
    CHECK(eigenvalue_formula(1, 1, 1, 1, 4) == doctest::Approx(2.0));
    CHECK(std::abs(eigenvalue_formula(1, 0, 0, 1, 4)) <= 1e-12);  // 2 cos(pi/2)
}

TEST_CASE("symmetric weights give a diagonal transfer matrix matching the formula") {
    SplitMix64 rng(12);
    for (int d : {3, 5}) {
        const WeightVector p = random_symmetric_unital(rng, d);
        const auto check = diagonal_r_check(p);
        CHECK(check.max_off_diagonal <= 1e-12);
        CHECK(check.max_formula_deviation <= 1e-11);
    }
    CHECK_THROWS_AS(diagonal_r_check(random_symmetric_unital(rng, 4)), std::invalid_argument);

    WeightVector asym = WeightVector::zero(3);
    asym.at(1, 2) = 0.7;
    CHECK_THROWS_AS(diagonal_r_check(asym), std::invalid_argument);
}

TEST_CASE("the weights (-1/3, 1/6 x 8) build the reduction map") {
    const SandwichMap map = hw_map(to_weight_vector(kReduction));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const Matrix unit = matrix_unit(3, i, j);
            const Matrix expected = 0.5 * (trace(unit) * identity(3) - unit);
            CHECK(distance(apply(map, unit), expected) <= 1e-13);
        }

    const RMatrix r = r_matrix(map);
    CHECK(std::abs(r.blocks.r00 - 1.0) <= 1e-12);
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(std::abs(r.blocks.t[i]) <= 1e-12);
        CHECK(std::abs(r.blocks.s[i]) <= 1e-12);
        for (std::size_t j = 0; j < 8; ++j) {
            const double expected = i == j ? -0.5 : 0.0;
            CHECK(std::abs(r.blocks.delta[i * 8 + j] - expected) <= 1e-12);
        }
    }
    CHECK(operator_norm(r.blocks.delta_matrix()) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("case study: reduction map is unital, positive-gated, and not CP") {
    const auto report = d3_case_study(kReduction);
    CHECK(report.unital);
    CHECK(report.unital_deviation <= 1e-12);
    CHECK_FALSE(report.completely_positive);
    CHECK(report.min_choi_eigenvalue == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(report.gate.lhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(report.gate.rhs == doctest::Approx(1.0));
    CHECK(report.gate.holds);
    REQUIRE(report.two_positive.has_value());
    CHECK(*report.two_positive);
    for (double entry : report.delta_diagonal) {
        CHECK(entry == doctest::Approx(-0.5).epsilon(1e-12));
    }
}

TEST_CASE("case study leaves the two-positive verdict open off-hypothesis") {
    // Asymmetric weights: not unital, hypotheses not met.
    const CaseStudyWeights w{{0.5, 0.4, 0.1, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}};
    const auto report = d3_case_study(w);
    CHECK_FALSE(report.unital);
    CHECK_FALSE(report.two_positive.has_value());
}

TEST_CASE("identity weights give the trivial case-study report") {
    const CaseStudyWeights w{{1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}};
    const auto report = d3_case_study(w);
    CHECK(report.unital);
    CHECK(report.completely_positive);
    for (double entry : report.delta_diagonal) CHECK(entry == doctest::Approx(1.0));
    CHECK_FALSE(report.gate.holds);  // 2 ||Delta|| = 2 > 1: gate is inconclusive
}
