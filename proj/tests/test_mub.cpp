// Copyright (c) 2026 hwmap developers
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/mub.hpp"

using namespace hwmap;

TEST_CASE("basis construction rejects unsupported dimensions") {
    CHECK_THROWS_AS(mub_bases(2), std::invalid_argument);
    CHECK_THROWS_AS(mub_bases(4), std::invalid_argument);
    CHECK_THROWS_AS(mub_bases(9), std::invalid_argument);
}

TEST_CASE("d + 1 orthonormal bases with labels 1..d+1") {
    for (int d : {3, 5, 7}) {
        const auto bases = mub_bases(d);
        REQUIRE(bases.size() == static_cast<std::size_t>(d) + 1);
        for (std::size_t a = 0; a < bases.size(); ++a) {
            CHECK(bases[a].label == static_cast<int>(a) + 1);
            CHECK(distance(dagger(bases[a].vectors) * bases[a].vectors, identity(d)) <= 1e-12);
        }
    }
}

TEST_CASE("inter-basis overlaps are 1/d") {
    for (int d : {3, 5, 7}) {
        CHECK(max_unbiasedness_deviation(mub_bases(d)) <= 1e-10);
    }
}

TEST_CASE("each basis diagonalizes its commuting family") {
    for (int d : {3, 5}) {
        const auto bases = mub_bases(d);
        const auto subsets = commuting_subsets(d);
        for (std::size_t a = 0; a < bases.size(); ++a) {
            const auto ps = projectors(bases[a]);
            for (const auto& idx : subsets[a]) {
                const Matrix q = hw_observable(idx);
                for (const auto& proj : ps.projectors) {
                    CHECK(distance(proj * q, q * proj) <= 1e-9);
                }
            }
        }
    }
}

TEST_CASE("projectors resolve the identity and pinch correctly") {
    const auto bases = mub_bases(3);
    for (const auto& basis : bases) {
        const auto ps = projectors(basis);
        Matrix acc = zeros(3, 3);
        for (const auto& p : ps.projectors) {
            acc += p;
            CHECK(distance(p * p, p) <= 1e-12);     // idempotent
            CHECK(distance(p, dagger(p)) <= 1e-12);  // Hermitian
        }
        CHECK(distance(acc, identity(3)) <= 1e-12);

        // Pinching the identity returns the identity.
        CHECK(distance(projector_map_apply(ps, identity(3)), identity(3)) <= 1e-12);
    }
}

TEST_CASE("composing pinchings of different bases is maximally mixing") {
    for (int d : {3, 5}) {
        const auto bases = mub_bases(d);
        std::vector<ProjectorSet> ps;
        for (const auto& basis : bases) ps.push_back(projectors(basis));
        for (std::size_t a = 0; a < ps.size(); ++a)
            for (std::size_t b = 0; b < ps.size(); ++b) {
                if (a == b) {
                    CHECK_THROWS_AS(verify_complementarity(ps[a], ps[b]), std::invalid_argument);
                } else {
                    CHECK(verify_complementarity(ps[a], ps[b]) <= 1e-10);
                }
            }
    }
}

TEST_CASE("eigenvector phase convention is deterministic") {
    // Building twice gives bit-identical vectors.
    const auto first = mub_bases(5);
    const auto second = mub_bases(5);
    for (std::size_t a = 0; a < first.size(); ++a) {
        CHECK(distance(first[a].vectors, second[a].vectors) == 0.0);
    }
}
