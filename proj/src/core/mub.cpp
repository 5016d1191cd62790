// Copyright (c) 2026 hwmap developers
// SPDX-License-Identifier: Apache-2.0

#include "core/mub.hpp"

#include <algorithm>
#include <cmath>

#include "core/linalg.hpp"

namespace hwmap {

namespace {

constexpr double kDegeneracyGap = 1e-8;

Basis eigenbasis(const Matrix& q, int label) {
    auto eig = hermitian_eigen(q);
    for (std::size_t i = 0; i + 1 < eig.values.size(); ++i) {
        if (eig.values[i + 1] - eig.values[i] < kDegeneracyGap) {
            throw std::invalid_argument("mub_bases: degenerate eigenbasis for label " +
                                        std::to_string(label));
        }
    }
    // Phase convention: first component of magnitude > 1e-8 made real positive.
    Matrix v = eig.vectors;
    const std::size_t n = v.rows();
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < n; ++r) {
            const double mag = std::abs(v(r, c));
            if (mag > 1e-8) {
                const cxd phase = v(r, c) / mag;
                for (std::size_t i = 0; i < n; ++i) v(i, c) /= phase;
                break;
            }
        }
    }
    return Basis{label, std::move(v)};
}

}  // namespace

std::vector<Basis> mub_bases(int d, Chi chi) {
    if (d % 2 == 0 || !is_prime(d)) {
        throw std::invalid_argument("mub_bases: dimension must be an odd prime");
    }
    std::vector<Basis> bases;
    bases.reserve(d + 1);
    for (int alpha = 1; alpha < d; ++alpha)
        bases.push_back(eigenbasis(hw_observable(WeylIndex(1, alpha, d), chi), alpha));
    bases.push_back(eigenbasis(hw_observable(WeylIndex(1, 0, d), chi), d));
    bases.push_back(eigenbasis(hw_observable(WeylIndex(0, 1, d), chi), d + 1));
    return bases;
}

ProjectorSet projectors(const Basis& basis) {
    const std::size_t d = basis.vectors.rows();
    ProjectorSet out{basis.label, {}};
    out.projectors.reserve(d);
    for (std::size_t r = 0; r < d; ++r) {
        Matrix p(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                p(i, j) = basis.vectors(i, r) * std::conj(basis.vectors(j, r));
        out.projectors.push_back(std::move(p));
    }
    return out;
}

Matrix projector_map_apply(const ProjectorSet& p, const Matrix& sigma) {
    if (p.projectors.empty()) throw std::invalid_argument("empty projector set");
    const std::size_t d = p.projectors.front().rows();
    if (sigma.rows() != d || sigma.cols() != d) {
        throw std::invalid_argument("projector_map_apply: shape mismatch");
    }
    Matrix out = zeros(d, d);
    for (const auto& proj : p.projectors) out += proj * sigma * proj;
    return out;
}

double verify_complementarity(const ProjectorSet& a, const ProjectorSet& b) {
    if (a.label == b.label) {
        throw std::invalid_argument("verify_complementarity: bases must differ");
    }
    const std::size_t d = a.projectors.front().rows();
    double dev = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Matrix sigma = matrix_unit(d, i, j);
            const Matrix out = projector_map_apply(a, projector_map_apply(b, sigma));
            const Matrix expected = (trace(sigma) / static_cast<double>(d)) * identity(d);
            dev = std::max(dev, distance(out, expected));
        }
    return dev;
}

double max_unbiasedness_deviation(const std::vector<Basis>& bases) {
    double dev = 0.0;
    for (std::size_t a = 0; a < bases.size(); ++a)
        for (std::size_t b = a + 1; b < bases.size(); ++b) {
            const Matrix overlap = dagger(bases[a].vectors) * bases[b].vectors;
            const double inv_d = 1.0 / static_cast<double>(overlap.rows());
            for (std::size_t r = 0; r < overlap.rows(); ++r)
                for (std::size_t s = 0; s < overlap.cols(); ++s)
                    dev = std::max(dev, std::abs(std::norm(overlap(r, s)) - inv_d));
        }
    return dev;
}

}  // namespace hwmap
