// Copyright (c) 2026 hwmap developers
// SPDX-License-Identifier: Apache-2.0

#include "core/maps.hpp"

#include <algorithm>
#include <cmath>

#include "core/linalg.hpp"

namespace hwmap {

WeightVector::WeightVector(int d_, std::vector<double> v) : d(d_), values(std::move(v)) {
    if (d < 2) throw std::invalid_argument("WeightVector: dimension must be >= 2");
    if (values.size() != static_cast<std::size_t>(d) * d) {
        throw std::invalid_argument("WeightVector: expected d^2 entries");
    }
    for (double x : values) {
        if (!std::isfinite(x)) throw std::invalid_argument("WeightVector: non-finite entry");
    }
}

WeightVector WeightVector::zero(int d) {
    return WeightVector(d, std::vector<double>(static_cast<std::size_t>(d) * d, 0.0));
}

WeightVector WeightVector::delta_identity(int d) {
    WeightVector p = zero(d);
    p.at(0, 0) = 1.0;
    return p;
}

double WeightVector::sum() const {
    double s = 0.0;
    for (double x : values) s += x;
    return s;
}

bool WeightVector::is_probability(double tol) const {
    for (double x : values)
        if (x < -tol) return false;
    return std::abs(sum() - 1.0) <= tol;
}

bool WeightVector::negation_symmetric(double tol) const {
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
            if (std::abs(at(k, l) - at((d - k) % d, (d - l) % d)) > tol) return false;
    return true;
}

SandwichMap hw_map(const WeightVector& p, Chi chi) {
    SandwichMap map;
    map.d = p.d;
    for (int k = 0; k < p.d; ++k)
        for (int l = 0; l < p.d; ++l) {
            Matrix q = hw_observable(WeylIndex(k, l, p.d), chi);
            map.terms.push_back({p.at(k, l), q, q});
        }
    return map;
}

SandwichMap weyl_channel(const WeightVector& p) {
    if (!p.is_probability()) {
        throw std::invalid_argument("weyl_channel: weights must form a probability vector");
    }
    SandwichMap map;
    map.d = p.d;
    for (int k = 0; k < p.d; ++k)
        for (int l = 0; l < p.d; ++l) {
            Matrix w = weyl_op(WeylIndex(k, l, p.d));
            Matrix wd = dagger(w);
            map.terms.push_back({p.at(k, l), std::move(w), std::move(wd)});
        }
    return map;
}

SandwichMap pair_map(const WeylIndex& idx, Chi chi) {
    SandwichMap map;
    map.d = idx.d;
    Matrix q = hw_observable(idx, chi);
    Matrix qn = hw_observable(idx.negated(), chi);
    map.terms.push_back({1.0, q, q});
    map.terms.push_back({1.0, qn, qn});
    return map;
}

namespace {

void require_channel_weights(const std::vector<double>& p, int d) {
    if (p.size() != static_cast<std::size_t>(d) + 2) {
        throw std::invalid_argument("channel weights: expected d+2 entries");
    }
    double s = 0.0;
    for (double x : p) {
        if (x < -1e-12) throw std::invalid_argument("channel weights: negative entry");
        s += x;
    }
    if (std::abs(s - 1.0) > 1e-12) {
        throw std::invalid_argument("channel weights: entries must sum to 1");
    }
}

}  // namespace

SandwichMap gen_pauli_channel_hw(const std::vector<double>& p, int d, Chi chi) {
    if (!is_prime(d)) {
        throw std::invalid_argument("gen_pauli_channel_hw: dimension must be prime");
    }
    require_channel_weights(p, d);
    SandwichMap map;
    map.d = d;
    map.terms.push_back({p[0], identity(d), identity(d)});
    const auto subsets = commuting_subsets(d);
    const double scale = 1.0 / (d - 1);
    for (std::size_t a = 0; a < subsets.size(); ++a) {
        for (const auto& idx : subsets[a]) {
            Matrix q = hw_observable(idx, chi);
            map.terms.push_back({p[a + 1] * scale, q, q});
        }
    }
    return map;
}

SandwichMap gen_pauli_channel_mub(const std::vector<double>& p, int d, Chi chi) {
    require_channel_weights(p, d);
    const auto bases = mub_bases(d, chi);  // rejects even / composite d
    SandwichMap map;
    map.d = d;
    const double scale = 1.0 / (d - 1);
    // V_a = d Phi_a - I; the -I parts fold into the identity term.
    double id_weight = p[0];
    for (std::size_t a = 0; a < bases.size(); ++a) id_weight -= p[a + 1] * scale;
    map.terms.push_back({id_weight, identity(d), identity(d)});
    for (std::size_t a = 0; a < bases.size(); ++a) {
        const auto ps = projectors(bases[a]);
        for (const auto& proj : ps.projectors) {
            map.terms.push_back({d * p[a + 1] * scale, proj, proj});
        }
    }
    return map;
}

SandwichMap refined_map(double p0, const std::vector<double>& pair_weights, int d, Chi chi) {
    if (!is_prime(d) || d % 2 == 0) {
        throw std::invalid_argument("refined_map: dimension must be an odd prime");
    }
    const int pairs_per_family = (d - 1) / 2;
    const std::size_t expected = static_cast<std::size_t>(d + 1) * pairs_per_family;
    if (pair_weights.size() != expected) {
        throw std::invalid_argument("refined_map: expected (d+1)(d-1)/2 pair weights");
    }
    SandwichMap map;
    map.d = d;
    map.terms.push_back({p0, identity(d), identity(d)});
    const auto subsets = commuting_subsets(d);
    const double scale = 1.0 / (d - 1);
    std::size_t w = 0;
    for (const auto& subset : subsets) {
        // subset is ordered n = 1..d-1; elements i and (d-1-i) are negations.
        for (int i = 0; i < pairs_per_family; ++i, ++w) {
            const WeylIndex& idx = subset[i];
            Matrix q = hw_observable(idx, chi);
            Matrix qn = hw_observable(idx.negated(), chi);
            map.terms.push_back({pair_weights[w] * scale, q, q});
            map.terms.push_back({pair_weights[w] * scale, qn, qn});
        }
    }
    return map;
}

Matrix apply(const SandwichMap& map, const Matrix& y) {
    if (y.rows() != static_cast<std::size_t>(map.d) || y.cols() != y.rows()) {
        throw std::invalid_argument("apply: operand shape mismatch");
    }
    Matrix out = zeros(map.d, map.d);
    for (const auto& term : map.terms) out += term.weight * (term.left * y * term.right);
    return out;
}

Matrix superoperator(const SandwichMap& map) {
    const std::size_t n = static_cast<std::size_t>(map.d) * map.d;
    Matrix s = zeros(n, n);
    for (const auto& term : map.terms) {
        Matrix bt(term.right.cols(), term.right.rows());
        for (std::size_t i = 0; i < term.right.rows(); ++i)
            for (std::size_t j = 0; j < term.right.cols(); ++j) bt(j, i) = term.right(i, j);
        s += term.weight * kron(bt, term.left);
    }
    return s;
}

Matrix compose(const SandwichMap& m1, const SandwichMap& m2) {
    if (m1.d != m2.d) throw std::invalid_argument("compose: dimension mismatch");
    return superoperator(m1) * superoperator(m2);
}

Matrix choi(const SandwichMap& map) {
    const int d = map.d;
    Matrix c = zeros(static_cast<std::size_t>(d) * d, static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const Matrix block = apply(map, matrix_unit(d, i, j));
            for (int r = 0; r < d; ++r)
                for (int s = 0; s < d; ++s)
                    c(static_cast<std::size_t>(i) * d + r, static_cast<std::size_t>(j) * d + s) =
                        block(r, s);
        }
    return c;
}

CpVerdict is_completely_positive(const SandwichMap& map) {
    const auto eig = hermitian_eigen(choi(map));
    const double min_eig = eig.values.front();
    return {min_eig >= -1e-10, min_eig};
}

double is_unital(const SandwichMap& map) {
    return distance(apply(map, identity(map.d)), identity(map.d));
}

double is_trace_preserving(const SandwichMap& map) {
    double dev = 0.0;
    for (int i = 0; i < map.d; ++i)
        for (int j = 0; j < map.d; ++j) {
            const Matrix unit = matrix_unit(map.d, i, j);
            dev = std::max(dev, std::abs(trace(apply(map, unit)) - trace(unit)));
        }
    return dev;
}

bool unitality_sufficient(const WeightVector& p, double tol) {
    if (!p.negation_symmetric(tol)) return false;
    const double rest = p.sum() - p.at(0, 0);
    return std::abs(p.at(0, 0) - (1.0 - rest)) <= tol;
}

}  // namespace hwmap
