// Copyright (c) 2026 hwmap developers
// SPDX-License-Identifier: Apache-2.0

#include "core/rmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "core/linalg.hpp"

namespace hwmap {

HWBasis HWBasis::build(int d, Chi chi) {
    HWBasis basis{d, chi, {}};
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    basis.ops.reserve(static_cast<std::size_t>(d) * d);
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
            Matrix q = hw_observable(WeylIndex(k, l, d), chi);
            // The construction guarantees Tr(Q^2) = d; abort loudly if not.
            const double norm2 = hs_inner(q, q).real();
            if (std::abs(norm2 - d) > 1e-9) {
                throw std::runtime_error("HWBasis: observable norm check failed");
            }
            basis.ops.push_back(scale * q);
        }
    return basis;
}

Matrix RDecomposition::delta_matrix() const {
    const std::size_t n = dim();
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = delta[i * n + j];
    return m;
}

RMatrix r_matrix(const SandwichMap& map, Chi chi) {
    const auto basis = HWBasis::build(map.d, chi);
    const std::size_t n = basis.ops.size();
    RMatrix r;
    r.n = n;
    r.entries.assign(n * n, 0.0);
    for (std::size_t a = 0; a < n; ++a) {
        const Matrix image = apply(map, basis.ops[a]);
        for (std::size_t b = 0; b < n; ++b) {
            const cxd val = hs_inner(basis.ops[b], image);
            if (std::abs(val.imag()) > 1e-10) {
                throw std::invalid_argument("r_matrix: imaginary residue " +
                                            std::to_string(val.imag()) +
                                            " (map is not Hermiticity-preserving)");
            }
            r.entries[b * n + a] = val.real();
        }
    }
    r.blocks.r00 = r.at(0, 0);
    r.blocks.t.resize(n - 1);
    r.blocks.s.resize(n - 1);
    r.blocks.delta.resize((n - 1) * (n - 1));
    for (std::size_t i = 1; i < n; ++i) {
        r.blocks.t[i - 1] = r.at(i, 0);
        r.blocks.s[i - 1] = r.at(0, i);
        for (std::size_t j = 1; j < n; ++j) r.blocks.delta[(i - 1) * (n - 1) + (j - 1)] = r.at(i, j);
    }
    return r;
}

namespace {

double euclidean(const std::vector<double>& v) {
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return std::sqrt(acc);
}

double max_abs_vec(const std::vector<double>& v) {
    double mx = 0.0;
    for (double x : v) mx = std::max(mx, std::abs(x));
    return mx;
}

}  // namespace

UnitalTpVerdict unital_tp_characterize(const RDecomposition& dec, double tol) {
    const bool r00_ok = std::abs(dec.r00 - 1.0) <= tol;  // sqrt(d2/d1) = 1 for square maps
    return {r00_ok && max_abs_vec(dec.t) <= tol, r00_ok && max_abs_vec(dec.s) <= tol};
}

PositivityGate positivity_sufficient(const RDecomposition& dec, int d1, int d2) {
    const double lhs = std::sqrt(static_cast<double>(d2 - 1)) * euclidean(dec.t) +
                       std::sqrt(static_cast<double>(d1 - 1)) * euclidean(dec.s) +
                       std::sqrt(static_cast<double>(d2 - 1) * (d1 - 1)) *
                           operator_norm(dec.delta_matrix());
    return {lhs <= dec.r00 + 1e-12, lhs, dec.r00};
}

double eigenvalue_formula(int k, int l, int m, int n, int d) {
    return 2.0 * std::cos(2.0 * std::numbers::pi * (k * n - l * m) / d);
}

DiagonalRCheck diagonal_r_check(const WeightVector& p, Chi chi) {
    if (p.d % 2 == 0) throw std::invalid_argument("diagonal_r_check: requires odd d");
    if (!p.negation_symmetric(1e-12)) {
        throw std::invalid_argument("diagonal_r_check: weights must be negation-symmetric");
    }
    const int d = p.d;
    const RMatrix r = r_matrix(hw_map(p, chi), chi);

    DiagonalRCheck out{0.0, 0.0};
    for (std::size_t i = 0; i < r.n; ++i)
        for (std::size_t j = 0; j < r.n; ++j)
            if (i != j) out.max_off_diagonal = std::max(out.max_off_diagonal, std::abs(r.at(i, j)));

    // Diagonal entry for basis op Q_{m,n}: p00 + sum over negation pairs of
    // p_{k,l} * lambda_{k,l,m,n} (lambda is shared within a pair).
    for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) {
            double expected = p.at(0, 0);
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    if (k == 0 && l == 0) continue;
                    expected += 0.5 * p.at(k, l) * eigenvalue_formula(k, l, m, n, d);
                }
            const std::size_t i = static_cast<std::size_t>(m) * d + n;
            out.max_formula_deviation =
                std::max(out.max_formula_deviation, std::abs(r.at(i, i) - expected));
        }
    return out;
}

CaseStudyReport d3_case_study(const CaseStudyWeights& w, Chi chi) {
    const int d = 3;
    WeightVector p = WeightVector::zero(d);
    for (int i = 0; i < 9; ++i) p.values[i] = w.p[i];

    const SandwichMap map = hw_map(p, chi);
    const RMatrix r = r_matrix(map, chi);

    CaseStudyReport report;
    report.weights = w;

    const auto& q = w.p;
    const double tol = 1e-10;
    const bool symmetric = std::abs(q[1] - q[2]) <= tol && std::abs(q[3] - q[6]) <= tol &&
                           std::abs(q[4] - q[8]) <= tol && std::abs(q[5] - q[7]) <= tol;
    const bool p0_ok = std::abs(q[0] - (1.0 - 2.0 * (q[1] + q[3] + q[4] + q[5]))) <= tol;
    report.unital = symmetric && p0_ok;
    report.unital_deviation = is_unital(map);

    const auto cp = is_completely_positive(map);
    report.completely_positive = cp.completely_positive;
    report.min_choi_eigenvalue = cp.min_choi_eigenvalue;

    report.delta_diagonal.resize(8);
    report.delta_off_diagonal = 0.0;
    for (std::size_t i = 0; i < 8; ++i) {
        report.delta_diagonal[i] = r.blocks.delta[i * 8 + i];
        for (std::size_t j = 0; j < 8; ++j)
            if (i != j)
                report.delta_off_diagonal =
                    std::max(report.delta_off_diagonal, std::abs(r.blocks.delta[i * 8 + j]));
    }

    const double delta_norm = operator_norm(r.blocks.delta_matrix());
    report.gate = {2.0 * delta_norm <= 1.0 + 1e-12, 2.0 * delta_norm, 1.0};

    // Two-positive statement applies to unital maps passing the gate whose
    // Delta eigenvalues lambda^{(i)} share one sign.
    report.two_positive.reset();
    if (report.unital && report.gate.holds) {
        const double l1 = 1.0 - 3.0 * (q[3] + q[4] + q[5]);
        const double l2 = 1.0 - 3.0 * (q[1] + q[4] + q[5]);
        const double l3 = 1.0 - 3.0 * (q[1] + q[3] + q[5]);
        const double l4 = 1.0 - 3.0 * (q[1] + q[3] + q[4]);
        const bool all_nonneg = l1 >= 0 && l2 >= 0 && l3 >= 0 && l4 >= 0;
        const bool all_nonpos = l1 <= 0 && l2 <= 0 && l3 <= 0 && l4 <= 0;
        if (all_nonneg || all_nonpos) {
            int positives = 0;
            for (int i : {1, 3, 4, 5})
                if (q[i] > 1e-12) ++positives;
            report.two_positive = positives >= 2;
        }
    }
    return report;
}

}  // namespace hwmap
