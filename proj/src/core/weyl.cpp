// Copyright (c) 2026 hwmap developers
// SPDX-License-Identifier: Apache-2.0

#include "core/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hwmap {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

namespace {

int mod(int a, int d) {
    int r = a % d;
    return r < 0 ? r + d : r;
}

Matrix int_power(const Matrix& m, int e) {
    Matrix out = identity(m.rows());
    for (int i = 0; i < e; ++i) out = out * m;
    return out;
}

}  // namespace

WeylIndex::WeylIndex(int k_, int l_, int d_) : d(d_) {
    if (d_ < 2) throw std::invalid_argument("WeylIndex: dimension must be >= 2");
    k = mod(k_, d_);
    l = mod(l_, d_);
}

cxd chi_value(Chi chi) {
    return chi == Chi::Plus ? cxd{0.5, 0.5} : cxd{0.5, -0.5};
}

Matrix shift_op(int d) {
    if (d < 2) throw std::invalid_argument("shift_op: dimension must be >= 2");
    Matrix x(d, d);
    for (int r = 0; r < d; ++r) x((r + 1) % d, r) = 1.0;
    return x;
}

Matrix phase_op(int d) {
    if (d < 2) throw std::invalid_argument("phase_op: dimension must be >= 2");
    Matrix z(d, d);
    for (int r = 0; r < d; ++r) {
        const double theta = 2.0 * std::numbers::pi * r / d;
        z(r, r) = cxd{std::cos(theta), std::sin(theta)};
    }
    return z;
}

Matrix weyl_op(const WeylIndex& idx) {
    return int_power(shift_op(idx.d), idx.l) * int_power(phase_op(idx.d), idx.k);
}

Matrix displacement_op(const WeylIndex& idx) {
    const double theta = -std::numbers::pi * idx.phase_product() / idx.d;
    const cxd phase{std::cos(theta), std::sin(theta)};
    return phase * (int_power(phase_op(idx.d), idx.k) * int_power(shift_op(idx.d), idx.l));
}

Matrix hw_observable(const WeylIndex& idx, Chi chi) {
    const Matrix disp = displacement_op(idx);
    const cxd x = chi_value(chi);
    return x * disp + std::conj(x) * dagger(disp);
}

std::vector<std::vector<WeylIndex>> commuting_subsets(int d) {
    if (!is_prime(d)) {
        throw std::invalid_argument("commuting_subsets: dimension must be prime");
    }
    std::vector<std::vector<WeylIndex>> subsets;
    subsets.reserve(d + 1);
    for (int alpha = 1; alpha < d; ++alpha) {
        std::vector<WeylIndex> set;
        for (int n = 1; n < d; ++n) set.emplace_back(n, alpha * n, d);
        subsets.push_back(std::move(set));
    }
    std::vector<WeylIndex> row, col;
    for (int n = 1; n < d; ++n) {
        row.emplace_back(n, 0, d);
        col.emplace_back(0, n, d);
    }
    subsets.push_back(std::move(row));
    subsets.push_back(std::move(col));
    return subsets;
}

double verify_square_pair(const WeylIndex& idx, Chi chi) {
    const Matrix q = hw_observable(idx, chi);
    const Matrix qn = hw_observable(idx.negated(), chi);
    return distance(q * q + qn * qn, 2.0 * identity(idx.d));
}

double verify_sum_of_squares(int k, int l, int d, Chi chi) {
    WeylIndex base(k, l, d);
    if (base.is_identity()) {
        throw std::invalid_argument("verify_sum_of_squares: index must not be (0,0)");
    }
    Matrix acc = zeros(d, d);
    for (int n = 1; n < d; ++n) {
        const Matrix q = hw_observable(WeylIndex(n * base.k, n * base.l, d), chi);
        acc += q * q;
    }
    return distance(acc, static_cast<double>(d - 1) * identity(d));
}

}  // namespace hwmap
