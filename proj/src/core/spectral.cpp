// Copyright (c) 2026 hwmap developers
// SPDX-License-Identifier: Apache-2.0

#include "core/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "core/linalg.hpp"

namespace hwmap {

namespace {

void require_sign_pattern_dim(int d, const char* what) {
    if (d != 2 && d % 2 == 0) {
        throw std::invalid_argument(std::string(what) +
                                    ": requires d = 2 or odd d (sign pattern)");
    }
}

std::vector<cxd> unit_circle_poly(int d) {
    std::vector<cxd> target(d + 1, cxd{0.0, 0.0});
    target[0] = 1.0;
    target[d] = -1.0;  // z^d - 1
    return target;
}

}  // namespace

double isospectral_sign(const WeylIndex& idx) {
    return idx.phase_product() % 2 == 0 ? 1.0 : -1.0;
}

double verify_power_lemma(int k, int l, int d) {
    const WeylIndex idx(k, l, d);
    Matrix zk_xl = displacement_op(idx);
    // Strip the displacement phase back off: we want Z^k X^l itself.
    const double theta = -std::numbers::pi * idx.phase_product() / idx.d;
    zk_xl *= cxd{std::cos(theta), -std::sin(theta)};

    Matrix power = identity(d);
    for (int n = 0; n < d; ++n) power = power * zk_xl;

    const double sign = (d % 2 == 0 && (idx.k * idx.l) % 2 != 0) ? -1.0 : 1.0;
    return distance(power, sign * identity(d));
}

double verify_displacement_isospectral(int d) {
    require_sign_pattern_dim(d, "verify_displacement_isospectral");
    const auto target = unit_circle_poly(d);
    double dev = 0.0;
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
            const WeylIndex idx(k, l, d);
            if (idx.is_identity()) continue;
            const auto poly = char_poly(isospectral_sign(idx) * displacement_op(idx));
            dev = std::max(dev, poly_distance(poly, target));
        }
    return dev;
}

double verify_q_isospectral(int d, Chi chi) {
    require_sign_pattern_dim(d, "verify_q_isospectral");
    std::vector<std::vector<cxd>> polys;
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
            const WeylIndex idx(k, l, d);
            if (idx.is_identity()) continue;
            polys.push_back(char_poly(isospectral_sign(idx) * hw_observable(idx, chi)));
        }
    double dev = 0.0;
    for (std::size_t i = 1; i < polys.size(); ++i)
        dev = std::max(dev, poly_distance(polys[0], polys[i]));
    return dev;
}

double verify_sum_isospectral(int d, Chi chi) {
    const auto subsets = commuting_subsets(d);  // rejects non-prime d
    std::vector<std::vector<cxd>> polys;
    for (const auto& subset : subsets) {
        Matrix acc = zeros(d, d);
        for (const auto& idx : subset) acc += isospectral_sign(idx) * hw_observable(idx, chi);
        polys.push_back(char_poly(acc));
    }
    double dev = 0.0;
    for (std::size_t i = 1; i < polys.size(); ++i)
        dev = std::max(dev, poly_distance(polys[0], polys[i]));
    return dev;
}

}  // namespace hwmap
