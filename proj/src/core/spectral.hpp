// Copyright (c) 2026 hwmap developers
// SPDX-License-Identifier: Apache-2.0

#ifndef HWMAP_CORE_SPECTRAL_HPP
#define HWMAP_CORE_SPECTRAL_HPP

#include "core/weyl.hpp"

namespace hwmap {

/// Sign attached to index (k,l) in the isospectrality statements:
/// (-1)^{kl mod d}. The mod-d reduction matches the displacement phase
/// convention; without it the claims fail numerically for d > 2.
double isospectral_sign(const WeylIndex& idx);

/// ||(Z^k X^l)^d - s I|| with s = (-1)^{kl} for even d and s = 1 for odd d.
double verify_power_lemma(int k, int l, int d);

/// Max over non-identity (k,l) of the coefficient distance between
/// char_poly(sign * D_{k,l}) and z^d - 1. Requires d = 2 or d odd.
double verify_displacement_isospectral(int d);

/// Max pairwise char-poly distance among sign * Q_{k,l} over non-identity
/// indices. Requires d = 2 or d odd.
double verify_q_isospectral(int d, Chi chi = Chi::Plus);

/// Max pairwise char-poly distance among the d+1 commuting-subset sums
/// sum_{(k,l) in subset} sign(k,l) Q_{k,l}. Requires prime d.
double verify_sum_isospectral(int d, Chi chi = Chi::Plus);

}  // namespace hwmap

#endif
