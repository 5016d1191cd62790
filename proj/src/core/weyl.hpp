// Copyright (c) 2026 hwmap developers
// SPDX-License-Identifier: Apache-2.0

#ifndef HWMAP_CORE_WEYL_HPP
#define HWMAP_CORE_WEYL_HPP

#include <vector>

#include "core/matrix.hpp"

namespace hwmap {

bool is_prime(int n);

/// Index (k, l) of a Weyl / displacement / Heisenberg-Weyl operator on a
/// d-dimensional system. Components are always kept reduced mod d;
/// negation means (d-k, d-l) mod d.
struct WeylIndex {
    int k, l, d;

    WeylIndex(int k_, int l_, int d_);

    WeylIndex negated() const { return WeylIndex(-k, -l, d); }
    bool is_identity() const { return k == 0 && l == 0; }
    bool operator==(const WeylIndex& o) const { return k == o.k && l == o.l && d == o.d; }

    /// k*l reduced mod d, the exponent entering the displacement phase.
    int phase_product() const { return (k * l) % d; }
};

/// Sign convention for the Hermitian combination: chi = (1+i)/2 or (1-i)/2.
enum class Chi { Plus, Minus };

cxd chi_value(Chi chi);

/// Cyclic shift: X|r> = |r+1 mod d>.
Matrix shift_op(int d);

/// Phase: Z = diag(1, w, ..., w^{d-1}) with w = exp(2*pi*i/d).
Matrix phase_op(int d);

/// W_{k,l} = X^l Z^k.
Matrix weyl_op(const WeylIndex& idx);

/// D_{k,l} = exp(-i*pi*(kl mod d)/d) Z^k X^l. Satisfies D^dag_{k,l} = D_{-k,-l}.
Matrix displacement_op(const WeylIndex& idx);

/// Q_{k,l} = chi D_{k,l} + conj(chi) D^dag_{k,l}. Hermitian; Q_{0,0} = I;
/// traceless otherwise; Tr(Q_a Q_b) = d delta_{ab}.
Matrix hw_observable(const WeylIndex& idx, Chi chi = Chi::Plus);

/// For prime d: the d^2-1 non-identity indices partitioned into d+1 sets of
/// d-1 mutually commuting indices, ordered {(n, alpha*n)} for alpha=1..d-1,
/// then {(n, 0)}, then {(0, n)}.
std::vector<std::vector<WeylIndex>> commuting_subsets(int d);

/// ||Q_{k,l}^2 + Q_{-k,-l}^2 - 2I||.
double verify_square_pair(const WeylIndex& idx, Chi chi = Chi::Plus);

/// ||sum_{n=1}^{d-1} Q_{nk,nl}^2 - (d-1)I||. Requires (k,l) != (0,0).
double verify_sum_of_squares(int k, int l, int d, Chi chi = Chi::Plus);

}  // namespace hwmap

#endif
