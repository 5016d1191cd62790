// Copyright (c) 2026 hwmap developers
// SPDX-License-Identifier: Apache-2.0

#ifndef HWMAP_CORE_MAPS_HPP
#define HWMAP_CORE_MAPS_HPP

#include <vector>

#include "core/mub.hpp"
#include "core/weyl.hpp"

namespace hwmap {

/// Linear map Y -> sum_i w_i L_i Y R_i as an explicit term list. Weights are
/// real (quasi-probabilities allowed); operators are d x d.
struct SandwichMap {
    int d = 0;
    struct Term {
        double weight;
        Matrix left;
        Matrix right;
    };
    std::vector<Term> terms;
};

/// d^2 real weights indexed row-major by (k, l).
struct WeightVector {
    int d = 0;
    std::vector<double> values;  // size d*d

    WeightVector() = default;
    WeightVector(int d_, std::vector<double> v);
    static WeightVector zero(int d);
    static WeightVector delta_identity(int d);  // 1 at (0,0)

    double& at(int k, int l) { return values[static_cast<std::size_t>(k) * d + l]; }
    double at(int k, int l) const { return values[static_cast<std::size_t>(k) * d + l]; }
    double sum() const;
    bool is_probability(double tol = 1e-12) const;
    /// p_{k,l} == p_{-k,-l} for all indices.
    bool negation_symmetric(double tol = 1e-12) const;
};

/// Lambda(Y) = sum_{k,l} p_{k,l} Q_{k,l} Y Q_{k,l}.
SandwichMap hw_map(const WeightVector& p, Chi chi = Chi::Plus);

/// Lambda_W(Y) = sum p_{k,l} W_{k,l} Y W^dag_{k,l}; p must be a probability
/// vector (convex mixture of unitary conjugations).
SandwichMap weyl_channel(const WeightVector& p);

/// Phi~_{k,l}(Y) = Q_{k,l} Y Q_{k,l} + Q_{-k,-l} Y Q_{-k,-l}.
SandwichMap pair_map(const WeylIndex& idx, Chi chi = Chi::Plus);

/// Generalized Pauli channel from Heisenberg-Weyl observables:
/// Lambda = p_0 I + 1/(d-1) sum_{a=1}^{d+1} p_a U_a with
/// U_a(X) = sum_{n=1}^{d-1} Q_{n,an} X Q_{n,an} (subsets ordered as in
/// commuting_subsets). p has d+2 entries and must be a probability vector;
/// d must be prime.
SandwichMap gen_pauli_channel_hw(const std::vector<double>& p, int d, Chi chi = Chi::Plus);

/// Same channel built from MUB projector pinchings V_a = d Phi_a - I.
/// Requires odd prime d.
SandwichMap gen_pauli_channel_mub(const std::vector<double>& p, int d, Chi chi = Chi::Plus);

/// Refined mixture: p0 plus one weight per {Q_{k,l}, Q_{-k,-l}} pair,
/// (d+1)*(d-1)/2 pair weights ordered family-major (family = commuting
/// subset, pair i uses representative n = i+1 within the family, i.e. the
/// first (d-1)/2 elements of the subset). Odd prime d.
SandwichMap refined_map(double p0, const std::vector<double>& pair_weights, int d,
                        Chi chi = Chi::Plus);

Matrix apply(const SandwichMap& map, const Matrix& y);

/// d^2 x d^2 matrix acting on column-stacked operators:
/// superoperator(Y -> A Y B) = transpose(B) (x) A.
Matrix superoperator(const SandwichMap& map);

/// Superoperator of m1 after m2 (matrix product of superoperators).
Matrix compose(const SandwichMap& m1, const SandwichMap& m2);

/// Unnormalized Choi matrix C = sum_{ij} E_{ij} (x) Lambda(E_{ij}).
Matrix choi(const SandwichMap& map);

struct CpVerdict {
    bool completely_positive;
    double min_choi_eigenvalue;
};

/// Choi positivity test; min eigenvalue >= -1e-10 counts as CP.
CpVerdict is_completely_positive(const SandwichMap& map);

/// ||Lambda(I) - I||.
double is_unital(const SandwichMap& map);

/// Max over matrix units of |Tr Lambda(E_{ij}) - Tr E_{ij}|.
double is_trace_preserving(const SandwichMap& map);

/// True iff p is negation-symmetric and p_{0,0} = 1 - sum of the rest;
/// a sufficient (not necessary) unitality condition for hw_map(p).
bool unitality_sufficient(const WeightVector& p, double tol = 1e-12);

}  // namespace hwmap

#endif
