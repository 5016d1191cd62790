// Copyright (c) 2026 hwmap developers
// SPDX-License-Identifier: Apache-2.0

#ifndef HWMAP_CORE_MUB_HPP
#define HWMAP_CORE_MUB_HPP

#include <vector>

#include "core/weyl.hpp"

namespace hwmap {

/// One orthonormal basis of C^d, stored as columns. Label alpha runs 1..d+1
/// and matches the commuting-subset order of commuting_subsets():
/// alpha = 1..d-1 is the eigenbasis of Q_{1,alpha}, alpha = d of Q_{1,0},
/// alpha = d+1 of Q_{0,1}.
struct Basis {
    int label;
    Matrix vectors;
};

/// The d rank-1 projectors P_r = |eta_r><eta_r| of one basis.
struct ProjectorSet {
    int label;
    std::vector<Matrix> projectors;
};

/// The d+1 mutually unbiased bases for odd prime d, from the eigenbases of
/// Heisenberg-Weyl observables. Eigenvectors are phase-fixed so the first
/// component of magnitude > 1e-8 is real positive. Rejects even or composite
/// d and any basis whose spectrum is degenerate (adjacent gap < 1e-8).
std::vector<Basis> mub_bases(int d, Chi chi = Chi::Plus);

ProjectorSet projectors(const Basis& basis);

/// The pinching Phi_alpha(sigma) = sum_r P_r sigma P_r.
Matrix projector_map_apply(const ProjectorSet& p, const Matrix& sigma);

/// ||Phi_alpha(Phi_beta(sigma)) - Tr(sigma) I/d|| maximized over all matrix
/// units sigma = E_{ij}. Rejects alpha == beta.
double verify_complementarity(const ProjectorSet& a, const ProjectorSet& b);

/// Max over r,s,alpha != beta of | |<eta_r^a|eta_s^b>|^2 - 1/d |.
double max_unbiasedness_deviation(const std::vector<Basis>& bases);

}  // namespace hwmap

#endif
