// Copyright (c) 2026 hwmap developers
// SPDX-License-Identifier: Apache-2.0

#ifndef HWMAP_CORE_RMATRIX_HPP
#define HWMAP_CORE_RMATRIX_HPP

#include <array>
#include <optional>
#include <vector>

#include "core/maps.hpp"

namespace hwmap {

/// Orthonormal Hermitian operator basis Gamma_0 = I/sqrt(d), Gamma_i =
/// Q_{k,l}/sqrt(d) in row-major (k,l) order excluding (0,0). The Q_0..Q_8
/// shorthand for d = 3 is exactly this ordering.
struct HWBasis {
    int d;
    Chi chi;
    std::vector<Matrix> ops;  // size d^2

    static HWBasis build(int d, Chi chi = Chi::Plus);
};

/// Real d^2 x d^2 transfer matrix R_{ba} = <Gamma_b, Phi(Gamma_a)>_HS split
/// into blocks. t carries the traceless components of Phi(I/sqrt(d)) (the
/// unitality defect); s carries the traces of Phi(Gamma_i) (the
/// trace-preservation defect). For maps with Hermitian left = right Kraus
/// terms, R is symmetric and t = s.
struct RDecomposition {
    double r00;
    std::vector<double> t;      // length d^2-1, R_{b0} for b > 0
    std::vector<double> s;      // length d^2-1, R_{0a} for a > 0
    std::vector<double> delta;  // (d^2-1) x (d^2-1), row-major

    std::size_t dim() const { return t.size(); }
    Matrix delta_matrix() const;
};

struct RMatrix {
    std::vector<double> entries;  // d^2 x d^2, row-major
    RDecomposition blocks;
    std::size_t n;  // = d^2

    double at(std::size_t b, std::size_t a) const { return entries[b * n + a]; }
};

/// Transfer matrix of a map in the Heisenberg-Weyl basis. Rejects maps whose
/// R entries carry imaginary residue above 1e-10 (a non-Hermiticity bug).
RMatrix r_matrix(const SandwichMap& map, Chi chi = Chi::Plus);

struct UnitalTpVerdict {
    bool unital;
    bool trace_preserving;
};

/// Block characterization for square maps (d1 = d2 = d): unital iff t = 0
/// and R00 = 1; trace preserving iff s = 0 and R00 = 1.
UnitalTpVerdict unital_tp_characterize(const RDecomposition& dec, double tol = 1e-10);

struct PositivityGate {
    bool holds;
    double lhs;
    double rhs;
};

/// Sufficient positivity gate sqrt(d2-1)||t|| + sqrt(d1-1)||s|| +
/// sqrt((d2-1)(d1-1)) ||Delta||_op <= R00 with Euclidean vector norms.
/// holds == true implies the map is positive; false is inconclusive.
PositivityGate positivity_sufficient(const RDecomposition& dec, int d1, int d2);

/// lambda_{k,l,m,n} = 2 cos(2 pi (k n - l m) / d), the eigenvalue of the
/// pair map Phi~_{k,l} on eigenvector Q_{m,n}.
double eigenvalue_formula(int k, int l, int m, int n, int d);

struct DiagonalRCheck {
    double max_off_diagonal;
    double max_formula_deviation;  // diagonal vs p00 + sum_pairs p * lambda
};

/// For odd d and negation-symmetric p, R of hw_map(p) is diagonal with
/// entries given by the eigenvalue formula. Rejects asymmetric p.
DiagonalRCheck diagonal_r_check(const WeightVector& p, Chi chi = Chi::Plus);

/// The d = 3 shorthand weights p_0..p_8 (row-major (k,l) order).
struct CaseStudyWeights {
    std::array<double, 9> p;
};

struct CaseStudyReport {
    CaseStudyWeights weights;
    bool unital;               // symmetry + p0 = 1 - 2(p1+p3+p4+p5), cross-checked
    double unital_deviation;   // ||Lambda(I) - I||
    bool completely_positive;  // Choi verdict
    double min_choi_eigenvalue;
    std::vector<double> delta_diagonal;  // 8 entries
    double delta_off_diagonal;
    PositivityGate gate;                 // 2 ||Delta|| <= 1 specialization
    std::optional<bool> two_positive;    // set when the theorem hypotheses hold
};

CaseStudyReport d3_case_study(const CaseStudyWeights& w, Chi chi = Chi::Plus);

}  // namespace hwmap

#endif
