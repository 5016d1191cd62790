// Copyright (c) 2026 hwmap developers
// SPDX-License-Identifier: Apache-2.0

#include "core/suite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "core/linalg.hpp"
#include "core/rng.hpp"
#include "core/spectral.hpp"

namespace hwmap {

const char* chi_name(Chi chi) { return chi == Chi::Plus ? "+" : "-"; }

Chi parse_chi(const std::string& s) {
    if (s == "+") return Chi::Plus;
    if (s == "-") return Chi::Minus;
    throw std::invalid_argument("chi must be \"+\" or \"-\", got \"" + s + "\"");
}

namespace {

std::vector<WeylIndex> all_indices(int d) {
    std::vector<WeylIndex> out;
    out.reserve(static_cast<std::size_t>(d) * d);
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) out.emplace_back(k, l, d);
    return out;
}

// One representative per {idx, -idx} class.
std::vector<WeylIndex> negation_representatives(int d) {
    std::vector<WeylIndex> out;
    for (const auto& idx : all_indices(d)) {
        const auto neg = idx.negated();
        if (std::make_pair(idx.k, idx.l) <= std::make_pair(neg.k, neg.l)) out.push_back(idx);
    }
    return out;
}

double commutator_norm(const Matrix& a, const Matrix& b) { return distance(a * b, b * a); }

std::vector<double> random_probability(SplitMix64& rng, std::size_t n) {
    std::vector<double> p(n);
    double s = 0.0;
    for (auto& x : p) {
        x = rng.uniform() + 1e-9;
        s += x;
    }
    for (auto& x : p) x /= s;
    // Normalization leaves a rounding residue; absorb it into the first entry
    // so the probability-vector precondition holds exactly within 1e-12.
    double resum = 0.0;
    for (double x : p) resum += x;
    p[0] += 1.0 - resum;
    return p;
}

WeightVector random_symmetric_unital(SplitMix64& rng, int d, double lo, double hi) {
    WeightVector p = WeightVector::zero(d);
    for (const auto& idx : negation_representatives(d)) {
        if (idx.is_identity()) continue;
        const double v = rng.uniform(lo, hi);
        p.at(idx.k, idx.l) = v;
        const auto neg = idx.negated();
        p.at(neg.k, neg.l) = v;
    }
    p.at(0, 0) = 1.0 - (p.sum() - p.at(0, 0));
    return p;
}

struct ClaimRunner {
    const SuiteConfig& config;
    VerificationReport& report;

    void skip(const std::string& id, const std::string& statement, int d,
              const std::string& reason) {
        report.claims.push_back({id, statement, d, "skip", 0.0, 0.0, reason});
        ++report.skipped;
    }

    void info(const std::string& id, const std::string& statement, int d, double deviation) {
        report.claims.push_back({id, statement, d, "info", deviation, 0.0, ""});
    }

    void check(const std::string& id, const std::string& statement, int d, double deviation,
               double tolerance) {
        const bool pass = deviation <= tolerance;
        report.claims.push_back({id, statement, d, pass ? "pass" : "fail", deviation, tolerance,
                                 ""});
        (pass ? report.passed : report.failed)++;
    }

    // Deterministic per-claim random stream.
    SplitMix64 stream(int d, std::uint64_t salt) const {
        return SplitMix64(config.seed ^ (salt * 0x100000001b3ULL + static_cast<std::uint64_t>(d)));
    }
};

void run_algebra_suite(ClaimRunner& run, int d) {
    const Chi chi = run.config.chi;
    const double tol = run.config.tolerance;
    const auto idxs = all_indices(d);

    double dev = 0.0;
    for (const auto& idx : idxs) {
        const Matrix w = weyl_op(idx);
        dev = std::max(dev, distance(dagger(w) * w, identity(d)));
    }
    run.check("weyl-unitary", "W'W = I for all (k,l)", d, dev, 1e-12);

    dev = 0.0;
    double dag_dev = 0.0;
    for (const auto& idx : idxs) {
        const Matrix disp = displacement_op(idx);
        dev = std::max(dev, distance(dagger(disp) * disp, identity(d)));
        dag_dev = std::max(dag_dev, distance(dagger(disp), displacement_op(idx.negated())));
    }
    run.check("displacement-unitary", "D'D = I for all (k,l)", d, dev, 1e-12);
    run.check("displacement-dagger", "D'_{k,l} = D_{-k,-l}", d, dag_dev, tol);

    dev = 0.0;
    for (const auto& a : idxs)
        for (const auto& b : idxs) {
            const double theta = 2.0 * std::numbers::pi * a.k * b.l / d;
            const cxd phase{std::cos(theta), std::sin(theta)};
            const Matrix expected =
                phase * weyl_op(WeylIndex(a.k + b.k, a.l + b.l, d));
            dev = std::max(dev, distance(weyl_op(a) * weyl_op(b), expected));
        }
    run.check("weyl-composition", "W_{k,l} W_{r,s} = exp(2 pi i k s / d) W_{k+r,l+s}", d, dev,
              tol);

    dev = 0.0;
    for (const auto& idx : idxs)
        for (Chi c : {Chi::Plus, Chi::Minus}) {
            const Matrix q = hw_observable(idx, c);
            dev = std::max(dev, distance(q, dagger(q)));
        }
    run.check("observable-hermitian", "Q = Q' for both chi conventions", d, dev, 1e-12);

    dev = 0.0;
    std::vector<Matrix> qs;
    qs.reserve(idxs.size());
    for (const auto& idx : idxs) qs.push_back(hw_observable(idx, chi));
    for (std::size_t a = 0; a < qs.size(); ++a)
        for (std::size_t b = 0; b < qs.size(); ++b) {
            const double expected = a == b ? static_cast<double>(d) : 0.0;
            dev = std::max(dev, std::abs(hs_inner(qs[a], qs[b]) - expected));
        }
    run.check("observable-gram", "Tr(Q_a Q_b) = d delta_ab", d, dev, tol);

    dev = 0.0;
    for (const auto& idx : idxs) dev = std::max(dev, verify_square_pair(idx, chi));
    run.check("square-pair", "Q_{k,l}^2 + Q_{-k,-l}^2 = 2I", d, dev, tol);

    dev = 0.0;
    for (const auto& idx : idxs) {
        if (idx.is_identity()) continue;
        dev = std::max(dev, verify_sum_of_squares(idx.k, idx.l, d, chi));
    }
    run.check("sum-of-squares", "sum_n Q_{nk,nl}^2 = (d-1)I", d, dev, tol);
}

void run_spectral_suite(ClaimRunner& run, int d) {
    const Chi chi = run.config.chi;

    double dev = 0.0;
    for (const auto& idx : all_indices(d))
        dev = std::max(dev, verify_power_lemma(idx.k, idx.l, d));
    run.check("power-lemma", "(Z^k X^l)^d = (-1)^{kl} I (even d) or I (odd d)", d, dev,
              run.config.tolerance);

    const bool sign_ok = (d == 2 || d % 2 == 1);
    if (sign_ok) {
        run.check("displacement-isospectral", "char poly of sign(k,l) D_{k,l} is z^d - 1", d,
                  verify_displacement_isospectral(d), 1e-9);
        run.check("observable-isospectral", "sign(k,l) Q_{k,l} share one char poly", d,
                  verify_q_isospectral(d, chi), 1e-9);
    } else {
        run.skip("displacement-isospectral", "char poly of sign(k,l) D_{k,l} is z^d - 1", d,
                 "sign pattern requires d = 2 or odd d");
        run.skip("observable-isospectral", "sign(k,l) Q_{k,l} share one char poly", d,
                 "sign pattern requires d = 2 or odd d");
    }

    if (is_prime(d)) {
        run.check("subset-sum-isospectral", "commuting-subset sums share one char poly", d,
                  verify_sum_isospectral(d, chi), 1e-9);
    } else {
        run.skip("subset-sum-isospectral", "commuting-subset sums share one char poly", d,
                 "requires prime d");
    }
}

void run_commutation_suite(ClaimRunner& run, int d) {
    const Chi chi = run.config.chi;
    const double tol = run.config.tolerance;

    if (is_prime(d)) {
        const auto subsets = commuting_subsets(d);
        std::vector<std::vector<Matrix>> subset_qs;
        for (const auto& subset : subsets) {
            std::vector<Matrix> qs;
            for (const auto& idx : subset) qs.push_back(hw_observable(idx, chi));
            subset_qs.push_back(std::move(qs));
        }

        double dev = 0.0;
        for (const auto& qs : subset_qs)
            for (std::size_t a = 0; a < qs.size(); ++a)
                for (std::size_t b = a + 1; b < qs.size(); ++b)
                    dev = std::max(dev, commutator_norm(qs[a], qs[b]));
        run.check("within-subset-commutation", "Q's in one commuting subset commute", d, dev, tol);

        double witness_missing = 0.0;
        for (std::size_t a = 0; a < subset_qs.size() && d > 2; ++a)
            for (std::size_t b = a + 1; b < subset_qs.size(); ++b) {
                double best = 0.0;
                for (const auto& qa : subset_qs[a])
                    for (const auto& qb : subset_qs[b])
                        best = std::max(best, commutator_norm(qa, qb));
                if (best < 1e-6) witness_missing = 1.0;
            }
        run.check("cross-subset-witness",
                  "every pair of distinct subsets has a non-commuting pair", d, witness_missing,
                  0.5);
    } else {
        run.skip("within-subset-commutation", "Q's in one commuting subset commute", d,
                 "requires prime d");
        run.skip("cross-subset-witness", "every pair of distinct subsets has a non-commuting pair",
                 d, "requires prime d");
    }

    // Pair maps Phi~_{k,l} all commute (via superoperators; the pair map only
    // depends on the {idx, -idx} class, so representatives cover all pairs).
    const auto reps = negation_representatives(d);
    std::vector<Matrix> superops;
    superops.reserve(reps.size());
    for (const auto& idx : reps) superops.push_back(superoperator(pair_map(idx, chi)));
    double dev = 0.0;
    for (std::size_t a = 0; a < superops.size(); ++a)
        for (std::size_t b = a + 1; b < superops.size(); ++b)
            dev = std::max(dev, commutator_norm(superops[a], superops[b]));
    run.check("pair-map-commutation", "Psi_1 . Psi_2 = Psi_2 . Psi_1 for all index pairs", d, dev,
              tol);
}

void run_eigenvalue_suite(ClaimRunner& run, int d) {
    const Chi chi = run.config.chi;
    std::vector<Matrix> qs;
    for (const auto& idx : all_indices(d)) qs.push_back(hw_observable(idx, chi));

    double dev = 0.0;
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
            const SandwichMap pm = pair_map(WeylIndex(k, l, d), chi);
            for (int m = 0; m < d; ++m)
                for (int n = 0; n < d; ++n) {
                    const Matrix& q = qs[static_cast<std::size_t>(m) * d + n];
                    const double lambda = eigenvalue_formula(k, l, m, n, d);
                    dev = std::max(dev, distance(apply(pm, q), lambda * q));
                }
        }
    run.check("pair-map-eigenvalue", "Phi~_{k,l}(Q_{m,n}) = 2 cos(2 pi (kn-lm)/d) Q_{m,n}", d,
              dev, run.config.tolerance);
}

void run_mub_suite(ClaimRunner& run, int d) {
    const Chi chi = run.config.chi;
    const double tol = run.config.tolerance;
    const bool ok = d % 2 == 1 && is_prime(d);
    const char* reason = "requires odd prime d";
    if (!ok) {
        run.skip("mub-unbiasedness", "all inter-basis overlaps are 1/d", d, reason);
        run.skip("mub-projector-completeness", "sum_r P_r = I for every basis", d, reason);
        run.skip("mub-complementarity", "Phi_a . Phi_b = Tr(.) I/d for a != b", d, reason);
        run.skip("mub-diagonalizes-subset", "basis a diagonalizes its commuting subset", d,
                 reason);
        return;
    }

    const auto bases = mub_bases(d, chi);
    run.check("mub-unbiasedness", "all inter-basis overlaps are 1/d", d,
              max_unbiasedness_deviation(bases), tol);

    std::vector<ProjectorSet> proj_sets;
    for (const auto& basis : bases) proj_sets.push_back(projectors(basis));

    double dev = 0.0;
    for (const auto& ps : proj_sets) {
        Matrix acc = zeros(d, d);
        for (const auto& p : ps.projectors) acc += p;
        dev = std::max(dev, distance(acc, identity(d)));
    }
    run.check("mub-projector-completeness", "sum_r P_r = I for every basis", d, dev, tol);

    dev = 0.0;
    for (std::size_t a = 0; a < proj_sets.size(); ++a)
        for (std::size_t b = 0; b < proj_sets.size(); ++b) {
            if (a == b) continue;
            dev = std::max(dev, verify_complementarity(proj_sets[a], proj_sets[b]));
        }
    run.check("mub-complementarity", "Phi_a . Phi_b = Tr(.) I/d for a != b", d, dev, tol);

    const auto subsets = commuting_subsets(d);
    dev = 0.0;
    for (std::size_t a = 0; a < subsets.size(); ++a)
        for (const auto& idx : subsets[a]) {
            const Matrix q = hw_observable(idx, chi);
            for (const auto& p : proj_sets[a].projectors)
                dev = std::max(dev, commutator_norm(p, q));
        }
    run.check("mub-diagonalizes-subset", "basis a diagonalizes its commuting subset", d, dev,
              1e-9);
}

void run_channel_suite(ClaimRunner& run, int d) {
    const Chi chi = run.config.chi;
    const double tol = run.config.tolerance;

    {
        auto rng = run.stream(d, 11);
        double cp_dev = 0.0, tp_dev = 0.0;
        for (int trial = 0; trial < 5; ++trial) {
            const WeightVector p(d, random_probability(rng, static_cast<std::size_t>(d) * d));
            const SandwichMap ch = weyl_channel(p);
            cp_dev = std::max(cp_dev, -is_completely_positive(ch).min_choi_eigenvalue);
            tp_dev = std::max(tp_dev, is_trace_preserving(ch));
        }
        run.check("weyl-channel-cp", "Weyl channels have PSD Choi matrices", d,
                  std::max(0.0, cp_dev), tol);
        run.check("weyl-channel-tp", "Weyl channels preserve trace", d, tp_dev, tol);
    }

    if (is_prime(d)) {
        auto rng = run.stream(d, 12);
        double cp_dev = 0.0, tp_dev = 0.0, unital_dev = 0.0;
        for (int trial = 0; trial < 5; ++trial) {
            const auto p = random_probability(rng, static_cast<std::size_t>(d) + 2);
            const SandwichMap ch = gen_pauli_channel_hw(p, d, chi);
            cp_dev = std::max(cp_dev, -is_completely_positive(ch).min_choi_eigenvalue);
            tp_dev = std::max(tp_dev, is_trace_preserving(ch));
            unital_dev = std::max(unital_dev, is_unital(ch));
        }
        run.check("gen-pauli-hw-channel", "observable-built generalized Pauli maps are CP/TP/unital",
                  d, std::max({cp_dev, tp_dev, unital_dev, 0.0}), tol);
    } else {
        run.skip("gen-pauli-hw-channel",
                 "observable-built generalized Pauli maps are CP/TP/unital", d,
                 "requires prime d");
    }

    const bool odd_prime = d % 2 == 1 && is_prime(d);
    if (odd_prime) {
        auto rng = run.stream(d, 13);
        double dev = 0.0;
        for (int trial = 0; trial < 50; ++trial) {
            const auto p = random_probability(rng, static_cast<std::size_t>(d) + 2);
            dev = std::max(dev, distance(superoperator(gen_pauli_channel_hw(p, d, chi)),
                                         superoperator(gen_pauli_channel_mub(p, d, chi))));
        }
        run.check("gen-pauli-equivalence",
                  "observable and MUB-projector constructions give the same channel", d, dev,
                  1e-9);

        auto rng2 = run.stream(d, 14);
        dev = 0.0;
        const int pairs = (d - 1) / 2;
        for (int trial = 0; trial < 5; ++trial) {
            const auto p = random_probability(rng2, static_cast<std::size_t>(d) + 2);
            std::vector<double> pair_weights;
            for (int family = 1; family <= d + 1; ++family)
                pair_weights.insert(pair_weights.end(), pairs, p[family]);
            dev = std::max(dev, distance(superoperator(refined_map(p[0], pair_weights, d, chi)),
                                         superoperator(gen_pauli_channel_hw(p, d, chi))));
        }
        run.check("refined-map-specializes",
                  "equal pair weights per family reproduce the generalized Pauli channel", d, dev,
                  tol);

        const auto subsets = commuting_subsets(d);
        dev = 0.0;
        for (const auto& subset : subsets) {
            for (int m = 0; m < pairs; ++m)
                for (int n = m + 1; n < pairs; ++n) {
                    const Matrix sm = superoperator(pair_map(subset[m], chi));
                    const Matrix sn = superoperator(pair_map(subset[n], chi));
                    dev = std::max(dev, commutator_norm(sm, sn));
                }
        }
        run.check("refined-pair-commutation", "pair sub-maps within a family commute", d, dev,
                  tol);
    } else {
        const char* reason = "requires odd prime d";
        run.skip("gen-pauli-equivalence",
                 "observable and MUB-projector constructions give the same channel", d, reason);
        run.skip("refined-map-specializes",
                 "equal pair weights per family reproduce the generalized Pauli channel", d,
                 reason);
        run.skip("refined-pair-commutation", "pair sub-maps within a family commute", d, reason);
    }
}

void run_rmatrix_suite(ClaimRunner& run, int d) {
    const Chi chi = run.config.chi;
    const double tol = run.config.tolerance;

    {
        auto rng = run.stream(d, 21);
        double dev = 0.0;
        bool flags_ok = true;
        for (int trial = 0; trial < 20; ++trial) {
            const WeightVector p = random_symmetric_unital(rng, d, -0.2, 0.3);
            if (!unitality_sufficient(p)) flags_ok = false;
            dev = std::max(dev, is_unital(hw_map(p, chi)));
        }
        run.check("unitality-sufficient",
                  "negation-symmetric weights with matched p_00 give unital maps", d,
                  flags_ok ? dev : 1.0, tol);
    }

    if (d % 2 == 1) {
        auto rng = run.stream(d, 22);
        double dev = 0.0;
        for (int trial = 0; trial < 5; ++trial) {
            const WeightVector p = random_symmetric_unital(rng, d, -0.2, 0.3);
            const auto check = diagonal_r_check(p, chi);
            dev = std::max({dev, check.max_off_diagonal == 0.0 ? 0.0 : check.max_off_diagonal,
                            check.max_formula_deviation});
        }
        run.check("diagonal-r", "symmetric weights give a diagonal R matrix matching the formula",
                  d, dev, tol);
    } else {
        run.skip("diagonal-r", "symmetric weights give a diagonal R matrix matching the formula",
                 d, "requires odd d");
    }

    // Lambda(I) = (sum p) I for arbitrary signed weights; asserted at d = 4,
    // recorded without assertion at other even d.
    if (d % 2 == 0) {
        auto rng = run.stream(d, 23);
        double dev = 0.0;
        for (int trial = 0; trial < 50; ++trial) {
            WeightVector p = WeightVector::zero(d);
            for (auto& x : p.values) x = rng.uniform(-1.0, 1.0);
            const Matrix image = apply(hw_map(p, chi), identity(d));
            dev = std::max(dev, distance(image, p.sum() * identity(d)));
        }
        if (d == 4) {
            run.check("even-d-identity-weight-sum", "Lambda(I) = (sum p) I for d = 4", d, dev,
                      tol);
        } else {
            run.info("even-d-identity-weight-sum", "Lambda(I) = (sum p) I (recorded, not asserted)",
                     d, dev);
        }
    }
}

void run_d3_case_study_suite(ClaimRunner& run) {
    const int d = 3;
    const Chi chi = run.config.chi;
    const double tol = run.config.tolerance;

    {
        // Unitality iff on 200 signed draws: half built to satisfy the
        // conditions, half generic.
        auto rng = run.stream(d, 31);
        int disagreements = 0;
        for (int trial = 0; trial < 200; ++trial) {
            WeightVector p = WeightVector::zero(d);
            if (trial % 2 == 0) {
                p = random_symmetric_unital(rng, d, -0.3, 0.5);
            } else {
                for (auto& x : p.values) x = rng.uniform(-0.5, 0.5);
            }
            CaseStudyWeights w;
            std::copy(p.values.begin(), p.values.end(), w.p.begin());
            const auto report = d3_case_study(w, chi);
            const bool unital_measured = report.unital_deviation <= tol;
            if (report.unital != unital_measured) ++disagreements;
        }
        run.check("d3-unitality-iff",
                  "p1=p2, p3=p6, p4=p8, p5=p7, p0=1-2(p1+p3+p4+p5) iff the map is unital", d,
                  static_cast<double>(disagreements), 0.5);
    }

    {
        // CP iff sign conditions on unital-symmetric samples away from the
        // sign boundary.
        auto rng = run.stream(d, 32);
        int disagreements = 0;
        int accepted = 0;
        while (accepted < 200) {
            double q1 = rng.uniform(-0.3, 0.5), q3 = rng.uniform(-0.3, 0.5);
            double q4 = rng.uniform(-0.3, 0.5), q5 = rng.uniform(-0.3, 0.5);
            const double p0 = 1.0 - 2.0 * (q1 + q3 + q4 + q5);
            if (std::min({std::abs(q1), std::abs(q3), std::abs(q4), std::abs(q5),
                          std::abs(p0)}) < 1e-6)
                continue;
            ++accepted;
            CaseStudyWeights w{{p0, q1, q1, q3, q4, q5, q3, q5, q4}};
            const auto report = d3_case_study(w, chi);
            const bool cp_signs = p0 >= 0 && q1 >= 0 && q3 >= 0 && q4 >= 0 && q5 >= 0;
            if (report.completely_positive != cp_signs) ++disagreements;
        }
        run.check("d3-cp-iff", "unital map is CP iff p0, p1, p3, p4, p5 >= 0", d,
                  static_cast<double>(disagreements), 0.5);
    }

    {
        // Delta diagonal entries: lambda^(1..4) each repeated twice, laid out
        // by commuting family in row-major Q order.
        auto rng = run.stream(d, 33);
        double dev = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            const double q1 = rng.uniform(-0.3, 0.3), q3 = rng.uniform(-0.3, 0.3);
            const double q4 = rng.uniform(-0.3, 0.3), q5 = rng.uniform(-0.3, 0.3);
            const double p0 = 1.0 - 2.0 * (q1 + q3 + q4 + q5);
            CaseStudyWeights w{{p0, q1, q1, q3, q4, q5, q3, q5, q4}};
            const auto report = d3_case_study(w, chi);
            const double l1 = 1.0 - 3.0 * (q3 + q4 + q5);
            const double l2 = 1.0 - 3.0 * (q1 + q4 + q5);
            const double l3 = 1.0 - 3.0 * (q1 + q3 + q5);
            const double l4 = 1.0 - 3.0 * (q1 + q3 + q4);
            const double expected[8] = {l1, l1, l2, l3, l4, l2, l4, l3};
            dev = std::max(dev, report.delta_off_diagonal);
            for (int i = 0; i < 8; ++i)
                dev = std::max(dev, std::abs(report.delta_diagonal[i] - expected[i]));
        }
        run.check("d3-delta-eigenvalues",
                  "unital Delta is diagonal with lambda^(i) = 1 - 3(sum of three p's), each twice",
                  d, dev, 1e-12);
    }

    {
        const CaseStudyWeights reduction{{-1.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0,
                                          1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0}};
        WeightVector p = WeightVector::zero(d);
        std::copy(reduction.p.begin(), reduction.p.end(), p.values.begin());
        const SandwichMap map = hw_map(p, chi);
        double dev = 0.0;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                const Matrix unit = matrix_unit(d, i, j);
                const Matrix expected =
                    0.5 * (trace(unit) * identity(d) - unit);
                dev = std::max(dev, distance(apply(map, unit), expected));
            }
        const auto report = d3_case_study(reduction, chi);
        dev = std::max({dev, std::abs(report.gate.lhs - 1.0), std::abs(report.gate.rhs - 1.0)});
        if (!report.unital || report.completely_positive) dev = std::max(dev, 1.0);
        run.check("d3-reduction-map",
                  "weights (-1/3, 1/6 x8) give X -> (Tr(X) I - X)/2: unital, not CP, gate at the "
                  "boundary",
                  d, dev, 1e-12);
    }

    {
        // The statement's hypotheses need every |lambda^(i)| <= 1/2, i.e.
        // each sum of three weights in [1/6, 1/2]; sample near that region
        // so a healthy fraction of draws is applicable.
        auto rng = run.stream(d, 34);
        int violations = 0;
        int tested = 0;
        for (int trial = 0; trial < 500; ++trial) {
            const double q1 = rng.uniform(-0.05, 0.18), q3 = rng.uniform(-0.05, 0.18);
            const double q4 = rng.uniform(-0.05, 0.18), q5 = rng.uniform(-0.05, 0.18);
            const double p0 = 1.0 - 2.0 * (q1 + q3 + q4 + q5);
            CaseStudyWeights w{{p0, q1, q1, q3, q4, q5, q3, q5, q4}};
            const auto report = d3_case_study(w, chi);
            if (!report.two_positive.has_value()) continue;
            ++tested;
            if (!*report.two_positive) ++violations;
        }
        run.check("d3-two-positive",
                  "gate + same-sign lambda imply at least two of p1,p3,p4,p5 positive (tested " +
                      std::to_string(tested) + " instances)",
                  d, tested == 0 ? 1.0 : static_cast<double>(violations), 0.5);
    }
}

}  // namespace

VerificationReport run_verify(const SuiteConfig& config) {
    for (int d : config.dims) {
        if (d < 2) throw std::invalid_argument("run_verify: dimensions must be >= 2");
    }
    if (config.tolerance <= 0.0) throw std::invalid_argument("run_verify: tolerance must be > 0");

    VerificationReport report;
    report.config = config;
    ClaimRunner run{config, report};
    for (int d : config.dims) {
        run_algebra_suite(run, d);
        run_spectral_suite(run, d);
        run_commutation_suite(run, d);
        run_eigenvalue_suite(run, d);
        run_mub_suite(run, d);
        run_channel_suite(run, d);
        run_rmatrix_suite(run, d);
        if (d == 3) run_d3_case_study_suite(run);
    }
    return report;
}

ordered_json report_to_json(const VerificationReport& report) {
    ordered_json j;
    j["suite"] = "verify";
    j["config"] = {{"dims", report.config.dims},
                   {"tolerance", report.config.tolerance},
                   {"chi", chi_name(report.config.chi)},
                   {"seed", report.config.seed}};
    ordered_json claims = ordered_json::array();
    for (const auto& claim : report.claims) {
        ordered_json c;
        c["id"] = claim.id;
        c["statement"] = claim.statement;
        c["d"] = claim.d;
        c["status"] = claim.status;
        c["deviation"] = claim.deviation;
        if (claim.status == "pass" || claim.status == "fail") c["tolerance"] = claim.tolerance;
        if (!claim.reason.empty()) c["reason"] = claim.reason;
        claims.push_back(std::move(c));
    }
    j["claims"] = std::move(claims);
    j["summary"] = {{"total", report.claims.size()},
                    {"passed", report.passed},
                    {"failed", report.failed},
                    {"skipped", report.skipped}};
    return j;
}

WeightFile parse_weight_file(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("weight file: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("weight file: top level must be an object");
    if (!j.contains("d") || !j["d"].is_number_integer()) {
        throw std::invalid_argument("weight file: missing integer field \"d\"");
    }
    const int d = j["d"].get<int>();
    if (d < 2) throw std::invalid_argument("weight file: \"d\" must be >= 2");

    Chi chi = Chi::Plus;
    if (j.contains("chi")) {
        if (!j["chi"].is_string()) throw std::invalid_argument("weight file: \"chi\" must be a string");
        chi = parse_chi(j["chi"].get<std::string>());
    }

    WeightVector weights = WeightVector::zero(d);
    if (j.contains("weights")) {
        if (!j["weights"].is_array()) {
            throw std::invalid_argument("weight file: \"weights\" must be an array");
        }
        std::size_t entry = 0;
        for (const auto& item : j["weights"]) {
            if (!item.is_array() || item.size() != 3 || !item[0].is_number_integer() ||
                !item[1].is_number_integer() || !item[2].is_number()) {
                throw std::invalid_argument("weight file: weights[" + std::to_string(entry) +
                                            "] must be [k, l, value]");
            }
            const int k = item[0].get<int>();
            const int l = item[1].get<int>();
            if (k < 0 || k >= d || l < 0 || l >= d) {
                throw std::invalid_argument("weight file: weights[" + std::to_string(entry) +
                                            "] index out of range for d=" + std::to_string(d));
            }
            const double value = item[2].get<double>();
            if (!std::isfinite(value)) {
                throw std::invalid_argument("weight file: weights[" + std::to_string(entry) +
                                            "] value must be finite");
            }
            weights.at(k, l) = value;
            ++entry;
        }
    }
    return {std::move(weights), chi};
}

ordered_json case_study_d3_json(const CaseStudyReport& report) {
    ordered_json j;
    j["weights"] = report.weights.p;
    j["unital"] = report.unital;
    j["unital_deviation"] = report.unital_deviation;
    j["cp"] = report.completely_positive;
    j["min_choi_eigenvalue"] = report.min_choi_eigenvalue;
    j["delta_diagonal"] = report.delta_diagonal;
    j["delta_off_diagonal"] = report.delta_off_diagonal;
    j["gate"] = {{"lhs", report.gate.lhs}, {"rhs", report.gate.rhs}, {"holds", report.gate.holds}};
    if (report.two_positive.has_value()) {
        j["two_positive"] = *report.two_positive;
    } else {
        j["two_positive"] = nullptr;
    }
    return j;
}

ordered_json analyze_channel(const WeightFile& input) {
    const int d = input.weights.d;
    const SandwichMap map = hw_map(input.weights, input.chi);
    const auto cp = is_completely_positive(map);
    const RMatrix r = r_matrix(map, input.chi);
    const auto gate = positivity_sufficient(r.blocks, d, d);

    ordered_json j;
    j["suite"] = "channel";
    j["d"] = d;
    j["chi"] = chi_name(input.chi);
    j["weights"] = input.weights.values;
    j["unital_deviation"] = is_unital(map);
    j["unital"] = is_unital(map) <= 1e-10;
    j["trace_preserving_deviation"] = is_trace_preserving(map);
    j["cp"] = cp.completely_positive;
    j["min_choi_eigenvalue"] = cp.min_choi_eigenvalue;
    j["unitality_sufficient"] = unitality_sufficient(input.weights, 1e-10);
    j["r00"] = r.blocks.r00;
    j["t"] = r.blocks.t;
    j["s"] = r.blocks.s;
    j["gate"] = {{"lhs", gate.lhs}, {"rhs", gate.rhs}, {"holds", gate.holds}};
    if (d == 3) {
        CaseStudyWeights w;
        std::copy(input.weights.values.begin(), input.weights.values.end(), w.p.begin());
        j["case_study_d3"] = case_study_d3_json(d3_case_study(w, input.chi));
    }
    return j;
}

namespace {

ordered_json complex_to_json(const cxd& z) { return ordered_json::array({z.real(), z.imag()}); }

}  // namespace

ordered_json mub_report(int d, Chi chi) {
    const auto bases = mub_bases(d, chi);
    ordered_json j;
    j["suite"] = "mub";
    j["d"] = d;
    j["chi"] = chi_name(chi);
    ordered_json basis_list = ordered_json::array();
    for (const auto& basis : bases) {
        ordered_json vectors = ordered_json::array();
        for (std::size_t c = 0; c < basis.vectors.cols(); ++c) {
            ordered_json vec = ordered_json::array();
            for (std::size_t r = 0; r < basis.vectors.rows(); ++r)
                vec.push_back(complex_to_json(basis.vectors(r, c)));
            vectors.push_back(std::move(vec));
        }
        basis_list.push_back({{"label", basis.label}, {"vectors", std::move(vectors)}});
    }
    j["bases"] = std::move(basis_list);

    ordered_json pairs = ordered_json::array();
    for (std::size_t a = 0; a < bases.size(); ++a)
        for (std::size_t b = a + 1; b < bases.size(); ++b) {
            const Matrix overlap = dagger(bases[a].vectors) * bases[b].vectors;
            double dev = 0.0;
            for (std::size_t r = 0; r < overlap.rows(); ++r)
                for (std::size_t s = 0; s < overlap.cols(); ++s)
                    dev = std::max(dev, std::abs(std::norm(overlap(r, s)) - 1.0 / d));
            pairs.push_back({{"a", bases[a].label},
                             {"b", bases[b].label},
                             {"overlap_squared", 1.0 / d},
                             {"max_deviation", dev}});
        }
    j["unbiasedness"] = std::move(pairs);
    return j;
}

ordered_json rmatrix_report(const WeightFile& input) {
    const int d = input.weights.d;
    const RMatrix r = r_matrix(hw_map(input.weights, input.chi), input.chi);
    const auto verdict = unital_tp_characterize(r.blocks);
    const auto gate = positivity_sufficient(r.blocks, d, d);

    ordered_json j;
    j["suite"] = "rmatrix";
    j["d"] = d;
    j["chi"] = chi_name(input.chi);
    ordered_json rows = ordered_json::array();
    for (std::size_t b = 0; b < r.n; ++b) {
        ordered_json row = ordered_json::array();
        for (std::size_t a = 0; a < r.n; ++a) row.push_back(r.at(b, a));
        rows.push_back(std::move(row));
    }
    j["r"] = std::move(rows);
    j["r00"] = r.blocks.r00;
    j["t"] = r.blocks.t;
    j["s"] = r.blocks.s;
    j["unital"] = verdict.unital;
    j["trace_preserving"] = verdict.trace_preserving;
    j["gate"] = {{"lhs", gate.lhs}, {"rhs", gate.rhs}, {"holds", gate.holds}};
    return j;
}

}  // namespace hwmap
