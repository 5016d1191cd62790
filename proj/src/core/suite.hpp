// Copyright (c) 2026 hwmap developers
// SPDX-License-Identifier: Apache-2.0

#ifndef HWMAP_CORE_SUITE_HPP
#define HWMAP_CORE_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "core/rmatrix.hpp"

#include <json.hpp>

namespace hwmap {

using ordered_json = nlohmann::ordered_json;

struct SuiteConfig {
    std::vector<int> dims{2, 3, 4, 5, 7};
    double tolerance = 1e-10;
    Chi chi = Chi::Plus;
    std::uint64_t seed = 0;
};

struct ClaimRecord {
    std::string id;
    std::string statement;
    int d;
    std::string status;  // "pass" | "fail" | "skip" | "info"
    double deviation = 0.0;
    double tolerance = 0.0;
    std::string reason;  // set for skips
};

struct VerificationReport {
    SuiteConfig config;
    std::vector<ClaimRecord> claims;
    int passed = 0, failed = 0, skipped = 0;

    bool all_passed() const { return failed == 0; }
};

/// Run every claim suite for each configured dimension. Claims whose
/// preconditions (primality, parity) do not hold are recorded as skipped.
VerificationReport run_verify(const SuiteConfig& config);

ordered_json report_to_json(const VerificationReport& report);

/// Weight file: {"d": int, "chi": "+"|"-", "weights": [[k, l, value], ...]}.
/// Missing indices default to 0. Throws std::invalid_argument with a field
/// diagnostic on malformed input.
struct WeightFile {
    WeightVector weights;
    Chi chi;
};
WeightFile parse_weight_file(const std::string& text);

/// Analysis of a user-supplied weight vector: unitality, trace preservation,
/// complete positivity, R-matrix blocks, positivity gate, and (for d = 3)
/// the full case-study report.
ordered_json analyze_channel(const WeightFile& input);

/// Basis vectors and the unbiasedness table for odd prime d.
ordered_json mub_report(int d, Chi chi);

/// Full R matrix with block decomposition.
ordered_json rmatrix_report(const WeightFile& input);

ordered_json case_study_d3_json(const CaseStudyReport& report);

const char* chi_name(Chi chi);
Chi parse_chi(const std::string& s);

}  // namespace hwmap

#endif
