// Copyright (c) 2026 hwmap developers
// SPDX-License-Identifier: Apache-2.0

#include "hwmap/hwmap.h"

#include <new>
#include <string>

#include "core/suite.hpp"

struct hwmap_result {
    std::string json;
    std::string error;
};

namespace {

using hwmap::ordered_json;

void deliver(hwmap_result** out, hwmap_result&& value) {
    if (out == nullptr) return;
    *out = new (std::nothrow) hwmap_result(std::move(value));
}

// Run fn, which returns {json, status}; translate exceptions to input errors.
template <typename Fn>
int guarded(hwmap_result** out, Fn&& fn) {
    if (out != nullptr) *out = nullptr;
    try {
        auto [doc, status] = fn();
        deliver(out, {doc.dump(2), ""});
        return status;
    } catch (const std::invalid_argument& e) {
        deliver(out, {"", e.what()});
        return HWMAP_ERR_INPUT;
    } catch (const std::exception& e) {
        deliver(out, {"", e.what()});
        return HWMAP_ERR_INPUT;
    }
}

hwmap::SuiteConfig parse_config(const char* config_json) {
    hwmap::SuiteConfig config;
    if (config_json == nullptr || *config_json == '\0') return config;
    ordered_json j;
    try {
        j = ordered_json::parse(config_json);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");
    if (j.contains("dims")) {
        if (!j["dims"].is_array() || j["dims"].empty()) {
            throw std::invalid_argument("config: \"dims\" must be a non-empty array");
        }
        config.dims.clear();
        for (const auto& item : j["dims"]) {
            if (!item.is_number_integer() || item.get<int>() < 2) {
                throw std::invalid_argument("config: \"dims\" entries must be integers >= 2");
            }
            config.dims.push_back(item.get<int>());
        }
    }
    if (j.contains("tolerance")) {
        if (!j["tolerance"].is_number() || j["tolerance"].get<double>() <= 0.0) {
            throw std::invalid_argument("config: \"tolerance\" must be a positive number");
        }
        config.tolerance = j["tolerance"].get<double>();
    }
    if (j.contains("chi")) {
        if (!j["chi"].is_string()) throw std::invalid_argument("config: \"chi\" must be a string");
        config.chi = hwmap::parse_chi(j["chi"].get<std::string>());
    }
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer()) {
            throw std::invalid_argument("config: \"seed\" must be an integer");
        }
        config.seed = j["seed"].get<std::uint64_t>();
    }
    return config;
}

hwmap::Chi parse_chi_arg(const char* chi) {
    if (chi == nullptr || *chi == '\0') return hwmap::Chi::Plus;
    return hwmap::parse_chi(chi);
}

}  // namespace

extern "C" {

const char* hwmap_version(void) { return "1.0.0"; }

int hwmap_verify(const char* config_json, hwmap_result** out) {
    return guarded(out, [&] {
        const auto config = parse_config(config_json);
        const auto report = hwmap::run_verify(config);
        return std::pair{hwmap::report_to_json(report),
                         report.all_passed() ? HWMAP_OK : HWMAP_ERR_FAILURE};
    });
}

int hwmap_channel(const char* weights_json, hwmap_result** out) {
    return guarded(out, [&] {
        if (weights_json == nullptr) throw std::invalid_argument("weight file: null input");
        const auto input = hwmap::parse_weight_file(weights_json);
        return std::pair{hwmap::analyze_channel(input), HWMAP_OK};
    });
}

int hwmap_mub(int d, const char* chi, hwmap_result** out) {
    return guarded(out, [&] {
        return std::pair{hwmap::mub_report(d, parse_chi_arg(chi)), HWMAP_OK};
    });
}

int hwmap_rmatrix(const char* weights_json, hwmap_result** out) {
    return guarded(out, [&] {
        if (weights_json == nullptr) throw std::invalid_argument("weight file: null input");
        const auto input = hwmap::parse_weight_file(weights_json);
        return std::pair{hwmap::rmatrix_report(input), HWMAP_OK};
    });
}

int hwmap_case_study_d3(const double p[9], const char* chi, hwmap_result** out) {
    return guarded(out, [&] {
        if (p == nullptr) throw std::invalid_argument("case study: null weights");
        hwmap::CaseStudyWeights w;
        for (int i = 0; i < 9; ++i) w.p[i] = p[i];
        const auto report = hwmap::d3_case_study(w, parse_chi_arg(chi));
        return std::pair{hwmap::case_study_d3_json(report), HWMAP_OK};
    });
}

const char* hwmap_result_json(const hwmap_result* result) {
    return result == nullptr ? "" : result->json.c_str();
}

const char* hwmap_result_error(const hwmap_result* result) {
    return result == nullptr ? "" : result->error.c_str();
}

void hwmap_result_free(hwmap_result* result) { delete result; }

}  // extern "C"
