// Copyright (c) 2026 hwmap developers
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. All math goes through the C API; this file only
// handles argument parsing, file IO, and table rendering.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hwmap/hwmap.h"

namespace {

using nlohmann::ordered_json;

struct ResultDeleter {
    void operator()(hwmap_result* r) const { hwmap_result_free(r); }
};
using ResultPtr = std::unique_ptr<hwmap_result, ResultDeleter>;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CLI::ValidationError("--weights", "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int emit(const ResultPtr& result, int status, const std::string& out_path,
         const std::string& format,
         const std::function<void(const ordered_json&)>& table_printer) {
    if (status == HWMAP_ERR_INPUT) {
        std::cerr << "error: " << hwmap_result_error(result.get()) << "\n";
        return HWMAP_ERR_INPUT;
    }
    const std::string json_text = hwmap_result_json(result.get());
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return HWMAP_ERR_INPUT;
        }
        out << json_text << "\n";
    }
    if (format == "json") {
        if (out_path.empty()) std::cout << json_text << "\n";
    } else {
        table_printer(ordered_json::parse(json_text));
    }
    return status;
}

void print_verify_table(const ordered_json& report) {
    std::printf("%-28s %3s  %-6s %12s  %s\n", "claim", "d", "status", "deviation", "note");
    for (const auto& claim : report["claims"]) {
        const std::string status = claim["status"].get<std::string>();
        std::string note;
        if (claim.contains("reason")) note = claim["reason"].get<std::string>();
        std::printf("%-28s %3d  %-6s %12.3e  %s\n", claim["id"].get<std::string>().c_str(),
                    claim["d"].get<int>(), status.c_str(), claim["deviation"].get<double>(),
                    note.c_str());
    }
    const auto& s = report["summary"];
    std::printf("total %zu: %d passed, %d failed, %d skipped\n",
                s["total"].get<std::size_t>(), s["passed"].get<int>(), s["failed"].get<int>(),
                s["skipped"].get<int>());
}

void print_channel_table(const ordered_json& j) {
    std::printf("d = %d, chi = %s\n", j["d"].get<int>(), j["chi"].get<std::string>().c_str());
    std::printf("unital:             %s (deviation %.3e)\n", j["unital"].get<bool>() ? "yes" : "no",
                j["unital_deviation"].get<double>());
    std::printf("trace preserving:   deviation %.3e\n",
                j["trace_preserving_deviation"].get<double>());
    std::printf("completely positive: %s (min Choi eigenvalue %.6f)\n",
                j["cp"].get<bool>() ? "yes" : "no", j["min_choi_eigenvalue"].get<double>());
    std::printf("R00 = %.6f, positivity gate lhs %.6f <= rhs %.6f: %s\n",
                j["r00"].get<double>(), j["gate"]["lhs"].get<double>(),
                j["gate"]["rhs"].get<double>(), j["gate"]["holds"].get<bool>() ? "holds" : "open");
}

void print_mub_table(const ordered_json& j) {
    std::printf("d = %d, chi = %s, %zu bases\n", j["d"].get<int>(),
                j["chi"].get<std::string>().c_str(), j["bases"].size());
    std::printf("%4s %4s %16s %16s\n", "a", "b", "|<a|b>|^2", "max deviation");
    for (const auto& pair : j["unbiasedness"]) {
        std::printf("%4d %4d %16.6f %16.3e\n", pair["a"].get<int>(), pair["b"].get<int>(),
                    pair["overlap_squared"].get<double>(), pair["max_deviation"].get<double>());
    }
}

void print_rmatrix_table(const ordered_json& j) {
    std::printf("d = %d, chi = %s\n", j["d"].get<int>(), j["chi"].get<std::string>().c_str());
    for (const auto& row : j["r"]) {
        for (const auto& v : row) std::printf("%10.5f ", v.get<double>());
        std::printf("\n");
    }
    std::printf("unital: %s, trace preserving: %s\n", j["unital"].get<bool>() ? "yes" : "no",
                j["trace_preserving"].get<bool>() ? "yes" : "no");
    std::printf("positivity gate lhs %.6f <= rhs %.6f: %s\n", j["gate"]["lhs"].get<double>(),
                j["gate"]["rhs"].get<double>(), j["gate"]["holds"].get<bool>() ? "holds" : "open");
}

void print_case_study_table(const ordered_json& j) {
    std::printf("weights:");
    for (const auto& v : j["weights"]) std::printf(" %.6f", v.get<double>());
    std::printf("\nunital: %s (deviation %.3e)\n", j["unital"].get<bool>() ? "yes" : "no",
                j["unital_deviation"].get<double>());
    std::printf("completely positive: %s (min Choi eigenvalue %.6f)\n",
                j["cp"].get<bool>() ? "yes" : "no", j["min_choi_eigenvalue"].get<double>());
    std::printf("Delta diagonal:");
    for (const auto& v : j["delta_diagonal"]) std::printf(" %.6f", v.get<double>());
    std::printf("\ngate 2||Delta|| = %.6f <= 1: %s\n", j["gate"]["lhs"].get<double>(),
                j["gate"]["holds"].get<bool>() ? "holds" : "open");
    if (j["two_positive"].is_null()) {
        std::printf("two-positive statement: not applicable\n");
    } else {
        std::printf("two-positive statement: %s\n",
                    j["two_positive"].get<bool>() ? "satisfied" : "violated");
    }
}

double default_tolerance() {
    if (const char* env = std::getenv("HWMAP_TOLERANCE")) {
        try {
            const double v = std::stod(env);
            if (v > 0.0) return v;
        } catch (...) {
        }
        std::cerr << "warning: ignoring invalid HWMAP_TOLERANCE\n";
    }
    return 1e-10;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heisenberg-Weyl observable map toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(hwmap_version()));

    std::string out_path, format = "json", chi = "+", weights_path;
    std::vector<int> dims{2, 3, 4, 5, 7};
    double tol = default_tolerance();
    std::uint64_t seed = 0;
    int d = 3;

    auto add_output_flags = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "Write the JSON report to this file");
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"json", "table"}))
            ->capture_default_str();
    };

    auto* verify = app.add_subcommand("verify", "Run the full verification suite");
    verify->add_option("--dims", dims, "Dimensions to verify")
        ->delimiter(',')
        ->capture_default_str();
    verify->add_option("--tol", tol, "Numerical tolerance (overrides HWMAP_TOLERANCE)")
        ->capture_default_str();
    verify->add_option("--chi", chi, "Sign convention, + or -")->capture_default_str();
    verify->add_option("--seed", seed, "Random seed for sampled claims")->capture_default_str();
    add_output_flags(verify);

    auto* channel = app.add_subcommand("channel", "Analyze the map built from a weight file");
    channel->add_option("--weights", weights_path, "JSON weight file")->required();
    add_output_flags(channel);

    auto* mub = app.add_subcommand("mub", "Mutually unbiased bases for odd prime d");
    mub->add_option("--d", d, "Dimension (odd prime)")->capture_default_str();
    mub->add_option("--chi", chi, "Sign convention, + or -")->capture_default_str();
    add_output_flags(mub);

    auto* rmatrix = app.add_subcommand("rmatrix", "Transfer matrix of a weight-file map");
    rmatrix->add_option("--weights", weights_path, "JSON weight file")->required();
    add_output_flags(rmatrix);

    auto* case_study =
        app.add_subcommand("case-study-d3", "Full d = 3 analysis of a weight-file map");
    case_study->add_option("--weights", weights_path, "JSON weight file with d = 3")->required();
    case_study->add_option("--chi", chi, "Sign convention, + or -")->capture_default_str();
    add_output_flags(case_study);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : HWMAP_ERR_INPUT;
    }

    try {
        hwmap_result* raw = nullptr;
        if (verify->parsed()) {
            ordered_json config;
            config["dims"] = dims;
            config["tolerance"] = tol;
            config["chi"] = chi;
            config["seed"] = seed;
            const int status = hwmap_verify(config.dump().c_str(), &raw);
            return emit(ResultPtr(raw), status, out_path, format, print_verify_table);
        }
        if (channel->parsed()) {
            const int status = hwmap_channel(read_file(weights_path).c_str(), &raw);
            return emit(ResultPtr(raw), status, out_path, format, print_channel_table);
        }
        if (mub->parsed()) {
            const int status = hwmap_mub(d, chi.c_str(), &raw);
            return emit(ResultPtr(raw), status, out_path, format, print_mub_table);
        }
        if (rmatrix->parsed()) {
            const int status = hwmap_rmatrix(read_file(weights_path).c_str(), &raw);
            return emit(ResultPtr(raw), status, out_path, format, print_rmatrix_table);
        }
        // case-study-d3: reuse the weight-file format, restricted to d = 3.
        const std::string text = read_file(weights_path);
        const ordered_json parsed = ordered_json::parse(text);
        if (!parsed.is_object() || !parsed.contains("d") || parsed["d"].get<int>() != 3) {
            std::cerr << "error: case-study-d3 requires a weight file with \"d\": 3\n";
            return HWMAP_ERR_INPUT;
        }
        double p[9] = {};
        if (parsed.contains("weights")) {
            for (const auto& item : parsed["weights"]) {
                const int k = item[0].get<int>(), l = item[1].get<int>();
                if (k < 0 || k > 2 || l < 0 || l > 2) {
                    std::cerr << "error: weight index out of range for d = 3\n";
                    return HWMAP_ERR_INPUT;
                }
                p[k * 3 + l] = item[2].get<double>();
            }
        }
        const int status = hwmap_case_study_d3(p, chi.c_str(), &raw);
        return emit(ResultPtr(raw), status, out_path, format, print_case_study_table);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return HWMAP_ERR_INPUT;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return HWMAP_ERR_INPUT;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return HWMAP_ERR_INPUT;
    }
}
