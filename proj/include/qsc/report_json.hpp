#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qsc/checks.hpp"

namespace qsc::checks {

/// Fixed report schema (schema: 1): {id, status, checked_count, bound,
/// first_counterexample: {n, observed, expected} | null, elapsed_ms}.
/// Counterexample values are decimal strings (they can exceed 2^53).
nlohmann::json report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);

nlohmann::json report_file_json(const std::vector<VerificationReport>& reports,
                                const std::string& profile_name);

struct MergeResult {
    std::vector<VerificationReport> merged; // canonical registry order
    std::size_t files = 0;
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skipped = 0;
};

/// Merges report files; per id the report with the larger bound wins
/// (ties: larger checked_count, then the later file).
MergeResult merge_report_files(const std::vector<nlohmann::json>& files);

} // namespace qsc::checks
