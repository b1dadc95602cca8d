#include "qsc/report_json.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "qsc/registry.hpp"

namespace qsc::checks {

namespace {

CheckStatus status_from_string(const std::string& s) {
    if (s == "pass") return CheckStatus::pass;
    if (s == "fail") return CheckStatus::fail;
    if (s == "skipped-budget") return CheckStatus::skipped_budget;
    throw std::invalid_argument("unknown report status: " + s);
}

} // namespace

nlohmann::json report_to_json(const VerificationReport& report) {
    nlohmann::json j;
    j["id"] = report.id;
    j["status"] = to_string(report.status);
    j["checked_count"] = report.checked_count;
    j["bound"] = report.bound;
    if (report.first_counterexample) {
        const auto& ce = *report.first_counterexample;
        j["first_counterexample"] = {{"n", ce.n},
                                     {"observed", ce.observed.get_str()},
                                     {"expected", ce.expected.get_str()}};
    } else {
        j["first_counterexample"] = nullptr;
    }
    j["elapsed_ms"] = report.elapsed_ms;
    return j;
}

VerificationReport report_from_json(const nlohmann::json& j) {
    VerificationReport r;
    r.id = j.at("id").get<std::string>();
    r.status = status_from_string(j.at("status").get<std::string>());
    r.checked_count = j.at("checked_count").get<std::uint64_t>();
    r.bound = j.at("bound").get<std::uint64_t>();
    const auto& ce = j.at("first_counterexample");
    if (!ce.is_null()) {
        Counterexample c;
        c.n = ce.at("n").get<std::uint64_t>();
        c.observed = mpz_class(ce.at("observed").get<std::string>());
        c.expected = mpz_class(ce.at("expected").get<std::string>());
        r.first_counterexample = std::move(c);
    }
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    return r;
}

nlohmann::json report_file_json(const std::vector<VerificationReport>& reports,
                                const std::string& profile_name) {
    nlohmann::json j;
    j["schema"] = 1;
    j["profile"] = profile_name;
    j["reports"] = nlohmann::json::array();
    for (const auto& r : reports) j["reports"].push_back(report_to_json(r));
    return j;
}

MergeResult merge_report_files(const std::vector<nlohmann::json>& files) {
    MergeResult out;
    std::map<std::string, VerificationReport> best;
    for (const auto& file : files) {
        ++out.files;
        if (!file.contains("reports"))
            throw std::invalid_argument("report file lacks a 'reports' array");
        for (const auto& item : file.at("reports")) {
            VerificationReport r = report_from_json(item);
            auto it = best.find(r.id);
            if (it == best.end() || r.bound > it->second.bound ||
                (r.bound == it->second.bound && r.checked_count >= it->second.checked_count)) {
                best[r.id] = std::move(r);
            }
        }
    }
    // Canonical order: registry rank first, unknown ids after, alphabetical.
    std::map<std::string, std::size_t> rank;
    const auto& reg = registry();
    for (std::size_t i = 0; i < reg.size(); ++i) rank[reg[i].id] = i;
    std::vector<VerificationReport> merged;
    merged.reserve(best.size());
    for (auto& [id, r] : best) merged.push_back(std::move(r));
    std::sort(merged.begin(), merged.end(),
              [&rank](const VerificationReport& a, const VerificationReport& b) {
                  auto ra = rank.count(a.id) ? rank.at(a.id) : rank.size();
                  auto rb = rank.count(b.id) ? rank.at(b.id) : rank.size();
                  if (ra != rb) return ra < rb;
                  return a.id < b.id;
              });
    for (const auto& r : merged) {
        switch (r.status) {
            case CheckStatus::pass: ++out.pass; break;
            case CheckStatus::fail: ++out.fail; break;
            case CheckStatus::skipped_budget: ++out.skipped; break;
        }
    }
    out.merged = std::move(merged);
    return out;
}

} // namespace qsc::checks
