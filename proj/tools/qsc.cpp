#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsc/counting.hpp"
#include "qsc/registry.hpp"
#include "qsc/report_json.hpp"
#include "qsc/series.hpp"

namespace {

using namespace qsc;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

constexpr std::size_t kModularCoeffLimit = 2000000;
constexpr std::size_t kExactCoeffLimit = 50000;

unsigned thread_count_from_env() {
    const char* raw = std::getenv("QSC_THREADS");
    if (!raw) return 1;
    long v = std::strtol(raw, nullptr, 10);
    return v >= 1 ? static_cast<unsigned>(v) : 1;
}

struct OutputTarget {
    std::string path; // empty = stdout
    int write(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            return kExitOk;
        }
        std::ofstream os(path, std::ios::binary);
        if (!os) {
            std::cerr << "qsc: cannot open output file " << path << "\n";
            return kExitUsage;
        }
        os << text;
        return kExitOk;
    }
};

// --- coeff -------------------------------------------------------------------

struct CoeffConfig {
    std::string fn = "op";
    unsigned k = 1;
    std::uint64_t limit = 0;
    std::uint64_t modulus = 0; // 0 = exact
    std::string format = "text";
    OutputTarget out;
};

int cmd_coeff(const CoeffConfig& cfg) {
    const bool modular = cfg.modulus != 0;
    const std::size_t cap = modular ? kModularCoeffLimit : kExactCoeffLimit;
    if (cfg.limit > cap) {
        std::cerr << "qsc coeff: limit " << cfg.limit << " exceeds the "
                  << (modular ? "modular" : "exact") << " budget " << cap
                  << (modular ? "" : " (use --mod for longer tables)") << "\n";
        return kExitBudget;
    }
    CoefficientRing ring = modular
                               ? CoefficientRing::modular(static_cast<std::uint32_t>(cfg.modulus))
                               : CoefficientRing::exact();
    std::shared_ptr<const Series> values;
    try {
        if (cfg.fn == "op")
            values = counting::overpartition_series(cfg.k, ring, cfg.limit).values;
        else
            values = counting::rk_series(cfg.k, ring, cfg.limit).values;
    } catch (const budget_error& e) {
        std::cerr << "qsc coeff: " << e.what() << "\n";
        return kExitBudget;
    }

    std::ostringstream os;
    if (cfg.format == "json") {
        nlohmann::json j;
        j["schema"] = 1;
        j["fn"] = cfg.fn;
        j["k"] = cfg.k;
        if (modular)
            j["modulus"] = cfg.modulus;
        else
            j["modulus"] = nullptr;
        auto rows = nlohmann::json::array();
        for (std::uint64_t n = 0; n <= cfg.limit; ++n)
            rows.push_back({n, values->coeff(n).get_str()});
        j["rows"] = std::move(rows);
        os << j.dump(2) << "\n";
    } else {
        if (cfg.format == "csv") os << "n,value\n";
        for (std::uint64_t n = 0; n <= cfg.limit; ++n)
            os << n << "," << values->coeff(n).get_str() << "\n";
    }
    return cfg.out.write(os.str());
}

// --- verify ------------------------------------------------------------------

std::string render_counterexample(const checks::Counterexample& ce) {
    return "n=" + std::to_string(ce.n) + " observed=" + ce.observed.get_str() +
           " expected=" + ce.expected.get_str();
}

// Text renderings stay free of wall-clock fields so byte-for-byte
// determinism holds; elapsed_ms lives in the JSON schema only.
std::string render_reports_text(const std::vector<checks::VerificationReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        const checks::TheoremCheck* chk = checks::find_check(r.id);
        os << r.id << "  " << to_string(r.status) << "  checked=" << r.checked_count
           << "  bound=" << r.bound;
        if (chk && chk->informational) os << "  [informational]";
        os << "\n";
        if (r.first_counterexample)
            os << "    counterexample: " << render_counterexample(*r.first_counterexample)
               << "\n";
        if (!r.detail.empty()) os << "    " << r.detail << "\n";
    }
    return os.str();
}

std::string render_reports_csv(const std::vector<checks::VerificationReport>& reports) {
    std::ostringstream os;
    os << "id,status,checked_count,bound,counterexample_n,observed,expected\n";
    for (const auto& r : reports) {
        os << r.id << "," << to_string(r.status) << "," << r.checked_count << "," << r.bound;
        if (r.first_counterexample) {
            const auto& ce = *r.first_counterexample;
            os << "," << ce.n << "," << ce.observed.get_str() << "," << ce.expected.get_str();
        } else {
            os << ",,,";
        }
        os << "\n";
    }
    return os.str();
}

struct VerifyConfig {
    bool all = false;
    std::string filter;
    std::string profile = "default";
    std::string format = "text";
    OutputTarget out;
};

int cmd_verify(const VerifyConfig& cfg) {
    auto profile = checks::profile_from_string(cfg.profile);
    if (!profile) {
        std::cerr << "qsc verify: unknown profile " << cfg.profile << "\n";
        return kExitUsage;
    }
    std::string pattern = cfg.all ? std::string("*") : cfg.filter;
    auto matched = checks::match_checks(pattern);
    if (matched.empty()) {
        std::cerr << "qsc verify: no registered check matches '" << pattern << "'\n";
        return kExitUsage;
    }
    auto reports = checks::run_checks(matched, *profile, thread_count_from_env());

    std::string text;
    if (cfg.format == "json")
        text = checks::report_file_json(reports, cfg.profile).dump(2) + "\n";
    else if (cfg.format == "csv")
        text = render_reports_csv(reports);
    else
        text = render_reports_text(reports);
    int rc = cfg.out.write(text);
    if (rc != kExitOk) return rc;
    return checks::verify_exit_code(reports, *profile) ? kExitVerifyFailed : kExitOk;
}

// --- list / report -------------------------------------------------------------

int cmd_list(const OutputTarget& out) {
    std::ostringstream os;
    for (const auto& c : checks::registry()) {
        os << c.id << "  [" << to_string(c.kind) << "]";
        if (c.informational) os << "  [informational]";
        os << "\n    " << c.statement << "\n    default bounds: " << c.default_bounds << "\n";
    }
    return out.write(os.str());
}

int cmd_report(const std::vector<std::string>& paths, const std::string& format,
               const OutputTarget& out) {
    std::vector<nlohmann::json> files;
    for (const auto& path : paths) {
        std::ifstream is(path);
        if (!is) {
            std::cerr << "qsc report: cannot read " << path << "\n";
            return kExitUsage;
        }
        try {
            nlohmann::json j;
            is >> j;
            files.push_back(std::move(j));
        } catch (const std::exception& e) {
            std::cerr << "qsc report: " << path << ": " << e.what() << "\n";
            return kExitUsage;
        }
    }
    checks::MergeResult merged;
    try {
        merged = checks::merge_report_files(files);
    } catch (const std::exception& e) {
        std::cerr << "qsc report: " << e.what() << "\n";
        return kExitUsage;
    }

    std::ostringstream os;
    if (format == "json") {
        nlohmann::json j;
        j["schema"] = 1;
        j["files"] = merged.files;
        j["summary"] = {{"pass", merged.pass}, {"fail", merged.fail}, {"skipped", merged.skipped}};
        j["reports"] = nlohmann::json::array();
        for (const auto& r : merged.merged) j["reports"].push_back(checks::report_to_json(r));
        os << j.dump(2) << "\n";
    } else {
        os << "merged " << merged.merged.size() << " report(s) from " << merged.files
           << " file(s): pass=" << merged.pass << " fail=" << merged.fail
           << " skipped=" << merged.skipped << "\n";
        os << render_reports_text(merged.merged);
    }
    return out.write(os.str());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-series congruence toolkit"};
    app.require_subcommand(1);

    CoeffConfig coeff;
    auto* coeff_cmd = app.add_subcommand("coeff", "print a coefficient table");
    coeff_cmd->add_option("--fn", coeff.fn, "function: op (overpartition k-tuples) or rk (sums of squares)")
        ->check(CLI::IsMember({"op", "rk"}))
        ->required();
    coeff_cmd->add_option("--k", coeff.k, "tuple size / number of squares")->required();
    coeff_cmd->add_option("--limit", coeff.limit, "largest n to print")->required();
    coeff_cmd->add_option("--mod", coeff.modulus, "compute residues mod M instead of exact values");
    coeff_cmd->add_option("--format", coeff.format, "text | csv | json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    coeff_cmd->add_option("--out", coeff.out.path, "write to file instead of stdout");

    VerifyConfig verify;
    auto* verify_cmd = app.add_subcommand("verify", "run registered theorem checks");
    verify_cmd->add_flag("--all", verify.all, "run every registered check");
    verify_cmd->add_option("--filter", verify.filter, "glob over check ids, e.g. 'T2.*'");
    verify_cmd->add_option("--profile", verify.profile, "quick | default | deep")
        ->check(CLI::IsMember({"quick", "default", "deep"}));
    verify_cmd->add_option("--format", verify.format, "text | csv | json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    verify_cmd->add_option("--out", verify.out.path, "write to file instead of stdout");

    OutputTarget list_out;
    auto* list_cmd = app.add_subcommand("list", "list registered checks with statements");
    list_cmd->add_option("--out", list_out.path, "write to file instead of stdout");

    std::vector<std::string> report_paths;
    std::string report_format = "text";
    OutputTarget report_out;
    auto* report_cmd = app.add_subcommand("report", "merge JSON report files");
    report_cmd->add_option("files", report_paths, "report files to merge");
    report_cmd->add_option("--format", report_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    report_cmd->add_option("--out", report_out.path, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (coeff_cmd->parsed()) return cmd_coeff(coeff);
        if (verify_cmd->parsed()) {
            if (verify.all == !verify.filter.empty()) {
                std::cerr << "qsc verify: pass exactly one of --all or --filter\n";
                return kExitUsage;
            }
            return cmd_verify(verify);
        }
        if (list_cmd->parsed()) return cmd_list(list_out);
        if (report_cmd->parsed()) return cmd_report(report_paths, report_format, report_out);
    } catch (const budget_error& e) {
        std::cerr << "qsc: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "qsc: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "qsc: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitUsage;
}
