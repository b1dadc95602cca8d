#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qsc/checks.hpp"

namespace qsc::checks {

/// One registered verifiable claim. Declaration order in the registry is
/// the canonical report order.
struct TheoremCheck {
    std::string id;
    CheckKind kind;
    std::string statement;      // the claim, as printed by `qsc list`
    std::string default_bounds; // human summary of default-profile bounds
    bool informational = false; // reported, never gates the exit code
    Profile promised_from = Profile::quick; // profile from which a budget skip fails
    std::function<VerificationReport(Profile)> run;
};

const std::vector<TheoremCheck>& registry();

const TheoremCheck* find_check(const std::string& id);

/// Glob with '*' and '?' over check ids.
bool glob_match(const std::string& pattern, const std::string& text);
std::vector<const TheoremCheck*> match_checks(const std::string& pattern);

/// Runs the given checks (thread count from the caller; 1 = sequential)
/// and returns reports in canonical registry order.
std::vector<VerificationReport> run_checks(const std::vector<const TheoremCheck*>& list,
                                           Profile profile, unsigned threads = 1);

/// Convenience: match + run.
std::vector<VerificationReport> run_registry(const std::string& pattern, Profile profile,
                                             unsigned threads = 1);

/// Exit verdict for a verification run: 0 when every non-informational
/// check passes (a budget skip fails only from the profile that promises
/// the check), 1 otherwise.
int verify_exit_code(const std::vector<VerificationReport>& reports, Profile profile);

} // namespace qsc::checks
