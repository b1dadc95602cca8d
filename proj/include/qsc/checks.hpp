#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qsc/counting.hpp"
#include "qsc/series.hpp"
#include "qsc/theta.hpp"

namespace qsc::checks {

enum class CheckKind {
    progression_divisibility,
    pointwise_relation,
    series_identity,
    recurrence,
    iteration_coefficient,
    density_count,
    tightness,
};

enum class CheckStatus { pass, fail, skipped_budget };

enum class Profile { quick, standard, deep }; // CLI names: quick | default | deep

const char* to_string(CheckKind kind);
const char* to_string(CheckStatus status);
const char* to_string(Profile profile);
std::optional<Profile> profile_from_string(const std::string& name);

/// Main coefficient-table truncation per profile.
std::size_t table_budget(Profile profile);
/// Deep-profile budget for the p̄3 mod 7 table (reaches 7*3^11 = 1240029).
std::size_t deep_mod7_budget();

struct Counterexample {
    std::uint64_t n = 0;
    mpz_class observed;
    mpz_class expected;

    bool operator==(const Counterexample&) const = default;
};

struct VerificationReport {
    std::string id;
    CheckStatus status = CheckStatus::pass;
    std::uint64_t checked_count = 0;
    std::uint64_t bound = 0; // largest index / truncation actually verified
    std::optional<Counterexample> first_counterexample;
    std::int64_t elapsed_ms = 0;
    /// Deterministic free text naming the verification legs that ran
    /// (text reports only; not part of the fixed JSON schema).
    std::string detail;
};

// --- building blocks --------------------------------------------------------

/// Arithmetic progression divisibility claim M | p̄3(step*n + offset),
/// scanned over n_from <= n with indices inside the table.
struct ProgressionCheck {
    std::uint64_t step = 1;
    std::uint64_t offset = 0;
    std::uint64_t modulus = 2;
    std::uint64_t n_from = 0;
    std::uint64_t coprime_to = 0; // nonzero: skip n with gcd(n, coprime_to) > 1
};

struct ScanOutcome {
    std::uint64_t checked = 0;
    std::uint64_t max_index = 0;
    std::optional<Counterexample> violation;
};

/// Scans the progression against a modular table whose modulus is a
/// multiple of pc.modulus. n_max is inclusive; indices beyond
/// min(table trunc, index_limit) are not scanned (callers account for the
/// clipping). index_limit keeps scan bounds profile-determined even when
/// the memo hands back a longer table.
ScanOutcome scan_progression(const Series& table, const ProgressionCheck& pc,
                             std::uint64_t n_max,
                             std::uint64_t index_limit = ~std::uint64_t(0));

/// Re-checks up to `samples` scanned members with index <= 400 against the
/// exact product-DP oracle (independent route). Returns a discrepancy as a
/// counterexample keyed by the index.
std::optional<Counterexample> oracle_spot_check(const Series& table, const ProgressionCheck& pc,
                                                std::uint64_t n_max, unsigned samples);

/// Reduces a modular table into the divisor ring M (table modulus must be
/// a multiple of M).
Series residue_series(const Series& table, std::uint32_t m, std::size_t trunc);

/// Named pointwise relations between p̄3 coefficients and r_k tables.
enum class PointwiseRelation {
    p3_r3_mod7,            // p̄3(7n) == (-1)^n r3(n) (mod 7), n >= 1
    p3_r7_mod11,           // p̄3(11n) == (-1)^n r7(n) (mod 11), n >= 0
    p3_four_power_mod7,    // p̄3(7*4^(a+1) n) == (-1)^n p̄3(7n) (mod 7)
    p3_seven_powers_mod7,  // p̄3(7^4 n) == p̄3(7^2 n) (mod 7)
    p3_eleven_cubed_mod11, // p̄3(11^3 n) == p̄3(11 n) (mod 11)
};

/// Evaluates both sides of the relation for every n in the statement's
/// range (from 1 for p3_r3_mod7, from 0 otherwise) with indices clipped
/// to index_budget. alpha parametrizes p3_four_power_mod7.
ScanOutcome verify_pointwise(PointwiseRelation rel, std::uint64_t n_max,
                             std::uint64_t index_budget, unsigned alpha = 0);

/// Dissection congruence identities: LHS is the signed dissected p̄3
/// series, RHS the stated theta quotient. Moduli are canonicalized to
/// the integers 72 / 144 / 288 (and 7 for the mod-7 identity).
enum class CongruenceIdentity {
    p3thm1_3n,   // sum p̄3(3n)(-q)^n   == phi(q^3)/phi(q)^4            (mod 72)
    p3thm1_3n1,  // sum p̄3(3n+1)(-q)^n == 6 phi(q^3)^4 B(-q)/phi(q)^8  (mod 144)
    p3thm1_3n2,  // sum p̄3(3n+2)(-q)^n == 24 phi(q^3)^3 B(-q)^2/phi(q)^8 (mod 288)
    p3thm2_even, // sum p̄3(3^2a n)(-q)^n == phi(q^3)^4/phi(q)^7        (mod 72)
    p3thm2_odd,  // sum p̄3(3^(2a+1) n)(-q)^n == phi(q^3)^5/phi(q)^8    (mod 72)
    mod7eq,      // sum p̄3(7n)(-q)^n == phi(q)^3                       (mod 7)
};

/// Compares LHS and RHS coefficientwise to the given truncation; builds
/// the p̄3 table it needs (p3thm2 instances reach 3^(2a+1) * trunc).
/// alpha parametrizes the p3thm2 identities.
ScanOutcome verify_series_identity(CongruenceIdentity id, std::size_t trunc,
                                   unsigned alpha = 1);

/// Theta-identity flavor: both sides from the identity catalog.
ScanOutcome verify_series_identity(theta::IdentityId id, const CoefficientRing& ring,
                                   std::size_t trunc,
                                   std::optional<std::uint32_t> prime = std::nullopt);

/// One direct congruence-family instance: a progression plus its scan cap.
struct FamilyInstance {
    ProgressionCheck pc;
    std::uint64_t n_max = ~std::uint64_t(0);
};

/// Scans every instance against the table (indices clipped to
/// index_limit), aggregating counts; itemizes instances whose smallest
/// index already exceeds the budget in ScanOutcome::skipped_instances.
struct FamilyOutcome {
    std::uint64_t checked = 0;
    std::uint64_t max_index = 0;
    std::size_t skipped_instances = 0;
    std::optional<Counterexample> violation;
};
FamilyOutcome verify_family_direct(const Series& table,
                                   const std::vector<FamilyInstance>& instances,
                                   std::uint64_t index_limit, bool oracle_crosscheck);

enum class RecurrenceId {
    r3_hurwitz,  // r3(p^2 n) + (-n/p) r3(n) + p r3(n/p^2) = (p+1) r3(n), exact
    r3_shifted,  // r3(p^3 n) + p r3(n/p) = (p+1) r3(p n), exact
    r7_cooper,   // r7(p^2 n) = (p^5 - p^2 (-n/p) + 1) r7(n) - p^5 r7(n/p^2), exact
    r7_shifted,  // r7(p^3 n) = (p^5+1) r7(p n) - p^5 r7(n/p), exact
    p3_7_rel,    // p̄3(7 p^3 n) + p p̄3(7 n/p) == (p+1) p̄3(7 p n)  (mod 7)
    p3_11_rel,   // p̄3(11 p^3 n) == (p^5+1) p̄3(11 p n) - p^5 p̄3(11 n/p)  (mod 11)
};

/// Verifies the recurrence for each prime and all n in 1..n_max whose
/// largest table index fits index_budget; r_k(x/p)-style terms are zero
/// unless the division is exact.
ScanOutcome verify_recurrence(RecurrenceId id, const std::vector<std::uint64_t>& primes,
                              std::uint64_t n_max, std::uint64_t index_budget);

enum class CoeffFamily {
    mod7_14a13,  // p == 1 (mod 7):      p (p^{7a+6}-1)/(p-1) + 1 == 0 (mod 7)
    mod7_12a11,  // p == 2..6 (mod 7):   (p^{6a+6}-p)/(p-1) + 1 == 0 (mod 7)
    mod11_22a21, // p^5 == 1 (mod 11):   p^5 (p^{55a+50}-1)/(p^5-1) + 1 == 0 (mod 11)
};

/// Exact-integer check that the iteration coefficient vanishes for
/// alpha = 0..alpha_max. Throws std::invalid_argument when p sits in the
/// wrong residue class for the family.
ScanOutcome verify_iteration_coefficient(CoeffFamily family, std::uint64_t p,
                                         unsigned alpha_max);

enum class DensityFamily {
    dens_144, // 3^{2a+1}(3n+2), a >= 1                 -> 1/72
    dens_7,   // 7^{2a+1}(7n+r), a >= 1, r in {3,5,6}   -> 1/784
    dens_11,  // 11*7^{4a+3}(7n+r), a >= 0, r in 1..6   -> 1/4400
};

struct DensityOutcome {
    std::uint64_t members = 0;
    double fraction = 0.0;
    double required = 0.0; // stated bound minus 2/sqrt(N) slack
    std::uint64_t spot_checked = 0;
    std::optional<Counterexample> violation;
};

/// Counts progression-union members <= N by closed-form arithmetic and
/// spot-verifies divisibility of sampled members with index <= spot_limit
/// (clipped to the table).
DensityOutcome density_count(DensityFamily family, std::uint64_t N, const Series& spot_table,
                             std::uint64_t spot_modulus, unsigned spot_samples,
                             std::uint64_t spot_limit);

} // namespace qsc::checks
