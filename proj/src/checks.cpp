#include "qsc/checks.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qsc/intmath.hpp"

namespace qsc::checks {

const char* to_string(CheckKind kind) {
    switch (kind) {
        case CheckKind::progression_divisibility: return "ProgressionDivisibility";
        case CheckKind::pointwise_relation: return "PointwiseRelation";
        case CheckKind::series_identity: return "SeriesIdentity";
        case CheckKind::recurrence: return "Recurrence";
        case CheckKind::iteration_coefficient: return "IterationCoefficient";
        case CheckKind::density_count: return "DensityCount";
        case CheckKind::tightness: return "Tightness";
    }
    return "?";
}

const char* to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped_budget: return "skipped-budget";
    }
    return "?";
}

const char* to_string(Profile profile) {
    switch (profile) {
        case Profile::quick: return "quick";
        case Profile::standard: return "default";
        case Profile::deep: return "deep";
    }
    return "?";
}

std::optional<Profile> profile_from_string(const std::string& name) {
    if (name == "quick") return Profile::quick;
    if (name == "default") return Profile::standard;
    if (name == "deep") return Profile::deep;
    return std::nullopt;
}

std::size_t table_budget(Profile profile) {
    switch (profile) {
        case Profile::quick: return 5000;
        case Profile::standard: return 100000;
        case Profile::deep: return 100000;
    }
    return 5000;
}

std::size_t deep_mod7_budget() { return 1300000; }

// --- progression scanning ----------------------------------------------------

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace

ScanOutcome scan_progression(const Series& table, const ProgressionCheck& pc,
                             std::uint64_t n_max, std::uint64_t index_limit) {
    assert(table.ring().is_modular());
    assert(table.ring().modulus() % pc.modulus == 0);
    ScanOutcome out;
    const std::uint64_t limit = std::min<std::uint64_t>(table.trunc(), index_limit);
    for (std::uint64_t n = pc.n_from; n <= n_max; ++n) {
        if (pc.coprime_to && std::gcd(n, pc.coprime_to) != 1) continue;
        std::uint64_t idx = pc.step * n + pc.offset;
        if (idx > limit) break;
        std::uint64_t residue = table.mod_at(static_cast<std::size_t>(idx)) % pc.modulus;
        ++out.checked;
        out.max_index = idx;
        if (residue != 0) {
            out.violation = Counterexample{n, mpz_class(static_cast<unsigned long>(residue)),
                                           mpz_class(0)};
            return out;
        }
    }
    return out;
}

std::optional<Counterexample> oracle_spot_check(const Series& table, const ProgressionCheck& pc,
                                                std::uint64_t n_max, unsigned samples) {
    std::vector<std::uint64_t> candidates;
    for (std::uint64_t n = pc.n_from; n <= n_max; ++n) {
        if (pc.coprime_to && std::gcd(n, pc.coprime_to) != 1) continue;
        std::uint64_t idx = pc.step * n + pc.offset;
        if (idx > 400 || idx > table.trunc()) break;
        candidates.push_back(idx);
    }
    if (candidates.empty()) return std::nullopt;
    std::uint64_t state = pc.step * 0x10001 + pc.offset * 0x101 + pc.modulus;
    const std::uint64_t m = table.ring().modulus();
    for (unsigned s = 0; s < samples; ++s) {
        std::uint64_t idx = candidates[splitmix64(state) % candidates.size()];
        mpz_class expected = counting::overpartition_oracle(3, idx) % static_cast<unsigned long>(m);
        mpz_class observed(static_cast<unsigned long>(table.mod_at(idx)));
        if (observed != expected) return Counterexample{idx, observed, expected};
    }
    return std::nullopt;
}

Series residue_series(const Series& table, std::uint32_t m, std::size_t trunc) {
    if (!table.ring().is_modular() || table.ring().modulus() % m != 0)
        throw std::invalid_argument("residue_series: table modulus must be a multiple of m");
    if (trunc > table.trunc())
        throw std::out_of_range("residue_series: trunc exceeds table");
    Series out(CoefficientRing::modular(m), trunc);
    for (std::size_t i = 0; i <= trunc; ++i) out.mod_data()[i] = table.mod_at(i) % m;
    return out;
}

// --- pointwise relations --------------------------------------------------------

ScanOutcome verify_pointwise(PointwiseRelation rel, std::uint64_t n_max,
                             std::uint64_t index_budget, unsigned alpha) {
    const bool mod11 = rel == PointwiseRelation::p3_r7_mod11 ||
                       rel == PointwiseRelation::p3_eleven_cubed_mod11;
    const std::uint64_t m = mod11 ? 11 : 7;
    auto table = counting::overpartition_series(
        3, CoefficientRing::modular(static_cast<std::uint32_t>(m)), index_budget);
    const Series& v = table.series();

    // index stride of the left side and the paired right-hand read
    std::uint64_t lhs_stride = 0, rhs_stride = 0;
    bool signed_rhs = false;
    switch (rel) {
        case PointwiseRelation::p3_r3_mod7:
        case PointwiseRelation::p3_r7_mod11:
            lhs_stride = m;
            signed_rhs = true;
            break;
        case PointwiseRelation::p3_four_power_mod7:
            lhs_stride = 7;
            for (unsigned e = 0; e <= alpha; ++e) lhs_stride *= 4;
            rhs_stride = 7;
            signed_rhs = true;
            break;
        case PointwiseRelation::p3_seven_powers_mod7:
            lhs_stride = 2401;
            rhs_stride = 49;
            break;
        case PointwiseRelation::p3_eleven_cubed_mod11:
            lhs_stride = 1331;
            rhs_stride = 11;
            break;
    }

    const Series* rk = nullptr;
    counting::SquaresTable rk_table{0, nullptr};
    std::uint64_t scan_max = std::min(n_max, index_budget / lhs_stride);
    if (rel == PointwiseRelation::p3_r3_mod7 || rel == PointwiseRelation::p3_r7_mod11) {
        rk_table = counting::rk_series(rel == PointwiseRelation::p3_r3_mod7 ? 3 : 7,
                                       CoefficientRing::modular(static_cast<std::uint32_t>(m)),
                                       scan_max);
        rk = &rk_table.series();
    }

    ScanOutcome out;
    std::uint64_t n_from = rel == PointwiseRelation::p3_r3_mod7 ? 1 : 0;
    for (std::uint64_t n = n_from; n <= scan_max; ++n) {
        std::uint64_t lhs = v.mod_at(lhs_stride * n);
        std::uint64_t rhs = rk ? rk->mod_at(n) : v.mod_at(rhs_stride * n);
        if (signed_rhs && n % 2 == 1) rhs = (m - rhs) % m;
        ++out.checked;
        out.max_index = lhs_stride * n;
        if (lhs != rhs) {
            out.violation = Counterexample{n, mpz_class(static_cast<unsigned long>(lhs)),
                                           mpz_class(static_cast<unsigned long>(rhs))};
            return out;
        }
    }
    return out;
}

// --- dissection congruence identities ---------------------------------------------

ScanOutcome verify_series_identity(CongruenceIdentity id, std::size_t trunc, unsigned alpha) {
    const std::size_t T = trunc;
    std::uint32_t modulus = 72;
    std::size_t stride = 3;
    std::size_t offset = 0;
    switch (id) {
        case CongruenceIdentity::p3thm1_3n: break;
        case CongruenceIdentity::p3thm1_3n1:
            modulus = 144;
            offset = 1;
            break;
        case CongruenceIdentity::p3thm1_3n2:
            modulus = 288;
            offset = 2;
            break;
        case CongruenceIdentity::p3thm2_even:
            stride = 1;
            for (unsigned e = 0; e < 2 * alpha; ++e) stride *= 3;
            break;
        case CongruenceIdentity::p3thm2_odd:
            stride = 1;
            for (unsigned e = 0; e < 2 * alpha + 1; ++e) stride *= 3;
            break;
        case CongruenceIdentity::mod7eq:
            modulus = 7;
            stride = 7;
            break;
    }

    auto table = counting::overpartition_series(3, CoefficientRing::modular(modulus),
                                                stride * T + offset);
    Series lhs = truncated(
        alternate_sign(dissect(truncated(table.series(), stride * T + offset), stride, offset)),
        T);

    CoefficientRing ring = CoefficientRing::modular(modulus);
    Series phi = theta::phi_series(ring, T);
    Series phi3 = theta::at_qk(phi, 3, T);
    Series rhs = series_one(ring, T);
    switch (id) {
        case CongruenceIdentity::p3thm1_3n:
            rhs = div_unit(phi3, pow(phi, 4));
            break;
        case CongruenceIdentity::p3thm1_3n1:
            rhs = scale(mul(div_unit(pow(phi3, 4), pow(phi, 8)),
                            alternate_sign(theta::b_series(ring, T))),
                        6);
            break;
        case CongruenceIdentity::p3thm1_3n2:
            rhs = scale(mul(div_unit(pow(phi3, 3), pow(phi, 8)),
                            pow(alternate_sign(theta::b_series(ring, T)), 2)),
                        24);
            break;
        case CongruenceIdentity::p3thm2_even:
            rhs = div_unit(pow(phi3, 4), pow(phi, 7));
            break;
        case CongruenceIdentity::p3thm2_odd:
            rhs = div_unit(pow(phi3, 5), pow(phi, 8));
            break;
        case CongruenceIdentity::mod7eq:
            rhs = pow(phi, 3);
            break;
    }

    ScanOutcome out;
    out.checked = T + 1;
    out.max_index = T;
    if (auto mm = series_mismatch(lhs, rhs))
        out.violation = Counterexample{mm->index, mm->lhs, mm->rhs};
    return out;
}

ScanOutcome verify_series_identity(theta::IdentityId id, const CoefficientRing& ring,
                                   std::size_t trunc, std::optional<std::uint32_t> prime) {
    auto [lhs, rhs] = theta::identity_sides(id, ring, trunc, prime);
    ScanOutcome out;
    out.checked = trunc + 1;
    out.max_index = trunc;
    if (auto mm = series_mismatch(lhs, rhs))
        out.violation = Counterexample{mm->index, mm->lhs, mm->rhs};
    return out;
}

// --- direct family instances --------------------------------------------------------

FamilyOutcome verify_family_direct(const Series& table,
                                   const std::vector<FamilyInstance>& instances,
                                   std::uint64_t index_limit, bool oracle_crosscheck) {
    FamilyOutcome out;
    for (const auto& inst : instances) {
        auto o = scan_progression(table, inst.pc, inst.n_max, index_limit);
        out.checked += o.checked;
        out.max_index = std::max(out.max_index, o.max_index);
        if (o.checked == 0) ++out.skipped_instances;
        if (o.violation) {
            if (!out.violation) out.violation = o.violation;
            return out;
        }
        if (oracle_crosscheck && !out.violation) {
            if (auto ce = oracle_spot_check(table, inst.pc, inst.n_max, 10)) {
                out.violation = ce;
                return out;
            }
        }
    }
    return out;
}

// --- recurrences ---------------------------------------------------------------

namespace {

ScanOutcome verify_r_recurrence(RecurrenceId id, const std::vector<std::uint64_t>& primes,
                                std::uint64_t n_max, std::uint64_t index_budget) {
    const bool hurwitz_form = id == RecurrenceId::r3_hurwitz || id == RecurrenceId::r7_cooper;
    const unsigned k = (id == RecurrenceId::r3_hurwitz || id == RecurrenceId::r3_shifted) ? 3 : 7;
    std::uint64_t stride_max = 0;
    for (auto p : primes) stride_max = std::max(stride_max, hurwitz_form ? p * p : p * p * p);
    std::uint64_t trunc = std::min<std::uint64_t>(index_budget, stride_max * n_max);
    auto table = counting::rk_series(k, CoefficientRing::exact(), trunc);
    const Series& r = table.series();

    ScanOutcome out;
    for (auto p : primes) {
        std::uint64_t stride = hurwitz_form ? p * p : p * p * p;
        std::uint64_t local_max = std::min(n_max, trunc / stride);
        for (std::uint64_t n = 1; n <= local_max; ++n) {
            mpz_class lhs, rhs;
            if (id == RecurrenceId::r3_hurwitz) {
                lhs = r.exact_at(p * p * n) +
                      counting::legendre(-static_cast<std::int64_t>(n), p) * r.exact_at(n);
                if (n % (p * p) == 0) lhs += static_cast<unsigned long>(p) * r.exact_at(n / (p * p));
                rhs = static_cast<unsigned long>(p + 1) * r.exact_at(n);
            } else if (id == RecurrenceId::r3_shifted) {
                lhs = r.exact_at(p * p * p * n);
                if (n % p == 0) lhs += static_cast<unsigned long>(p) * r.exact_at(n / p);
                rhs = static_cast<unsigned long>(p + 1) * r.exact_at(p * n);
            } else if (id == RecurrenceId::r7_cooper) {
                mpz_class p5 = mpz_class(static_cast<unsigned long>(p));
                mpz_pow_ui(p5.get_mpz_t(), p5.get_mpz_t(), 5);
                lhs = r.exact_at(p * p * n);
                rhs = (p5 -
                       static_cast<long>(counting::legendre(-static_cast<std::int64_t>(n), p)) *
                           mpz_class(static_cast<unsigned long>(p * p)) +
                       1) *
                      r.exact_at(n);
                if (n % (p * p) == 0) rhs -= p5 * r.exact_at(n / (p * p));
            } else { // r7_shifted
                mpz_class p5 = mpz_class(static_cast<unsigned long>(p));
                mpz_pow_ui(p5.get_mpz_t(), p5.get_mpz_t(), 5);
                lhs = r.exact_at(p * p * p * n);
                rhs = (p5 + 1) * r.exact_at(p * n);
                if (n % p == 0) rhs -= p5 * r.exact_at(n / p);
            }
            ++out.checked;
            out.max_index = std::max<std::uint64_t>(out.max_index, stride * n);
            if (lhs != rhs) {
                out.violation = Counterexample{n, lhs, rhs};
                return out;
            }
        }
    }
    return out;
}

ScanOutcome verify_p3_recurrence(RecurrenceId id, const std::vector<std::uint64_t>& primes,
                                 std::uint64_t n_max, std::uint64_t index_budget) {
    const bool mod7 = id == RecurrenceId::p3_7_rel;
    const std::uint64_t base = mod7 ? 7 : 11;
    const std::uint64_t m = base;
    auto table =
        counting::overpartition_series(3, CoefficientRing::modular(static_cast<std::uint32_t>(m)),
                                       index_budget);
    const Series& v = table.series();

    ScanOutcome out;
    for (auto p : primes) {
        std::uint64_t local_max = std::min(n_max, index_budget / (base * p * p * p));
        for (std::uint64_t n = 1; n <= local_max; ++n) {
            std::uint64_t lhs, rhs;
            if (mod7) {
                // p̄3(7 p^3 n) + p p̄3(7 n / p) == (p+1) p̄3(7 p n)  (mod 7)
                lhs = v.mod_at(7 * p * p * p * n);
                if (n % p == 0) lhs = (lhs + p % m * v.mod_at(7 * (n / p))) % m;
                rhs = (p + 1) % m * v.mod_at(7 * p * n) % m;
            } else {
                // p̄3(11 p^3 n) == (p^5+1) p̄3(11 p n) - p^5 p̄3(11 n / p)  (mod 11)
                std::uint64_t p5 = pow_mod_u64(p, 5, m);
                lhs = v.mod_at(11 * p * p * p * n);
                rhs = (p5 + 1) % m * v.mod_at(11 * p * n) % m;
                if (n % p == 0)
                    rhs = (rhs + (m - p5) * v.mod_at(11 * (n / p))) % m;
            }
            ++out.checked;
            out.max_index = std::max<std::uint64_t>(out.max_index, base * p * p * p * n);
            if (lhs % m != rhs % m) {
                out.violation = Counterexample{n, mpz_class(static_cast<unsigned long>(lhs % m)),
                                               mpz_class(static_cast<unsigned long>(rhs % m))};
                return out;
            }
        }
    }
    return out;
}

} // namespace

ScanOutcome verify_recurrence(RecurrenceId id, const std::vector<std::uint64_t>& primes,
                              std::uint64_t n_max, std::uint64_t index_budget) {
    for (auto p : primes) {
        if (p < 3 || !is_prime_u64(p))
            throw std::invalid_argument("verify_recurrence: primes must be odd primes >= 3");
    }
    switch (id) {
        case RecurrenceId::r3_hurwitz:
        case RecurrenceId::r3_shifted:
        case RecurrenceId::r7_cooper:
        case RecurrenceId::r7_shifted:
            return verify_r_recurrence(id, primes, n_max, index_budget);
        case RecurrenceId::p3_7_rel:
        case RecurrenceId::p3_11_rel:
            return verify_p3_recurrence(id, primes, n_max, index_budget);
    }
    throw std::invalid_argument("verify_recurrence: unknown id");
}

// --- iteration coefficients -----------------------------------------------------

ScanOutcome verify_iteration_coefficient(CoeffFamily family, std::uint64_t p,
                                         unsigned alpha_max) {
    if (!is_prime_u64(p) || p < 3)
        throw std::invalid_argument("verify_iteration_coefficient: p must be an odd prime");
    if (family == CoeffFamily::mod7_14a13 && p % 7 != 1)
        throw std::invalid_argument("mod7_14a13 needs p == 1 (mod 7)");
    if (family == CoeffFamily::mod7_12a11 && (p % 7 == 0 || p % 7 == 1))
        throw std::invalid_argument("mod7_12a11 needs p == 2..6 (mod 7)");
    if (family == CoeffFamily::mod11_22a21) {
        std::uint64_t p5 = pow_mod_u64(p, 5, 11);
        if (p5 != 1)
            throw std::invalid_argument("mod11_22a21 needs p^5 == 1 (mod 11)");
    }

    ScanOutcome out;
    const mpz_class pz(static_cast<unsigned long>(p));
    for (unsigned alpha = 0; alpha <= alpha_max; ++alpha) {
        mpz_class coeff;
        unsigned long check_mod;
        if (family == CoeffFamily::mod7_14a13) {
            unsigned long k = 7ul * alpha + 6;
            mpz_class pk;
            mpz_pow_ui(pk.get_mpz_t(), pz.get_mpz_t(), k);
            coeff = pz * ((pk - 1) / (pz - 1)) + 1;
            check_mod = 7;
        } else if (family == CoeffFamily::mod7_12a11) {
            mpz_class pk;
            mpz_pow_ui(pk.get_mpz_t(), pz.get_mpz_t(), 6ul * alpha + 6);
            coeff = (pk - pz) / (pz - 1) + 1;
            check_mod = 7;
        } else {
            mpz_class p5 = pz * pz * pz * pz * pz;
            mpz_class pk;
            mpz_pow_ui(pk.get_mpz_t(), pz.get_mpz_t(), 55ul * alpha + 50);
            coeff = p5 * ((pk - 1) / (p5 - 1)) + 1;
            check_mod = 11;
        }
        ++out.checked;
        out.max_index = alpha;
        mpz_class residue = coeff % check_mod;
        if (residue != 0) {
            out.violation = Counterexample{alpha, residue, mpz_class(0)};
            return out;
        }
    }
    return out;
}

// --- density counts ---------------------------------------------------------------

namespace {

// Members of base*(s*n + r) <= N for n >= 0, i.e. s*n + r <= N/base.
std::uint64_t progression_members(std::uint64_t base, std::uint64_t s, std::uint64_t r,
                                  std::uint64_t N) {
    std::uint64_t q = N / base;
    if (q < r) return 0;
    return (q - r) / s + 1;
}

void collect_members(std::uint64_t base, std::uint64_t s, std::uint64_t r, std::uint64_t limit,
                     std::vector<std::uint64_t>& out) {
    for (std::uint64_t n = 0;; ++n) {
        unsigned __int128 member = (unsigned __int128)base * (s * n + r);
        if (member > limit) break;
        out.push_back(static_cast<std::uint64_t>(member));
    }
}

} // namespace

DensityOutcome density_count(DensityFamily family, std::uint64_t N, const Series& spot_table,
                             std::uint64_t spot_modulus, unsigned spot_samples,
                             std::uint64_t spot_limit) {
    DensityOutcome out;
    double stated = 0;
    std::vector<std::uint64_t> sample_pool;
    spot_limit = std::min({N, spot_limit, static_cast<std::uint64_t>(spot_table.trunc())});

    if (family == DensityFamily::dens_144) {
        stated = 1.0 / 72.0;
        for (std::uint64_t base = 27; base <= N / 2; base *= 9) {
            out.members += progression_members(base, 3, 2, N);
            collect_members(base, 3, 2, spot_limit, sample_pool);
        }
    } else if (family == DensityFamily::dens_7) {
        stated = 1.0 / 784.0;
        for (std::uint64_t base = 343; base <= N / 3; base *= 49) {
            for (std::uint64_t r : {3ull, 5ull, 6ull}) {
                out.members += progression_members(base, 7, r, N);
                collect_members(base, 7, r, spot_limit, sample_pool);
            }
        }
    } else {
        stated = 1.0 / 4400.0;
        for (std::uint64_t base = 11 * 343; base <= N; base *= 2401) {
            for (std::uint64_t r = 1; r <= 6; ++r) {
                out.members += progression_members(base, 7, r, N);
                collect_members(base, 7, r, spot_limit, sample_pool);
            }
        }
    }

    out.fraction = static_cast<double>(out.members) / static_cast<double>(N);
    out.required = stated - 2.0 / std::sqrt(static_cast<double>(N));
    if (out.fraction < out.required) {
        out.violation = Counterexample{N, mpz_class(static_cast<unsigned long>(out.members)),
                                       mpz_class(static_cast<unsigned long>(
                                           static_cast<std::uint64_t>(out.required * N)))};
        return out;
    }

    std::sort(sample_pool.begin(), sample_pool.end());
    sample_pool.erase(std::unique(sample_pool.begin(), sample_pool.end()), sample_pool.end());
    if (!sample_pool.empty()) {
        std::size_t stride = std::max<std::size_t>(1, sample_pool.size() / spot_samples);
        for (std::size_t i = 0; i < sample_pool.size() && out.spot_checked < spot_samples;
             i += stride) {
            std::uint64_t member = sample_pool[i];
            std::uint64_t residue = spot_table.mod_at(member) % spot_modulus;
            ++out.spot_checked;
            if (residue != 0) {
                out.violation = Counterexample{
                    member, mpz_class(static_cast<unsigned long>(residue)), mpz_class(0)};
                return out;
            }
        }
    }
    return out;
}

} // namespace qsc::checks
