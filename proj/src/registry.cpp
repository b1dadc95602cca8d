#include "qsc/registry.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <thread>

#include "qsc/intmath.hpp"
#include "qsc/theta.hpp"

namespace qsc::checks {

namespace {

using counting::overpartition_series;
using counting::rk_series;

// lcm of every p̄3 modulus the power-of-two and mod-9 checks need:
// {2,4,8,16,32,64,128} x {6,24,72,144,288}  ->  2^7 * 3^2.
constexpr std::uint32_t kCompositeMod = 1152;

std::size_t identity_trunc(Profile pr) { return pr == Profile::quick ? 300 : 500; }

counting::OverpartitionTable op3_composite(Profile pr, std::size_t min_trunc = 0) {
    return overpartition_series(3, CoefficientRing::modular(kCompositeMod),
                                std::max(table_budget(pr), min_trunc));
}

counting::OverpartitionTable op3_mod(std::uint32_t m, std::size_t trunc) {
    return overpartition_series(3, CoefficientRing::modular(m), trunc);
}

struct Agg {
    std::uint64_t checked = 0;
    std::uint64_t bound = 0;
    std::optional<Counterexample> violation;
    std::string detail;

    void take(const ScanOutcome& o, std::uint64_t bound_used) {
        checked += o.checked;
        bound = std::max(bound, bound_used);
        if (!violation && o.violation) violation = o.violation;
    }
    void take(const FamilyOutcome& o) {
        checked += o.checked;
        bound = std::max(bound, o.max_index);
        if (!violation && o.violation) violation = o.violation;
    }
    void take_mismatch(const std::optional<SeriesMismatch>& mm, std::size_t trunc) {
        checked += trunc + 1;
        bound = std::max<std::uint64_t>(bound, trunc);
        if (!violation && mm) violation = Counterexample{mm->index, mm->lhs, mm->rhs};
    }
    void fail_at(std::uint64_t n, mpz_class observed, mpz_class expected) {
        if (!violation) violation = Counterexample{n, std::move(observed), std::move(expected)};
    }
    void note(const std::string& s) {
        if (!detail.empty()) detail += "; ";
        detail += s;
    }
};

VerificationReport finish(const std::string& id, const Agg& agg) {
    VerificationReport r;
    r.id = id;
    r.checked_count = agg.checked;
    r.bound = agg.bound;
    r.detail = agg.detail;
    if (agg.violation) {
        r.status = CheckStatus::fail;
        r.first_counterexample = agg.violation;
    } else if (agg.checked == 0) {
        r.status = CheckStatus::skipped_budget;
    } else {
        r.status = CheckStatus::pass;
    }
    return r;
}

struct IdentityInstance {
    theta::IdentityId id;
    CoefficientRing ring;
    std::optional<std::uint32_t> prime;
};

VerificationReport identity_batch(const std::string& id,
                                  const std::vector<IdentityInstance>& instances,
                                  std::size_t trunc) {
    Agg agg;
    for (const auto& inst : instances) {
        agg.take(verify_series_identity(inst.id, inst.ring, trunc, inst.prime), trunc);
        if (agg.violation) break;
    }
    return finish(id, agg);
}

// Progression scan + the 10-member oracle cross-check required of every
// ProgressionDivisibility pass.
void scan_with_oracle(Agg& agg, const Series& table, const ProgressionCheck& pc,
                      std::uint64_t n_max, std::uint64_t index_limit) {
    agg.take(scan_progression(table, pc, n_max, index_limit), index_limit);
    if (!agg.violation) {
        if (auto ce = oracle_spot_check(table, pc, n_max, 10)) agg.violation = ce;
    }
}

std::string fmt_fraction(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

// ---- check bodies -----------------------------------------------------------

VerificationReport run_t1_1(Profile pr) {
    Agg agg;
    const std::uint64_t n_max = pr == Profile::quick ? 2000 : 5000;
    agg.bound = n_max;
    for (unsigned k : {1u, 2u, 3u, 4u, 6u, 12u}) {
        auto tbl = overpartition_series(k, CoefficientRing::modular(16),
                                        static_cast<std::size_t>(n_max));
        const Series& v = tbl.series();
        for (std::uint64_t n = 1; n <= n_max; ++n) {
            auto claim = counting::keister_sellers_predicted(k, n);
            std::uint64_t got = v.mod_at(n) % claim.modulus;
            ++agg.checked;
            if (got != claim.residue) {
                agg.fail_at(n, mpz_class(static_cast<unsigned long>(got)),
                            mpz_class(static_cast<unsigned long>(claim.residue)));
                return finish("T1.1", agg);
            }
        }
    }
    agg.note("k in {1,2,3,4,6,12}");
    return finish("T1.1", agg);
}

VerificationReport run_t2_1(Profile pr) {
    Agg agg;
    const std::uint64_t n_max = pr == Profile::quick ? 2000 : 10000;
    agg.bound = n_max;
    for (unsigned k = 1; k <= 8; ++k) {
        auto tbl = overpartition_series(k, CoefficientRing::modular(16),
                                        static_cast<std::size_t>(n_max));
        const Series& v = tbl.series();
        for (std::uint64_t n = 1; n <= n_max; ++n) {
            auto claim = counting::mod2m_predicted(k, n);
            std::uint64_t got = v.mod_at(n) % claim.modulus;
            ++agg.checked;
            if (got != claim.residue) {
                agg.fail_at(n, mpz_class(static_cast<unsigned long>(got)),
                            mpz_class(static_cast<unsigned long>(claim.residue)));
                return finish("T2.1", agg);
            }
        }
    }
    agg.note("k in 1..8");
    return finish("T2.1", agg);
}

VerificationReport run_info_2_3(Profile pr) {
    Agg agg;
    const std::uint64_t n_max = table_budget(pr);
    auto tbl = op3_composite(pr);
    std::uint64_t divisible = 0;
    for (std::uint64_t n = 1; n <= n_max; ++n)
        if (tbl.series().mod_at(n) % 16 == 0) ++divisible;
    agg.checked = n_max;
    agg.bound = n_max;
    agg.note("empirical: 16 | pbar3(n) for " +
             fmt_fraction(static_cast<double>(divisible) / static_cast<double>(n_max)) +
             " of n <= " + std::to_string(n_max) + " (informational)");
    return finish("INFO.2.3", agg);
}

VerificationReport run_t2_2(Profile pr) {
    Agg agg;
    const std::uint64_t n_max = pr == Profile::quick ? 1000 : 2000;
    auto r2 = rk_series(2, CoefficientRing::exact(), static_cast<std::size_t>(n_max));
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        mpz_class expected = r2.series().exact_at(n) / 4 - counting::chi(n);
        mpz_class observed(static_cast<unsigned long>(counting::r2_plus(n)));
        ++agg.checked;
        if (observed != expected) {
            agg.fail_at(n, observed, expected);
            break;
        }
    }
    agg.bound = n_max;
    return finish("T2.2", agg);
}

VerificationReport run_t2_3(Profile pr) {
    Agg agg;
    const std::uint64_t n_max = pr == Profile::quick ? 2000 : 10000;
    auto r2 = rk_series(2, CoefficientRing::modular(8), static_cast<std::size_t>(n_max));
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        std::uint64_t got = r2.series().mod_at(n);
        std::uint64_t want = counting::r2_mod8_predicted(n);
        ++agg.checked;
        if (got != want) {
            agg.fail_at(n, mpz_class(static_cast<unsigned long>(got)),
                        mpz_class(static_cast<unsigned long>(want)));
            break;
        }
    }
    agg.bound = n_max;
    return finish("T2.3", agg);
}

constexpr std::uint64_t k8nModuli[6] = {2, 8, 16, 2, 16, 16};

VerificationReport run_t2_4(Profile pr) {
    Agg agg;
    auto tbl = op3_composite(pr);
    std::vector<FamilyInstance> instances;
    for (std::uint64_t r = 1; r <= 6; ++r)
        instances.push_back({ProgressionCheck{8, r, k8nModuli[r - 1], 0, 0}, ~std::uint64_t(0)});
    agg.take(verify_family_direct(tbl.series(), instances, table_budget(pr), true));
    agg.bound = std::max<std::uint64_t>(agg.bound, table_budget(pr));
    return finish("T2.4", agg);
}

VerificationReport run_tight_2_4(Profile pr) {
    // Doubling any of the six moduli must fail at n = 0: the witnesses are
    // pbar3(1..6) = 6, 24, 80, 234, 624, 1552.
    constexpr std::uint64_t expected_residue[6] = {2, 8, 16, 2, 16, 16};
    VerificationReport rep;
    rep.id = "TIGHT.2.4";
    auto tbl = op3_composite(pr);
    for (std::uint64_t r = 1; r <= 6; ++r) {
        ProgressionCheck pc{8, r, 2 * k8nModuli[r - 1], 0, 0};
        auto o = scan_progression(tbl.series(), pc, ~std::uint64_t(0), table_budget(pr));
        rep.checked_count += o.checked;
        rep.bound = std::max(rep.bound, o.max_index);
        if (!o.violation || o.violation->n != 0 ||
            o.violation->observed != expected_residue[r - 1]) {
            rep.status = CheckStatus::fail;
            rep.first_counterexample =
                Counterexample{r, o.violation ? o.violation->observed : mpz_class(0),
                               mpz_class(static_cast<unsigned long>(expected_residue[r - 1]))};
            rep.detail = "doubled modulus for 8n+" + std::to_string(r) +
                         " did not fail at the documented witness";
            return rep;
        }
        if (r == 1) rep.first_counterexample = o.violation; // first witness rides along
    }
    // Tightness semantics: the expected failures are the passing outcome.
    rep.status = CheckStatus::pass;
    rep.detail = "all six doubled moduli fail at n=0 with residues 2,8,16,2,16,16";
    return rep;
}

VerificationReport run_identity_group(const char* id, Profile pr,
                                      std::vector<theta::IdentityId> ids) {
    std::vector<IdentityInstance> instances;
    for (auto iid : ids) instances.push_back({iid, CoefficientRing::exact(), std::nullopt});
    return identity_batch(id, instances, identity_trunc(pr));
}

VerificationReport run_t3_3(Profile pr) {
    std::vector<IdentityInstance> instances;
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
        instances.push_back(
            {theta::IdentityId::euler_pochhammer_p, CoefficientRing::modular(p), p});
        instances.push_back({theta::IdentityId::phi_frobenius_p, CoefficientRing::modular(p), p});
    }
    return identity_batch("T3.3", instances, identity_trunc(pr));
}

VerificationReport run_t2_8(Profile pr) {
    Agg agg;
    auto tbl = op3_composite(pr);
    scan_with_oracle(agg, tbl.series(), ProgressionCheck{16, 14, 32, 0, 0}, ~std::uint64_t(0),
                     table_budget(pr));
    return finish("T2.8", agg);
}

VerificationReport run_t2_9(Profile pr) {
    Agg agg;
    auto tbl = op3_composite(pr);
    scan_with_oracle(agg, tbl.series(), ProgressionCheck{8, 7, 64, 0, 0}, ~std::uint64_t(0),
                     table_budget(pr));
    return finish("T2.9", agg);
}

VerificationReport run_tightness(const std::string& id, Profile pr, ProgressionCheck pc,
                                 std::uint64_t witness_n, std::uint64_t witness_residue) {
    Agg agg;
    auto tbl = op3_composite(pr);
    auto o = scan_progression(tbl.series(), pc, ~std::uint64_t(0), table_budget(pr));
    agg.checked = o.checked;
    agg.bound = o.max_index;
    VerificationReport rep;
    rep.id = id;
    rep.checked_count = o.checked;
    rep.bound = o.max_index;
    if (o.violation && o.violation->n == witness_n &&
        o.violation->observed == witness_residue) {
        rep.status = CheckStatus::pass;
        rep.first_counterexample = o.violation;
        rep.detail = "expected failure observed at n=" + std::to_string(witness_n) +
                     " with residue " + std::to_string(witness_residue);
    } else {
        rep.status = CheckStatus::fail;
        rep.first_counterexample = o.violation;
        rep.detail = "doubled modulus did not fail at the documented witness";
    }
    return rep;
}

VerificationReport run_t3_4(Profile pr) {
    const std::size_t T = pr == Profile::quick ? 300 : 1500;
    Agg agg;
    for (CongruenceIdentity id : {CongruenceIdentity::p3thm1_3n, CongruenceIdentity::p3thm1_3n1,
                                  CongruenceIdentity::p3thm1_3n2}) {
        agg.take(verify_series_identity(id, T), T);
        if (agg.violation) break;
    }
    agg.note("moduli 72/144/288");
    return finish("T3.4", agg);
}

VerificationReport run_t3_5(Profile pr) {
    Agg agg;
    auto tbl = op3_composite(pr);
    agg.take(verify_family_direct(tbl.series(),
                                  {{ProgressionCheck{3, 1, 6, 0, 0}, 30000},
                                   {ProgressionCheck{3, 2, 24, 0, 0}, 30000}},
                                  table_budget(pr), true));
    return finish("T3.5", agg);
}

VerificationReport run_t3_6(Profile pr) {
    // The alpha = 2 legs need the mod-72 table out to 3^5 * T; this check
    // carries its own table requirement past the profile budget. Largest
    // stride first so the memo builds the table once.
    const std::size_t T = pr == Profile::quick ? 150 : 1500;
    Agg agg;
    for (unsigned alpha : {2u, 1u}) {
        for (CongruenceIdentity id :
             {CongruenceIdentity::p3thm2_odd, CongruenceIdentity::p3thm2_even}) {
            agg.take(verify_series_identity(id, T, alpha), T);
            if (agg.violation) return finish("T3.6", agg);
        }
    }
    agg.note("alpha in {1,2}, modulus 72");
    return finish("T3.6", agg);
}

VerificationReport run_t3_7(Profile pr) {
    Agg agg;
    auto tbl = op3_composite(pr);
    agg.take(verify_family_direct(tbl.series(),
                                  {{ProgressionCheck{81, 54, 144, 0, 0}, 300},
                                   {ProgressionCheck{729, 486, 144, 0, 0}, 100}},
                                  table_budget(pr), true));
    agg.note("27(3n+2) for n<=300 and 243(3n+2) for n<=100");
    return finish("T3.7", agg);
}

VerificationReport run_density(const std::string& id, Profile pr, DensityFamily family,
                               std::uint64_t n_quick, std::uint64_t n_full,
                               std::uint32_t spot_mod) {
    Agg agg;
    const std::uint64_t N = pr == Profile::quick ? n_quick : n_full;
    DensityOutcome out;
    if (family == DensityFamily::dens_144) {
        auto tbl = op3_composite(pr);
        out = density_count(family, N, tbl.series(), spot_mod, 200, table_budget(pr));
    } else {
        auto tbl = op3_mod(spot_mod, table_budget(pr));
        out = density_count(family, N, tbl.series(), spot_mod, 200, table_budget(pr));
    }
    agg.checked = out.members + out.spot_checked;
    agg.bound = N;
    agg.violation = out.violation;
    agg.note("fraction " + fmt_fraction(out.fraction) + " >= required " +
             fmt_fraction(out.required) + ", spot-verified " + std::to_string(out.spot_checked) +
             " members");
    return finish(id, agg);
}

VerificationReport run_t4_1(Profile pr) {
    Agg agg;
    auto o = verify_pointwise(PointwiseRelation::p3_r3_mod7, 3000, table_budget(pr));
    agg.take(o, o.max_index);
    return finish("T4.1", agg);
}

VerificationReport run_t4_2(Profile pr) {
    Agg agg;
    const std::uint64_t n_max = pr == Profile::quick ? 300 : 1000;
    auto r4 = rk_series(4, CoefficientRing::exact(), static_cast<std::size_t>(11 * n_max));
    auto r8 = rk_series(8, CoefficientRing::exact(), static_cast<std::size_t>(11 * n_max));
    for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull}) {
        for (std::uint64_t n = 1; n <= n_max; ++n) {
            for (const auto* tbl : {&r4, &r8}) {
                const Series& r = tbl->series();
                std::uint64_t lhs = mpz_fdiv_ui(r.exact_at(p * n).get_mpz_t(), p);
                std::uint64_t rhs = mpz_fdiv_ui(r.exact_at(n).get_mpz_t(), p);
                ++agg.checked;
                if (lhs != rhs) {
                    agg.fail_at(n, mpz_class(static_cast<unsigned long>(lhs)),
                                mpz_class(static_cast<unsigned long>(rhs)));
                    return finish("T4.2", agg);
                }
            }
        }
    }
    agg.bound = 11 * n_max;
    agg.note("p in {3,5,7,11}, r4 and r8");
    return finish("T4.2", agg);
}

VerificationReport run_t4_3(Profile pr) {
    Agg agg;
    const std::size_t T = std::min<std::size_t>(2000, table_budget(pr) / 7);
    agg.take(verify_series_identity(CongruenceIdentity::mod7eq, T), T);
    return finish("T4.3", agg);
}

VerificationReport run_t4_4(Profile pr) {
    Agg agg;
    const std::uint64_t n_max = pr == Profile::quick ? 200 : 500;
    auto o = verify_recurrence(RecurrenceId::r3_hurwitz, {3, 5, 7, 11, 13}, n_max,
                               169 * n_max);
    agg.take(o, o.max_index);
    agg.note("exact, p in {3,5,7,11,13}");
    return finish("T4.4", agg);
}

VerificationReport run_t4_5(Profile pr) {
    Agg agg;
    auto o = verify_recurrence(RecurrenceId::p3_7_rel, {3, 5}, 600, table_budget(pr));
    agg.take(o, o.max_index);
    agg.note("mod 7, p in {3,5}");
    return finish("T4.5", agg);
}

VerificationReport run_t4_6(Profile pr) {
    Agg agg;
    auto op7 = op3_mod(7, table_budget(pr));
    const Series& v = op7.series();
    const std::uint64_t limit = table_budget(pr);
    for (std::uint64_t p : {3ull, 5ull}) {
        for (unsigned k = 1; k <= 2; ++k) {
            std::uint64_t pk = 1, p2k1 = 1;
            for (unsigned e = 0; e < k; ++e) pk *= p;
            for (unsigned e = 0; e < 2 * k + 1; ++e) p2k1 *= p;
            std::uint64_t coeff = (p * ((pk - 1) / (p - 1)) + 1) % 7;
            std::uint64_t members = 0;
            for (std::uint64_t N = 1; 7 * p2k1 * N <= limit; ++N) {
                if (N % p == 0) continue;
                std::uint64_t lhs = v.mod_at(7 * p2k1 * N);
                std::uint64_t rhs = coeff * v.mod_at(7 * p * N) % 7;
                ++agg.checked;
                ++members;
                agg.bound = std::max(agg.bound, 7 * p2k1 * N);
                if (lhs != rhs) {
                    agg.fail_at(N, mpz_class(static_cast<unsigned long>(lhs)),
                                mpz_class(static_cast<unsigned long>(rhs)));
                    return finish("T4.6", agg);
                }
            }
            agg.note("p=" + std::to_string(p) + ",k=" + std::to_string(k) + ": " +
                     std::to_string(members) + " members");
        }
    }
    return finish("T4.6", agg);
}

VerificationReport run_t4_7(Profile pr) {
    Agg agg;
    const std::uint64_t limit = table_budget(pr);
    for (unsigned alpha = 0; alpha <= 2 && !agg.violation; ++alpha) {
        auto o = verify_pointwise(PointwiseRelation::p3_four_power_mod7, ~std::uint64_t(0),
                                  limit, alpha);
        agg.take(o, o.max_index);
    }
    if (!agg.violation) {
        auto tbl = op3_mod(7, limit);
        std::vector<FamilyInstance> instances;
        for (std::uint64_t f : {1ull, 4ull, 16ull})
            instances.push_back({ProgressionCheck{56 * f, 49 * f, 7, 0, 0}, 1000});
        agg.take(verify_family_direct(tbl.series(), instances, limit, true));
    }
    agg.note("pointwise alpha<=2 and 4^a(56n+49) families");
    return finish("T4.7", agg);
}

VerificationReport run_t4_8(Profile pr) {
    Agg agg;
    // Leg 1 (direct smallest instances). p = 13 == 6 (mod 7): 7*13^3*N.
    {
        auto op7 = op3_mod(7, table_budget(pr));
        ProgressionCheck pc{7 * 2197, 0, 7, 1, 13};
        auto o = scan_progression(op7.series(), pc, ~std::uint64_t(0), table_budget(pr));
        agg.take(o, o.max_index);
        agg.note("direct 7*13^3*N: " + std::to_string(o.checked) + " instances");
    }
    // p = 3, 12a+11 family at alpha = 0: 7*3^11 = 1240029, deep profile only.
    if (pr == Profile::deep) {
        auto op7 = op3_mod(7, deep_mod7_budget());
        ProgressionCheck pc{7 * 177147, 0, 7, 1, 3};
        auto o = scan_progression(op7.series(), pc, ~std::uint64_t(0), deep_mod7_budget());
        agg.take(o, o.max_index);
        agg.note("direct 7*3^11*N: " + std::to_string(o.checked) + " instances");
    } else {
        agg.note("direct 7*3^11*N: deep profile only");
    }
    // Leg 2 (recurrence for the generating identity).
    {
        auto o = verify_recurrence(RecurrenceId::p3_7_rel, {3}, 150, table_budget(pr));
        agg.take(o, o.max_index);
        agg.note("recurrence leg p=3: " + std::to_string(o.checked) + " points");
    }
    // Leg 3 (iteration coefficients for both residue-class families).
    for (std::uint64_t p : {29ull, 43ull}) {
        auto o = verify_iteration_coefficient(CoeffFamily::mod7_14a13, p, 5);
        agg.checked += o.checked;
        if (!agg.violation && o.violation) agg.violation = o.violation;
    }
    for (std::uint64_t p : {3ull, 5ull}) {
        auto o = verify_iteration_coefficient(CoeffFamily::mod7_12a11, p, 5);
        agg.checked += o.checked;
        if (!agg.violation && o.violation) agg.violation = o.violation;
    }
    agg.note("coefficient legs: 14a13 p in {29,43}, 12a11 p in {3,5}, alpha<=5");
    return finish("T4.8", agg);
}

VerificationReport run_t4_9(Profile pr) {
    Agg agg;
    const std::uint64_t limit = table_budget(pr);
    auto o = verify_pointwise(PointwiseRelation::p3_seven_powers_mod7, 40, limit);
    agg.take(o, o.max_index);
    if (!agg.violation) {
        auto tbl = op3_mod(7, limit);
        std::vector<FamilyInstance> instances;
        for (unsigned alpha = 1; alpha <= 2; ++alpha) {
            std::uint64_t base = 7;
            for (unsigned e = 0; e < 2 * alpha; ++e) base *= 7;
            for (std::uint64_t r : {3ull, 5ull, 6ull})
                instances.push_back({ProgressionCheck{base * 7, base * r, 7, 0, 0}, 40});
        }
        agg.take(verify_family_direct(tbl.series(), instances, limit, true));
    }
    agg.note("7^4 vs 7^2 pointwise; 7^(2a+1)(7n+r) families, alpha in {1,2}");
    return finish("T4.9", agg);
}

VerificationReport run_t4_11(Profile pr) {
    Agg agg;
    auto o = verify_pointwise(PointwiseRelation::p3_r7_mod11, 2000, table_budget(pr));
    agg.take(o, o.max_index);
    return finish("T4.11", agg);
}

VerificationReport run_t4_12(Profile pr) {
    Agg agg;
    const std::uint64_t n_max = pr == Profile::quick ? 100 : 200;
    auto o = verify_recurrence(RecurrenceId::r7_cooper, {3, 5, 7}, n_max, 49 * n_max);
    agg.take(o, o.max_index);
    agg.note("exact, p in {3,5,7}");
    return finish("T4.12", agg);
}

VerificationReport run_t4_13(Profile pr) {
    Agg agg;
    auto o = verify_recurrence(RecurrenceId::p3_11_rel, {3, 5}, 600, table_budget(pr));
    agg.take(o, o.max_index);
    agg.note("mod 11, p in {3,5}");
    return finish("T4.13", agg);
}

VerificationReport run_t4_14(Profile pr) {
    Agg agg;
    auto op11 = op3_mod(11, table_budget(pr));
    const Series& v = op11.series();
    const std::uint64_t limit = table_budget(pr);
    for (std::uint64_t p : {3ull, 5ull}) {
        std::uint64_t p5 = p * p * p * p * p;
        for (unsigned k = 1; k <= 2; ++k) {
            std::uint64_t p5k = 1, p2k1 = 1;
            for (unsigned e = 0; e < 5 * k; ++e) p5k *= p;
            for (unsigned e = 0; e < 2 * k + 1; ++e) p2k1 *= p;
            std::uint64_t coeff = (p5 % 11 * (((p5k - 1) / (p5 - 1)) % 11) + 1) % 11;
            std::uint64_t members = 0;
            for (std::uint64_t N = 1; 11 * p2k1 * N <= limit; ++N) {
                if (N % p == 0) continue;
                std::uint64_t lhs = v.mod_at(11 * p2k1 * N);
                std::uint64_t rhs = coeff * v.mod_at(11 * p * N) % 11;
                ++agg.checked;
                ++members;
                agg.bound = std::max(agg.bound, 11 * p2k1 * N);
                if (lhs != rhs) {
                    agg.fail_at(N, mpz_class(static_cast<unsigned long>(lhs)),
                                mpz_class(static_cast<unsigned long>(rhs)));
                    return finish("T4.14", agg);
                }
            }
            agg.note("p=" + std::to_string(p) + ",k=" + std::to_string(k) + ": " +
                     std::to_string(members) + " members");
        }
    }
    return finish("T4.14", agg);
}

VerificationReport run_t4_15(Profile pr) {
    Agg agg;
    auto op11 = op3_mod(11, table_budget(pr));
    const Series& v = op11.series();
    const std::uint64_t limit = table_budget(pr);
    // (1) pbar3(11^3 n) == pbar3(11 n) (mod 11)
    {
        auto o = verify_pointwise(PointwiseRelation::p3_eleven_cubed_mod11, 75, limit);
        agg.take(o, o.max_index);
        if (agg.violation) return finish("T4.15", agg);
    }
    agg.note("11^3 n vs 11 n pointwise");
    // (2) 22a+21 family: the smallest direct index 11*3^21 is out of reach at
    // any profile; verified through the iteration coefficients.
    for (std::uint64_t p : {3ull, 5ull, 23ull}) {
        auto o = verify_iteration_coefficient(CoeffFamily::mod11_22a21, p, 5);
        agg.checked += o.checked;
        if (!agg.violation && o.violation) agg.violation = o.violation;
    }
    agg.note("coefficient leg: 22a21 p in {3,5,23}, alpha<=5 (no direct index fits any profile)");
    // (3) 4a+3 family, direct instances: p = 13 and p = 7.
    {
        ProgressionCheck pc{11 * 2197, 0, 11, 1, 13};
        auto o = scan_progression(v, pc, ~std::uint64_t(0), limit);
        agg.take(o, o.max_index);
        agg.note("direct 11*13^3*N: " + std::to_string(o.checked) + " instances");
    }
    {
        ProgressionCheck pc{11 * 343, 0, 11, 1, 7};
        auto o = scan_progression(v, pc, ~std::uint64_t(0), limit);
        agg.take(o, o.max_index);
        agg.note("direct 11*7^3*N: " + std::to_string(o.checked) + " instances");
    }
    agg.note("recurrence leg shared with T4.13");
    return finish("T4.15", agg);
}

std::vector<TheoremCheck> build_registry() {
    std::vector<TheoremCheck> checks;
    auto addc = [&checks](std::string id, CheckKind kind, std::string statement,
                          std::string bounds, std::function<VerificationReport(Profile)> run,
                          bool informational = false) {
        checks.push_back(TheoremCheck{std::move(id), kind, std::move(statement),
                                      std::move(bounds), informational, Profile::quick,
                                      std::move(run)});
    };

    addc("T1.1", CheckKind::pointwise_relation,
         "pbar_k(n) == 2^(m+1) (mod 2^(m+2)) exactly on squares for odd k, on squares and "
         "twice-squares for even k, where k = 2^m * odd; else == 0",
         "k in {1,2,3,4,6,12}, n <= 5000", run_t1_1);

    addc("T2.1", CheckKind::pointwise_relation,
         "pbar_k(n) (mod 2^m(k)) == -2k on even squares, 2k on odd squares, 2k(k+1) on twice "
         "squares, 0 else; m(k)=4 for k=0,3 (mod 4), else 3",
         "k in 1..8, n <= 10000", run_t2_1);
    addc("T2.2", CheckKind::pointwise_relation,
         "r2+(n) = r2(n)/4 - chi(n) for n >= 1 (positive-pair representations)",
         "n <= 2000", run_t2_2);
    addc("T2.3", CheckKind::pointwise_relation,
         "r2(n) == 4 (mod 8) iff n is a square or twice a square, else 0",
         "n <= 10000", run_t2_3);
    addc("INFO.2.3", CheckKind::density_count,
         "pbar_3(n) is divisible by 16 for almost all n (empirical frequency only)",
         "n <= table budget; informational", run_info_2_3, true);
    addc("T2.4", CheckKind::progression_divisibility,
         "pbar3(8n+r) == 0 (mod 2,8,16,2,16,16) for r = 1..6",
         "indices <= table budget", run_t2_4);
    addc("TIGHT.2.4", CheckKind::tightness,
         "each modulus in the 8n+r corollary is tight at the witnesses pbar3(1..6) = "
         "6,24,80,234,624,1552",
         "witnesses at n=0", run_tight_2_4);
    addc("T2.5", CheckKind::series_identity,
         "phi(q) = phi(q^4)+2q psi(q^8); phi^2 = phi(q^2)^2+4q psi(q^4)^2; phi(q)phi(-q) = "
         "phi(-q^2)^2; psi^2 = phi(q) psi(q^2)",
         "T = 500 exact", [](Profile pr) {
             return run_identity_group("T2.5", pr,
                                       {theta::IdentityId::phi_4dissect,
                                        theta::IdentityId::phi_sq_4dissect,
                                        theta::IdentityId::phi_phi_neg, theta::IdentityId::psi_sq});
         });
    addc("T2.6", CheckKind::series_identity, "phi(q)^4 - phi(-q)^4 = 16 q psi(q^2)^4",
         "T = 500 exact", [](Profile pr) {
             return run_identity_group("T2.6", pr, {theta::IdentityId::phi4_diff});
         });
    addc("T2.7", CheckKind::series_identity,
         "1/phi(-q) = (phi(q^4)^3 + 2q phi(q^4)^2 psi(q^8) + 4q^2 phi(q^4) psi(q^8)^2 + "
         "8q^3 psi(q^8)^3) / phi(-q^4)^4",
         "T = 500 exact", [](Profile pr) {
             return run_identity_group("T2.7", pr, {theta::IdentityId::inv_phi_neg_4});
         });
    addc("T2.8", CheckKind::progression_divisibility, "pbar3(16n+14) == 0 (mod 32)",
         "indices <= table budget", run_t2_8);
    addc("TIGHT.2.8", CheckKind::tightness,
         "pbar3(16n+14) mod 64 fails exactly at n=0: pbar3(14) = 535008 = 2^5*3*5573",
         "witness n=0, residue 32", [](Profile pr) {
             return run_tightness("TIGHT.2.8", pr, ProgressionCheck{16, 14, 64, 0, 0}, 0, 32);
         });
    addc("T2.9", CheckKind::progression_divisibility, "pbar3(8n+7) == 0 (mod 64)",
         "indices <= table budget", run_t2_9);
    addc("TIGHT.2.9", CheckKind::tightness,
         "pbar3(8n+7) mod 128 fails exactly at n=0: pbar3(7) = 3648 = 2^6*3*19",
         "witness n=0, residue 64", [](Profile pr) {
             return run_tightness("TIGHT.2.9", pr, ProgressionCheck{8, 7, 128, 0, 0}, 0, 64);
         });

    addc("T3.1", CheckKind::series_identity,
         "phi(q) = phi(q^9) + 2q B(-q^3); phi(q^3)^3 + 8q B(-q)^3 = phi(q)^4/phi(q^3)",
         "T = 500 exact", [](Profile pr) {
             return run_identity_group(
                 "T3.1", pr, {theta::IdentityId::phi_9dissect, theta::IdentityId::phi3_cube_id});
         });
    addc("T3.2", CheckKind::series_identity,
         "1/phi(q) = phi(q^9)/phi(q^3)^4 * (phi(q^9)^2 - 2q phi(q^9) B(-q^3) + 4q^2 B(-q^3)^2)",
         "T = 500 exact", [](Profile pr) {
             return run_identity_group("T3.2", pr, {theta::IdentityId::inv_phi_9});
         });
    addc("T3.3", CheckKind::series_identity,
         "(q;q)^p == (q^p;q^p) and phi(q)^p == phi(q^p) (mod p) for p in {3,5,7,11,13}",
         "T = 500 mod p", run_t3_3);
    addc("T3.4", CheckKind::series_identity,
         "sum pbar3(3n)(-q)^n == phi(q^3)/phi(q)^4 (mod 72); sum pbar3(3n+1)(-q)^n == "
         "6 phi(q^3)^4 B(-q)/phi(q)^8 (mod 144); sum pbar3(3n+2)(-q)^n == "
         "24 phi(q^3)^3 B(-q)^2/phi(q)^8 (mod 288)",
         "T = 1500", run_t3_4);
    addc("T3.5", CheckKind::progression_divisibility,
         "pbar3(3n+1) == 0 (mod 6) and pbar3(3n+2) == 0 (mod 24)", "n <= 30000", run_t3_5);
    addc("T3.6", CheckKind::series_identity,
         "sum pbar3(3^2a n)(-q)^n == phi(q^3)^4/phi(q)^7 and sum pbar3(3^(2a+1) n)(-q)^n == "
         "phi(q^3)^5/phi(q)^8 (mod 72), alpha in {1,2}",
         "T = 1500, table to 3^5 T", run_t3_6);
    addc("T3.7", CheckKind::progression_divisibility,
         "pbar3(3^(2a+1)(3n+2)) == 0 (mod 144), alpha in {1,2}",
         "n <= 300 (alpha=1), n <= 100 (alpha=2)", run_t3_7);
    addc("T3.8", CheckKind::density_count,
         "pbar3(n) divisible by 144 for at least 1/72 of all n (progression-union bound)",
         "N = 10^6 minus 2/sqrt(N) slack", [](Profile pr) {
             return run_density("T3.8", pr, DensityFamily::dens_144, 100000, 1000000, 144);
         });
    addc("T3.9", CheckKind::series_identity,
         "s^3 + q^3 t^3 = phi(q^3)^4/phi(q^9), s = phi(q^9), t = 2B(-q^3)", "T = 500 exact",
         [](Profile pr) { return run_identity_group("T3.9", pr, {theta::IdentityId::stone}); });
    addc("T3.10", CheckKind::series_identity,
         "1/phi(q) = phi(q^9)/phi(q^3)^4 * (s^2 - q s t + q^2 t^2)", "T = 500 exact",
         [](Profile pr) { return run_identity_group("T3.10", pr, {theta::IdentityId::sttwo}); });

    addc("T4.1", CheckKind::pointwise_relation,
         "pbar3(7n) == (-1)^n r3(n) (mod 7) for n >= 1", "n <= 3000", run_t4_1);
    addc("T4.2", CheckKind::pointwise_relation,
         "r4(pn) == r4(n) and r8(pn) == r8(n) (mod p) for odd primes p", "p in {3,5,7,11}, n <= 1000",
         run_t4_2);
    addc("T4.3", CheckKind::series_identity, "sum pbar3(7n)(-q)^n == phi(q)^3 (mod 7)",
         "T = 2000", run_t4_3);
    addc("T4.4", CheckKind::recurrence,
         "r3(p^2 n) + (-n/p) r3(n) + p r3(n/p^2) = (p+1) r3(n), exact",
         "p in {3,5,7,11,13}, n <= 500", run_t4_4);
    addc("T4.5", CheckKind::recurrence,
         "pbar3(7p^3 n) + p pbar3(7n/p) == (p+1) pbar3(7pn) (mod 7)",
         "p in {3,5}, indices <= table budget", run_t4_5);
    addc("T4.6", CheckKind::pointwise_relation,
         "pbar3(7p^(2k+1)N) == (p(p^k-1)/(p-1)+1) pbar3(7pN) (mod 7), N coprime to p",
         "p in {3,5}, k in {1,2}, indices <= table budget", run_t4_6);
    addc("T4.7", CheckKind::pointwise_relation,
         "pbar3(7*4^(a+1) n) == (-1)^n pbar3(7n) (mod 7) and pbar3(4^a(56n+49)) == 0 (mod 7)",
         "alpha <= 2, indices <= table budget", run_t4_7);
    addc("T4.8", CheckKind::progression_divisibility,
         "pbar3(7 p^(14a+13) N) == 0 (mod 7) for p == 1 (mod 7); pbar3(7 p^(12a+11) N) == 0 for "
         "p == 2..6 (mod 7); pbar3(7 p^3 N) == 0 for p == 6 (mod 7)",
         "direct 13^3 and (deep) 3^11 instances + coefficient and recurrence legs", run_t4_8);
    addc("T4.9", CheckKind::pointwise_relation,
         "pbar3(7^4 n) == pbar3(7^2 n) (mod 7); pbar3(7^(2a+1)(7n+r)) == 0 (mod 7), r in {3,5,6}",
         "n <= 40, alpha in {1,2}", run_t4_9);
    addc("T4.10", CheckKind::density_count,
         "pbar3(n) divisible by 7 for at least 1/784 of all n (progression-union bound)",
         "N = 10^7 minus 2/sqrt(N) slack", [](Profile pr) {
             return run_density("T4.10", pr, DensityFamily::dens_7, 1000000, 10000000, 7);
         });
    addc("T4.11", CheckKind::pointwise_relation,
         "pbar3(11n) == (-1)^n r7(n) (mod 11) for n >= 0", "n <= 2000", run_t4_11);
    addc("T4.12", CheckKind::recurrence,
         "r7(p^2 n) = (p^5 - p^2 (-n/p) + 1) r7(n) - p^5 r7(n/p^2), exact",
         "p in {3,5,7}, n <= 200", run_t4_12);
    addc("T4.13", CheckKind::recurrence,
         "pbar3(11 p^3 n) == (p^5+1) pbar3(11 p n) - p^5 pbar3(11 n/p) (mod 11)",
         "p in {3,5}, indices <= table budget", run_t4_13);
    addc("T4.14", CheckKind::pointwise_relation,
         "pbar3(11 p^(2k+1) N) == (p^5(p^(5k)-1)/(p^5-1)+1) pbar3(11pN) (mod 11), N coprime to p",
         "p in {3,5}, k in {1,2}, indices <= table budget", run_t4_14);
    addc("T4.15", CheckKind::progression_divisibility,
         "pbar3(11^3 n) == pbar3(11 n) (mod 11); pbar3(11 p^(22a+21) N) == 0 for p = 1,3,4,5,9 "
         "(mod 11); pbar3(11 p^(4a+3) N) == 0 for p = 2,6,7,8,10 (mod 11)",
         "pointwise n <= 75; direct 13^3, 7^3 instances + coefficient leg", run_t4_15);
    addc("T4.16", CheckKind::density_count,
         "pbar3(n) divisible by 11 for at least 1/4400 of all n (progression-union bound)",
         "N = 10^7 minus 2/sqrt(N) slack", [](Profile pr) {
             return run_density("T4.16", pr, DensityFamily::dens_11, 1000000, 10000000, 11);
         });

    return checks;
}

} // namespace

const std::vector<TheoremCheck>& registry() {
    static const std::vector<TheoremCheck> checks = build_registry();
    return checks;
}

const TheoremCheck* find_check(const std::string& id) {
    for (const auto& c : registry())
        if (c.id == id) return &c;
    return nullptr;
}

bool glob_match(const std::string& pattern, const std::string& text) {
    std::size_t p = 0, t = 0, star = std::string::npos, star_t = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
            ++p;
            ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            star_t = t;
        } else if (star != std::string::npos) {
            p = star + 1;
            t = ++star_t;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

std::vector<const TheoremCheck*> match_checks(const std::string& pattern) {
    std::vector<const TheoremCheck*> out;
    for (const auto& c : registry())
        if (glob_match(pattern, c.id)) out.push_back(&c);
    return out;
}

std::vector<VerificationReport> run_checks(const std::vector<const TheoremCheck*>& list,
                                           Profile profile, unsigned threads) {
    std::vector<VerificationReport> reports(list.size());
    auto run_one = [&](std::size_t i) {
        auto start = std::chrono::steady_clock::now();
        reports[i] = list[i]->run(profile);
        auto stop = std::chrono::steady_clock::now();
        reports[i].elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    };
    if (threads <= 1) {
        for (std::size_t i = 0; i < list.size(); ++i) run_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        unsigned count = std::min<unsigned>(threads, static_cast<unsigned>(list.size()));
        for (unsigned w = 0; w < count; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= reports.size()) return;
                    run_one(i);
                }
            });
        }
        for (auto& th : pool) th.join();
    }
    // Canonical order: registry declaration order.
    std::vector<std::size_t> order(list.size());
    std::iota(order.begin(), order.end(), 0);
    const auto& reg = registry();
    auto rank = [&reg](const TheoremCheck* c) {
        return static_cast<std::size_t>(c - reg.data());
    };
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return rank(list[a]) < rank(list[b]); });
    std::vector<VerificationReport> sorted;
    sorted.reserve(reports.size());
    for (std::size_t i : order) sorted.push_back(std::move(reports[i]));
    return sorted;
}

std::vector<VerificationReport> run_registry(const std::string& pattern, Profile profile,
                                             unsigned threads) {
    return run_checks(match_checks(pattern), profile, threads);
}

int verify_exit_code(const std::vector<VerificationReport>& reports, Profile profile) {
    for (const auto& r : reports) {
        const TheoremCheck* chk = find_check(r.id);
        if (chk && chk->informational) continue;
        if (r.status == CheckStatus::fail) return 1;
        if (r.status == CheckStatus::skipped_budget &&
            (!chk || static_cast<int>(profile) >= static_cast<int>(chk->promised_from)))
            return 1;
    }
    return 0;
}

} // namespace qsc::checks
