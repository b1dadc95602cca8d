#include <doctest.h>

#include "qsc/checks.hpp"
#include "qsc/counting.hpp"

using namespace qsc;
using namespace qsc::checks;

namespace {

const Series& p3_table_1152(std::size_t trunc) {
    static auto table =
        counting::overpartition_series(3, CoefficientRing::modular(1152), trunc);
    return table.series();
}

} // namespace

TEST_CASE("scan_progression on the two deep power-of-two congruences") {
    const Series& v = p3_table_1152(9000);

    auto ok32 = scan_progression(v, ProgressionCheck{16, 14, 32, 0, 0}, 500);
    CHECK(ok32.checked == 501);
    CHECK_FALSE(ok32.violation.has_value());

    auto ok64 = scan_progression(v, ProgressionCheck{8, 7, 64, 0, 0}, 500);
    CHECK(ok64.checked == 501);
    CHECK_FALSE(ok64.violation.has_value());

    // tightness twin: modulus doubled fails at n=0 with residue 32
    auto bad = scan_progression(v, ProgressionCheck{16, 14, 64, 0, 0}, 500);
    REQUIRE(bad.violation.has_value());
    CHECK(bad.violation->n == 0);
    CHECK(bad.violation->observed == 32);

    auto bad2 = scan_progression(v, ProgressionCheck{8, 7, 128, 0, 0}, 500);
    REQUIRE(bad2.violation.has_value());
    CHECK(bad2.violation->n == 0);
    CHECK(bad2.violation->observed == 64);
}

TEST_CASE("scan_progression respects filters and limits") {
    const Series& v = p3_table_1152(9000);
    ProgressionCheck pc{100, 0, 2, 1, 3}; // n coprime to 3 only
    auto o = scan_progression(v, pc, 10, 1000);
    // n in {1,2,4,5,7,8,10}: 10 excluded by the limit (100*10 <= 1000 ok) -> included
    CHECK(o.checked == 7);
    CHECK(o.max_index == 1000);
}

TEST_CASE("oracle spot check agrees with the table") {
    const Series& v = p3_table_1152(9000);
    CHECK_FALSE(oracle_spot_check(v, ProgressionCheck{8, 7, 64, 0, 0}, 49, 10).has_value());
}

TEST_CASE("residue_series reduces a composite table") {
    const Series& v = p3_table_1152(9000);
    Series mod6 = residue_series(v, 6, 100);
    CHECK(mod6.ring().modulus() == 6);
    CHECK(mod6.mod_at(1) == 0); // pbar3(1) = 6
    CHECK(mod6.mod_at(3) == 80 % 6);
    CHECK_THROWS_AS(residue_series(v, 5, 100), std::invalid_argument);
}

TEST_CASE("verify_recurrence: exact sums-of-squares recurrences") {
    auto hurwitz = verify_recurrence(RecurrenceId::r3_hurwitz, {3, 5, 7, 11, 13}, 500,
                                     169 * 500);
    CHECK(hurwitz.checked == 5 * 500);
    CHECK_FALSE(hurwitz.violation.has_value());

    auto shifted = verify_recurrence(RecurrenceId::r3_shifted, {3, 5}, 120, 125 * 120);
    CHECK(shifted.checked == 2 * 120);
    CHECK_FALSE(shifted.violation.has_value());

    auto cooper = verify_recurrence(RecurrenceId::r7_cooper, {3, 5, 7}, 200, 49 * 200);
    CHECK(cooper.checked == 3 * 200);
    CHECK_FALSE(cooper.violation.has_value());

    auto cooper_shifted = verify_recurrence(RecurrenceId::r7_shifted, {3, 5}, 60, 125 * 60);
    CHECK(cooper_shifted.checked == 2 * 60);
    CHECK_FALSE(cooper_shifted.violation.has_value());
}

TEST_CASE("verify_recurrence: overpartition forms mod 7 and mod 11") {
    auto rel7 = verify_recurrence(RecurrenceId::p3_7_rel, {3}, 150, 7 * 27 * 150);
    CHECK(rel7.checked == 150);
    CHECK_FALSE(rel7.violation.has_value());

    auto rel11 = verify_recurrence(RecurrenceId::p3_11_rel, {3}, 100, 11 * 27 * 100);
    CHECK(rel11.checked == 100);
    CHECK_FALSE(rel11.violation.has_value());

    CHECK_THROWS_AS(verify_recurrence(RecurrenceId::p3_7_rel, {4}, 10, 10000),
                    std::invalid_argument);
}

TEST_CASE("verify_iteration_coefficient families") {
    auto a = verify_iteration_coefficient(CoeffFamily::mod7_14a13, 29, 5);
    CHECK(a.checked == 6);
    CHECK_FALSE(a.violation.has_value());

    auto b = verify_iteration_coefficient(CoeffFamily::mod7_12a11, 3, 5);
    CHECK_FALSE(b.violation.has_value());

    auto c = verify_iteration_coefficient(CoeffFamily::mod11_22a21, 3, 5);
    CHECK_FALSE(c.violation.has_value());

    // wrong residue classes are rejected before any computation
    CHECK_THROWS_AS(verify_iteration_coefficient(CoeffFamily::mod7_14a13, 3, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_iteration_coefficient(CoeffFamily::mod7_12a11, 29, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_iteration_coefficient(CoeffFamily::mod11_22a21, 2, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_iteration_coefficient(CoeffFamily::mod11_22a21, 7, 2),
                    std::invalid_argument); // 7^5 = 10 != 1 (mod 11)
}

TEST_CASE("density_count membership arithmetic") {
    const Series& v = p3_table_1152(9000);
    // below 3^5*2 = 486 only the alpha=1 progression 81n+54 contributes:
    // members <= N count is floor((N-54)/81)+1 for N >= 54
    for (std::uint64_t N : {54ull, 80ull, 135ull, 400ull, 485ull}) {
        auto out = density_count(DensityFamily::dens_144, N, v, 144, 10, 9000);
        CHECK(out.members == (N - 54) / 81 + 1);
    }
    auto out = density_count(DensityFamily::dens_144, 53, v, 144, 10, 9000);
    CHECK(out.members == 0);
}

TEST_CASE("density_count fractions clear the stated bounds") {
    const Series& v = p3_table_1152(9000);
    auto d144 = density_count(DensityFamily::dens_144, 1000000, v, 144, 50, 9000);
    CHECK_FALSE(d144.violation.has_value());
    CHECK(d144.fraction >= 1.0 / 72.0 - 2.0 / 1000.0);
    CHECK(d144.members == 13889); // 12346+1372+152+17+2

    auto t7 = counting::overpartition_series(3, CoefficientRing::modular(7), 9000);
    auto d7 = density_count(DensityFamily::dens_7, 10000000, t7.series(), 7, 50, 9000);
    CHECK_FALSE(d7.violation.has_value());

    auto t11 = counting::overpartition_series(3, CoefficientRing::modular(11), 9000);
    auto d11 = density_count(DensityFamily::dens_11, 10000000, t11.series(), 11, 50, 9000);
    CHECK_FALSE(d11.violation.has_value());
}
