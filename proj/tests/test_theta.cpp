#include <doctest.h>

#include <cstdint>
#include <vector>

#include "qsc/series.hpp"
#include "qsc/theta.hpp"

using namespace qsc;
using namespace qsc::theta;

namespace {
const CoefficientRing kExact = CoefficientRing::exact();
}

TEST_CASE("phi_series") {
    Series phi = phi_series(kExact, 9);
    std::vector<long> expected{1, 2, 0, 0, 2, 0, 0, 0, 0, 2};
    for (std::size_t i = 0; i <= 9; ++i) CHECK(phi.coeff(i) == expected[i]);
    CHECK(phi_series(kExact, 0).coeff(0) == 1);

    // phi^2 generates r2: coefficient 25 counted by signed-pair enumeration
    Series sq = mul(phi_series(kExact, 25), phi_series(kExact, 25));
    long direct = 0;
    for (long x = -5; x <= 5; ++x)
        for (long y = -5; y <= 5; ++y)
            if (x * x + y * y == 25) ++direct;
    CHECK(direct == 12);
    CHECK(coeff_at(sq, 25) == direct);
}

TEST_CASE("psi_series") {
    Series psi = psi_series(kExact, 10);
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i <= 10; ++i)
        if (psi.coeff(i) != 0) support.push_back(i);
    CHECK(support == std::vector<std::size_t>{0, 1, 3, 6, 10});
    CHECK(coeff_at(psi, 2) == 0);

    // psi(q)^2 = phi(q) psi(q^2)
    Series lhs = pow(psi_series(kExact, 300), 2);
    Series rhs = mul(phi_series(kExact, 300), inflate(psi_series(kExact, 300), 2, 300));
    CHECK(series_equal(lhs, rhs));
}

TEST_CASE("s_series") {
    Series s = s_series(kExact, 5);
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i <= 5; ++i)
        if (s.coeff(i) != 0) support.push_back(i);
    CHECK(support == std::vector<std::size_t>{1, 4});

    Series one_plus_2s = add(series_one(kExact, 500), scale(s_series(kExact, 500), 2));
    CHECK(series_equal(one_plus_2s, phi_series(kExact, 500)));

    // S^2 counts positive-pair representations: coeff 2 -> only 1^2+1^2
    CHECK(coeff_at(pow(s_series(kExact, 10), 2), 2) == 1);
}

TEST_CASE("pochhammer_series") {
    // (q;q)_inf to T=8 against multiplying the finite product out directly
    Series p1 = pochhammer_series(1, kExact, 8);
    Series direct = series_one(kExact, 8);
    for (long long n = 1; n <= 8; ++n)
        direct = mul(direct, make_series(kExact, {{0, 1}, {n, -1}}, 8));
    CHECK(series_equal(p1, direct));
    std::vector<long> expected{1, -1, -1, 0, 0, 1, 0, 1, 0};
    for (std::size_t i = 0; i <= 8; ++i) CHECK(p1.coeff(i) == expected[i]);

    CHECK(series_equal(pochhammer_series(3, kExact, 2), series_one(kExact, 2)));

    CoefficientRing m5 = CoefficientRing::modular(5);
    CHECK(series_equal(pow(pochhammer_series(1, m5, 300), 5), pochhammer_series(5, m5, 300)));
}

TEST_CASE("b_series") {
    Series b = b_series(kExact, 600);
    CHECK(coeff_at(b, 0) == 1);

    // phi(q) - phi(q^9) - 2q B(-q^3) == 0
    Series phi = phi_series(kExact, 600);
    Series rest = sub(sub(phi, at_qk(phi, 9, 600)), shift(scale(at_minus_qk(b, 3, 600), 2), 1));
    CHECK(rest.is_zero());

    // phi(q^3)^3 + 8q B(-q)^3 == phi(q)^4 / phi(q^3)
    Series phi4 = phi_series(kExact, 400);
    Series lhs = add(pow(at_qk(phi4, 3, 400), 3),
                     shift(scale(pow(alternate_sign(b_series(kExact, 400)), 3), 8), 1));
    Series rhs = div_unit(pow(phi4, 4), at_qk(phi4, 3, 400));
    CHECK(series_equal(lhs, rhs));
}

TEST_CASE("builders are ring-agnostic") {
    const std::uint32_t m = 288;
    CoefficientRing mod = CoefficientRing::modular(m);
    CHECK(series_equal(reduce_mod(phi_series(kExact, 200), m), phi_series(mod, 200)));
    CHECK(series_equal(reduce_mod(psi_series(kExact, 200), m), psi_series(mod, 200)));
    CHECK(series_equal(reduce_mod(s_series(kExact, 200), m), s_series(mod, 200)));
    CHECK(series_equal(reduce_mod(pochhammer_series(2, kExact, 200), m),
                       pochhammer_series(2, mod, 200)));
    CHECK(series_equal(reduce_mod(b_series(kExact, 200), m), b_series(mod, 200)));
}

TEST_CASE("all thirteen identities hold at T=500") {
    const std::size_t T = 500;
    for (IdentityId id : all_identity_ids) {
        CAPTURE(identity_name(id));
        if (identity_needs_prime(id)) {
            for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
                CAPTURE(p);
                auto [lhs, rhs] = identity_sides(id, CoefficientRing::modular(p), T, p);
                CHECK_FALSE(series_mismatch(lhs, rhs).has_value());
            }
        } else {
            auto [lhs, rhs] = identity_sides(id, kExact, T);
            auto mm = series_mismatch(lhs, rhs);
            if (mm) {
                CAPTURE(mm->index);
                CAPTURE(mm->lhs.get_str());
                CAPTURE(mm->rhs.get_str());
            }
            CHECK_FALSE(mm.has_value());
        }
    }
}

TEST_CASE("identity_sides specific examples") {
    auto [l1, r1] = identity_sides(IdentityId::phi4_diff, kExact, 300);
    CHECK(series_equal(l1, r1));
    auto [l2, r2] = identity_sides(IdentityId::inv_phi_neg_4, kExact, 300);
    CHECK(series_equal(l2, r2));
    auto [l3, r3] = identity_sides(IdentityId::sttwo, kExact, 300);
    CHECK(series_equal(l3, r3));
}

TEST_CASE("identity_sides validates its inputs") {
    CHECK_THROWS_AS(identity_sides(IdentityId::euler_pochhammer_p, kExact, 50),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        identity_sides(IdentityId::phi_frobenius_p, CoefficientRing::modular(6), 50),
        std::invalid_argument); // 6 is not prime
    CHECK_THROWS_AS(
        identity_sides(IdentityId::euler_pochhammer_p, CoefficientRing::modular(7), 50, 5),
        std::invalid_argument); // prime parameter disagrees with the ring
    CHECK_THROWS_AS(identity_sides(IdentityId::stone, kExact, 50, 3), std::invalid_argument);
}
