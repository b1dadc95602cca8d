#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include <gmpxx.h>

#include "qsc/series.hpp"

namespace qsc::counting {

/// Coefficient table of the overpartition k-tuple counting function:
/// values is 1/phi(-q)^k, so coefficient n is p̄_k(n) (or its residue).
struct OverpartitionTable {
    unsigned k;
    std::shared_ptr<const Series> values;
    const Series& series() const { return *values; }
};

/// Coefficient table of r_k(n): values is phi(q)^k.
struct SquaresTable {
    unsigned k;
    std::shared_ptr<const Series> values;
    const Series& series() const { return *values; }
};

/// Memoized table constructors. The returned table is at least as long as
/// requested (the process-wide memo keeps the largest table built per
/// (function, k, ring) and is safe for concurrent readers).
OverpartitionTable overpartition_series(unsigned k, const CoefficientRing& ring,
                                        std::size_t trunc);
SquaresTable rk_series(unsigned k, const CoefficientRing& ring, std::size_t trunc);

/// Drops all memoized tables (test isolation hook).
void clear_table_cache();

/// Independent oracle for p̄_k(n): expands the product
/// prod_j ((1+q^j)/(1-q^j))^k factor by factor over exact integers.
/// Desk scale only: k <= 16, n <= 2000, else budget_error.
mpz_class overpartition_oracle(unsigned k, std::uint64_t n);
std::vector<mpz_class> overpartition_oracle_table(unsigned k, std::uint64_t n_max);

/// Independent oracle for r_k(n): signed-lattice enumeration coordinate by
/// coordinate. Desk scale only: k <= 8, n <= 5000, else budget_error.
mpz_class rk_oracle(unsigned k, std::uint64_t n);
std::vector<mpz_class> rk_oracle_table(unsigned k, std::uint64_t n_max);

/// Representations n = i^2 + j^2 with i, j >= 1 (ordered pairs); n >= 1.
std::uint64_t r2_plus(std::uint64_t n);

/// 1 if n is a perfect square, else 0.
int chi(std::uint64_t n);

bool is_square(std::uint64_t n);
bool is_twice_square(std::uint64_t n);

/// r_2(n) = 4 * sum_{d | n, d odd} (-1)^((d-1)/2), n >= 1. Used as an
/// independent cross-check of the series and lattice routes for r_2 only.
std::int64_t r2_divisor_sum(std::uint64_t n);

struct ResidueClaim {
    std::uint64_t residue;
    std::uint64_t modulus;
};

/// Predicted p̄_k(n) mod 2^{m(k)} where m(k) = 4 for k = 0,3 (mod 4) and 3
/// otherwise: -2k at even squares, 2k at odd squares, 2k(k+1) at twice
/// squares, 0 elsewhere. n >= 1.
ResidueClaim mod2m_predicted(unsigned k, std::uint64_t n);

/// Predicted r_2(n) mod 8: 4 on squares and twice squares, else 0. n >= 1.
std::uint64_t r2_mod8_predicted(std::uint64_t n);

/// Legendre symbol (a/p) by Euler's criterion; p must be an odd prime.
int legendre(std::int64_t a, std::uint64_t p);

/// Predicted p̄_k(n) mod 2^{m+2} where k = 2^m * odd: 2^{m+1} on squares,
/// 2^{m+1} on twice squares when m >= 1 (0 when m = 0), else 0. n >= 1.
ResidueClaim keister_sellers_predicted(unsigned k, std::uint64_t n);

} // namespace qsc::counting
