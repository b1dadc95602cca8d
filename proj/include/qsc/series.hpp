#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qsc/ring.hpp"

namespace qsc {

/// Dense truncated formal power series over an exact or modular
/// coefficient ring. Truncation order T retains exponents 0..T inclusive,
/// so there are always T+1 stored coefficients. Values are immutable
/// after construction as far as the public API is concerned; every
/// operation below is a pure function.
class Series {
public:
    /// Zero series with the given truncation order.
    Series(CoefficientRing ring, std::size_t trunc);

    const CoefficientRing& ring() const { return ring_; }
    std::size_t trunc() const { return trunc_; }
    std::size_t size() const { return trunc_ + 1; }

    // Raw typed access. mod_at/mod_data are valid for modular rings,
    // exact_at/exact_data for the exact ring.
    std::uint32_t mod_at(std::size_t n) const { return mod_[n]; }
    const mpz_class& exact_at(std::size_t n) const { return exact_[n]; }
    const std::vector<std::uint32_t>& mod_data() const { return mod_; }
    const std::vector<mpz_class>& exact_data() const { return exact_; }
    std::vector<std::uint32_t>& mod_data() { return mod_; }
    std::vector<mpz_class>& exact_data() { return exact_; }

    /// Ring-independent coefficient read (modular residues widen to mpz).
    mpz_class coeff(std::size_t n) const;

    bool is_zero() const;

private:
    CoefficientRing ring_;
    std::size_t trunc_;
    std::vector<std::uint32_t> mod_;  // modular rings, residues in [0, M)
    std::vector<mpz_class> exact_;    // exact ring
};

// --- construction -----------------------------------------------------

/// Series from (exponent, value) terms; zeros elsewhere. Values are
/// reduced into [0, M) in modular rings and stored exactly otherwise.
/// Throws std::out_of_range if an exponent exceeds trunc and
/// std::invalid_argument on duplicate exponents.
Series make_series(const CoefficientRing& ring,
                   std::initializer_list<std::pair<long long, long long>> terms,
                   std::size_t trunc);
Series make_series(const CoefficientRing& ring,
                   const std::vector<std::pair<long long, long long>>& terms,
                   std::size_t trunc);

Series series_zero(const CoefficientRing& ring, std::size_t trunc);
Series series_one(const CoefficientRing& ring, std::size_t trunc);

// --- ring operations ---------------------------------------------------

// Binary operations require matching rings and return min(Ta, Tb) truncation.
Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);

/// Cauchy product truncated to min(Ta, Tb). Dispatches between schoolbook,
/// sparse-operand and NTT paths; all paths produce identical coefficients.
Series mul(const Series& a, const Series& b);

/// Forced schoolbook convolution (contract/benchmark hook).
Series mul_schoolbook(const Series& a, const Series& b);

/// Forced NTT + CRT convolution. Returns nullopt when the coefficient
/// bound exceeds the prime pool (possible in the exact ring only).
std::optional<Series> try_mul_ntt(const Series& a, const Series& b);

/// Repeated-squaring power; pow(a, 0) = 1.
Series pow(const Series& a, unsigned long long e);

/// Multiplicative inverse up to trunc; requires a unit constant term
/// (gcd(a0, M) = 1 modularly, a0 = +-1 exactly). Algorithm choice
/// (direct recurrence vs Newton doubling over fast mul) never changes
/// the result.
Series invert(const Series& a);

/// Forced algorithm variants of invert (contract hooks).
Series invert_recurrence(const Series& a);
std::optional<Series> try_invert_newton(const Series& a);

/// Quotient numer / denom for unit-constant denom; equals
/// mul(numer, invert(denom)) coefficientwise.
Series div_unit(const Series& numer, const Series& denom);

/// b with b_n = a_{m n + r}; new truncation floor((T - r) / m).
/// Throws std::out_of_range for r >= m or r > T.
Series dissect(const Series& a, std::size_t m, std::size_t r);

/// q -> q^k substitution: coefficient of q^{k i} is a_i, zeros elsewhere,
/// with the explicitly chosen new truncation order.
Series inflate(const Series& a, std::size_t k, std::size_t new_trunc);

/// q -> -q substitution: b_n = (-1)^n a_n.
Series alternate_sign(const Series& a);

/// Coefficientwise reduction of an exact series into Z/M.
Series reduce_mod(const Series& a, std::uint32_t modulus);

/// Multiply by the scalar c (reduced in modular rings).
Series scale(const Series& a, long long c);

/// Multiply by q^k at unchanged truncation (top coefficients fall off).
Series shift(const Series& a, std::size_t k);

/// Prefix copy with a smaller (or equal) truncation order.
Series truncated(const Series& a, std::size_t new_trunc);

// --- queries ------------------------------------------------------------

/// Exact coefficient as an integer; throws std::out_of_range for n > T.
mpz_class coeff_at(const Series& a, std::size_t n);

struct SeriesMismatch {
    std::size_t index;
    mpz_class lhs;
    mpz_class rhs;
};

/// Coefficientwise comparison up to min(Ta, Tb); nullopt means equal,
/// otherwise the first mismatching exponent with both values.
std::optional<SeriesMismatch> series_mismatch(const Series& a, const Series& b);

bool series_equal(const Series& a, const Series& b);

/// Short human-readable rendering (diagnostics).
std::string to_string(const Series& a, std::size_t max_terms = 16);

} // namespace qsc
