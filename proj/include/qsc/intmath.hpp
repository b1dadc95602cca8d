#pragma once

#include <cstdint>

namespace qsc {

/// Exact floor(sqrt(n)) by integer Newton iteration (no floating point,
/// correct up to 2^64-1).
std::uint64_t isqrt_u64(std::uint64_t n);

bool is_square_u64(std::uint64_t n);

std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// Modular inverse of a modulo m, requires gcd(a, m) = 1.
std::uint32_t inv_mod_u32(std::uint32_t a, std::uint32_t m);

} // namespace qsc
