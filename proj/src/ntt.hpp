#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace qsc::detail {

struct NttPrime {
    std::uint32_t p;
    std::uint32_t g;
};

// 31-bit primes p = c*2^k + 1 with k >= 23; transforms up to length 2^23.
// Primality and primitive roots are pinned by unit tests.
inline constexpr NttPrime ntt_primes[] = {
    {998244353u, 3u},   // 119*2^23 + 1
    {167772161u, 3u},   // 5*2^25 + 1
    {469762049u, 3u},   // 7*2^26 + 1
    {754974721u, 11u},  // 45*2^24 + 1
    {1224736769u, 3u},  // 73*2^24 + 1
    {2130706433u, 3u},  // 127*2^24 + 1
    {2013265921u, 31u}, // 15*2^27 + 1
};
inline constexpr std::size_t ntt_prime_count = sizeof(ntt_primes) / sizeof(ntt_primes[0]);
inline constexpr std::size_t ntt_max_len = std::size_t(1) << 23;

/// True linear-convolution length la+lb-1 (clipped to out_len) fits the pool.
bool conv_ntt_len_ok(std::size_t la, std::size_t lb, std::size_t out_len);

/// Integer convolution of residue vectors (entries < M < 2^31), exact over Z,
/// reduced mod M. out may be shorter or longer than la+lb-1 (zero padded).
std::vector<std::uint32_t> conv_ntt_mod(const std::uint32_t* a, std::size_t la,
                                        const std::uint32_t* b, std::size_t lb,
                                        std::size_t out_len, std::uint32_t modulus);

/// Exact integer convolution via CRT over the prime pool; nullopt when the
/// coefficient magnitude bound exceeds pool capacity.
std::optional<std::vector<mpz_class>> conv_ntt_exact(const mpz_class* a, std::size_t la,
                                                     const mpz_class* b, std::size_t lb,
                                                     std::size_t out_len);

} // namespace qsc::detail
