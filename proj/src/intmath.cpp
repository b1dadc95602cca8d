#include "qsc/intmath.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace qsc {

std::uint64_t isqrt_u64(std::uint64_t n) {
    if (n < 2) return n;
    // Start from 2^ceil(bits/2) >= sqrt(n); Newton from above lands on the floor.
    unsigned bits = 64u - static_cast<unsigned>(std::countl_zero(n));
    std::uint64_t x = std::uint64_t(1) << ((bits + 1) / 2);
    for (;;) {
        std::uint64_t y = (x + n / x) >> 1;
        if (y >= x) return x;
        x = y;
    }
}

bool is_square_u64(std::uint64_t n) {
    std::uint64_t r = isqrt_u64(n);
    return r * r == n;
}

std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    if (mod == 1) return 0;
    unsigned __int128 result = 1;
    unsigned __int128 b = base % mod;
    while (exp > 0) {
        if (exp & 1) result = result * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(result);
}

namespace {

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, int r) {
    std::uint64_t x = pow_mod_u64(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < r; ++i) {
        x = static_cast<std::uint64_t>((unsigned __int128)x * x % n);
        if (x == n - 1) return false;
    }
    return true; // composite witness
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // This base set is deterministic for all 64-bit integers.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (miller_rabin_witness(n, a, d, r)) return false;
    }
    return true;
}

std::uint32_t inv_mod_u32(std::uint32_t a, std::uint32_t m) {
    // Extended Euclid on signed 64-bit.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = m, new_r = a % m;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::invalid_argument("inv_mod_u32: argument not invertible");
    if (t < 0) t += m;
    return static_cast<std::uint32_t>(t);
}

} // namespace qsc
