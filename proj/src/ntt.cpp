#include "ntt.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#include "qsc/intmath.hpp"

namespace qsc::detail {

namespace {

// Montgomery arithmetic over a 31-bit prime (R = 2^32).
struct Mont32 {
    std::uint32_t p;
    std::uint32_t ninv; // -p^{-1} mod 2^32
    std::uint32_t r2;   // 2^64 mod p

    explicit Mont32(std::uint32_t prime) : p(prime) {
        std::uint32_t inv = p;
        for (int i = 0; i < 4; ++i) inv *= 2u - p * inv; // p*inv == 1 mod 2^32
        ninv = ~inv + 1u;
        std::uint64_t r = (~std::uint64_t(0)) % p + 1; // 2^64 mod p (r <= p here)
        r2 = static_cast<std::uint32_t>(r % p);
    }

    // t < p*2^32; returns t * 2^{-32} mod p
    std::uint32_t reduce(std::uint64_t t) const {
        std::uint32_t m = static_cast<std::uint32_t>(t) * ninv;
        std::uint64_t u = (t + std::uint64_t(m) * p) >> 32;
        return u >= p ? static_cast<std::uint32_t>(u - p) : static_cast<std::uint32_t>(u);
    }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return reduce(std::uint64_t(a) * b);
    }

    std::uint32_t to_mont(std::uint32_t a) const { return mul(a, r2); }
    std::uint32_t from_mont(std::uint32_t a) const { return reduce(a); }
    std::uint32_t one() const { return to_mont(1); }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p - b;
    }
};

// In-place radix-2 transform; values in the Montgomery domain.
void ntt_transform(std::vector<std::uint32_t>& a, const Mont32& mt, std::uint32_t g,
                   bool inverse) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        std::uint64_t w0 = pow_mod_u64(g, (mt.p - 1) / len, mt.p);
        if (inverse) w0 = pow_mod_u64(w0, mt.p - 2, mt.p);
        std::uint32_t wlen = mt.to_mont(static_cast<std::uint32_t>(w0));
        for (std::size_t i = 0; i < n; i += len) {
            std::uint32_t w = mt.one();
            for (std::size_t j = 0; j < len / 2; ++j) {
                std::uint32_t u = a[i + j];
                std::uint32_t v = mt.mul(a[i + j + len / 2], w);
                a[i + j] = mt.add(u, v);
                a[i + j + len / 2] = mt.sub(u, v);
                w = mt.mul(w, wlen);
            }
        }
    }
    if (inverse) {
        std::uint32_t n_inv =
            mt.to_mont(static_cast<std::uint32_t>(pow_mod_u64(n % mt.p, mt.p - 2, mt.p)));
        for (auto& v : a) v = mt.mul(v, n_inv);
    }
}

// Linear convolution of residue vectors modulo one pool prime.
// Inputs are plain residues < p; output is plain residues.
std::vector<std::uint32_t> conv_one_prime(const std::uint32_t* a, std::size_t la,
                                          const std::uint32_t* b, std::size_t lb,
                                          std::size_t out_len, const NttPrime& prime) {
    const Mont32 mt(prime.p);
    std::size_t need = std::min(out_len, la + lb - 1);
    std::size_t n = std::bit_ceil(std::max<std::size_t>(la + lb - 1, 2));
    std::vector<std::uint32_t> fa(n, 0), fb(n, 0);
    for (std::size_t i = 0; i < la; ++i) fa[i] = mt.to_mont(a[i] % prime.p);
    for (std::size_t i = 0; i < lb; ++i) fb[i] = mt.to_mont(b[i] % prime.p);
    ntt_transform(fa, mt, prime.g, false);
    ntt_transform(fb, mt, prime.g, false);
    for (std::size_t i = 0; i < n; ++i) fa[i] = mt.mul(fa[i], fb[i]);
    ntt_transform(fa, mt, prime.g, true);
    std::vector<std::uint32_t> out(need);
    for (std::size_t i = 0; i < need; ++i) out[i] = mt.from_mont(fa[i]);
    return out;
}

} // namespace

bool conv_ntt_len_ok(std::size_t la, std::size_t lb, std::size_t out_len) {
    if (la == 0 || lb == 0) return true;
    std::size_t full = la + lb - 1;
    (void)out_len;
    return std::bit_ceil(std::max<std::size_t>(full, 2)) <= ntt_max_len;
}

std::vector<std::uint32_t> conv_ntt_mod(const std::uint32_t* a, std::size_t la,
                                        const std::uint32_t* b, std::size_t lb,
                                        std::size_t out_len, std::uint32_t modulus) {
    std::vector<std::uint32_t> out(out_len, 0);
    if (la == 0 || lb == 0 || out_len == 0) return out;
    la = std::min(la, out_len);
    lb = std::min(lb, out_len);
    assert(conv_ntt_len_ok(la, lb, out_len));

    // True convolution values are bounded by (M-1)^2 * overlap.
    unsigned __int128 bound =
        (unsigned __int128)(modulus - 1) * (modulus - 1) * std::min(la, lb);
    std::size_t k = 1;
    unsigned __int128 prod = ntt_primes[0].p;
    while (prod <= bound) {
        prod *= ntt_primes[k].p;
        ++k;
    }
    assert(k <= 3); // (2^31)^2 * 2^23 fits three pool primes

    std::vector<std::vector<std::uint32_t>> res(k);
    for (std::size_t i = 0; i < k; ++i) res[i] = conv_one_prime(a, la, b, lb, out_len, ntt_primes[i]);

    std::size_t need = res[0].size();
    if (k == 1) {
        for (std::size_t i = 0; i < need; ++i) out[i] = res[0][i] % modulus;
        return out;
    }
    const std::uint64_t p0 = ntt_primes[0].p, p1 = ntt_primes[1].p;
    const std::uint64_t inv_p0_mod_p1 = inv_mod_u32(static_cast<std::uint32_t>(p0 % p1),
                                                    static_cast<std::uint32_t>(p1));
    if (k == 2) {
        for (std::size_t i = 0; i < need; ++i) {
            std::uint64_t r0 = res[0][i], r1 = res[1][i];
            std::uint64_t t = (r1 + p1 - r0 % p1) % p1 * inv_p0_mod_p1 % p1;
            std::uint64_t v = r0 + p0 * t; // < p0*p1 < 2^62
            out[i] = static_cast<std::uint32_t>(v % modulus);
        }
        return out;
    }
    const std::uint64_t p2 = ntt_primes[2].p;
    const std::uint64_t p0p1_mod_p2 = (unsigned __int128)p0 * p1 % p2;
    const std::uint64_t inv_p0p1_mod_p2 = inv_mod_u32(static_cast<std::uint32_t>(p0p1_mod_p2),
                                                      static_cast<std::uint32_t>(p2));
    for (std::size_t i = 0; i < need; ++i) {
        std::uint64_t r0 = res[0][i], r1 = res[1][i], r2v = res[2][i];
        std::uint64_t t1 = (r1 + p1 - r0 % p1) % p1 * inv_p0_mod_p1 % p1;
        std::uint64_t v01 = r0 + p0 * t1;
        std::uint64_t t2 = (r2v + p2 - v01 % p2) % p2 * inv_p0p1_mod_p2 % p2;
        unsigned __int128 v = (unsigned __int128)p0 * p1 * t2 + v01;
        out[i] = static_cast<std::uint32_t>(v % modulus);
    }
    return out;
}

std::optional<std::vector<mpz_class>> conv_ntt_exact(const mpz_class* a, std::size_t la,
                                                     const mpz_class* b, std::size_t lb,
                                                     std::size_t out_len) {
    std::vector<mpz_class> out(out_len, mpz_class(0));
    if (la == 0 || lb == 0 || out_len == 0) return out;
    la = std::min(la, out_len);
    lb = std::min(lb, out_len);
    if (!conv_ntt_len_ok(la, lb, out_len)) return std::nullopt;

    mpz_class max_a = 0, max_b = 0;
    for (std::size_t i = 0; i < la; ++i) {
        mpz_class v = abs(a[i]);
        if (v > max_a) max_a = v;
    }
    for (std::size_t i = 0; i < lb; ++i) {
        mpz_class v = abs(b[i]);
        if (v > max_b) max_b = v;
    }
    if (max_a == 0 || max_b == 0) return out;
    mpz_class bound = max_a * max_b * static_cast<unsigned long>(std::min(la, lb));

    std::size_t k = 0;
    mpz_class prod = 1;
    while (prod <= 2 * bound) {
        if (k == ntt_prime_count) return std::nullopt;
        prod *= ntt_primes[k].p;
        ++k;
    }

    std::size_t need = std::min(out_len, la + lb - 1);
    std::vector<std::vector<std::uint32_t>> res(k);
    std::vector<std::uint32_t> ra(la), rb(lb);
    for (std::size_t i = 0; i < k; ++i) {
        const std::uint32_t p = ntt_primes[i].p;
        for (std::size_t j = 0; j < la; ++j)
            ra[j] = static_cast<std::uint32_t>(mpz_fdiv_ui(a[j].get_mpz_t(), p));
        for (std::size_t j = 0; j < lb; ++j)
            rb[j] = static_cast<std::uint32_t>(mpz_fdiv_ui(b[j].get_mpz_t(), p));
        res[i] = conv_one_prime(ra.data(), la, rb.data(), lb, need, ntt_primes[i]);
    }

    // Garner reconstruction, then symmetric lift into (-prod/2, prod/2].
    std::vector<mpz_class> basis(k);
    basis[0] = 1;
    for (std::size_t i = 1; i < k; ++i) basis[i] = basis[i - 1] * ntt_primes[i - 1].p;
    std::vector<std::uint32_t> inv_basis(k, 0);
    for (std::size_t i = 1; i < k; ++i) {
        const std::uint32_t p = ntt_primes[i].p;
        inv_basis[i] = inv_mod_u32(
            static_cast<std::uint32_t>(mpz_fdiv_ui(basis[i].get_mpz_t(), p)), p);
    }
    mpz_class half = prod / 2;
    for (std::size_t idx = 0; idx < need; ++idx) {
        mpz_class x = res[0][idx];
        for (std::size_t i = 1; i < k; ++i) {
            const std::uint32_t p = ntt_primes[i].p;
            std::uint64_t xi = mpz_fdiv_ui(x.get_mpz_t(), p);
            std::uint64_t t = (res[i][idx] + p - xi) % p * inv_basis[i] % p;
            x += basis[i] * static_cast<unsigned long>(t);
        }
        if (x > half) x -= prod;
        out[idx] = std::move(x);
    }
    return out;
}

} // namespace qsc::detail
