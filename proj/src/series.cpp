#include "qsc/series.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>
#include <sstream>

#include "qsc/intmath.hpp"
#include "ntt.hpp"

namespace qsc {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

void require_same_ring(const Series& a, const Series& b, const char* op) {
    if (!(a.ring() == b.ring()))
        throw ring_mismatch_error(std::string(op) + ": ring mismatch (" + a.ring().describe() +
                                  " vs " + b.ring().describe() + ")");
}

u32 reduce_ll(long long v, u32 m) {
    long long r = v % static_cast<long long>(m);
    if (r < 0) r += m;
    return static_cast<u32>(r);
}

u32 reduce_mpz(const mpz_class& v, u32 m) {
    return static_cast<u32>(mpz_fdiv_ui(v.get_mpz_t(), m));
}

struct NonzeroList {
    std::vector<std::pair<std::size_t, u32>> terms;
};

NonzeroList nonzeros_mod(const u32* v, std::size_t len) {
    NonzeroList nz;
    for (std::size_t i = 0; i < len; ++i)
        if (v[i] != 0) nz.terms.emplace_back(i, v[i]);
    return nz;
}

// --- modular convolution kernels (exact over Z, then reduced mod M) ----

// M <= 65535 lets us defer reduction: min(la,lb) <= 2^23 partial products
// of size < 2^32 cannot overflow a u64 accumulator.
constexpr u32 kSmallModulus = 65535;

std::vector<u32> conv_school_mod(const u32* a, std::size_t la, const u32* b, std::size_t lb,
                                 std::size_t out_len, u32 m) {
    la = std::min(la, out_len);
    lb = std::min(lb, out_len);
    std::vector<u64> acc(out_len, 0);
    if (m <= kSmallModulus) {
        for (std::size_t i = 0; i < la; ++i) {
            u64 av = a[i];
            if (!av) continue;
            std::size_t jmax = std::min(lb, out_len - i);
            u64* row = acc.data() + i;
            for (std::size_t j = 0; j < jmax; ++j) row[j] += av * b[j];
        }
    } else {
        for (std::size_t i = 0; i < la; ++i) {
            u64 av = a[i];
            if (!av) continue;
            std::size_t jmax = std::min(lb, out_len - i);
            u64* row = acc.data() + i;
            for (std::size_t j = 0; j < jmax; ++j) row[j] = (row[j] + av * b[j]) % m;
        }
    }
    std::vector<u32> out(out_len);
    for (std::size_t i = 0; i < out_len; ++i) out[i] = static_cast<u32>(acc[i] % m);
    return out;
}

std::vector<u32> conv_sparse_mod(const NonzeroList& nza, const u32* b, std::size_t lb,
                                 std::size_t out_len, u32 m) {
    lb = std::min(lb, out_len);
    std::vector<u64> acc(out_len, 0);
    bool small = m <= kSmallModulus;
    for (auto [i, av] : nza.terms) {
        if (i >= out_len) break;
        std::size_t jmax = std::min(lb, out_len - i);
        u64* row = acc.data() + i;
        if (small) {
            for (std::size_t j = 0; j < jmax; ++j) row[j] += u64(av) * b[j];
        } else {
            for (std::size_t j = 0; j < jmax; ++j) row[j] = (row[j] + u64(av) * b[j]) % m;
        }
    }
    std::vector<u32> out(out_len);
    for (std::size_t i = 0; i < out_len; ++i) out[i] = static_cast<u32>(acc[i] % m);
    return out;
}

std::vector<u32> conv_pair_mod(const NonzeroList& nza, const NonzeroList& nzb,
                               std::size_t out_len, u32 m) {
    std::vector<u64> acc(out_len, 0);
    bool small = m <= kSmallModulus;
    for (auto [i, av] : nza.terms) {
        if (i >= out_len) break;
        for (auto [j, bv] : nzb.terms) {
            if (i + j >= out_len) break;
            if (small)
                acc[i + j] += u64(av) * bv;
            else
                acc[i + j] = (acc[i + j] + u64(av) * bv) % m;
        }
    }
    std::vector<u32> out(out_len);
    for (std::size_t i = 0; i < out_len; ++i) out[i] = static_cast<u32>(acc[i] % m);
    return out;
}

// --- exact convolution kernels ------------------------------------------

std::vector<mpz_class> conv_school_exact(const mpz_class* a, std::size_t la, const mpz_class* b,
                                         std::size_t lb, std::size_t out_len) {
    la = std::min(la, out_len);
    lb = std::min(lb, out_len);
    std::vector<mpz_class> out(out_len, mpz_class(0));
    for (std::size_t i = 0; i < la; ++i) {
        if (sgn(a[i]) == 0) continue;
        std::size_t jmax = std::min(lb, out_len - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            if (sgn(b[j]) == 0) continue;
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    return out;
}

// --- dispatch ------------------------------------------------------------

constexpr std::size_t kBasicKernelBudget = std::size_t(1) << 22;

std::vector<u32> conv_auto_mod(const u32* a, std::size_t la, const u32* b, std::size_t lb,
                               std::size_t out_len, u32 m) {
    la = std::min(la, out_len);
    lb = std::min(lb, out_len);
    if (la == 0 || lb == 0 || out_len == 0) return std::vector<u32>(out_len, 0);

    std::size_t nnz_a = 0, nnz_b = 0;
    for (std::size_t i = 0; i < la; ++i) nnz_a += a[i] != 0;
    for (std::size_t i = 0; i < lb; ++i) nnz_b += b[i] != 0;
    std::size_t cost_school = la * lb;
    std::size_t cost_sa = nnz_a * lb;
    std::size_t cost_sb = nnz_b * la;
    std::size_t cost_pair = nnz_a * nnz_b;
    std::size_t best = std::min({cost_school, cost_sa, cost_sb, cost_pair});

    if (best > kBasicKernelBudget && detail::conv_ntt_len_ok(la, lb, out_len)) {
        std::size_t n = std::bit_ceil(std::max<std::size_t>(la + lb - 1, 2));
        std::size_t cost_ntt = 8 * n * static_cast<std::size_t>(std::bit_width(n));
        if (cost_ntt < best) return detail::conv_ntt_mod(a, la, b, lb, out_len, m);
    }
    if (best == cost_pair)
        return conv_pair_mod(nonzeros_mod(a, la), nonzeros_mod(b, lb), out_len, m);
    if (best == cost_sa) return conv_sparse_mod(nonzeros_mod(a, la), b, lb, out_len, m);
    if (best == cost_sb) return conv_sparse_mod(nonzeros_mod(b, lb), a, la, out_len, m);
    return conv_school_mod(a, la, b, lb, out_len, m);
}

std::vector<mpz_class> conv_auto_exact(const mpz_class* a, std::size_t la, const mpz_class* b,
                                       std::size_t lb, std::size_t out_len) {
    la = std::min(la, out_len);
    lb = std::min(lb, out_len);
    if (la == 0 || lb == 0 || out_len == 0) return std::vector<mpz_class>(out_len, mpz_class(0));

    std::size_t nnz_a = 0, nnz_b = 0;
    for (std::size_t i = 0; i < la; ++i) nnz_a += sgn(a[i]) != 0;
    for (std::size_t i = 0; i < lb; ++i) nnz_b += sgn(b[i]) != 0;
    std::size_t best = std::min({la * lb, nnz_a * lb, nnz_b * la});

    if (best > kBasicKernelBudget && detail::conv_ntt_len_ok(la, lb, out_len)) {
        auto fast = detail::conv_ntt_exact(a, la, b, lb, out_len);
        if (fast) return std::move(*fast);
    }
    // Schoolbook with zero skipping already covers the sparse cases.
    return conv_school_exact(a, la, b, lb, out_len);
}

// --- inversion -----------------------------------------------------------

u32 unit_inverse_mod(u32 a0, u32 m) {
    u32 g = std::gcd(a0, m);
    if (g != 1)
        throw inversion_error("invert: constant term " + std::to_string(a0) +
                              " is not a unit, gcd(a0, M) = " + std::to_string(g) +
                              " with M = " + std::to_string(m));
    return inv_mod_u32(a0, m);
}

int unit_inverse_exact(const mpz_class& a0) {
    if (a0 == 1) return 1;
    if (a0 == -1) return -1;
    throw inversion_error("invert: exact-ring constant term must be +1 or -1, got " +
                          a0.get_str());
}

std::vector<u32> invert_rec_mod(const std::vector<u32>& a, std::size_t len, u32 m) {
    u32 a0inv = unit_inverse_mod(a[0], m);
    NonzeroList nz;
    for (std::size_t i = 1; i < std::min(a.size(), len); ++i)
        if (a[i] != 0) nz.terms.emplace_back(i, a[i]);
    std::vector<u32> c(len, 0);
    c[0] = a0inv;
    bool small = m <= kSmallModulus;
    for (std::size_t n = 1; n < len; ++n) {
        u64 s = 0;
        if (small) {
            for (auto [j, aj] : nz.terms) {
                if (j > n) break;
                s += u64(aj) * c[n - j];
            }
            s %= m;
        } else {
            for (auto [j, aj] : nz.terms) {
                if (j > n) break;
                s = (s + u64(aj) * c[n - j]) % m;
            }
        }
        c[n] = static_cast<u32>(u64(a0inv) * ((m - s) % m) % m);
    }
    return c;
}

std::vector<mpz_class> invert_rec_exact(const std::vector<mpz_class>& a, std::size_t len) {
    int a0 = unit_inverse_exact(a[0]);
    std::vector<std::size_t> nzidx;
    for (std::size_t i = 1; i < std::min(a.size(), len); ++i)
        if (sgn(a[i]) != 0) nzidx.push_back(i);
    std::vector<mpz_class> c(len, mpz_class(0));
    c[0] = a0;
    mpz_class s;
    for (std::size_t n = 1; n < len; ++n) {
        s = 0;
        for (std::size_t j : nzidx) {
            if (j > n) break;
            mpz_addmul(s.get_mpz_t(), a[j].get_mpz_t(), c[n - j].get_mpz_t());
        }
        if (a0 == 1)
            c[n] = -s;
        else
            c[n] = s;
    }
    return c;
}

std::vector<u32> invert_newton_mod(const std::vector<u32>& a, std::size_t len, u32 m) {
    std::vector<u32> x{unit_inverse_mod(a[0], m)};
    while (x.size() < len) {
        std::size_t nl = std::min(len, x.size() * 2);
        auto e = conv_auto_mod(a.data(), std::min(a.size(), nl), x.data(), x.size(), nl, m);
        // t = 2 - a*x (which is 1 + O(q^{|x|}))
        e[0] = (2u + m - e[0] % m) % m;
        for (std::size_t i = 1; i < nl; ++i) e[i] = e[i] ? m - e[i] : 0;
        x = conv_auto_mod(x.data(), x.size(), e.data(), nl, nl, m);
    }
    return x;
}

std::size_t recurrence_cost(const Series& a) {
    std::size_t len = a.size();
    std::size_t nnz = 0;
    if (a.ring().is_modular()) {
        for (std::size_t i = 1; i < len; ++i) nnz += a.mod_at(i) != 0;
    } else {
        for (std::size_t i = 1; i < len; ++i) nnz += sgn(a.exact_at(i)) != 0;
    }
    return len * std::max<std::size_t>(nnz, 1);
}

constexpr std::size_t kInvertNewtonThreshold = std::size_t(1) << 26;

} // namespace

// --- Series basics --------------------------------------------------------

Series::Series(CoefficientRing ring, std::size_t trunc) : ring_(ring), trunc_(trunc) {
    if (ring_.is_modular())
        mod_.assign(trunc + 1, 0);
    else
        exact_.assign(trunc + 1, mpz_class(0));
}

mpz_class Series::coeff(std::size_t n) const {
    if (ring_.is_modular()) return mpz_class(static_cast<unsigned long>(mod_[n]));
    return exact_[n];
}

bool Series::is_zero() const {
    if (ring_.is_modular()) return std::all_of(mod_.begin(), mod_.end(), [](u32 v) { return v == 0; });
    return std::all_of(exact_.begin(), exact_.end(), [](const mpz_class& v) { return sgn(v) == 0; });
}

Series series_zero(const CoefficientRing& ring, std::size_t trunc) {
    return Series(ring, trunc);
}

Series series_one(const CoefficientRing& ring, std::size_t trunc) {
    Series s(ring, trunc);
    if (ring.is_modular())
        s.mod_data()[0] = 1 % ring.modulus();
    else
        s.exact_data()[0] = 1;
    return s;
}

Series make_series(const CoefficientRing& ring,
                   const std::vector<std::pair<long long, long long>>& terms,
                   std::size_t trunc) {
    Series s(ring, trunc);
    std::vector<bool> seen(trunc + 1, false);
    for (const auto& [e, v] : terms) {
        if (e < 0 || static_cast<std::size_t>(e) > trunc)
            throw std::out_of_range("make_series: exponent " + std::to_string(e) +
                                    " outside 0.." + std::to_string(trunc));
        std::size_t idx = static_cast<std::size_t>(e);
        if (seen[idx])
            throw std::invalid_argument("make_series: duplicate exponent " + std::to_string(e));
        seen[idx] = true;
        if (ring.is_modular())
            s.mod_data()[idx] = reduce_ll(v, ring.modulus());
        else
            s.exact_data()[idx] = static_cast<long>(v); // LP64: long long fits long
    }
    return s;
}

Series make_series(const CoefficientRing& ring,
                   std::initializer_list<std::pair<long long, long long>> terms,
                   std::size_t trunc) {
    return make_series(ring, std::vector<std::pair<long long, long long>>(terms), trunc);
}

// --- add/sub ---------------------------------------------------------------

namespace {

template <typename F, typename G>
Series zip_series(const Series& a, const Series& b, F&& mod_op, G&& exact_op) {
    std::size_t t = std::min(a.trunc(), b.trunc());
    Series out(a.ring(), t);
    if (a.ring().is_modular()) {
        u32 m = a.ring().modulus();
        for (std::size_t i = 0; i <= t; ++i) out.mod_data()[i] = mod_op(a.mod_at(i), b.mod_at(i), m);
    } else {
        for (std::size_t i = 0; i <= t; ++i) out.exact_data()[i] = exact_op(a.exact_at(i), b.exact_at(i));
    }
    return out;
}

} // namespace

Series add(const Series& a, const Series& b) {
    require_same_ring(a, b, "add");
    return zip_series(
        a, b, [](u32 x, u32 y, u32 m) { return (x + y) % m; },
        [](const mpz_class& x, const mpz_class& y) { return mpz_class(x + y); });
}

Series sub(const Series& a, const Series& b) {
    require_same_ring(a, b, "sub");
    return zip_series(
        a, b, [](u32 x, u32 y, u32 m) { return (x + m - y) % m; },
        [](const mpz_class& x, const mpz_class& y) { return mpz_class(x - y); });
}

// --- mul --------------------------------------------------------------------

Series mul(const Series& a, const Series& b) {
    require_same_ring(a, b, "mul");
    std::size_t t = std::min(a.trunc(), b.trunc());
    Series out(a.ring(), t);
    if (a.ring().is_modular()) {
        out.mod_data() = conv_auto_mod(a.mod_data().data(), a.size(), b.mod_data().data(),
                                       b.size(), t + 1, a.ring().modulus());
    } else {
        out.exact_data() =
            conv_auto_exact(a.exact_data().data(), a.size(), b.exact_data().data(), b.size(), t + 1);
    }
    return out;
}

Series mul_schoolbook(const Series& a, const Series& b) {
    require_same_ring(a, b, "mul");
    std::size_t t = std::min(a.trunc(), b.trunc());
    Series out(a.ring(), t);
    if (a.ring().is_modular()) {
        out.mod_data() = conv_school_mod(a.mod_data().data(), a.size(), b.mod_data().data(),
                                         b.size(), t + 1, a.ring().modulus());
    } else {
        out.exact_data() =
            conv_school_exact(a.exact_data().data(), a.size(), b.exact_data().data(), b.size(), t + 1);
    }
    return out;
}

std::optional<Series> try_mul_ntt(const Series& a, const Series& b) {
    require_same_ring(a, b, "mul");
    std::size_t t = std::min(a.trunc(), b.trunc());
    std::size_t la = std::min(a.size(), t + 1), lb = std::min(b.size(), t + 1);
    if (!detail::conv_ntt_len_ok(la, lb, t + 1)) return std::nullopt;
    Series out(a.ring(), t);
    if (a.ring().is_modular()) {
        out.mod_data() = detail::conv_ntt_mod(a.mod_data().data(), la, b.mod_data().data(), lb,
                                              t + 1, a.ring().modulus());
        return out;
    }
    auto r = detail::conv_ntt_exact(a.exact_data().data(), la, b.exact_data().data(), lb, t + 1);
    if (!r) return std::nullopt;
    out.exact_data() = std::move(*r);
    return out;
}

Series pow(const Series& a, unsigned long long e) {
    Series result = series_one(a.ring(), a.trunc());
    if (e == 0) return result;
    Series base = a;
    for (;;) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (!e) break;
        base = mul(base, base);
    }
    return result;
}

// --- invert / divide ---------------------------------------------------------

Series invert_recurrence(const Series& a) {
    Series out(a.ring(), a.trunc());
    if (a.ring().is_modular())
        out.mod_data() = invert_rec_mod(a.mod_data(), a.size(), a.ring().modulus());
    else
        out.exact_data() = invert_rec_exact(a.exact_data(), a.size());
    return out;
}

std::optional<Series> try_invert_newton(const Series& a) {
    if (!a.ring().is_modular()) return std::nullopt; // exact ring uses the recurrence
    if (!detail::conv_ntt_len_ok(a.size(), a.size(), a.size())) return std::nullopt;
    Series out(a.ring(), a.trunc());
    out.mod_data() = invert_newton_mod(a.mod_data(), a.size(), a.ring().modulus());
    return out;
}

Series invert(const Series& a) {
    if (a.ring().is_modular() && recurrence_cost(a) > kInvertNewtonThreshold) {
        auto fast = try_invert_newton(a);
        if (fast) return std::move(*fast);
    }
    return invert_recurrence(a);
}

Series div_unit(const Series& numer, const Series& denom) {
    require_same_ring(numer, denom, "div_unit");
    std::size_t t = std::min(numer.trunc(), denom.trunc());
    if (denom.ring().is_modular() && recurrence_cost(denom) > kInvertNewtonThreshold)
        return mul(truncated(numer, t), invert(truncated(denom, t)));

    std::size_t len = t + 1;
    Series out(numer.ring(), t);
    if (numer.ring().is_modular()) {
        u32 m = numer.ring().modulus();
        u32 a0inv = unit_inverse_mod(denom.mod_at(0), m);
        NonzeroList nz;
        for (std::size_t i = 1; i < std::min(denom.size(), len); ++i)
            if (denom.mod_at(i) != 0) nz.terms.emplace_back(i, denom.mod_at(i));
        auto& c = out.mod_data();
        bool small = m <= kSmallModulus;
        for (std::size_t n = 0; n < len; ++n) {
            u64 s = 0;
            if (small) {
                for (auto [j, aj] : nz.terms) {
                    if (j > n) break;
                    s += u64(aj) * c[n - j];
                }
                s %= m;
            } else {
                for (auto [j, aj] : nz.terms) {
                    if (j > n) break;
                    s = (s + u64(aj) * c[n - j]) % m;
                }
            }
            u64 rhs = (numer.mod_at(n) + m - static_cast<u32>(s)) % m;
            c[n] = static_cast<u32>(u64(a0inv) * rhs % m);
        }
    } else {
        int a0 = unit_inverse_exact(denom.exact_at(0));
        std::vector<std::size_t> nzidx;
        for (std::size_t i = 1; i < std::min(denom.size(), len); ++i)
            if (sgn(denom.exact_at(i)) != 0) nzidx.push_back(i);
        auto& c = out.exact_data();
        mpz_class s;
        for (std::size_t n = 0; n < len; ++n) {
            s = 0;
            for (std::size_t j : nzidx) {
                if (j > n) break;
                mpz_addmul(s.get_mpz_t(), denom.exact_at(j).get_mpz_t(), c[n - j].get_mpz_t());
            }
            s = numer.exact_at(n) - s;
            c[n] = a0 == 1 ? s : mpz_class(-s);
        }
    }
    return out;
}

// --- structural operators ------------------------------------------------

Series dissect(const Series& a, std::size_t m, std::size_t r) {
    if (m == 0) throw std::invalid_argument("dissect: m must be positive");
    if (r >= m)
        throw std::out_of_range("dissect: residue r = " + std::to_string(r) +
                                " must satisfy r < m = " + std::to_string(m));
    if (r > a.trunc())
        throw std::out_of_range("dissect: offset r exceeds truncation order");
    std::size_t t = (a.trunc() - r) / m;
    Series out(a.ring(), t);
    if (a.ring().is_modular()) {
        for (std::size_t n = 0; n <= t; ++n) out.mod_data()[n] = a.mod_at(m * n + r);
    } else {
        for (std::size_t n = 0; n <= t; ++n) out.exact_data()[n] = a.exact_at(m * n + r);
    }
    return out;
}

Series inflate(const Series& a, std::size_t k, std::size_t new_trunc) {
    if (k == 0) throw std::invalid_argument("inflate: k must be positive");
    Series out(a.ring(), new_trunc);
    std::size_t imax = std::min(a.trunc(), new_trunc / k);
    if (a.ring().is_modular()) {
        for (std::size_t i = 0; i <= imax; ++i) out.mod_data()[k * i] = a.mod_at(i);
    } else {
        for (std::size_t i = 0; i <= imax; ++i) out.exact_data()[k * i] = a.exact_at(i);
    }
    return out;
}

Series alternate_sign(const Series& a) {
    Series out = a;
    if (a.ring().is_modular()) {
        u32 m = a.ring().modulus();
        for (std::size_t i = 1; i <= a.trunc(); i += 2) {
            u32 v = out.mod_data()[i];
            out.mod_data()[i] = v ? m - v : 0;
        }
    } else {
        for (std::size_t i = 1; i <= a.trunc(); i += 2) out.exact_data()[i] = -out.exact_data()[i];
    }
    return out;
}

Series reduce_mod(const Series& a, std::uint32_t modulus) {
    if (!a.ring().is_exact())
        throw std::invalid_argument("reduce_mod: input must be an exact-ring series");
    Series out(CoefficientRing::modular(modulus), a.trunc());
    for (std::size_t i = 0; i <= a.trunc(); ++i)
        out.mod_data()[i] = reduce_mpz(a.exact_at(i), modulus);
    return out;
}

Series scale(const Series& a, long long c) {
    Series out = a;
    if (a.ring().is_modular()) {
        u32 m = a.ring().modulus();
        u32 cv = reduce_ll(c, m);
        for (auto& v : out.mod_data()) v = static_cast<u32>(u64(v) * cv % m);
    } else {
        for (auto& v : out.exact_data()) v *= static_cast<long>(c);
    }
    return out;
}

Series shift(const Series& a, std::size_t k) {
    Series out(a.ring(), a.trunc());
    if (k > a.trunc()) return out;
    if (a.ring().is_modular()) {
        for (std::size_t i = k; i <= a.trunc(); ++i) out.mod_data()[i] = a.mod_at(i - k);
    } else {
        for (std::size_t i = k; i <= a.trunc(); ++i) out.exact_data()[i] = a.exact_at(i - k);
    }
    return out;
}

Series truncated(const Series& a, std::size_t new_trunc) {
    if (new_trunc >= a.trunc()) return a;
    Series out(a.ring(), new_trunc);
    if (a.ring().is_modular())
        std::copy_n(a.mod_data().begin(), new_trunc + 1, out.mod_data().begin());
    else
        std::copy_n(a.exact_data().begin(), new_trunc + 1, out.exact_data().begin());
    return out;
}

// --- queries ----------------------------------------------------------------

mpz_class coeff_at(const Series& a, std::size_t n) {
    if (n > a.trunc())
        throw std::out_of_range("coeff_at: index " + std::to_string(n) + " exceeds trunc " +
                                std::to_string(a.trunc()));
    return a.coeff(n);
}

std::optional<SeriesMismatch> series_mismatch(const Series& a, const Series& b) {
    require_same_ring(a, b, "series_equal");
    std::size_t t = std::min(a.trunc(), b.trunc());
    if (a.ring().is_modular()) {
        for (std::size_t i = 0; i <= t; ++i)
            if (a.mod_at(i) != b.mod_at(i))
                return SeriesMismatch{i, mpz_class(static_cast<unsigned long>(a.mod_at(i))),
                                      mpz_class(static_cast<unsigned long>(b.mod_at(i)))};
    } else {
        for (std::size_t i = 0; i <= t; ++i)
            if (a.exact_at(i) != b.exact_at(i)) return SeriesMismatch{i, a.exact_at(i), b.exact_at(i)};
    }
    return std::nullopt;
}

bool series_equal(const Series& a, const Series& b) {
    return !series_mismatch(a, b).has_value();
}

std::string to_string(const Series& a, std::size_t max_terms) {
    std::ostringstream os;
    os << "[" << a.ring().describe() << ", T=" << a.trunc() << "]";
    std::size_t shown = 0;
    for (std::size_t i = 0; i <= a.trunc() && shown < max_terms; ++i) {
        mpz_class v = a.coeff(i);
        if (sgn(v) == 0) continue;
        os << (shown ? " + " : " ") << v.get_str() << "*q^" << i;
        ++shown;
    }
    if (shown == 0) os << " 0";
    return os.str();
}

} // namespace qsc
