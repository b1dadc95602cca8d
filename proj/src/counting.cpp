#include "qsc/counting.hpp"

#include <bit>
#include <cassert>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>

#include "qsc/intmath.hpp"
#include "qsc/theta.hpp"

namespace qsc::counting {

namespace {

constexpr std::size_t kMaxTableTrunc = std::size_t(1) << 21;
constexpr unsigned kMaxTupleSize = 64;

struct TableKey {
    char fn; // 'o' = overpartition, 'r' = sums of squares
    unsigned k;
    bool modular;
    std::uint32_t modulus;

    auto operator<=>(const TableKey&) const = default;
};

std::shared_mutex table_mutex;
std::map<TableKey, std::shared_ptr<const Series>> table_cache;

TableKey key_for(char fn, unsigned k, const CoefficientRing& ring) {
    return TableKey{fn, k, ring.is_modular(), ring.is_modular() ? ring.modulus() : 0};
}

std::shared_ptr<const Series> build_overpartition(unsigned k, const CoefficientRing& ring,
                                                  std::size_t trunc) {
    // 1/phi(-q)^k, assembled as pow(invert(phi(-q)), k); the power-series
    // inverse is unique, so this matches invert(pow(phi(-q), k)) exactly.
    Series base = invert(alternate_sign(theta::phi_series(ring, trunc)));
    auto table = std::make_shared<Series>(pow(base, k));
    assert(table->coeff(0) == 1);
    return table;
}

std::shared_ptr<const Series> build_rk(unsigned k, const CoefficientRing& ring,
                                       std::size_t trunc) {
    auto table = std::make_shared<Series>(pow(theta::phi_series(ring, trunc), k));
    assert(table->coeff(0) == 1);
    return table;
}

std::shared_ptr<const Series> table_lookup(char fn, unsigned k, const CoefficientRing& ring,
                                           std::size_t trunc) {
    if (k == 0 || k > kMaxTupleSize)
        throw std::invalid_argument("table: k must be in 1.." + std::to_string(kMaxTupleSize));
    if (trunc > kMaxTableTrunc)
        throw budget_error("table: requested trunc " + std::to_string(trunc) +
                           " exceeds the build budget " + std::to_string(kMaxTableTrunc));
    TableKey key = key_for(fn, k, ring);
    {
        std::shared_lock lock(table_mutex);
        auto it = table_cache.find(key);
        if (it != table_cache.end() && it->second->trunc() >= trunc) return it->second;
    }
    std::unique_lock lock(table_mutex);
    auto it = table_cache.find(key);
    if (it != table_cache.end() && it->second->trunc() >= trunc) return it->second;
    auto built = fn == 'o' ? build_overpartition(k, ring, trunc) : build_rk(k, ring, trunc);
    table_cache[key] = built;
    return built;
}

} // namespace

OverpartitionTable overpartition_series(unsigned k, const CoefficientRing& ring,
                                        std::size_t trunc) {
    return OverpartitionTable{k, table_lookup('o', k, ring, trunc)};
}

SquaresTable rk_series(unsigned k, const CoefficientRing& ring, std::size_t trunc) {
    return SquaresTable{k, table_lookup('r', k, ring, trunc)};
}

void clear_table_cache() {
    std::unique_lock lock(table_mutex);
    table_cache.clear();
}

std::vector<mpz_class> overpartition_oracle_table(unsigned k, std::uint64_t n_max) {
    if (k == 0 || k > 16)
        throw budget_error("overpartition_oracle: k must be in 1..16, got " + std::to_string(k));
    if (n_max > 2000)
        throw budget_error("overpartition_oracle: n <= 2000 is the desk-scale budget, got " +
                           std::to_string(n_max));
    std::size_t n = static_cast<std::size_t>(n_max);
    std::vector<mpz_class> c(n + 1, mpz_class(0));
    c[0] = 1;
    for (std::size_t j = 1; j <= n; ++j) {
        for (unsigned copy = 0; copy < k; ++copy) {
            // Multiply by (1+q^j)/(1-q^j) = 1 + 2q^j + 2q^{2j} + ...
            // ascending pass: partial sums along the residue class (1/(1-q^j)),
            // descending pass: one more shifted add (1+q^j).
            for (std::size_t i = j; i <= n; ++i) c[i] += c[i - j];
            for (std::size_t i = n; i >= j; --i) {
                c[i] += c[i - j];
                if (i == j) break;
            }
        }
    }
    return c;
}

mpz_class overpartition_oracle(unsigned k, std::uint64_t n) {
    return overpartition_oracle_table(k, n).back();
}

std::vector<mpz_class> rk_oracle_table(unsigned k, std::uint64_t n_max) {
    if (k == 0 || k > 8)
        throw budget_error("rk_oracle: k must be in 1..8, got " + std::to_string(k));
    if (n_max > 5000)
        throw budget_error("rk_oracle: n <= 5000 is the desk-scale budget, got " +
                           std::to_string(n_max));
    std::size_t n = static_cast<std::size_t>(n_max);
    std::vector<mpz_class> counts(n + 1, mpz_class(0));
    counts[0] = 1;
    for (unsigned coord = 0; coord < k; ++coord) {
        std::vector<mpz_class> next(n + 1, mpz_class(0));
        for (std::uint64_t x = 0; x * x <= n; ++x) {
            std::size_t sq = static_cast<std::size_t>(x * x);
            int weight = x == 0 ? 1 : 2; // signed coordinate values +-x
            for (std::size_t m = sq; m <= n; ++m) {
                if (weight == 1)
                    next[m] += counts[m - sq];
                else
                    mpz_addmul_ui(next[m].get_mpz_t(), counts[m - sq].get_mpz_t(), 2);
            }
        }
        counts = std::move(next);
    }
    return counts;
}

mpz_class rk_oracle(unsigned k, std::uint64_t n) {
    return rk_oracle_table(k, n).back();
}

std::uint64_t r2_plus(std::uint64_t n) {
    if (n == 0) throw std::domain_error("r2_plus: defined for n >= 1 only");
    std::uint64_t count = 0;
    for (std::uint64_t i = 1; i * i < n; ++i) {
        std::uint64_t rest = n - i * i;
        if (is_square_u64(rest) && rest > 0) ++count;
    }
    return count;
}

int chi(std::uint64_t n) { return is_square_u64(n) ? 1 : 0; }

bool is_square(std::uint64_t n) { return is_square_u64(n); }

bool is_twice_square(std::uint64_t n) { return n % 2 == 0 && is_square_u64(n / 2); }

std::int64_t r2_divisor_sum(std::uint64_t n) {
    if (n == 0) throw std::domain_error("r2_divisor_sum: defined for n >= 1 only");
    std::int64_t sum = 0;
    auto account = [&sum](std::uint64_t d) {
        if (d % 2 == 0) return;
        sum += (d % 4 == 1) ? 1 : -1;
    };
    for (std::uint64_t i = 1; i * i <= n; ++i) {
        if (n % i != 0) continue;
        account(i);
        if (i != n / i) account(n / i);
    }
    return 4 * sum;
}

ResidueClaim mod2m_predicted(unsigned k, std::uint64_t n) {
    if (k == 0) throw std::invalid_argument("mod2m_predicted: k must be positive");
    if (n == 0) throw std::domain_error("mod2m_predicted: the case table starts at n = 1");
    unsigned m = (k % 4 == 0 || k % 4 == 3) ? 4 : 3;
    std::uint64_t modulus = std::uint64_t(1) << m;
    std::uint64_t kk = k;
    std::uint64_t residue = 0;
    if (is_square(n)) {
        std::uint64_t root = isqrt_u64(n);
        residue = root % 2 == 0 ? (modulus - 2 * kk % modulus) % modulus : 2 * kk % modulus;
    } else if (is_twice_square(n)) {
        residue = 2 * kk % modulus * ((kk + 1) % modulus) % modulus;
    }
    return ResidueClaim{residue, modulus};
}

std::uint64_t r2_mod8_predicted(std::uint64_t n) {
    if (n == 0) throw std::domain_error("r2_mod8_predicted: defined for n >= 1 only");
    return (is_square(n) || is_twice_square(n)) ? 4 : 0;
}

int legendre(std::int64_t a, std::uint64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
        throw std::invalid_argument("legendre: p = " + std::to_string(p) +
                                    " is not an odd prime");
    std::int64_t r = a % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    if (r == 0) return 0;
    std::uint64_t e = pow_mod_u64(static_cast<std::uint64_t>(r), (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

ResidueClaim keister_sellers_predicted(unsigned k, std::uint64_t n) {
    if (k == 0) throw std::invalid_argument("keister_sellers_predicted: k must be positive");
    if (n == 0) throw std::domain_error("keister_sellers_predicted: defined for n >= 1 only");
    unsigned m = static_cast<unsigned>(std::countr_zero(k));
    std::uint64_t modulus = std::uint64_t(1) << (m + 2);
    std::uint64_t residue = 0;
    // The twice-square case carries the 2^{m+1} residue only for even k;
    // for odd k the S(q)^2 term already vanishes mod 2^{m+2} = 4.
    if (is_square(n))
        residue = std::uint64_t(1) << (m + 1);
    else if (is_twice_square(n) && m >= 1)
        residue = std::uint64_t(1) << (m + 1);
    return ResidueClaim{residue, modulus};
}

} // namespace qsc::counting
