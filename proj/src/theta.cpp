#include "qsc/theta.hpp"

#include <stdexcept>

#include "qsc/intmath.hpp"

namespace qsc::theta {

namespace {

void set_coeff(Series& s, std::size_t idx, long long v) {
    if (s.ring().is_modular()) {
        long long m = s.ring().modulus();
        long long r = v % m;
        if (r < 0) r += m;
        s.mod_data()[idx] = static_cast<std::uint32_t>(r);
    } else {
        s.exact_data()[idx] = static_cast<long>(v);
    }
}

} // namespace

Series phi_series(const CoefficientRing& ring, std::size_t trunc) {
    Series s(ring, trunc);
    set_coeff(s, 0, 1);
    for (std::size_t n = 1; n * n <= trunc; ++n) set_coeff(s, n * n, 2);
    return s;
}

Series psi_series(const CoefficientRing& ring, std::size_t trunc) {
    Series s(ring, trunc);
    for (std::size_t n = 0;; ++n) {
        std::size_t t = n * (n + 1) / 2;
        if (t > trunc) break;
        set_coeff(s, t, 1);
    }
    return s;
}

Series s_series(const CoefficientRing& ring, std::size_t trunc) {
    Series s(ring, trunc);
    for (std::size_t n = 1; n * n <= trunc; ++n) set_coeff(s, n * n, 1);
    return s;
}

Series pochhammer_series(std::uint64_t k, const CoefficientRing& ring, std::size_t trunc) {
    if (k == 0) throw std::invalid_argument("pochhammer_series: k must be positive");
    Series s = series_one(ring, trunc);
    // Multiply by (1 - q^{k n}) in place, highest exponent first.
    if (ring.is_modular()) {
        auto& c = s.mod_data();
        std::uint32_t m = ring.modulus();
        for (std::uint64_t n = 1; k * n <= trunc; ++n) {
            std::size_t step = static_cast<std::size_t>(k * n);
            for (std::size_t j = trunc; j >= step; --j) {
                c[j] = (c[j] + m - c[j - step]) % m;
                if (j == step) break;
            }
        }
    } else {
        auto& c = s.exact_data();
        for (std::uint64_t n = 1; k * n <= trunc; ++n) {
            std::size_t step = static_cast<std::size_t>(k * n);
            for (std::size_t j = trunc; j >= step; --j) {
                c[j] -= c[j - step];
                if (j == step) break;
            }
        }
    }
    return s;
}

Series b_series(const CoefficientRing& ring, std::size_t trunc) {
    Series num = mul(pochhammer_series(1, ring, trunc),
                     pow(pochhammer_series(6, ring, trunc), 2));
    Series den = mul(pochhammer_series(2, ring, trunc), pochhammer_series(3, ring, trunc));
    return div_unit(num, den);
}

Series at_qk(const Series& f, std::size_t k, std::size_t trunc) {
    return inflate(f, k, trunc);
}

Series at_minus_qk(const Series& f, std::size_t k, std::size_t trunc) {
    return inflate(alternate_sign(f), k, trunc);
}

std::string identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::phi_4dissect: return "phi_4dissect";
        case IdentityId::phi_sq_4dissect: return "phi_sq_4dissect";
        case IdentityId::phi_phi_neg: return "phi_phi_neg";
        case IdentityId::psi_sq: return "psi_sq";
        case IdentityId::phi4_diff: return "phi4_diff";
        case IdentityId::inv_phi_neg_4: return "inv_phi_neg_4";
        case IdentityId::phi_9dissect: return "phi_9dissect";
        case IdentityId::phi3_cube_id: return "phi3_cube_id";
        case IdentityId::inv_phi_9: return "inv_phi_9";
        case IdentityId::stone: return "stone";
        case IdentityId::sttwo: return "sttwo";
        case IdentityId::euler_pochhammer_p: return "euler_pochhammer_p";
        case IdentityId::phi_frobenius_p: return "phi_frobenius_p";
    }
    throw std::invalid_argument("identity_name: unknown id");
}

bool identity_needs_prime(IdentityId id) {
    return id == IdentityId::euler_pochhammer_p || id == IdentityId::phi_frobenius_p;
}

std::pair<Series, Series> identity_sides(IdentityId id, const CoefficientRing& ring,
                                         std::size_t trunc,
                                         std::optional<std::uint32_t> prime) {
    const std::size_t T = trunc;
    if (identity_needs_prime(id)) {
        if (!ring.is_modular())
            throw std::invalid_argument("identity_sides: " + identity_name(id) +
                                        " is a congruence, needs a Z/p ring");
        std::uint32_t p = prime.value_or(ring.modulus());
        if (p != ring.modulus())
            throw std::invalid_argument("identity_sides: prime parameter disagrees with ring");
        if (!is_prime_u64(p))
            throw std::invalid_argument("identity_sides: modulus " + std::to_string(p) +
                                        " is not prime");
        if (id == IdentityId::euler_pochhammer_p)
            return {pow(pochhammer_series(1, ring, T), p), pochhammer_series(p, ring, T)};
        return {pow(phi_series(ring, T), p), at_qk(phi_series(ring, T), p, T)};
    }
    if (prime.has_value())
        throw std::invalid_argument("identity_sides: " + identity_name(id) +
                                    " takes no prime parameter");

    const Series phi = phi_series(ring, T);
    const Series psi = psi_series(ring, T);
    switch (id) {
        case IdentityId::phi_4dissect:
            return {phi, add(at_qk(phi, 4, T), shift(scale(at_qk(psi, 8, T), 2), 1))};
        case IdentityId::phi_sq_4dissect:
            return {pow(phi, 2),
                    add(pow(at_qk(phi, 2, T), 2), shift(scale(pow(at_qk(psi, 4, T), 2), 4), 1))};
        case IdentityId::phi_phi_neg:
            return {mul(phi, alternate_sign(phi)), pow(at_minus_qk(phi, 2, T), 2)};
        case IdentityId::psi_sq:
            return {pow(psi, 2), mul(phi, at_qk(psi, 2, T))};
        case IdentityId::phi4_diff:
            return {sub(pow(phi, 4), pow(alternate_sign(phi), 4)),
                    shift(scale(pow(at_qk(psi, 2, T), 4), 16), 1)};
        case IdentityId::inv_phi_neg_4: {
            Series a = at_qk(phi, 4, T);  // phi(q^4)
            Series b = at_qk(psi, 8, T);  // psi(q^8)
            Series expansion = add(add(pow(a, 3), shift(scale(mul(pow(a, 2), b), 2), 1)),
                                   add(shift(scale(mul(a, pow(b, 2)), 4), 2),
                                       shift(scale(pow(b, 3), 8), 3)));
            Series rhs = mul(invert(pow(at_minus_qk(phi, 4, T), 4)), expansion);
            return {invert(alternate_sign(phi)), rhs};
        }
        case IdentityId::phi_9dissect: {
            Series b3 = at_minus_qk(b_series(ring, T), 3, T);
            return {phi, add(at_qk(phi, 9, T), shift(scale(b3, 2), 1))};
        }
        case IdentityId::phi3_cube_id: {
            Series bneg = alternate_sign(b_series(ring, T));
            Series lhs = add(pow(at_qk(phi, 3, T), 3), shift(scale(pow(bneg, 3), 8), 1));
            Series rhs = div_unit(pow(phi, 4), at_qk(phi, 3, T));
            return {lhs, rhs};
        }
        case IdentityId::inv_phi_9: {
            Series s9 = at_qk(phi, 9, T);
            Series b3 = at_minus_qk(b_series(ring, T), 3, T);
            Series inner = add(sub(pow(s9, 2), shift(scale(mul(s9, b3), 2), 1)),
                               shift(scale(pow(b3, 2), 4), 2));
            Series rhs = mul(div_unit(s9, pow(at_qk(phi, 3, T), 4)), inner);
            return {invert(phi), rhs};
        }
        case IdentityId::stone: {
            Series s = at_qk(phi, 9, T);
            Series t = scale(at_minus_qk(b_series(ring, T), 3, T), 2);
            Series lhs = add(pow(s, 3), shift(pow(t, 3), 3));
            Series rhs = div_unit(pow(at_qk(phi, 3, T), 4), at_qk(phi, 9, T));
            return {lhs, rhs};
        }
        case IdentityId::sttwo: {
            Series s = at_qk(phi, 9, T);
            Series t = scale(at_minus_qk(b_series(ring, T), 3, T), 2);
            Series inner = add(sub(pow(s, 2), shift(mul(s, t), 1)), shift(pow(t, 2), 2));
            Series rhs = mul(div_unit(s, pow(at_qk(phi, 3, T), 4)), inner);
            return {invert(phi), rhs};
        }
        default:
            throw std::invalid_argument("identity_sides: unknown id");
    }
}

} // namespace qsc::theta
