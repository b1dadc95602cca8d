#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsc/series.hpp"

namespace qsc::theta {

/// phi(q) = sum_{n in Z} q^{n^2}: coefficient 1 at 0, 2 at positive squares.
Series phi_series(const CoefficientRing& ring, std::size_t trunc);

/// psi(q) = sum_{n >= 0} q^{n(n+1)/2}: coefficient 1 at triangular numbers.
Series psi_series(const CoefficientRing& ring, std::size_t trunc);

/// S(q) = sum_{n >= 1} q^{n^2}, so phi = 1 + 2 S.
Series s_series(const CoefficientRing& ring, std::size_t trunc);

/// (q^k; q^k)_inf = prod_{n >= 1} (1 - q^{k n}), truncated. Factors with
/// k n > trunc cannot affect retained coefficients and are skipped.
Series pochhammer_series(std::uint64_t k, const CoefficientRing& ring, std::size_t trunc);

/// B(q) = (q;q) (q^6;q^6)^2 / ((q^2;q^2) (q^3;q^3)), the eta quotient from
/// the 3-dissection of phi. Integer coefficients in the exact ring.
Series b_series(const CoefficientRing& ring, std::size_t trunc);

/// Catalog of named two-sided identities. The two *_p entries are the
/// Frobenius congruences and take a prime parameter; everything else is an
/// equality over Z (checkable in any ring).
enum class IdentityId {
    phi_4dissect,      // phi(q) = phi(q^4) + 2 q psi(q^8)
    phi_sq_4dissect,   // phi(q)^2 = phi(q^2)^2 + 4 q psi(q^4)^2
    phi_phi_neg,       // phi(q) phi(-q) = phi(-q^2)^2
    psi_sq,            // psi(q)^2 = phi(q) psi(q^2)
    phi4_diff,         // phi(q)^4 - phi(-q)^4 = 16 q psi(q^2)^4
    inv_phi_neg_4,     // 1/phi(-q) as the 4-term phi(q^4)/psi(q^8) expansion
    phi_9dissect,      // phi(q) = phi(q^9) + 2 q B(-q^3)
    phi3_cube_id,      // phi(q^3)^3 + 8 q B(-q)^3 = phi(q)^4 / phi(q^3)
    inv_phi_9,         // 1/phi(q) as the phi(q^9), B(-q^3) expansion
    stone,             // s^3 + q^3 t^3 = phi(q^3)^4 / phi(q^9)
    sttwo,             // 1/phi(q) = phi(q^9)/phi(q^3)^4 * (s^2 - q s t + q^2 t^2)
    euler_pochhammer_p, // (q;q)^p == (q^p;q^p) (mod p)
    phi_frobenius_p,    // phi(q)^p == phi(q^p) (mod p)
};

constexpr IdentityId all_identity_ids[] = {
    IdentityId::phi_4dissect,   IdentityId::phi_sq_4dissect, IdentityId::phi_phi_neg,
    IdentityId::psi_sq,         IdentityId::phi4_diff,       IdentityId::inv_phi_neg_4,
    IdentityId::phi_9dissect,   IdentityId::phi3_cube_id,    IdentityId::inv_phi_9,
    IdentityId::stone,          IdentityId::sttwo,           IdentityId::euler_pochhammer_p,
    IdentityId::phi_frobenius_p,
};

std::string identity_name(IdentityId id);
bool identity_needs_prime(IdentityId id);

/// Both sides of the named identity at the given truncation, built only
/// from the constructors above plus series ring operations. Frobenius
/// identities require ring = Z/p with the matching prime;
/// the others accept the exact ring or any modular ring.
std::pair<Series, Series> identity_sides(IdentityId id, const CoefficientRing& ring,
                                         std::size_t trunc,
                                         std::optional<std::uint32_t> prime = std::nullopt);

// Substitution helpers shared by the builders: f(q^k) and f(-q^k).
Series at_qk(const Series& f, std::size_t k, std::size_t trunc);
Series at_minus_qk(const Series& f, std::size_t k, std::size_t trunc);

} // namespace qsc::theta
