#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qsc {

/// Two series from different coefficient rings met in one operation.
struct ring_mismatch_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The constant term of a series is not a unit, so it cannot be inverted.
/// For a modular ring the message names gcd(a0, M).
struct inversion_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// A desk-scale oracle or table build was asked to exceed its documented
/// cost bound. Never a silent failure: callers either shrink the request
/// or report the skip.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class RingKind { exact, modular };

/// Coefficient domain of a series: exact arbitrary-precision integers, or
/// residues modulo M (M >= 2, possibly composite). Moduli are capped below
/// 2^31 so residue products fit 64-bit lanes.
class CoefficientRing {
public:
    static constexpr std::uint32_t max_modulus = 0x7fffffffu;

    static CoefficientRing exact() { return CoefficientRing(RingKind::exact, 0); }

    static CoefficientRing modular(std::uint32_t modulus) {
        if (modulus < 2) throw std::invalid_argument("CoefficientRing: modulus must be >= 2");
        if (modulus > max_modulus)
            throw std::invalid_argument("CoefficientRing: modulus must be < 2^31, got " +
                                        std::to_string(modulus));
        return CoefficientRing(RingKind::modular, modulus);
    }

    RingKind kind() const { return kind_; }
    bool is_exact() const { return kind_ == RingKind::exact; }
    bool is_modular() const { return kind_ == RingKind::modular; }

    /// Modulus M; only meaningful for modular rings.
    std::uint32_t modulus() const { return modulus_; }

    bool operator==(const CoefficientRing& other) const = default;

    std::string describe() const {
        return is_exact() ? "exact" : "mod " + std::to_string(modulus_);
    }

private:
    CoefficientRing(RingKind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}

    RingKind kind_;
    std::uint32_t modulus_;
};

} // namespace qsc
