#pragma once

// Arithmetic in V = Z/p^{m+1}.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace bsroots {

/// An element of Z/p^{m+1} together with its p-adic valuation.
/// The valuation of zero is m+1.
struct Scalar {
    std::uint64_t value = 0;
    unsigned valuation = 0;

    bool is_zero() const { return value == 0; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.value == b.value; }
};

/// The coefficient ring V = Z/p^{m+1}. A small value type; copies are cheap.
class ChainRing {
public:
    /// Throws std::invalid_argument when p is not prime or p^{m+1} exceeds 2^63.
    ChainRing(std::uint64_t p, unsigned m);

    std::uint64_t p() const { return p_; }
    unsigned m() const { return m_; }
    /// Nilpotency length m+1; also the valuation assigned to zero.
    unsigned length() const { return m_ + 1; }
    std::uint64_t modulus() const { return modulus_; }

    /// p^k for 0 <= k <= m+1 (p^{m+1} is returned as the modulus itself).
    std::uint64_t pow_p(unsigned k) const;

    unsigned valuation_of(std::uint64_t residue) const;

    Scalar normalize(std::int64_t n) const;
    Scalar from_unsigned(std::uint64_t n) const;
    Scalar zero() const { return Scalar{0, length()}; }
    Scalar one() const;
    /// p^k as a ring element (zero when k > m).
    Scalar p_power(unsigned k) const;

    Scalar add(Scalar a, Scalar b) const;
    Scalar sub(Scalar a, Scalar b) const;
    Scalar neg(Scalar a) const;
    Scalar mul(Scalar a, Scalar b) const;
    Scalar pow(Scalar a, std::uint64_t exponent) const;

    /// Inverse of a unit; throws std::domain_error("not a unit") otherwise.
    Scalar invert(Scalar x) const;

    /// Some q with q*b == a, or nullopt when val(b) > val(a).
    /// The returned q is the least nonnegative representative of the coset of solutions.
    std::optional<Scalar> divide_exact(Scalar a, Scalar b) const;

    /// The unit u with x = u * p^{val(x)}, canonical in [0, p^{m+1-val(x)}); requires x != 0.
    Scalar unit_part(Scalar x) const;

    std::string to_string() const;

    friend bool operator==(const ChainRing& a, const ChainRing& b) {
        return a.p_ == b.p_ && a.m_ == b.m_;
    }

private:
    Scalar make(std::uint64_t reduced) const { return Scalar{reduced, valuation_of(reduced)}; }

    std::uint64_t p_;
    unsigned m_;
    std::uint64_t modulus_;
};

bool is_prime(std::uint64_t n);

}  // namespace bsroots
