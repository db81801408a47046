#include "bsroots/chainring.hpp"

#include <limits>
#include <stdexcept>

namespace bsroots {

namespace {

using u128 = unsigned __int128;

// Modular inverse of a mod n for gcd(a, n) = 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t n) {
    __int128 t = 0, new_t = 1;
    __int128 r = n, new_r = a % n;
    while (new_r != 0) {
        __int128 q = r / new_r;
        __int128 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw std::domain_error("not a unit");
    if (t < 0) t += n;
    return static_cast<std::uint64_t>(t);
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

ChainRing::ChainRing(std::uint64_t p, unsigned m) : p_(p), m_(m), modulus_(1) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
    constexpr std::uint64_t limit = std::uint64_t{1} << 63;
    for (unsigned i = 0; i <= m; ++i) {
        if (modulus_ > limit / p)
            throw std::invalid_argument("modulus p^(m+1) exceeds 2^63");
        modulus_ *= p;
    }
}

std::uint64_t ChainRing::pow_p(unsigned k) const {
    if (k > length()) throw std::out_of_range("pow_p: exponent exceeds m+1");
    std::uint64_t r = 1;
    for (unsigned i = 0; i < k; ++i) r *= p_;
    return r;
}

unsigned ChainRing::valuation_of(std::uint64_t residue) const {
    if (residue == 0) return length();
    unsigned v = 0;
    while (residue % p_ == 0) {
        residue /= p_;
        ++v;
    }
    return v;
}

Scalar ChainRing::normalize(std::int64_t n) const {
    auto mod = static_cast<__int128>(modulus_);
    __int128 r = static_cast<__int128>(n) % mod;
    if (r < 0) r += mod;
    return make(static_cast<std::uint64_t>(r));
}

Scalar ChainRing::from_unsigned(std::uint64_t n) const { return make(n % modulus_); }

Scalar ChainRing::one() const { return make(1 % modulus_); }

Scalar ChainRing::p_power(unsigned k) const {
    if (k >= length()) return zero();
    return Scalar{pow_p(k), k};
}

Scalar ChainRing::add(Scalar a, Scalar b) const {
    std::uint64_t s = a.value + b.value;  // both < 2^63
    if (s >= modulus_) s -= modulus_;
    return make(s);
}

Scalar ChainRing::sub(Scalar a, Scalar b) const {
    std::uint64_t s = a.value >= b.value ? a.value - b.value : a.value + (modulus_ - b.value);
    return make(s);
}

Scalar ChainRing::neg(Scalar a) const {
    if (a.value == 0) return a;
    return Scalar{modulus_ - a.value, a.valuation};
}

Scalar ChainRing::mul(Scalar a, Scalar b) const {
    if (a.valuation + b.valuation >= length()) return zero();
    auto prod = static_cast<std::uint64_t>((u128{a.value} * b.value) % modulus_);
    return Scalar{prod, a.valuation + b.valuation};
}

Scalar ChainRing::pow(Scalar a, std::uint64_t exponent) const {
    Scalar result = one();
    while (exponent > 0) {
        if (exponent & 1) result = mul(result, a);
        exponent >>= 1;
        if (exponent) a = mul(a, a);
    }
    return result;
}

Scalar ChainRing::invert(Scalar x) const {
    if (x.valuation != 0) throw std::domain_error("not a unit");
    return Scalar{inverse_mod(x.value, modulus_), 0};
}

Scalar ChainRing::unit_part(Scalar x) const {
    if (x.is_zero()) throw std::domain_error("unit_part of zero");
    return Scalar{x.value / pow_p(x.valuation), 0};
}

std::optional<Scalar> ChainRing::divide_exact(Scalar a, Scalar b) const {
    if (b.valuation > a.valuation) return std::nullopt;
    if (a.is_zero()) return zero();
    const unsigned jb = b.valuation;
    const std::uint64_t shifted = a.value / pow_p(jb);
    const std::uint64_t unit_inv = inverse_mod(b.value / pow_p(jb), modulus_);
    const std::uint64_t coset = pow_p(length() - jb);
    auto q = static_cast<std::uint64_t>((u128{shifted} * unit_inv) % coset);
    return make(q);
}

std::string ChainRing::to_string() const {
    return "Z/" + std::to_string(p_) + "^" + std::to_string(m_ + 1);
}

}  // namespace bsroots
