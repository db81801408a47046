#pragma once

// Rational p-adic integers (elements of Z_(p)): digits, truncations and
// bounded reconstruction from residues.

#include <cstdint>
#include <string>
#include <vector>

namespace bsroots {

/// num/den in lowest terms with den > 0 and p not dividing den.
class PAdicRational {
public:
    /// Throws std::invalid_argument when den == 0 or p divides the reduced denominator.
    PAdicRational(std::int64_t num, std::int64_t den, std::uint64_t p);
    static PAdicRational integer(std::int64_t n, std::uint64_t p) { return {n, 1, p}; }
    /// Parses "a", "-a" or "a/b".
    static PAdicRational parse(const std::string& text, std::uint64_t p);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    std::uint64_t p() const { return p_; }

    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }

    /// The representative of this class in Z_p/Z lying in [-1, 0).
    PAdicRational translate_into_unit_interval() const;
    /// True when this - other is an integer.
    bool congruent_mod_z(const PAdicRational& other) const;

    PAdicRational operator+(std::int64_t k) const;

    std::string to_string() const;

    friend bool operator==(const PAdicRational&, const PAdicRational&) = default;
    /// Order as real numbers.
    friend bool operator<(const PAdicRational& a, const PAdicRational& b);

private:
    std::int64_t num_;
    std::int64_t den_;
    std::uint64_t p_;
};

/// p^k; throws std::overflow_error when it exceeds 2^62.
std::uint64_t checked_pow(std::uint64_t p, unsigned k);

/// The first k base-p digits of alpha.
std::vector<std::uint64_t> digits(const PAdicRational& alpha, unsigned k);

/// alpha_{<k}: the integer in [0, p^k) congruent to alpha mod p^k.
std::uint64_t truncate_below(const PAdicRational& alpha, unsigned k);

/// alpha_{>=k} = (alpha - alpha_{<k}) / p^k.
PAdicRational truncate_above(const PAdicRational& alpha, unsigned k);

/// All u/v in lowest terms with p not dividing v, 1 <= v <= den_bound, |u| <= num_bound
/// and u == residue * v (mod p^N); sorted by (v, u).
std::vector<PAdicRational> reconstruct(std::uint64_t residue, std::uint64_t p, unsigned N,
                                       std::int64_t den_bound, std::int64_t num_bound);

}  // namespace bsroots
