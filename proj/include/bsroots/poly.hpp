#pragma once

// Sparse multivariate polynomials over Z/p^{m+1}, Frobenius lifts, and the
// decomposition of a polynomial in the monomial basis of F^e_* R.

#include <array>
#include <climits>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "bsroots/chainring.hpp"

namespace bsroots {

inline constexpr std::size_t kMaxVars = 8;

/// Degree reported for the zero polynomial.
inline constexpr int kZeroPolyDegree = INT_MIN;

class Monomial {
public:
    Monomial() = default;
    /// Throws std::invalid_argument when more than kMaxVars exponents are given.
    explicit Monomial(std::span<const std::uint32_t> exponents);
    Monomial(std::initializer_list<std::uint32_t> exponents);

    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    std::uint32_t degree() const { return degree_; }
    bool is_one() const { return degree_ == 0; }

    void set(std::size_t i, std::uint32_t value);

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// Componentwise a <= b.
    friend bool divides(const Monomial& a, const Monomial& b);
    /// b / a; requires divides(a, b).
    friend Monomial quotient(const Monomial& b, const Monomial& a);
    friend Monomial lcm(const Monomial& a, const Monomial& b);

    /// Lexicographic on exponents; used as a container key, not as the term order.
    friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

private:
    std::array<std::uint32_t, kMaxVars> exps_{};
    std::uint32_t degree_ = 0;
};

/// Degree reverse lexicographic order with x1 > x2 > ...; returns <0, 0, >0.
int degrevlex_compare(const Monomial& a, const Monomial& b);

struct Term {
    Monomial mono;
    Scalar coeff;
    friend bool operator==(const Term&, const Term&) = default;
};

/// Polynomial over a ChainRing with terms kept in strictly descending degrevlex
/// order and no zero coefficients.
class Poly {
public:
    /// Throws std::invalid_argument when nvars exceeds kMaxVars.
    Poly(ChainRing ring, std::size_t nvars);

    static Poly constant(ChainRing ring, std::size_t nvars, std::int64_t c);
    static Poly variable(ChainRing ring, std::size_t nvars, std::size_t index);
    static Poly term(ChainRing ring, std::size_t nvars, Monomial mono, Scalar coeff);
    /// Builds from unsorted terms, combining duplicates and dropping zeros.
    static Poly from_terms(ChainRing ring, std::size_t nvars, std::vector<Term> terms);

    const ChainRing& ring() const { return ring_; }
    std::size_t nvars() const { return nvars_; }
    std::span<const Term> terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    /// Total degree; kZeroPolyDegree for the zero polynomial.
    int degree() const;
    const Term& leading_term() const;
    /// Coefficient of a monomial (zero if absent).
    Scalar coeff(const Monomial& mono) const;
    /// Least valuation of a coefficient (m+1 for zero).
    unsigned content_valuation() const;
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    bool is_unit_constant() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator+=(const Poly& b);
    Poly& operator-=(const Poly& b);
    Poly& operator*=(const Poly& b);

    Poly scale(Scalar c) const;
    /// c * mono * this.
    Poly mul_term(const Monomial& mono, Scalar c) const;
    /// this - c * mono * g, fused.
    Poly sub_mul_term(const Monomial& mono, Scalar c, const Poly& g) const;
    Poly pow(std::uint64_t exponent) const;

    /// Image under the quotient map onto a smaller Z/p^{k} with the same p.
    Poly reduce_to(const ChainRing& target) const;

    /// Multiplies each exponent by `factor` (order preserving).
    Poly scale_exponents(std::uint64_t factor) const;

    /// Parseable rendering, e.g. "x^2 + 3*y". Coefficients are printed in [0, p^{m+1}).
    std::string to_string(std::span<const std::string> names) const;
    std::string to_string() const;

    friend bool operator==(const Poly& a, const Poly& b);

private:
    void check_compatible(const Poly& other) const;
    static Poly merge(const Poly& a, const Poly& b, bool subtract);

    ChainRing ring_;
    std::size_t nvars_;
    std::vector<Term> terms_;
};

std::vector<std::string> default_variable_names(std::size_t nvars);

/// A Frobenius lift F(x_i) = x_i^p + p*h_i, identity on coefficients.
class FrobeniusLift {
public:
    static FrobeniusLift standard(ChainRing ring, std::size_t nvars);
    /// F(x_i) = x_i^p + p*h_i for the given h_i (one per variable).
    static FrobeniusLift from_h(std::vector<Poly> h);

    const ChainRing& ring() const { return ring_; }
    std::size_t nvars() const { return nvars_; }
    /// True when every correction p*h_i vanishes, i.e. F(x_i) = x_i^p.
    bool is_standard() const { return standard_; }
    const Poly& image(std::size_t i) const { return images_[i]; }
    /// p*h_i.
    const Poly& correction(std::size_t i) const { return corrections_[i]; }

    /// One application of F.
    Poly apply(const Poly& f) const;
    FrobeniusLift reduce_to(const ChainRing& target) const;

private:
    FrobeniusLift(ChainRing ring, std::size_t nvars) : ring_(ring), nvars_(nvars) {}

    ChainRing ring_;
    std::size_t nvars_;
    std::vector<Poly> images_;
    std::vector<Poly> corrections_;
    bool standard_ = true;
};

/// F^e(f).
Poly frobenius_apply(const Poly& f, const FrobeniusLift& lift, unsigned e);

/// Components g_alpha with f = sum_alpha F^e(g_alpha) * x^alpha, alpha in [0, p^e)^n.
/// Only nonzero components are stored.
using Decomposition = std::map<Monomial, Poly>;

Decomposition phi_decompose(const Poly& f, const FrobeniusLift& lift, unsigned e);

/// sum_alpha F^e(g_alpha) * x^alpha; the inverse of phi_decompose.
Poly recompose(const Decomposition& parts, const FrobeniusLift& lift, unsigned e);

}  // namespace bsroots
