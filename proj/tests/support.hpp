#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "bsroots/bsr.hpp"
#include "bsroots/padic.hpp"
#include "bsroots/parse.hpp"
#include "bsroots/poly.hpp"

namespace testsupport {

using namespace bsroots;

inline Poly P(const std::string& s, const ChainRing& r, std::vector<std::string> vars = {"x", "y"}) {
    return parse_poly(s, vars, r);
}

// The lift F(x) = x^2 + 2y(x+y), F(y) = y^2 over Z/4.
inline FrobeniusLift lift_f2() {
    const ChainRing z4(2, 1);
    return FrobeniusLift::from_h({P("x*y + y^2", z4), Poly(z4, 2)});
}

inline Poly random_poly(std::mt19937_64& rng, const ChainRing& r, std::size_t nvars, unsigned max_deg,
                        unsigned max_terms) {
    std::uniform_int_distribution<unsigned> deg(0, max_deg), count(1, max_terms);
    std::uniform_int_distribution<std::uint64_t> coeff(0, r.modulus() - 1);
    std::vector<Term> terms;
    const unsigned n = count(rng);
    for (unsigned k = 0; k < n; ++k) {
        Monomial mono;
        unsigned budget = deg(rng);
        for (std::size_t i = 0; i < nvars; ++i) {
            std::uniform_int_distribution<unsigned> e(0, budget);
            const unsigned x = e(rng);
            mono.set(i, x);
            budget -= x;
        }
        terms.push_back({mono, r.from_unsigned(coeff(rng))});
    }
    return Poly::from_terms(r, nvars, std::move(terms));
}

// A nonzerodivisor of positive degree: random polynomial with some unit coefficient on a nonconstant monomial.
inline Poly random_nzd(std::mt19937_64& rng, const ChainRing& r, std::size_t nvars, unsigned max_deg,
                       unsigned max_terms) {
    for (;;) {
        Poly f = random_poly(rng, r, nvars, max_deg, max_terms);
        for (const auto& t : f.terms())
            if (t.coeff.valuation == 0 && !t.mono.is_one()) return f;
    }
}

inline FrobeniusLift random_lift(std::mt19937_64& rng, const ChainRing& r, std::size_t nvars, unsigned max_deg) {
    std::bernoulli_distribution standard(0.4);
    if (r.m() == 0 || standard(rng)) return FrobeniusLift::standard(r, nvars);
    std::vector<Poly> h;
    for (std::size_t i = 0; i < nvars; ++i) h.push_back(random_poly(rng, r, nvars, max_deg, 3));
    return FrobeniusLift::from_h(std::move(h));
}

// Level-E truncations of the reported roots together with the unresolved residues, sorted.
inline std::vector<std::uint64_t> accounted_survivors(const RootReport& report) {
    std::vector<std::uint64_t> out = report.unresolved;
    for (const auto& r : report.roots) out.push_back(truncate_below(r.alpha, report.max_level + report.m));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace testsupport
