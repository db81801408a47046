#pragma once

// The level-e Cartier operation on ideals and the Frobenius pullback of ideals.

#include <cstdint>

#include "bsroots/ideal.hpp"

namespace bsroots {

/// (F^e(g) : g a generator of J).
IdealGens frobenius_pullback_ideal(const IdealGens& J, const FrobeniusLift& F, unsigned e);

/// The ideal generated by every decomposition component of every generator of J.
/// Short-circuits to (1) when J has a unit generator.
IdealGens cartier_generators(const IdealGens& J, const FrobeniusLift& F, unsigned e);

/// C^{(F,e)}((f^n)) represented as multiplier * ideal, i.e. generated by f^power * g.
struct PowerIdeal {
    std::uint64_t power;
    IdealGens ideal;

    /// Generators f^power * g.
    IdealGens expand(const Poly& f) const;
};

/// C^{(F,e)}((f^n)) by descending one level at a time. Uses
/// f^{p^{m+1} q} = F(f^{p^m q}) and the factorization of C^{(F,e)} into level-one steps,
/// so only powers f^r with r < p^{m+1} are ever decomposed.
PowerIdeal cartier_of_power(const Poly& f, const FrobeniusLift& F, unsigned e, std::uint64_t n);

}  // namespace bsroots
