#pragma once

// nu-invariants: integers n where the Cartier chain C^{(F,e)}(f^n) strictly drops.

#include <cstdint>
#include <vector>

#include "bsroots/ideal.hpp"

namespace bsroots {

/// Members of the level-e nu set inside the window [0, p^{e+m}); the full set is
/// members + p^{e+m} Z.
struct NuLevelSet {
    unsigned e = 0;
    std::uint64_t window = 1;
    std::vector<std::uint64_t> members;

    bool contains(std::int64_t n) const;
};

/// Throws std::invalid_argument("nonzerodivisor required") unless some coefficient of f is a unit.
void require_nonzerodivisor(const Poly& f);

/// p^{e+m}, with overflow checking.
std::uint64_t nu_window(const ChainRing& ring, unsigned e);

/// Pointwise test; C^{(F,e)} of both powers is computed by level-by-level descent.
bool is_nu(const Poly& f, const FrobeniusLift& F, unsigned e, std::int64_t n);

/// Walks the chain C(f^0) ⊇ C(f^1) ⊇ ... ⊇ C(f^{window}) once, decomposing each power directly.
NuLevelSet nu_set(const Poly& f, const FrobeniusLift& F, unsigned e);

/// The same window assembled from independent is_nu calls (run in parallel).
NuLevelSet nu_set_pointwise(const Poly& f, const FrobeniusLift& F, unsigned e);

/// max{ n >= 0 : f^n not in F^e(J) }. Throws std::domain_error when already f^0 = 1 lies
/// in F^e(J) or when no power up to exponent_cap does.
std::int64_t nu_J(const Poly& f, const IdealGens& J, const FrobeniusLift& F, unsigned e,
                  std::uint64_t exponent_cap = 4096);

/// (m+1) * binomial(d p^m + n, n) for d = deg f and n variables.
std::uint64_t nu_cardinality_bound(const Poly& f);

}  // namespace bsroots
