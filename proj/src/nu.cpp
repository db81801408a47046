#include "bsroots/nu.hpp"

#include <algorithm>
#include <stdexcept>

#include "bsroots/cartier.hpp"
#include "bsroots/groebner.hpp"
#include "bsroots/padic.hpp"
#include "bsroots/parallel.hpp"

namespace bsroots {

bool NuLevelSet::contains(std::int64_t n) const {
    const auto w = static_cast<std::int64_t>(window);
    const auto r = static_cast<std::uint64_t>(((n % w) + w) % w);
    return std::binary_search(members.begin(), members.end(), r);
}

void require_nonzerodivisor(const Poly& f) {
    for (const auto& t : f.terms())
        if (t.coeff.valuation == 0) return;
    throw std::invalid_argument("nonzerodivisor required");
}

std::uint64_t nu_window(const ChainRing& ring, unsigned e) { return checked_pow(ring.p(), e + ring.m()); }

bool is_nu(const Poly& f, const FrobeniusLift& F, unsigned e, std::int64_t n) {
    require_nonzerodivisor(f);
    const auto w = static_cast<std::int64_t>(nu_window(f.ring(), e));
    const auto r = static_cast<std::uint64_t>(((n % w) + w) % w);
    const IdealGens upper = cartier_of_power(f, F, e, r).expand(f);
    const IdealGens lower = cartier_of_power(f, F, e, r + 1).expand(f);
    // lower ⊆ upper always holds, so a strict drop means upper ⊄ lower.
    if (lower.has_unit_generator()) return false;
    return !ideal_subset(upper, strong_groebner(lower));
}

NuLevelSet nu_set(const Poly& f, const FrobeniusLift& F, unsigned e) {
    require_nonzerodivisor(f);
    NuLevelSet out{e, nu_window(f.ring(), e), {}};
    const std::size_t nvars = f.nvars();
    Poly power = Poly::constant(f.ring(), nvars, 1);
    GroebnerBasis prev = strong_groebner(IdealGens::unit(f.ring(), nvars));
    for (std::uint64_t n = 0; n < out.window; ++n) {
        power = power * f;
        const IdealGens next = cartier_generators(IdealGens::principal(power), F, e);
        GroebnerBasis gb = strong_groebner(next);
        const IdealGens prev_gens(f.ring(), nvars, prev.elements);
        if (!ideal_subset(prev_gens, gb)) out.members.push_back(n);
        prev = std::move(gb);
    }
    return out;
}

NuLevelSet nu_set_pointwise(const Poly& f, const FrobeniusLift& F, unsigned e) {
    require_nonzerodivisor(f);
    NuLevelSet out{e, nu_window(f.ring(), e), {}};
    std::vector<char> flags(out.window, 0);
    parallel_for(out.window, [&](std::size_t n) { flags[n] = is_nu(f, F, e, static_cast<std::int64_t>(n)); });
    for (std::uint64_t n = 0; n < out.window; ++n)
        if (flags[n]) out.members.push_back(n);
    return out;
}

std::int64_t nu_J(const Poly& f, const IdealGens& J, const FrobeniusLift& F, unsigned e, std::uint64_t exponent_cap) {
    require_nonzerodivisor(f);
    const GroebnerBasis gb = strong_groebner(frobenius_pullback_ideal(J, F, e));
    Poly power = Poly::constant(f.ring(), f.nvars(), 1);
    for (std::uint64_t n = 0; n <= exponent_cap; ++n) {
        if (ideal_contains(gb, power)) {
            if (n == 0) throw std::domain_error("f^0 already lies in the pulled-back ideal");
            const auto result = static_cast<std::int64_t>(n - 1);
            if (!is_nu(f, F, e, result)) throw std::logic_error("nu_J result is not a nu-invariant");
            return result;
        }
        power = power * f;
    }
    throw std::domain_error("J does not become full");
}

std::uint64_t nu_cardinality_bound(const Poly& f) {
    const ChainRing& ring = f.ring();
    const std::uint64_t top = static_cast<std::uint64_t>(std::max(f.degree(), 0)) * ring.pow_p(ring.m()) + f.nvars();
    // binomial(top, nvars)
    std::uint64_t b = 1;
    for (std::uint64_t k = 1; k <= f.nvars(); ++k) b = b * (top - f.nvars() + k) / k;
    return ring.length() * b;
}

}  // namespace bsroots
