#include "bsroots/cartier.hpp"

#include "bsroots/groebner.hpp"

namespace bsroots {

IdealGens frobenius_pullback_ideal(const IdealGens& J, const FrobeniusLift& F, unsigned e) {
    std::vector<Poly> gens;
    gens.reserve(J.size());
    for (const auto& g : J.generators()) gens.push_back(frobenius_apply(g, F, e));
    return IdealGens(J.ring(), J.nvars(), std::move(gens));
}

IdealGens cartier_generators(const IdealGens& J, const FrobeniusLift& F, unsigned e) {
    if (J.has_unit_generator()) return IdealGens::unit(J.ring(), J.nvars());
    std::vector<Poly> gens;
    for (const auto& g : J.generators())
        for (auto& [alpha, part] : phi_decompose(g, F, e)) gens.push_back(std::move(part));
    return IdealGens(J.ring(), J.nvars(), std::move(gens));
}

IdealGens PowerIdeal::expand(const Poly& f) const {
    if (power == 0) return ideal;
    const Poly mult = f.pow(power);
    std::vector<Poly> gens;
    for (const auto& g : ideal.generators()) gens.push_back(mult * g);
    return IdealGens(ideal.ring(), ideal.nvars(), std::move(gens));
}

PowerIdeal cartier_of_power(const Poly& f, const FrobeniusLift& F, unsigned e, std::uint64_t n) {
    const ChainRing& ring = f.ring();
    const std::uint64_t period = ring.modulus();  // p^{m+1}
    const std::uint64_t shift = ring.pow_p(ring.m());
    PowerIdeal cur{n, IdealGens::unit(ring, f.nvars())};
    for (unsigned step = 0; step < e; ++step) {
        const std::uint64_t r = cur.power % period;
        const std::uint64_t q = cur.power / period;
        const Poly fr = f.pow(r);
        std::vector<Poly> gens;
        for (const auto& g : cur.ideal.generators()) gens.push_back(fr * g);
        IdealGens next = cartier_generators(IdealGens(ring, f.nvars(), std::move(gens)), F, 1);
        if (!next.has_unit_generator() && next.size() > 1)
            next = IdealGens(ring, f.nvars(), strong_groebner(next).elements);
        else if (next.has_unit_generator())
            next = IdealGens::unit(ring, f.nvars());
        cur = PowerIdeal{shift * q, std::move(next)};
    }
    return cur;
}

}  // namespace bsroots
