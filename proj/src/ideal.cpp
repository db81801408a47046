#include "bsroots/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace bsroots {

namespace {

bool poly_order(const Poly& a, const Poly& b) {
    const auto ta = a.terms(), tb = b.terms();
    const std::size_t n = std::min(ta.size(), tb.size());
    // Compare from the leading monomial downwards, ascending.
    for (std::size_t i = 0; i < n; ++i) {
        int c = degrevlex_compare(ta[i].mono, tb[i].mono);
        if (c != 0) return c < 0;
        if (ta[i].coeff.value != tb[i].coeff.value) return ta[i].coeff.value < tb[i].coeff.value;
    }
    return ta.size() < tb.size();
}

}  // namespace

IdealGens::IdealGens(ChainRing ring, std::size_t nvars, std::vector<Poly> generators)
    : ring_(ring), nvars_(nvars) {
    for (auto& g : generators) {
        if (!(g.ring() == ring) || g.nvars() != nvars)
            throw std::invalid_argument("generator does not belong to the ambient ring");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
    std::sort(gens_.begin(), gens_.end(), poly_order);
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

IdealGens IdealGens::principal(const Poly& f) { return IdealGens(f.ring(), f.nvars(), {f}); }

IdealGens IdealGens::unit(ChainRing ring, std::size_t nvars) {
    return IdealGens(ring, nvars, {Poly::constant(ring, nvars, 1)});
}

bool IdealGens::has_unit_generator() const {
    return std::any_of(gens_.begin(), gens_.end(), [](const Poly& g) { return g.is_unit_constant(); });
}

int IdealGens::max_degree() const {
    int d = kZeroPolyDegree;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
}

std::string IdealGens::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) out += ", ";
        out += gens_[i].to_string();
    }
    return out + ")";
}

}  // namespace bsroots
