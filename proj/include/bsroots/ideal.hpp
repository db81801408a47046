#pragma once

#include <cstddef>
#include <vector>

#include "bsroots/poly.hpp"

namespace bsroots {

/// A generating set of an ideal of V[x1..xn]. Zero generators are pruned and
/// duplicates removed; generators are ordered by leading monomial (degrevlex,
/// ascending), then by their term lists.
class IdealGens {
public:
    IdealGens(ChainRing ring, std::size_t nvars) : ring_(ring), nvars_(nvars) {}
    IdealGens(ChainRing ring, std::size_t nvars, std::vector<Poly> generators);

    static IdealGens principal(const Poly& f);
    static IdealGens unit(ChainRing ring, std::size_t nvars);

    const ChainRing& ring() const { return ring_; }
    std::size_t nvars() const { return nvars_; }
    const std::vector<Poly>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    /// The zero ideal.
    bool is_zero() const { return gens_.empty(); }
    /// Some generator is a unit constant (so the ideal is (1)).
    bool has_unit_generator() const;
    /// Largest generator degree; kZeroPolyDegree for the zero ideal.
    int max_degree() const;

    std::string to_string() const;

    friend bool operator==(const IdealGens&, const IdealGens&) = default;

private:
    ChainRing ring_;
    std::size_t nvars_;
    std::vector<Poly> gens_;
};

}  // namespace bsroots
