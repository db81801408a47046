#pragma once

// Strong Groebner bases over the chain ring Z/p^{m+1} (degrevlex), ideal
// membership and an independent linear-algebra membership oracle.

#include <optional>
#include <vector>

#include "bsroots/ideal.hpp"

namespace bsroots {

struct GroebnerBasis {
    ChainRing ring;
    std::size_t nvars;
    /// Minimal, tail-reduced; leading coefficients are exactly p^j.
    std::vector<Poly> elements;
    /// Filled only when tracking was requested: elements[k] = sum_i cofactors[k][i] * inputs[i].
    std::vector<std::vector<Poly>> cofactors;
    std::vector<Poly> inputs;
    bool tracked = false;

    /// The basis contains a unit constant.
    bool is_unit() const;
};

GroebnerBasis strong_groebner(const IdealGens& J, bool track_cofactors = false);

Poly normal_form(const Poly& g, const GroebnerBasis& G);

/// g - remainder = sum_i cofactors[i] * G.inputs[i]. Requires a tracked basis.
struct Reduction {
    Poly remainder;
    std::vector<Poly> cofactors;
};
Reduction reduce_with_certificate(const Poly& g, const GroebnerBasis& G);

bool ideal_contains(const GroebnerBasis& G, const Poly& g);
bool ideal_contains(const IdealGens& J, const Poly& g);
/// Every generator of A lies in the ideal of B.
bool ideal_subset(const IdealGens& A, const GroebnerBasis& B);
bool ideal_equal(const IdealGens& A, const IdealGens& B);

/// Least t in [0, m+1] with p^t * g in the ideal.
unsigned min_p_power_in(const GroebnerBasis& G, const Poly& g);
unsigned min_p_power_in(const IdealGens& J, const Poly& g);

/// Looks for multipliers of degree <= cap with sum c_i f_i = g by a row-span test.
/// Returns true when such a certificate exists, nullopt otherwise.
std::optional<bool> membership_bruteforce(const IdealGens& J, const Poly& g, unsigned multiplier_degree_cap);

}  // namespace bsroots
