#pragma once

// Randomized agreement between the Groebner engine and the linear-algebra oracles,
// shared by the oracle suite and the acceptance runner.

#include <random>
#include <set>
#include <vector>

#include "bsroots/groebner.hpp"
#include "bsroots/ideal.hpp"
#include "bsroots/linalg.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace oracle_checks {

using namespace bsroots;

struct MembershipTally {
    std::size_t instances = 0;
    std::size_t members = 0;
    std::size_t disagreements = 0;
};

// deg g + max deg f_i + (m+1) max deg f_i.
inline unsigned membership_cap(const IdealGens& J, const Poly& g) {
    const auto d = static_cast<unsigned>(std::max(J.max_degree(), 0));
    return static_cast<unsigned>(std::max(g.degree(), 0)) + d + (J.ring().m() + 1) * d;
}

inline MembershipTally membership_sweep(std::uint64_t seed, std::size_t count) {
    std::mt19937_64 rng(seed);
    MembershipTally t;
    for (std::size_t i = 0; i < count; ++i) {
        const ChainRing r(i % 2 ? 3 : 2, (i / 2) % 2);
        std::vector<Poly> gens;
        const unsigned k = 1 + static_cast<unsigned>(rng() % 3);
        for (unsigned j = 0; j < k; ++j) gens.push_back(testsupport::random_poly(rng, r, 2, 3, 3));
        const IdealGens J(r, 2, gens);
        Poly g(r, 2);
        if (i % 3 != 2) {
            for (const auto& f : gens) g += testsupport::random_poly(rng, r, 2, 1 + (i % 3), 2) * f;
        } else {
            g = testsupport::random_poly(rng, r, 2, 3, 3);
        }
        const bool gb = ideal_contains(J, g);
        const auto brute = membership_bruteforce(J, g, membership_cap(J, g));
        const bool found = brute.has_value() && *brute;
        ++t.instances;
        t.members += gb;
        t.disagreements += gb != found;
    }
    return t;
}

// Every instance with span size <= 2^16: Howell span, original span and span_contains agree with enumeration.
inline std::size_t span_sweep(std::uint64_t seed, std::size_t count, std::size_t* checked = nullptr) {
    std::mt19937_64 rng(seed);
    std::size_t bad = 0, done = 0;
    const std::vector<std::pair<std::uint64_t, unsigned>> rings{{2, 1}, {2, 2}, {3, 1}, {2, 0}, {3, 0}, {5, 0}, {3, 2}};
    for (std::size_t i = 0; i < count; ++i) {
        const auto [p, m] = rings[i % rings.size()];
        const ChainRing r(p, m);
        const std::uint64_t mod = r.modulus();
        std::size_t ncols = 1 + rng() % 4;
        while (oracle::ipow(mod, static_cast<unsigned>(ncols)) > (1u << 16)) --ncols;
        const std::size_t nrows = rng() % 4;
        std::vector<Matrix::Row> rows(nrows, Matrix::Row(ncols));
        for (auto& row : rows)
            for (auto& x : row) x = rng() % 3 == 0 ? 0 : (rng() % mod) * (rng() % 2 ? 1 : p) % mod;
        const Matrix m0(r, ncols, rows);
        const Matrix h = howell_form(m0);
        const auto want = oracle::span_by_enumeration(m0.rows(), ncols, mod);
        bad += oracle::span_by_enumeration(h.rows(), ncols, mod) != want;
        // Size predicted by the pivots: each row contributes modulus / pivot.
        std::uint64_t size = 1;
        for (const auto& row : h.rows()) {
            std::size_t c = 0;
            while (row[c] == 0) ++c;
            size *= mod / row[c];
        }
        bad += size != want.size();
        // Membership of every vector of the ambient module.
        std::vector<std::uint64_t> v(ncols, 0);
        for (std::uint64_t code = 0; code < oracle::ipow(mod, static_cast<unsigned>(ncols)); ++code) {
            std::uint64_t c = code;
            for (auto& x : v) {
                x = c % mod;
                c /= mod;
            }
            bad += span_contains(m0, v) != (want.count(v) > 0);
        }
        ++done;
    }
    if (checked) *checked = done;
    return bad;
}

}  // namespace oracle_checks
