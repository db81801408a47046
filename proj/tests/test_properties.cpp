#include <doctest.h>

#include <functional>
#include <set>
#include <tuple>

#include "bsroots/bsr.hpp"
#include "properties.hpp"

using namespace bsroots;

namespace {

constexpr std::size_t kCases = 240;

const std::vector<props::Case>& cases() {
    static const std::vector<props::Case> all = props::make_cases(20240611, kCases);
    return all;
}

void sweep(const std::function<std::size_t(const props::Case&)>& check) {
    std::size_t total = 0;
    for (const auto& c : cases()) {
        const std::size_t bad = check(c);
        if (bad) INFO("f = ", c.f.to_string(), " over Z/", c.ring.modulus(), " e = ", c.e);
        CHECK(bad == 0);
        total += bad;
    }
    CHECK(total == 0);
}

}  // namespace

TEST_CASE("case mix covers the parameter grid") {
    std::set<std::tuple<std::uint64_t, unsigned, unsigned>> seen;
    std::size_t nonstandard = 0;
    for (const auto& c : cases()) {
        seen.emplace(c.ring.p(), c.ring.m(), c.e);
        CHECK(c.f.degree() <= 3);
        nonstandard += !c.F.is_standard();
    }
    CHECK(cases().size() >= 200);
    CHECK(seen.size() == 12);
    CHECK(nonstandard > 20);
}

TEST_CASE("nu levels form a descending chain") { sweep(props::check_descending); }

TEST_CASE("nu-invariants are periodic and both routes agree") { sweep(props::check_translation); }

TEST_CASE("frobenius shifts the level by one") { sweep(props::check_frobenius_shift); }

TEST_CASE("cartier operator divides degrees by p^e for the standard lift") { sweep(props::check_cartier_degrees); }

TEST_CASE("cartier undoes frobenius pullback") { sweep(props::check_round_trip); }

TEST_CASE("frobenius of a p^m-th power") { sweep(props::check_frobenius_power); }

TEST_CASE("nu window cardinality cap for the standard lift") { sweep(props::check_nu_bound); }

TEST_CASE("nu-invariants of f give floors for powers of f") { sweep(props::check_power_floor); }

TEST_CASE("cartier images of powers descend and match the descent route") {
    sweep(props::check_antichain_and_descent);
}

TEST_CASE("cartier operator is monotone") { sweep(props::check_monotone); }

TEST_CASE("every nu-invariant extends by one digit") { sweep(props::check_digit_extension); }

TEST_CASE("monomial nu sets follow the floor rule under every lift checked") {
    std::mt19937_64 rng(77);
    for (std::uint64_t p : {2, 3})
        for (unsigned m : {0u, 1u})
            for (std::uint64_t a = 1; a <= 4; ++a) {
                const ChainRing r(p, m);
                const Poly f = Poly::variable(r, 2, 0).pow(a);
                const auto F = FrobeniusLift::standard(r, 2);
                for (unsigned e = 0; e <= 2; ++e) {
                    const auto want = oracle::monomial_nu_window(a, p, m, e);
                    CHECK(nu_set(f, F, e).members == want);
                }
            }
}

TEST_CASE("monomial roots are negative and closed under the digit map") {
    for (std::uint64_t p : {2, 3})
        for (unsigned m : {0u, 1u})
            for (std::uint64_t a = 1; a <= 4; ++a) {
                const ChainRing r(p, m);
                const Poly f = Poly::variable(r, 2, 0).pow(a) * Poly::variable(r, 2, 1);
                const auto bounds = ReconstructionBounds::defaults(p);
                const unsigned E = default_max_level(r, bounds);
                const auto report = detect_roots(f, FrobeniusLift::standard(r, 2), E, bounds);
                CHECK(testsupport::accounted_survivors(report) == report.tree.levels[E]);
                // residues of roots with p in the denominator keep drifting, otherwise nothing is left over at m = 0
                if (m == 0 && a % p != 0) CHECK(report.unresolved.empty());
                const auto roots = report.root_values();
                CHECK(!roots.empty());
                for (const auto& alpha : roots) {
                    CHECK(alpha < PAdicRational(0, 1, p));
                    CHECK_FALSE(alpha < PAdicRational(-1, 1, p));
                    bool found = false;
                    for (std::int64_t i = 0; i < static_cast<std::int64_t>(p); ++i) {
                        const PAdicRational beta(alpha.num() * static_cast<std::int64_t>(p) + i * alpha.den(), alpha.den(), p);
                        for (const auto& g : roots) found = found || g == beta;
                    }
                    CHECK(found);
                }
            }
}
