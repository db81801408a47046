#include <doctest.h>

#include <stdexcept>

#include "bsroots/cfun.hpp"

using namespace bsroots;

namespace {
const ChainRing z2(2, 0), z9(3, 1);

RootReport single_root(const ChainRing& r, std::int64_t u, std::int64_t d, unsigned t) {
    RootReport rep;
    rep.p = r.p();
    rep.m = r.m();
    rep.roots.push_back(RootInfo{PAdicRational(u, d, r.p()), t, true, {}, 0});
    return rep;
}
}  // namespace

TEST_CASE("chi") {
    const auto c = chi(z2, 1, 0);
    REQUIRE(c.values().size() == 2);
    CHECK(c.values()[0].value == 1);
    CHECK(c.values()[1].value == 0);
    CHECK(chi(z9, 0, 0) == LevelFunction::constant(z9, 0, 1));
    CHECK_THROWS_AS(chi(z9, 2, 9), std::out_of_range);
    CHECK_THROWS_AS(chi(z9, 2, -1), std::out_of_range);
}

TEST_CASE("refine") {
    CHECK(refine(chi(z2, 1, 0), 2) == chi(z2, 2, 0) + chi(z2, 2, 2));
    CHECK(refine(LevelFunction::constant(z9, 1, 4), 3) == LevelFunction::constant(z9, 3, 4));
    const auto c = chi(z9, 2, 5);
    CHECK(refine(c, 2).values() == c.values());
    CHECK_THROWS_AS(refine(c, 1), std::invalid_argument);
    for (unsigned e = 0; e <= 2; ++e)
        for (std::int64_t a = 0; a < static_cast<std::int64_t>(checked_pow(3, e)); ++a) {
            LevelFunction sum = LevelFunction::constant(z9, e + 1, 0);
            for (std::int64_t i = 0; i < 3; ++i) sum = sum + chi(z9, e + 1, a + i * static_cast<std::int64_t>(checked_pow(3, e)));
            CHECK(refine(chi(z9, e, a), e + 1) == sum);
        }
}

TEST_CASE("idempotents") {
    for (unsigned e = 0; e <= 3; ++e) {
        const auto n = static_cast<std::int64_t>(checked_pow(3, e));
        LevelFunction total = LevelFunction::constant(z9, e, 0);
        for (std::int64_t a = 0; a < n; ++a) {
            const auto ca = chi(z9, e, a);
            CHECK(ca * ca == ca);
            for (std::int64_t b = a + 1; b < n; ++b) CHECK(ca * chi(z9, e, b) == LevelFunction::constant(z9, e, 0));
            total = total + ca;
        }
        CHECK(total == LevelFunction::constant(z9, e, 1));
    }
}

TEST_CASE("refine is a ring homomorphism") {
    const LevelFunction f(z9, 1, {z9.normalize(2), z9.normalize(3), z9.normalize(7)});
    const LevelFunction g(z9, 1, {z9.normalize(5), z9.normalize(0), z9.normalize(6)});
    CHECK(refine(f + g, 3) == refine(f, 3) + refine(g, 3));
    CHECK(refine(f * g, 3) == refine(f, 3) * refine(g, 3));
    CHECK_THROWS_AS(LevelFunction(z9, 1, {z9.one()}), std::invalid_argument);
}

TEST_CASE("stalk") {
    FiniteSupportModule M;
    M.add(PAdicRational(-1, 1, 3), 2);
    CHECK(stalk(M, PAdicRational(-1, 1, 3)) == 2);
    CHECK(stalk(M, PAdicRational(1, 2, 3)) == 0);
    CHECK(stalk(FiniteSupportModule{}, PAdicRational(-1, 1, 3)) == 0);
    CHECK_THROWS_AS(M.add(PAdicRational(-1, 1, 3), 1), std::invalid_argument);
}

TEST_CASE("bfunction_contains") {
    const ChainRing z27(3, 2);
    const auto rep = single_root(z27, -1, 1, 3);
    for (unsigned e = 1; e <= 3; ++e) {
        const auto n = static_cast<std::int64_t>(checked_pow(3, e));
        for (std::int64_t r = 0; r < n - 1; ++r) CHECK(bfunction_contains(rep, chi(z27, e, r)));
        CHECK_FALSE(bfunction_contains(rep, chi(z27, e, n - 1)));
    }
    const auto rep2 = single_root(z9, -1, 1, 2);
    CHECK_FALSE(bfunction_contains(rep2, LevelFunction::constant(z9, 1, 3)));
    CHECK(bfunction_contains(rep2, LevelFunction::constant(z9, 1, 0)));
    CHECK(bfunction_contains(rep2, LevelFunction::constant(z9, 1, 9)));

    RootReport two = rep2;
    two.roots.push_back(RootInfo{PAdicRational(2, 1, 3), 1, true, {}, 0});
    CHECK_THROWS_WITH_AS(bfunction_contains(two, LevelFunction::constant(z9, 1, 0)), "level does not separate roots",
                         std::invalid_argument);
    CHECK_NOTHROW(bfunction_contains(two, LevelFunction::constant(z9, 2, 0)));
}

TEST_CASE("bfunction ideal absorbs products") {
    RootReport rep = single_root(z9, -1, 1, 2);
    rep.roots.push_back(RootInfo{PAdicRational(-1, 2, 3), 1, true, {}, 0});
    std::vector<LevelFunction> fs;
    for (std::uint64_t a = 0; a < 9; ++a)
        for (std::uint64_t b = 0; b < 9; b += 3) {
            std::vector<Scalar> v(9, z9.normalize(static_cast<std::int64_t>(a)));
            v[8] = z9.normalize(static_cast<std::int64_t>(b * a));
            v[4] = z9.normalize(static_cast<std::int64_t>(b));
            fs.emplace_back(z9, 2, v);
        }
    for (const auto& phi : fs) {
        if (!bfunction_contains(rep, phi)) continue;
        for (const auto& psi : fs) CHECK(bfunction_contains(rep, phi * psi));
    }
}
