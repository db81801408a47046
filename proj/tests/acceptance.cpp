// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "bsroots/bsr.hpp"
#include "bsroots/nu.hpp"
#include "oracle_checks.hpp"
#include "properties.hpp"

using namespace bsroots;
using testsupport::P;

namespace {

using Fraction = std::pair<std::int64_t, std::int64_t>;

std::set<Fraction> as_set(const std::vector<PAdicRational>& xs) {
    std::set<Fraction> out;
    for (const auto& x : xs) out.emplace(x.num(), x.den());
    return out;
}

std::string show(const std::set<Fraction>& xs) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [n, d] : xs) {
        os << (first ? "" : ", ") << n;
        if (d != 1) os << "/" << d;
        first = false;
    }
    os << "}";
    return os.str();
}

// f = x^2 + 3y over Z/9.
bool criterion1(std::ostream& log) {
    const auto start = std::chrono::steady_clock::now();
    const ChainRing z9(3, 1);
    const Poly f = P("x^2 + 3*y", z9);
    const auto F = FrobeniusLift::standard(z9, 2);
    bool ok = nu_set(f, F, 2).members == std::vector<std::uint64_t>{4, 5, 8, 13, 14, 17, 22, 23, 26};

    const std::uint64_t pe = 27, window = 81;
    std::set<std::uint64_t> formula;
    for (std::uint64_t k = 1; k * pe - 1 < window; ++k) formula.insert(k * pe - 1);
    for (std::uint64_t k = 1; (k * pe - 1) / 2 < window; k += 2) {
        formula.insert((k * pe - 1) / 2);
        if ((k * pe + 1) / 2 < window) formula.insert((k * pe + 1) / 2);
    }
    const auto level3 = nu_set(f, F, 3).members;
    ok = ok && std::set<std::uint64_t>(level3.begin(), level3.end()) == formula;

    const auto report = detect_roots(f, F, 4, {10, 10});
    const auto roots = as_set(report.root_values());
    ok = ok && roots == std::set<Fraction>{{-1, 1}, {-1, 2}, {1, 2}};
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ok = ok && secs < 60;
    log << "roots " << show(roots) << ", " << secs << " s";
    return ok;
}

// str(-1, x) = m + 1, stabilized.
bool criterion2(std::ostream& log) {
    bool ok = true;
    for (auto [p, m] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 0}, {2, 1}, {2, 2}, {3, 0}, {3, 1}, {5, 0}}) {
        const ChainRing r(p, m);
        const auto s = strength(P("x", r), FrobeniusLift::standard(r, 2), PAdicRational(-1, 1, p), 0, 4);
        ok = ok && s.value == m + 1 && s.stabilized;
        log << "(" << p << "," << m << ")->" << s.value << " ";
    }
    return ok;
}

// Lift dependence of nu over Z/4 and lift independence of the roots.
bool criterion3(std::ostream& log) {
    const ChainRing z4(2, 1);
    const auto F1 = FrobeniusLift::standard(z4, 2);
    const auto F2 = testsupport::lift_f2();
    const Poly x = P("x", z4);
    bool ok = nu_set(x, F1, 1).members == std::vector<std::uint64_t>{1, 3};
    ok = ok && nu_set(P("x + y", z4), F1, 1).members == std::vector<std::uint64_t>{1, 2, 3};
    ok = ok && nu_set(x, F2, 1).members == std::vector<std::uint64_t>{1, 2, 3};
    const auto bounds = ReconstructionBounds::defaults(2);
    const unsigned E = default_max_level(z4, bounds);
    const auto r1 = as_set(detect_roots(x, F1, E, bounds).root_values());
    const auto r2 = as_set(detect_roots(x, F2, E, bounds).root_values());
    ok = ok && r1 == r2;
    log << "roots F1 " << show(r1) << ", F2 " << show(r2);
    return ok;
}

// Comparison with the reduction mod p.
bool criterion4(std::ostream& log) {
    const ChainRing z9(3, 1), z4(2, 1);
    bool ok = true;
    for (const auto& f : {P("x^2 + 3*y", z9), P("x", z4), P("x + 2*y", z4)}) {
        const auto bounds = ReconstructionBounds::defaults(f.ring().p());
        const auto c = crosscheck_mod_p(f, FrobeniusLift::standard(f.ring(), 2), default_max_level(f.ring(), bounds), bounds);
        ok = ok && c.ok();
        log << f.to_string() << ":" << (c.ok() ? "ok" : "mismatch") << " ";
        for (const auto& msg : c.mismatches) log << "[" << msg << "] ";
    }
    return ok;
}

bool criterion5(std::ostream& log) {
    const auto cases = props::make_cases(20240611, 240);
    const std::vector<std::pair<const char*, std::function<std::size_t(const props::Case&)>>> checks{
        {"descending", props::check_descending},
        {"translation", props::check_translation},
        {"frobenius-shift", props::check_frobenius_shift},
        {"degrees", props::check_cartier_degrees},
        {"round-trip", props::check_round_trip},
        {"frobenius-power", props::check_frobenius_power},
        {"cardinality", props::check_nu_bound},
        {"power-floor", props::check_power_floor},
    };
    std::size_t total = 0;
    for (const auto& [name, check] : checks) {
        std::size_t bad = 0;
        for (const auto& c : cases) bad += check(c);
        if (bad) log << name << ":" << bad << " ";
        total += bad;
    }
    log << cases.size() << " cases, " << total << " violations";
    return total == 0;
}

bool criterion6(std::ostream& log) {
    const auto t = oracle_checks::membership_sweep(424242, 600);
    std::size_t spans = 0;
    const std::size_t span_bad = oracle_checks::span_sweep(31337, 400, &spans);
    log << t.instances << " membership instances (" << t.members << " members), " << t.disagreements
        << " disagreements; " << spans << " span instances, " << span_bad << " disagreements";
    return t.instances >= 500 && t.disagreements == 0 && span_bad == 0;
}

// Monomial closed forms against the floor oracle.
bool criterion7(std::ostream& log) {
    bool ok = true;
    for (auto [a, p] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{1, 2}, {1, 3}, {2, 3}, {3, 2}})
        for (unsigned m : {0u, 1u}) {
            const ChainRing r(p, m);
            const auto bounds = ReconstructionBounds::defaults(p);
            const unsigned E = default_max_level(r, bounds);
            const Poly f = Poly::variable(r, 2, 0).pow(a);
            const auto report = detect_roots(f, FrobeniusLift::standard(r, 2), E, bounds);
            const auto got = as_set(report.root_values());
            const auto want = oracle::monomial_roots(a, p, m, E, bounds.den_bound, bounds.num_bound);
            // every oracle survivor is either the truncation of a reported root or listed as unresolved
            const bool accounted = testsupport::accounted_survivors(report) == oracle::monomial_survivors(a, p, m, E);
            ok = ok && got == want && accounted;
            if (got != want) log << "x^" << a << " p=" << p << " m=" << m << " got " << show(got) << " want " << show(want) << " ";
            if (!accounted) log << "x^" << a << " p=" << p << " m=" << m << " survivors not accounted for ";
        }
    {
        const ChainRing f2(2, 0);
        const auto bounds = ReconstructionBounds::defaults(2);
        const auto got = as_set(detect_roots(P("x^3", f2), FrobeniusLift::standard(f2, 2), default_max_level(f2, bounds), bounds).root_values());
        ok = ok && got == std::set<Fraction>{{-1, 1}, {-2, 3}, {-1, 3}};
        log << "x^3 at p=2: " << show(got) << " ";
    }
    for (std::uint64_t p : {2, 3})
        for (unsigned m : {0u, 1u, 2u}) {
            const ChainRing r(p, m);
            for (const char* src : {"x", "x*y"}) {
                const auto s = strength(P(src, r), FrobeniusLift::standard(r, 2), PAdicRational(-1, 1, p), 0, 4);
                ok = ok && s.value == m + 1;
                if (s.value != m + 1) log << "str(-1, " << src << ") = " << s.value << " at p=" << p << " m=" << m << " ";
            }
        }
    return ok;
}

// Strength against supplied b-functions.
bool criterion8(std::ostream& log) {
    struct Run {
        const char* f;
        std::uint64_t p;
        std::vector<BValue> b;
        std::vector<PAdicRational> alphas;
    };
    const auto q = [](std::int64_t n, std::int64_t d, std::uint64_t p) { return PAdicRational(n, d, p); };
    std::vector<Run> runs;
    for (std::uint64_t p : {2, 3}) {
        // b_x(s) = s + 1
        runs.push_back({"x", p,
                        {{q(-1, 1, p), 0, 1}, {q(-2, 1, p), -1, 1}, {q(-1, p == 2 ? 3 : 2, p), p == 2 ? 2 : 1, p == 2 ? 3 : 2}},
                        {q(-1, 1, p), q(-2, 1, p), q(-1, p == 2 ? 3 : 2, p)}});
    }
    // b_{x^2}(s) = (s+1)(s+1/2) at p = 3
    runs.push_back({"x^2", 3,
                    {{q(-1, 1, 3), 0, 1}, {q(-1, 2, 3), 0, 1}, {q(-2, 1, 3), 3, 2}, {q(-1, 4, 3), 3, 16}},
                    {q(-1, 1, 3), q(-1, 2, 3), q(-2, 1, 3), q(-1, 4, 3)}});
    std::size_t violations = 0, verdicts = 0;
    for (const auto& run : runs) {
        const ChainRing r(run.p, 2);
        for (const auto& alpha : run.alphas) {
            const auto v = strength_vs_bsato(P(run.f, r), FrobeniusLift::standard(r, 2), alpha, run.b, {0, 1, 2}, 4);
            for (const auto& x : v) {
                ++verdicts;
                violations += !x.bound_holds || !x.monotone_holds;
            }
        }
    }
    log << verdicts << " verdicts, " << violations << " violations";
    return violations == 0;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<bool(std::ostream&)>>> criteria{
        {"x^2+3y over Z/9: nu windows and roots", criterion1},
        {"strength of -1 for x", criterion2},
        {"nu depends on the lift, roots do not", criterion3},
        {"crosscheck against f mod p", criterion4},
        {"randomized property suite", criterion5},
        {"oracle equivalence", criterion6},
        {"monomial closed forms and strengths", criterion7},
        {"strength bounded by b-function valuation", criterion8},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::ostringstream log;
        bool ok = false;
        try {
            ok = criteria[i].second(log);
        } catch (const std::exception& ex) {
            log << "exception: " << ex.what();
        }
        failures += !ok;
        std::cout << "criterion " << i + 1 << ": " << (ok ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ("
                  << log.str() << ")" << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
