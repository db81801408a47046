#include "bsroots/bsr.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "bsroots/cartier.hpp"
#include "bsroots/groebner.hpp"
#include "bsroots/nu.hpp"
#include "bsroots/parallel.hpp"

namespace bsroots {

std::uint64_t ResidueTree::modulus(unsigned e) const { return checked_pow(p, e + m); }

bool ResidueTree::contains(unsigned e, std::uint64_t residue) const {
    if (e >= levels.size()) return false;
    return std::binary_search(levels[e].begin(), levels[e].end(), residue);
}

std::uint64_t ResidueTree::parent(unsigned e, std::uint64_t residue) const {
    if (e == 0) throw std::invalid_argument("level 0 has no parent");
    return residue % modulus(e - 1);
}

ResidueTree candidate_residues(const Poly& f, const FrobeniusLift& F, unsigned E) {
    require_nonzerodivisor(f);
    const ChainRing& ring = f.ring();
    ResidueTree tree{ring.p(), ring.m(), {}};
    const std::uint64_t cap = nu_cardinality_bound(f);
    tree.levels.push_back(nu_set_pointwise(f, F, 0).members);
    for (unsigned e = 0; e < E; ++e) {
        const auto& cur = tree.levels.back();
        const std::uint64_t step = tree.modulus(e);
        std::vector<std::uint64_t> children;
        for (auto r : cur)
            for (std::uint64_t i = 0; i < ring.p(); ++i) children.push_back(r + i * step);
        std::vector<char> keep(children.size(), 0);
        parallel_for(children.size(), [&](std::size_t k) {
            keep[k] = is_nu(f, F, e + 1, static_cast<std::int64_t>(children[k]));
        });
        std::vector<std::uint64_t> next;
        for (std::size_t k = 0; k < children.size(); ++k)
            if (keep[k]) next.push_back(children[k]);
        std::sort(next.begin(), next.end());
        tree.levels.push_back(std::move(next));
    }
    for (const auto& level : tree.levels)
        if (level.size() > cap) throw std::logic_error("survivor count exceeds the nu cardinality bound");
    return tree;
}

ReconstructionBounds ReconstructionBounds::defaults(std::uint64_t p) {
    const std::int64_t den = std::min<std::int64_t>(50, static_cast<std::int64_t>(p * p * p * p) - 1);
    return {den, 2 * den};
}

unsigned default_max_level(const ChainRing& ring, const ReconstructionBounds& bounds) {
    const auto target = static_cast<unsigned __int128>(2) * bounds.num_bound * bounds.den_bound;
    unsigned k = 0;
    for (unsigned __int128 pk = 1; pk < target; pk *= ring.p()) ++k;  // ceil(log_p(target))
    const int level = static_cast<int>(k) + 1 - static_cast<int>(ring.m());
    return static_cast<unsigned>(std::max(3, level));
}

std::vector<PAdicRational> RootReport::root_values() const {
    std::vector<PAdicRational> out;
    for (const auto& r : roots) out.push_back(r.alpha);
    return out;
}

namespace {

bool separates(const ChainRing& ring, unsigned E, const ReconstructionBounds& bounds) {
    const auto need = static_cast<unsigned __int128>(2) * bounds.num_bound * bounds.den_bound;
    unsigned __int128 pk = 1;
    for (unsigned i = 0; i < E + ring.m(); ++i) {
        pk *= ring.p();
        if (pk > need) return true;
    }
    return pk > need;
}

}  // namespace

RootReport detect_roots(const Poly& f, const FrobeniusLift& F, unsigned E, const ReconstructionBounds& bounds) {
    const ChainRing& ring = f.ring();
    if (bounds.den_bound < 1 || bounds.num_bound < 0) throw std::invalid_argument("bad reconstruction bounds");
    if (!separates(ring, E, bounds))
        throw std::invalid_argument("max level too small: need p^(E+m) > 2*num_bound*den_bound");
    RootReport report{ring.p(), ring.m(), E, {}, {}, candidate_residues(f, F, E)};
    const unsigned N = E + ring.m();
    for (auto s : report.tree.levels[E]) {
        bool resolved = false;
        for (const auto& alpha : reconstruct(s, ring.p(), N, bounds.den_bound, bounds.num_bound)) {
            bool ok = true;
            for (unsigned e = 0; e <= E && ok; ++e) ok = report.tree.contains(e, truncate_below(alpha, e + ring.m()));
            if (!ok) continue;
            report.roots.push_back(RootInfo{alpha, 0, false, {}, E});
            resolved = true;
        }
        if (!resolved) report.unresolved.push_back(s);
    }
    std::sort(report.roots.begin(), report.roots.end(),
              [](const RootInfo& a, const RootInfo& b) { return a.alpha < b.alpha; });
    return report;
}

namespace {

unsigned strength_at_level(const Poly& f, const FrobeniusLift& F, const PAdicRational& alpha, unsigned e) {
    const ChainRing& ring = f.ring();
    const std::uint64_t a = truncate_below(alpha, e + ring.m());
    const IdealGens upper = cartier_of_power(f, F, e, a).expand(f);
    const IdealGens lower = cartier_of_power(f, F, e, a + 1).expand(f);
    if (lower.has_unit_generator()) return 0;
    const GroebnerBasis gb = strong_groebner(lower);
    unsigned best = 0;
    for (const auto& g : upper.generators()) best = std::max(best, min_p_power_in(gb, g));
    return best;
}

}  // namespace

StrengthResult strength(const Poly& f, const FrobeniusLift& F, const PAdicRational& alpha, unsigned e_start,
                        unsigned e_stop) {
    require_nonzerodivisor(f);
    if (alpha.p() != f.ring().p()) throw std::invalid_argument("alpha belongs to a different prime");
    if (e_stop < e_start) throw std::invalid_argument("empty level range");
    StrengthResult out;
    out.per_level.assign(e_stop - e_start + 1, 0);
    parallel_for(out.per_level.size(),
                 [&](std::size_t i) { out.per_level[i] = strength_at_level(f, F, alpha, e_start + static_cast<unsigned>(i)); });
    out.value = out.per_level.back();
    const std::size_t n = out.per_level.size();
    out.stabilized = n >= 2 && out.per_level[n - 1] == out.per_level[n - 2];
    return out;
}

RootReport bfunction_report(const Poly& f, const FrobeniusLift& F, unsigned E, const ReconstructionBounds& bounds) {
    RootReport report = detect_roots(f, F, E, bounds);
    for (auto& root : report.roots) {
        const StrengthResult s = strength(f, F, root.alpha, 0, E);
        root.strength = s.value;
        root.stabilized = s.stabilized;
        root.strength_by_level = s.per_level;
    }
    return report;
}

bool nonnegative_roots_are_translates(const std::vector<PAdicRational>& roots) {
    for (const auto& r : roots) {
        if (r.is_negative()) continue;
        const bool found = std::any_of(roots.begin(), roots.end(),
                                       [&](const PAdicRational& q) { return q.is_negative() && q.congruent_mod_z(r); });
        if (!found) return false;
    }
    return true;
}

CrosscheckResult crosscheck_mod_p(const Poly& f, const FrobeniusLift& F, unsigned E, const ReconstructionBounds& bounds) {
    const ChainRing& ring = f.ring();
    const ChainRing residue_field(ring.p(), 0);
    CrosscheckResult out;
    out.full = detect_roots(f, F, E, bounds);
    out.reduced = detect_roots(f.reduce_to(residue_field), F.reduce_to(residue_field), E + ring.m(), bounds);

    const auto full = out.full.root_values();
    const auto reduced = out.reduced.root_values();
    auto describe = [](const std::vector<PAdicRational>& v) {
        std::string s = "{";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
        return s + "}";
    };

    std::vector<PAdicRational> neg_full, neg_reduced;
    for (const auto& r : full)
        if (r.is_negative()) neg_full.push_back(r);
    for (const auto& r : reduced)
        if (r.is_negative()) neg_reduced.push_back(r);
    out.negatives_match = neg_full == neg_reduced;
    if (!out.negatives_match)
        out.mismatches.push_back("negative roots differ: " + describe(neg_full) + " vs " + describe(neg_reduced));

    out.positives_are_translates = nonnegative_roots_are_translates(full);
    if (!out.positives_are_translates)
        out.mismatches.push_back("a nonnegative root is not an integer translate of a negative root: " + describe(full));

    auto classes = [](const std::vector<PAdicRational>& v) {
        std::set<std::pair<std::int64_t, std::int64_t>> s;
        for (const auto& r : v) {
            const PAdicRational t = r.translate_into_unit_interval();
            s.emplace(t.num(), t.den());
        }
        return s;
    };
    out.classes_mod_z_match = classes(full) == classes(reduced);
    if (!out.classes_mod_z_match)
        out.mismatches.push_back("root classes mod Z differ: " + describe(full) + " vs " + describe(reduced));
    return out;
}

std::optional<std::int64_t> rational_valuation(std::int64_t num, std::int64_t den, std::uint64_t p) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (num == 0) return std::nullopt;
    const auto sp = static_cast<std::int64_t>(p);
    std::int64_t v = 0;
    for (; num % sp == 0; num /= sp) ++v;
    for (; den % sp == 0; den /= sp) --v;
    return v;
}

std::vector<StrengthVerdict> strength_vs_bsato(const Poly& f, const FrobeniusLift& F, const PAdicRational& alpha,
                                               const std::vector<BValue>& b_values,
                                               const std::vector<unsigned>& m_values, unsigned E) {
    const auto it = std::find_if(b_values.begin(), b_values.end(), [&](const BValue& b) { return b.alpha == alpha; });
    if (it == b_values.end()) throw std::invalid_argument("no b-function value supplied for " + alpha.to_string());
    const auto bval = rational_valuation(it->num, it->den, f.ring().p());
    std::vector<StrengthVerdict> out;
    std::optional<unsigned> prev;
    for (unsigned m : m_values) {
        if (m > f.ring().m()) throw std::invalid_argument("m exceeds the precision of f");
        const ChainRing target(f.ring().p(), m);
        const unsigned s = strength(f.reduce_to(target), F.reduce_to(target), alpha, 0, E).value;
        const bool bound = !bval || *bval >= static_cast<std::int64_t>(s);
        const bool monotone = !prev || *prev <= s;
        out.push_back({m, s, bval, bound, monotone});
        prev = s;
    }
    return out;
}

}  // namespace bsroots
