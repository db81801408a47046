#include "bsroots/cfun.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bsroots {

LevelFunction::LevelFunction(ChainRing ring, unsigned level, std::vector<Scalar> values)
    : ring_(ring), level_(level), values_(std::move(values)) {
    if (values_.size() != checked_pow(ring_.p(), level_))
        throw std::invalid_argument("level function needs p^level values");
}

LevelFunction LevelFunction::constant(ChainRing ring, unsigned level, std::int64_t c) {
    return LevelFunction(ring, level, std::vector<Scalar>(checked_pow(ring.p(), level), ring.normalize(c)));
}

Scalar LevelFunction::at(std::int64_t a) const {
    const auto n = static_cast<std::int64_t>(values_.size());
    return values_[static_cast<std::size_t>(((a % n) + n) % n)];
}

namespace {

template <class Op>
LevelFunction pointwise(const LevelFunction& a, const LevelFunction& b, Op op) {
    if (!(a.ring() == b.ring())) throw std::invalid_argument("level functions over different rings");
    const unsigned level = std::max(a.level(), b.level());
    const LevelFunction ra = refine(a, level), rb = refine(b, level);
    std::vector<Scalar> v(ra.values().size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = op(ra.values()[i], rb.values()[i]);
    return LevelFunction(a.ring(), level, std::move(v));
}

}  // namespace

LevelFunction operator+(const LevelFunction& a, const LevelFunction& b) {
    return pointwise(a, b, [&](Scalar x, Scalar y) { return a.ring().add(x, y); });
}

LevelFunction operator*(const LevelFunction& a, const LevelFunction& b) {
    return pointwise(a, b, [&](Scalar x, Scalar y) { return a.ring().mul(x, y); });
}

bool operator==(const LevelFunction& a, const LevelFunction& b) {
    if (!(a.ring_ == b.ring_)) return false;
    const unsigned level = std::max(a.level_, b.level_);
    return refine(a, level).values_ == refine(b, level).values_;
}

LevelFunction chi(const ChainRing& ring, unsigned e, std::int64_t a) {
    const std::uint64_t n = checked_pow(ring.p(), e);
    if (a < 0 || static_cast<std::uint64_t>(a) >= n) throw std::out_of_range("residue outside [0, p^e)");
    std::vector<Scalar> v(n, ring.zero());
    v[static_cast<std::size_t>(a)] = ring.one();
    return LevelFunction(ring, e, std::move(v));
}

LevelFunction refine(const LevelFunction& phi, unsigned to_level) {
    if (to_level < phi.level()) throw std::invalid_argument("cannot refine to a coarser level");
    if (to_level == phi.level()) return phi;
    const std::uint64_t n = checked_pow(phi.ring().p(), to_level);
    const std::size_t period = phi.values().size();
    std::vector<Scalar> v(n);
    for (std::uint64_t r = 0; r < n; ++r) v[r] = phi.values()[r % period];
    return LevelFunction(phi.ring(), to_level, std::move(v));
}

void FiniteSupportModule::add(const PAdicRational& alpha, unsigned exponent) {
    for (const auto& pt : points)
        if (pt.alpha == alpha) throw std::invalid_argument("repeated support point " + alpha.to_string());
    points.push_back({alpha, exponent});
}

unsigned stalk(const FiniteSupportModule& M, const PAdicRational& beta) {
    for (const auto& pt : M.points)
        if (pt.alpha == beta) return pt.exponent;
    return 0;
}

bool bfunction_contains(const RootReport& report, const LevelFunction& phi) {
    const unsigned e = phi.level();
    std::set<std::uint64_t> seen;
    for (const auto& root : report.roots)
        if (!seen.insert(truncate_below(root.alpha, e)).second)
            throw std::invalid_argument("level does not separate roots");
    for (const auto& root : report.roots) {
        const Scalar v = phi.values()[truncate_below(root.alpha, e)];
        if (v.valuation < root.strength) return false;
    }
    return true;
}

}  // namespace bsroots
