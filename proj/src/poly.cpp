#include "bsroots/poly.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

namespace bsroots {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::span<const std::uint32_t> exponents) {
    if (exponents.size() > kMaxVars)
        throw std::invalid_argument("at most " + std::to_string(kMaxVars) + " variables are supported");
    for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial::Monomial(std::initializer_list<std::uint32_t> exponents)
    : Monomial(std::span<const std::uint32_t>(exponents.begin(), exponents.size())) {}

void Monomial::set(std::size_t i, std::uint32_t value) {
    degree_ = degree_ - exps_[i] + value;
    exps_[i] = value;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
    r.degree_ = a.degree_ + b.degree_;
    return r;
}

bool divides(const Monomial& a, const Monomial& b) {
    if (a.degree_ > b.degree_) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (a.exps_[i] > b.exps_[i]) return false;
    return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = b.exps_[i] - a.exps_[i];
    r.degree_ = b.degree_ - a.degree_;
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.set(i, std::max(a.exps_[i], b.exps_[i]));
    return r;
}

int degrevlex_compare(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t i = kMaxVars; i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

namespace {

bool term_greater(const Term& a, const Term& b) { return degrevlex_compare(a.mono, b.mono) > 0; }

}  // namespace

// -------------------------------------------------------------------- Poly

Poly::Poly(ChainRing ring, std::size_t nvars) : ring_(ring), nvars_(nvars) {
    if (nvars > kMaxVars)
        throw std::invalid_argument("at most " + std::to_string(kMaxVars) + " variables are supported");
}

Poly Poly::constant(ChainRing ring, std::size_t nvars, std::int64_t c) {
    return term(ring, nvars, Monomial{}, ring.normalize(c));
}

Poly Poly::variable(ChainRing ring, std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw std::out_of_range("variable index out of range");
    Monomial mono;
    mono.set(index, 1);
    return term(ring, nvars, mono, ring.one());
}

Poly Poly::term(ChainRing ring, std::size_t nvars, Monomial mono, Scalar coeff) {
    Poly r(ring, nvars);
    if (!coeff.is_zero()) r.terms_.push_back(Term{mono, coeff});
    return r;
}

Poly Poly::from_terms(ChainRing ring, std::size_t nvars, std::vector<Term> terms) {
    Poly r(ring, nvars);
    if (!std::is_sorted(terms.begin(), terms.end(), term_greater))
        std::stable_sort(terms.begin(), terms.end(), term_greater);
    r.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!r.terms_.empty() && r.terms_.back().mono == t.mono) {
            r.terms_.back().coeff = ring.add(r.terms_.back().coeff, t.coeff);
            if (r.terms_.back().coeff.is_zero()) r.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            r.terms_.push_back(t);
        }
    }
    return r;
}

int Poly::degree() const {
    if (terms_.empty()) return kZeroPolyDegree;
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return static_cast<int>(d);
}

const Term& Poly::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
    return terms_.front();
}

Scalar Poly::coeff(const Monomial& mono) const {
    for (const auto& t : terms_)
        if (t.mono == mono) return t.coeff;
    return ring_.zero();
}

unsigned Poly::content_valuation() const {
    unsigned v = ring_.length();
    for (const auto& t : terms_) v = std::min(v, t.coeff.valuation);
    return v;
}

bool Poly::is_unit_constant() const {
    return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff.valuation == 0;
}

void Poly::check_compatible(const Poly& other) const {
    if (!(ring_ == other.ring_)) throw std::invalid_argument("polynomials over different rings");
    if (nvars_ != other.nvars_) throw std::invalid_argument("nvars mismatch");
}

Poly Poly::merge(const Poly& a, const Poly& b, bool subtract) {
    a.check_compatible(b);
    const ChainRing& ring = a.ring_;
    Poly r(ring, a.nvars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
        int cmp;
        if (i == a.terms_.size()) cmp = -1;
        else if (j == b.terms_.size()) cmp = 1;
        else cmp = degrevlex_compare(a.terms_[i].mono, b.terms_[j].mono);
        if (cmp > 0) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (cmp < 0) {
            Term t = b.terms_[j++];
            if (subtract) t.coeff = ring.neg(t.coeff);
            r.terms_.push_back(t);
        } else {
            Scalar c = subtract ? ring.sub(a.terms_[i].coeff, b.terms_[j].coeff)
                                : ring.add(a.terms_[i].coeff, b.terms_[j].coeff);
            if (!c.is_zero()) r.terms_.push_back(Term{a.terms_[i].mono, c});
            ++i;
            ++j;
        }
    }
    return r;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& t : r.terms_) t.coeff = ring_.neg(t.coeff);
    return r;
}

Poly operator+(const Poly& a, const Poly& b) { return Poly::merge(a, b, false); }
Poly operator-(const Poly& a, const Poly& b) { return Poly::merge(a, b, true); }

Poly operator*(const Poly& a, const Poly& b) {
    a.check_compatible(b);
    const Poly& small = a.size() <= b.size() ? a : b;
    const Poly& large = a.size() <= b.size() ? b : a;
    if (small.is_zero()) return Poly(a.ring_, a.nvars_);
    if (small.size() <= 8) {
        Poly acc(a.ring_, a.nvars_);
        for (const auto& t : small.terms_) acc += large.mul_term(t.mono, t.coeff);
        return acc;
    }
    std::vector<Term> prods;
    prods.reserve(small.size() * large.size());
    for (const auto& s : small.terms_)
        for (const auto& l : large.terms_) {
            Scalar c = a.ring_.mul(s.coeff, l.coeff);
            if (!c.is_zero()) prods.push_back(Term{s.mono * l.mono, c});
        }
    return Poly::from_terms(a.ring_, a.nvars_, std::move(prods));
}

Poly& Poly::operator+=(const Poly& b) { return *this = *this + b; }
Poly& Poly::operator-=(const Poly& b) { return *this = *this - b; }
Poly& Poly::operator*=(const Poly& b) { return *this = *this * b; }

Poly Poly::scale(Scalar c) const { return mul_term(Monomial{}, c); }

Poly Poly::mul_term(const Monomial& mono, Scalar c) const {
    Poly r(ring_, nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Scalar prod = ring_.mul(c, t.coeff);
        if (!prod.is_zero()) r.terms_.push_back(Term{t.mono * mono, prod});
    }
    return r;
}

Poly Poly::sub_mul_term(const Monomial& mono, Scalar c, const Poly& g) const {
    return *this - g.mul_term(mono, c);
}

Poly Poly::pow(std::uint64_t exponent) const {
    Poly result = constant(ring_, nvars_, 1);
    Poly base = *this;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent) base *= base;
    }
    return result;
}

Poly Poly::reduce_to(const ChainRing& target) const {
    if (target.p() != ring_.p() || target.m() > ring_.m())
        throw std::invalid_argument("reduce_to: target is not a quotient of " + ring_.to_string());
    Poly r(target, nvars_);
    for (const auto& t : terms_) {
        Scalar c = target.from_unsigned(t.coeff.value);
        if (!c.is_zero()) r.terms_.push_back(Term{t.mono, c});
    }
    return r;
}

Poly Poly::scale_exponents(std::uint64_t factor) const {
    Poly r(ring_, nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            std::uint64_t e = std::uint64_t{t.mono[i]} * factor;
            if (e > std::numeric_limits<std::uint32_t>::max())
                throw std::overflow_error("exponent overflow in Frobenius");
            mono.set(i, static_cast<std::uint32_t>(e));
        }
        r.terms_.push_back(Term{mono, t.coeff});
    }
    return r;
}

std::string Poly::to_string(std::span<const std::string> names) const {
    if (names.size() < nvars_) throw std::invalid_argument("not enough variable names");
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const Term& t = terms_[k];
        if (k) out += " + ";
        std::string mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (t.mono[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
        }
        if (mono.empty()) out += std::to_string(t.coeff.value);
        else if (t.coeff.value == 1) out += mono;
        else out += std::to_string(t.coeff.value) + "*" + mono;
    }
    return out;
}

std::string Poly::to_string() const { return to_string(default_variable_names(nvars_)); }

bool operator==(const Poly& a, const Poly& b) {
    return a.ring_ == b.ring_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

std::vector<std::string> default_variable_names(std::size_t nvars) {
    static const char* const kNames[] = {"x", "y", "z", "w", "u", "v", "s", "t"};
    std::vector<std::string> out;
    for (std::size_t i = 0; i < nvars; ++i)
        out.emplace_back(i < std::size(kNames) ? kNames[i] : "x" + std::to_string(i + 1));
    return out;
}

// ----------------------------------------------------------- FrobeniusLift

FrobeniusLift FrobeniusLift::standard(ChainRing ring, std::size_t nvars) {
    std::vector<Poly> h(nvars, Poly(ring, nvars));
    return from_h(std::move(h));
}

FrobeniusLift FrobeniusLift::from_h(std::vector<Poly> h) {
    if (h.empty()) throw std::invalid_argument("a Frobenius lift needs at least one variable");
    const ChainRing ring = h.front().ring();
    const std::size_t nvars = h.size();
    FrobeniusLift lift(ring, nvars);
    const Scalar p = ring.p_power(1);
    for (std::size_t i = 0; i < nvars; ++i) {
        if (!(h[i].ring() == ring) || h[i].nvars() != nvars)
            throw std::invalid_argument("lift corrections must share ring and variables");
        Poly corr = h[i].scale(p);
        Monomial xp;
        xp.set(i, static_cast<std::uint32_t>(ring.p()));
        lift.images_.push_back(Poly::term(ring, nvars, xp, ring.one()) + corr);
        if (!corr.is_zero()) lift.standard_ = false;
        lift.corrections_.push_back(std::move(corr));
    }
    return lift;
}

Poly FrobeniusLift::apply(const Poly& f) const {
    if (standard_) return f.scale_exponents(ring_.p());
    // Powers of the images, cached per variable.
    std::vector<std::vector<Poly>> powers(nvars_);
    auto power = [&](std::size_t i, std::uint32_t k) -> const Poly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Poly::constant(ring_, nvars_, 1));
        while (cache.size() <= k) cache.push_back(cache.back() * images_[i]);
        return cache[k];
    };
    std::vector<Term> acc;
    for (const auto& t : f.terms()) {
        Poly prod = Poly::term(ring_, nvars_, Monomial{}, t.coeff);
        for (std::size_t i = 0; i < nvars_ && !prod.is_zero(); ++i)
            if (t.mono[i]) prod = prod * power(i, t.mono[i]);
        acc.insert(acc.end(), prod.terms().begin(), prod.terms().end());
    }
    return Poly::from_terms(ring_, nvars_, std::move(acc));
}

FrobeniusLift FrobeniusLift::reduce_to(const ChainRing& target) const {
    // p*h_i reduces to p*(h_i mod p^{k-1}); rebuild from reduced corrections.
    FrobeniusLift out(target, nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
        Poly corr = corrections_[i].reduce_to(target);
        out.images_.push_back(images_[i].reduce_to(target));
        if (!corr.is_zero()) out.standard_ = false;
        out.corrections_.push_back(std::move(corr));
    }
    return out;
}

Poly frobenius_apply(const Poly& f, const FrobeniusLift& lift, unsigned e) {
    if (lift.is_standard()) {
        std::uint64_t factor = 1;
        for (unsigned i = 0; i < e; ++i) {
            if (factor > std::numeric_limits<std::uint32_t>::max() / lift.ring().p())
                throw std::overflow_error("exponent overflow in Frobenius");
            factor *= lift.ring().p();
        }
        return f.scale_exponents(factor);
    }
    Poly r = f;
    for (unsigned i = 0; i < e; ++i) r = lift.apply(r);
    return r;
}

// ---------------------------------------------------------- decomposition

namespace {

// Split every exponent as p^e * q + alpha; for the standard lift this is the full answer.
Decomposition standard_split(const Poly& f, std::uint64_t pe) {
    std::map<Monomial, std::vector<Term>> groups;
    for (const auto& t : f.terms()) {
        Monomial alpha, q;
        for (std::size_t i = 0; i < f.nvars(); ++i) {
            alpha.set(i, static_cast<std::uint32_t>(t.mono[i] % pe));
            q.set(i, static_cast<std::uint32_t>(t.mono[i] / pe));
        }
        groups[alpha].push_back(Term{q, t.coeff});
    }
    Decomposition out;
    for (auto& [alpha, terms] : groups)
        out.emplace(alpha, Poly::from_terms(f.ring(), f.nvars(), std::move(terms)));
    return out;
}

std::uint64_t residue_bound(std::uint64_t p, unsigned e) {
    // Exponents are < 2^32, so p^e beyond that behaves as infinity.
    std::uint64_t pe = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (pe > (std::uint64_t{1} << 33)) break;
        pe *= p;
    }
    return pe;
}

Poly shifted(const Poly& g, const Monomial& alpha) { return g.mul_term(alpha, g.ring().one()); }

}  // namespace

Decomposition phi_decompose(const Poly& f, const FrobeniusLift& lift, unsigned e) {
    const std::uint64_t pe = residue_bound(lift.ring().p(), e);
    if (lift.is_standard() || e == 0) return standard_split(f, pe);

    // Each pass removes the standard split and leaves a residual whose content
    // valuation is strictly larger, so at most m+1 passes are needed.
    Decomposition acc;
    Poly rest = f;
    for (unsigned pass = 0; pass <= lift.ring().length() && !rest.is_zero(); ++pass) {
        for (auto& [alpha, g] : standard_split(rest, pe)) {
            rest -= shifted(frobenius_apply(g, lift, e), alpha);
            auto it = acc.find(alpha);
            if (it == acc.end()) acc.emplace(alpha, std::move(g));
            else it->second += g;
        }
    }
    if (!rest.is_zero()) throw std::logic_error("phi_decompose did not terminate");
    std::erase_if(acc, [](const auto& kv) { return kv.second.is_zero(); });
    return acc;
}

Poly recompose(const Decomposition& parts, const FrobeniusLift& lift, unsigned e) {
    Poly out(lift.ring(), lift.nvars());
    for (const auto& [alpha, g] : parts) out += shifted(frobenius_apply(g, lift, e), alpha);
    return out;
}

}  // namespace bsroots
