#include "bsroots/groebner.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <tuple>

#include "bsroots/linalg.hpp"

namespace bsroots {

namespace {

// A polynomial together with its expression in the input generators.
struct Item {
    Poly p;
    std::vector<Poly> cof;
};

bool term_divides(const Term& a, const Term& b) {
    return divides(a.mono, b.mono) && a.coeff.valuation <= b.coeff.valuation;
}

class Engine {
public:
    Engine(ChainRing ring, std::size_t nvars, bool track) : ring_(ring), nvars_(nvars), track_(track) {}

    // Full reduction of x against basis; the remainder has no reducible term.
    Item reduce(Item x, const std::vector<Item>& basis) const {
        std::vector<Term> rem;
        while (!x.p.is_zero()) {
            const Term lt = x.p.leading_term();
            const Item* red = nullptr;
            for (const auto& b : basis)
                if (term_divides(b.p.leading_term(), lt)) {
                    red = &b;
                    break;
                }
            if (!red) {
                rem.push_back(lt);
                x.p -= Poly::term(ring_, nvars_, lt.mono, lt.coeff);
                continue;
            }
            const Term& bl = red->p.leading_term();
            const Monomial shift = quotient(lt.mono, bl.mono);
            const Scalar q = *ring_.divide_exact(lt.coeff, bl.coeff);
            x.p = x.p.sub_mul_term(shift, q, red->p);
            if (track_)
                for (std::size_t i = 0; i < x.cof.size(); ++i)
                    x.cof[i] = x.cof[i].sub_mul_term(shift, q, red->cof[i]);
        }
        x.p = Poly::from_terms(ring_, nvars_, std::move(rem));
        return x;
    }

    // Scales so the leading coefficient is exactly p^j.
    void normalize(Item& x) const {
        const Scalar lc = x.p.leading_term().coeff;
        const Scalar u = ring_.unit_part(lc);
        if (u.value == 1) return;
        const Scalar inv = ring_.invert(u);
        x.p = x.p.scale(inv);
        for (auto& c : x.cof) c = c.scale(inv);
    }

    Item combine(const Item& a, const Monomial& ma, Scalar ca, const Item& b, const Monomial& mb, Scalar cb) const {
        Item out{a.p.mul_term(ma, ca).sub_mul_term(mb, cb, b.p), {}};
        if (track_) {
            out.cof.reserve(a.cof.size());
            for (std::size_t i = 0; i < a.cof.size(); ++i)
                out.cof.push_back(a.cof[i].mul_term(ma, ca).sub_mul_term(mb, cb, b.cof[i]));
        }
        return out;
    }

    Item scaled(const Item& a, Scalar c) const {
        Item out{a.p.scale(c), {}};
        for (const auto& q : a.cof) out.cof.push_back(q.scale(c));
        return out;
    }

    void run(const std::vector<Poly>& inputs) {
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            Item x{inputs[i], {}};
            if (track_) {
                x.cof.assign(inputs.size(), Poly(ring_, nvars_));
                x.cof[i] = Poly::constant(ring_, nvars_, 1);
            }
            add(std::move(x));
        }
        while (!pairs_.empty()) {
            const auto [deg, j, i, kind] = pairs_.top();
            pairs_.pop();
            if (kind == 0) {
                const Item& g = basis_[j];
                const unsigned v = g.p.leading_term().coeff.valuation;
                add(scaled(g, ring_.p_power(ring_.length() - v)));
            } else {
                add(spoly(basis_[i], basis_[j]));
            }
        }
    }

    std::vector<Item>& basis() { return basis_; }

private:
    Item spoly(const Item& a, const Item& b) const {
        const Term& ta = a.p.leading_term();
        const Term& tb = b.p.leading_term();
        const Monomial l = lcm(ta.mono, tb.mono);
        const unsigned j = std::max(ta.coeff.valuation, tb.coeff.valuation);
        return combine(a, quotient(l, ta.mono), ring_.p_power(j - ta.coeff.valuation), b, quotient(l, tb.mono),
                       ring_.p_power(j - tb.coeff.valuation));
    }

    void add(Item x) {
        x = reduce(std::move(x), basis_);
        if (x.p.is_zero()) return;
        normalize(x);
        const std::size_t k = basis_.size();
        const Term lt = x.p.leading_term();
        basis_.push_back(std::move(x));
        if (lt.coeff.valuation > 0) pairs_.push({lt.mono.degree(), k, k, 0});
        for (std::size_t i = 0; i < k; ++i) {
            const Term& ti = basis_[i].p.leading_term();
            const Monomial l = lcm(ti.mono, lt.mono);
            // Coprime monic leading terms: the S-polynomial reduces to zero.
            if (ti.coeff.valuation == 0 && lt.coeff.valuation == 0 && l.degree() == ti.mono.degree() + lt.mono.degree())
                continue;
            pairs_.push({l.degree(), k, i, 1});
        }
    }

    using Pair = std::tuple<unsigned, std::size_t, std::size_t, int>;

    ChainRing ring_;
    std::size_t nvars_;
    bool track_;
    std::vector<Item> basis_;
    std::priority_queue<Pair, std::vector<Pair>, std::greater<>> pairs_;
};

bool lead_less(const Poly& a, const Poly& b) {
    const Term& ta = a.leading_term();
    const Term& tb = b.leading_term();
    const int c = degrevlex_compare(ta.mono, tb.mono);
    if (c != 0) return c < 0;
    return ta.coeff.valuation < tb.coeff.valuation;
}

}  // namespace

bool GroebnerBasis::is_unit() const {
    return std::any_of(elements.begin(), elements.end(), [](const Poly& g) { return g.is_unit_constant(); });
}

GroebnerBasis strong_groebner(const IdealGens& J, bool track_cofactors) {
    const ChainRing ring = J.ring();
    const std::size_t nvars = J.nvars();
    GroebnerBasis out{ring, nvars, {}, {}, {}, track_cofactors};

    Engine engine(ring, nvars, track_cofactors);
    std::vector<Poly> inputs = J.generators();
    std::stable_sort(inputs.begin(), inputs.end(), lead_less);
    if (track_cofactors) out.inputs = inputs;
    engine.run(inputs);
    auto& all = engine.basis();

    // Minimalize: drop elements whose leading term is divisible by another's.
    std::vector<Item> kept;
    for (std::size_t i = 0; i < all.size(); ++i) {
        const Term& ti = all[i].p.leading_term();
        bool redundant = false;
        for (std::size_t k = 0; k < all.size() && !redundant; ++k) {
            if (k == i) continue;
            const Term& tk = all[k].p.leading_term();
            if (!term_divides(tk, ti)) continue;
            const bool same = tk.mono == ti.mono && tk.coeff.valuation == ti.coeff.valuation;
            redundant = !same || k < i;
        }
        if (!redundant) kept.push_back(all[i]);
    }

    // Tail reduction.
    for (std::size_t i = 0; i < kept.size(); ++i) {
        const Term lt = kept[i].p.leading_term();
        Item tail = kept[i];
        tail.p -= Poly::term(ring, nvars, lt.mono, lt.coeff);
        Item lead{Poly::term(ring, nvars, lt.mono, lt.coeff), {}};
        // Reduce the tail against the other elements only, so the leading term cannot be cancelled.
        std::vector<Item> others;
        for (std::size_t k = 0; k < kept.size(); ++k)
            if (k != i) others.push_back(kept[k]);
        Item r = engine.reduce(std::move(tail), others);
        kept[i].p = lead.p + r.p;
        kept[i].cof = std::move(r.cof);
    }

    std::stable_sort(kept.begin(), kept.end(), [](const Item& a, const Item& b) { return lead_less(a.p, b.p); });
    for (auto& k : kept) {
        out.elements.push_back(std::move(k.p));
        if (track_cofactors) out.cofactors.push_back(std::move(k.cof));
    }
    return out;
}

Poly normal_form(const Poly& g, const GroebnerBasis& G) {
    Engine engine(G.ring, G.nvars, false);
    std::vector<Item> basis;
    basis.reserve(G.elements.size());
    for (const auto& e : G.elements) basis.push_back({e, {}});
    return engine.reduce({g, {}}, basis).p;
}

Reduction reduce_with_certificate(const Poly& g, const GroebnerBasis& G) {
    if (!G.tracked) throw std::logic_error("basis was computed without cofactor tracking");
    Engine engine(G.ring, G.nvars, true);
    std::vector<Item> basis;
    for (std::size_t k = 0; k < G.elements.size(); ++k) basis.push_back({G.elements[k], G.cofactors[k]});
    Item start{g, std::vector<Poly>(G.inputs.size(), Poly(G.ring, G.nvars))};
    Item r = engine.reduce(std::move(start), basis);
    // reduce() subtracts multiples, so the accumulated cofactors express remainder - g.
    for (auto& c : r.cof) c = -c;
    return {std::move(r.p), std::move(r.cof)};
}

bool ideal_contains(const GroebnerBasis& G, const Poly& g) {
    if (g.is_zero()) return true;
    if (G.is_unit()) return true;
    return normal_form(g, G).is_zero();
}

bool ideal_contains(const IdealGens& J, const Poly& g) {
    if (g.is_zero()) return true;
    if (J.has_unit_generator()) return true;
    return ideal_contains(strong_groebner(J), g);
}

bool ideal_subset(const IdealGens& A, const GroebnerBasis& B) {
    return std::all_of(A.generators().begin(), A.generators().end(),
                       [&](const Poly& g) { return ideal_contains(B, g); });
}

bool ideal_equal(const IdealGens& A, const IdealGens& B) {
    if (A.has_unit_generator() && B.has_unit_generator()) return true;
    return ideal_subset(A, strong_groebner(B)) && ideal_subset(B, strong_groebner(A));
}

unsigned min_p_power_in(const GroebnerBasis& G, const Poly& g) {
    const ChainRing& ring = G.ring;
    for (unsigned t = 0; t <= ring.m(); ++t)
        if (ideal_contains(G, g.scale(ring.p_power(t)))) return t;
    return ring.length();
}

unsigned min_p_power_in(const IdealGens& J, const Poly& g) { return min_p_power_in(strong_groebner(J), g); }

namespace {

void monomials_up_to(std::size_t nvars, unsigned cap, std::size_t var, Monomial cur, std::vector<Monomial>& out) {
    if (var == nvars) {
        out.push_back(cur);
        return;
    }
    const unsigned used = cur.degree();
    for (unsigned e = 0; used + e <= cap; ++e) {
        Monomial next = cur;
        next.set(var, e);
        monomials_up_to(nvars, cap, var + 1, next, out);
    }
}

}  // namespace

std::optional<bool> membership_bruteforce(const IdealGens& J, const Poly& g, unsigned multiplier_degree_cap) {
    if (g.is_zero()) return true;
    if (J.is_zero()) return std::nullopt;
    const ChainRing& ring = J.ring();
    std::vector<Monomial> mults;
    monomials_up_to(J.nvars(), multiplier_degree_cap, 0, Monomial{}, mults);

    std::vector<Poly> rows;
    for (const auto& f : J.generators())
        for (const auto& mu : mults) rows.push_back(f.mul_term(mu, ring.one()));

    std::map<Monomial, std::size_t> column;
    auto index_of = [&](const Poly& q) {
        for (const auto& t : q.terms()) column.try_emplace(t.mono, 0);
    };
    for (const auto& r : rows) index_of(r);
    index_of(g);
    std::size_t next = 0;
    for (auto& [mono, idx] : column) idx = next++;

    auto to_row = [&](const Poly& q) {
        Matrix::Row row(column.size(), 0);
        for (const auto& t : q.terms()) row[column.at(t.mono)] = t.coeff.value;
        return row;
    };
    Matrix m(ring, column.size());
    for (const auto& r : rows) m.add_row(to_row(r));
    if (span_contains(m, to_row(g))) return true;
    return std::nullopt;
}

}  // namespace bsroots
