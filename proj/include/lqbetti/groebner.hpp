#ifndef LQBETTI_GROEBNER_HPP
#define LQBETTI_GROEBNER_HPP

#include <algorithm>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "lqbetti/polynomial.hpp"

namespace lqb {

// Reduced Groebner basis: monic elements, no term of any element divisible by
// the leading monomial of another, sorted descending by leading monomial.
// Canonical for a fixed term order, so bases compare element-by-element.
template <class F>
class GroebnerBasis {
public:
    GroebnerBasis(RingPtr<F> ring, std::vector<Polynomial<F>> elems)
        : ring_(std::move(ring)), elems_(std::move(elems)) {}

    const RingPtr<F>& ring() const { return ring_; }
    const std::vector<Polynomial<F>>& elements() const { return elems_; }
    bool reduced() const { return true; }

    bool is_zero_ideal() const { return elems_.empty(); }
    bool is_unit_ideal() const {
        return elems_.size() == 1 && elems_.front().leading_monomial().is_one();
    }

    bool operator==(const GroebnerBasis& o) const { return elems_ == o.elems_; }

private:
    RingPtr<F> ring_;
    std::vector<Polynomial<F>> elems_;
};

// Remainder of multivariate division of f by the (not necessarily Groebner)
// list G: no term of the result is divisible by any leading monomial of G,
// and f - result lies in <G>.
template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, std::span<const Polynomial<F>> G) {
    const F& K = f.ring()->field;
    Polynomial<F> h = f;
    Polynomial<F> r(f.ring());
    while (!h.is_zero()) {
        const auto& lt = h.leading_term();
        bool reduced_step = false;
        for (const Polynomial<F>& g : G) {
            if (g.is_zero()) continue;
            auto q = mono_div(lt.mono, g.leading_monomial());
            if (!q) continue;
            auto c = K.div(lt.coef, g.leading_term().coef);
            h = h - g.scaled_shift(c, *q);
            reduced_step = true;
            break;
        }
        if (!reduced_step) {
            Polynomial<F> t(f.ring(), {{lt.coef, lt.mono}});
            r = r + t;
            h = h - t;
        }
    }
    return r;
}

template <class F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& G) {
    return normal_form(f, std::span<const Polynomial<F>>(G.elements()));
}

template <class F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g) {
    const F& K = f.ring()->field;
    Monomial l = mono_lcm(f.leading_monomial(), g.leading_monomial());
    Monomial u = *mono_div(l, f.leading_monomial());
    Monomial v = *mono_div(l, g.leading_monomial());
    return f.scaled_shift(K.inv(f.leading_term().coef), u) -
           g.scaled_shift(K.inv(g.leading_term().coef), v);
}

// Buchberger completion, normal strategy: S-pairs processed by ascending lcm
// degree (ties by index), pairs with coprime leading monomials skipped.
// The completed basis is minimalized and tail-reduced, yielding the unique
// reduced basis of <gens>. Zero generators are dropped; the zero ideal is the
// empty basis.
template <class F>
GroebnerBasis<F> buchberger(const std::vector<Polynomial<F>>& gens) {
    if (gens.empty()) throw std::invalid_argument("buchberger: empty generator list");
    RingPtr<F> ring = gens.front().ring();

    std::vector<Polynomial<F>> basis;
    for (const Polynomial<F>& g : gens)
        if (!g.is_zero()) basis.push_back(g.monic());
    if (basis.empty()) return GroebnerBasis<F>(ring, {});

    using PairKey = std::tuple<int, std::size_t, std::size_t>; // (lcm degree, i, j)
    auto cmp = [](const PairKey& a, const PairKey& b) { return a > b; };
    std::priority_queue<PairKey, std::vector<PairKey>, decltype(cmp)> queue(cmp);

    auto push_pairs = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) {
            Monomial l = mono_lcm(basis[i].leading_monomial(), basis[k].leading_monomial());
            queue.push({l.degree(), i, k});
        }
    };
    for (std::size_t k = 1; k < basis.size(); ++k) push_pairs(k);

    while (!queue.empty()) {
        auto [deg, i, j] = queue.top();
        queue.pop();
        const Monomial& a = basis[i].leading_monomial();
        const Monomial& b = basis[j].leading_monomial();
        if (mono_gcd(a, b).is_one()) continue; // product criterion
        Polynomial<F> h = normal_form(s_polynomial(basis[i], basis[j]),
                                      std::span<const Polynomial<F>>(basis));
        if (h.is_zero()) continue;
        basis.push_back(h.monic());
        push_pairs(basis.size() - 1);
    }

    // minimalize: keep only elements whose leading monomial no other kept
    // element divides
    std::vector<std::size_t> order(basis.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        int c = mono_cmp(basis[x].leading_monomial(), basis[y].leading_monomial(),
                         ring->order);
        return c != 0 ? c < 0 : x < y;
    });
    std::vector<Polynomial<F>> minimal;
    for (std::size_t idx : order) {
        const Monomial& lm = basis[idx].leading_monomial();
        bool redundant = false;
        for (const Polynomial<F>& kept : minimal)
            if (mono_divides(kept.leading_monomial(), lm)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(basis[idx]);
    }

    // tail-reduce each element against the others
    std::vector<Polynomial<F>> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial<F>> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(
            normal_form(minimal[i], std::span<const Polynomial<F>>(others)).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const auto& x, const auto& y) {
        return mono_cmp(x.leading_monomial(), y.leading_monomial(), ring->order) > 0;
    });
    return GroebnerBasis<F>(ring, std::move(reduced));
}

template <class F>
bool ideal_member(const Polynomial<F>& f, const GroebnerBasis<F>& G) {
    return normal_form(f, G).is_zero();
}

// Row-reduced basis of the span of equal-degree homogeneous polynomials:
// monic, pairwise distinct leading monomials, every element fully reduced
// against the others.
template <class F>
std::vector<Polynomial<F>> row_reduce_polys(const std::vector<Polynomial<F>>& polys) {
    std::vector<Polynomial<F>> basis;
    for (const Polynomial<F>& f : polys) {
        Polynomial<F> h = normal_form(f, std::span<const Polynomial<F>>(basis));
        if (!h.is_zero()) basis.push_back(h.monic());
    }
    std::vector<Polynomial<F>> out;
    out.reserve(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::vector<Polynomial<F>> others;
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (j != i) others.push_back(basis[j]);
        out.push_back(
            normal_form(basis[i], std::span<const Polynomial<F>>(others)).monic());
    }
    if (!out.empty()) {
        const OrderSpec& ord = out.front().ring()->order;
        std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
            return mono_cmp(x.leading_monomial(), y.leading_monomial(), ord) > 0;
        });
    }
    return out;
}

// Row-reduced set of linear forms; the echelon basis of the degree-1 part of
// an ideal is itself a reduced Groebner basis of the ideal it generates.
template <class F>
struct LinearSpan {
    std::vector<Polynomial<F>> basis;
    int rank() const { return static_cast<int>(basis.size()); }
};

template <class F>
LinearSpan<F> linear_part(const GroebnerBasis<F>& G) {
    std::vector<Polynomial<F>> linear;
    for (const Polynomial<F>& g : G.elements())
        if (g.homogeneous_degree() == 1) linear.push_back(g);
    return LinearSpan<F>{row_reduce_polys(linear)};
}

template <class F>
struct LinearityCheck {
    bool linear = false;
    int rank = 0;
    LinearSpan<F> span;
    std::optional<Polynomial<F>> witness; // a basis element outside the span
};

// True iff the ideal of G is generated by its linear forms; the span's rank is
// then the minimal number of generators.
template <class F>
LinearityCheck<F> is_generated_by_linear_forms(const GroebnerBasis<F>& G) {
    LinearityCheck<F> res;
    res.span = linear_part(G);
    res.rank = res.span.rank();
    res.linear = true;
    for (const Polynomial<F>& g : G.elements()) {
        if (!normal_form(g, std::span<const Polynomial<F>>(res.span.basis)).is_zero()) {
            res.linear = false;
            res.witness = g;
            break;
        }
    }
    return res;
}

// Exact division q = h / f; throws when f does not divide h. Over a field the
// leading terms divide step by step whenever f | h.
template <class F>
Polynomial<F> exact_divide(const Polynomial<F>& h, const Polynomial<F>& f) {
    const F& K = h.ring()->field;
    Polynomial<F> rem = h;
    Polynomial<F> quot(h.ring());
    while (!rem.is_zero()) {
        auto q = mono_div(rem.leading_monomial(), f.leading_monomial());
        if (!q) throw std::logic_error("exact_divide: inexact division");
        auto c = K.div(rem.leading_term().coef, f.leading_term().coef);
        Polynomial<F> t(h.ring(), {{c, *q}});
        quot = quot + t;
        rem = rem - f.scaled_shift(c, *q);
    }
    return quot;
}

namespace detail {

// lift a polynomial into the ring with one auxiliary variable prepended,
// multiplying by t^t_power
template <class F>
Polynomial<F> lift_aux(const Polynomial<F>& f, const RingPtr<F>& ext, int t_power) {
    std::vector<typename Polynomial<F>::Term> terms;
    for (const auto& t : f.terms()) {
        std::vector<int> e(ext->num_vars);
        e[0] = t_power;
        for (int i = 0; i < t.mono.num_vars(); ++i) e[i + 1] = t.mono[i];
        terms.push_back({t.coef, Monomial(std::move(e))});
    }
    return Polynomial<F>(ext, std::move(terms));
}

template <class F>
Polynomial<F> drop_aux(const Polynomial<F>& f, const RingPtr<F>& base) {
    std::vector<typename Polynomial<F>::Term> terms;
    for (const auto& t : f.terms()) {
        std::vector<int> e(base->num_vars);
        for (int i = 0; i < base->num_vars; ++i) e[i] = t.mono[i + 1];
        terms.push_back({t.coef, Monomial(std::move(e))});
    }
    return Polynomial<F>(base, std::move(terms));
}

} // namespace detail

// Reduced basis of (<gens> : f), computed by adjoining an auxiliary variable t
// under an elimination order: the t-free elements of the reduced basis of
// <t*g> + <(1-t)*f> generate <gens> n <f>, and dividing them by f gives the
// colon.
template <class F>
GroebnerBasis<F> colon_principal(const std::vector<Polynomial<F>>& gens,
                                 const Polynomial<F>& f) {
    if (f.is_zero()) throw std::invalid_argument("colon_principal: f must be nonzero");
    RingPtr<F> ring = f.ring();

    std::vector<Polynomial<F>> nonzero;
    for (const Polynomial<F>& g : gens)
        if (!g.is_zero()) nonzero.push_back(g);
    if (nonzero.empty()) return GroebnerBasis<F>(ring, {});

    std::string aux = "t";
    while (std::find(ring->var_names.begin(), ring->var_names.end(), aux) !=
           ring->var_names.end())
        aux += "_";
    std::vector<std::string> names{aux};
    names.insert(names.end(), ring->var_names.begin(), ring->var_names.end());
    RingPtr<F> ext = make_ring<F>(std::move(names), ring->field, OrderSpec::elim(1));

    std::vector<Polynomial<F>> ext_gens;
    for (const Polynomial<F>& g : nonzero)
        ext_gens.push_back(detail::lift_aux(g, ext, 1));
    ext_gens.push_back(detail::lift_aux(f, ext, 0) - detail::lift_aux(f, ext, 1));

    GroebnerBasis<F> G = buchberger(ext_gens);

    std::vector<Polynomial<F>> quotients;
    for (const Polynomial<F>& g : G.elements()) {
        bool t_free = true;
        for (const auto& t : g.terms())
            if (t.mono[0] != 0) {
                t_free = false;
                break;
            }
        if (t_free)
            quotients.push_back(exact_divide(detail::drop_aux(g, ring), f));
    }
    if (quotients.empty()) return GroebnerBasis<F>(ring, {});
    return buchberger(quotients);
}

// First index p (0-based) with gens[p] in the ideal of the others, if any.
template <class F>
std::pair<bool, std::optional<std::size_t>> is_minimal_system(
    const std::vector<Polynomial<F>>& gens) {
    for (const Polynomial<F>& g : gens)
        if (g.is_zero())
            throw std::invalid_argument("is_minimal_system: zero generator");
    if (gens.size() == 1) return {true, std::nullopt};
    for (std::size_t p = 0; p < gens.size(); ++p) {
        std::vector<Polynomial<F>> rest;
        for (std::size_t q = 0; q < gens.size(); ++q)
            if (q != p) rest.push_back(gens[q]);
        if (ideal_member(gens[p], buchberger(rest))) return {false, p};
    }
    return {true, std::nullopt};
}

// Echelon basis of the degree-j graded piece of <gens>; these polynomials
// generate the component ideal I_<j>.
template <class F>
std::vector<Polynomial<F>> component_ideal(const std::vector<Polynomial<F>>& gens,
                                           int j, const RingPtr<F>& ring) {
    if (j < 0) throw std::invalid_argument("component_ideal: negative degree");
    std::vector<Polynomial<F>> nonzero;
    for (const Polynomial<F>& g : gens)
        if (!g.is_zero()) nonzero.push_back(g);
    if (nonzero.empty()) return {};
    GroebnerBasis<F> G = buchberger(nonzero);
    std::vector<Polynomial<F>> span;
    for (const Polynomial<F>& g : G.elements()) {
        auto d = g.homogeneous_degree();
        if (!d) throw std::invalid_argument("component_ideal: inhomogeneous ideal");
        if (*d > j) continue;
        for (const Monomial& m : monomials_of_degree(ring->num_vars, j - *d, ring->order))
            span.push_back(g.scaled_shift(ring->field.one(), m));
    }
    return row_reduce_polys(span);
}

template <class F>
std::vector<Polynomial<F>> times_maximal_ideal(const std::vector<Polynomial<F>>& gens,
                                               const RingPtr<F>& ring) {
    std::vector<Polynomial<F>> out;
    for (const Polynomial<F>& g : gens) {
        if (g.is_zero()) continue;
        for (int k = 0; k < ring->num_vars; ++k) {
            std::vector<int> e(ring->num_vars, 0);
            e[k] = 1;
            Polynomial<F> prod = g.scaled_shift(ring->field.one(), Monomial(std::move(e)));
            if (std::find(out.begin(), out.end(), prod) == out.end())
                out.push_back(std::move(prod));
        }
    }
    return out;
}

// Ideal equality through canonical reduced bases.
template <class F>
bool ideal_equal(const std::vector<Polynomial<F>>& a,
                 const std::vector<Polynomial<F>>& b, const RingPtr<F>& ring) {
    auto gb = [&](const std::vector<Polynomial<F>>& gens) {
        if (gens.empty()) return GroebnerBasis<F>(ring, {});
        return buchberger(gens);
    };
    return gb(a) == gb(b);
}

} // namespace lqb

#endif
