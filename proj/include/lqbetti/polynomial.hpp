#ifndef LQBETTI_POLYNOMIAL_HPP
#define LQBETTI_POLYNOMIAL_HPP

#include <algorithm>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lqbetti/field.hpp"
#include "lqbetti/monomial.hpp"

namespace lqb {

template <class F>
struct Ring {
    int num_vars = 0;
    std::vector<std::string> var_names;
    F field;
    OrderSpec order;

    Ring(int n, std::vector<std::string> names, F k, OrderSpec ord)
        : num_vars(n), var_names(std::move(names)), field(std::move(k)), order(ord) {
        if (static_cast<int>(var_names.size()) != num_vars)
            throw std::invalid_argument("ring: variable name count mismatch");
        for (int i = 0; i < num_vars; ++i)
            for (int j = i + 1; j < num_vars; ++j)
                if (var_names[i] == var_names[j])
                    throw std::invalid_argument("ring: duplicate variable name");
    }

    bool compatible(const Ring& o) const {
        return num_vars == o.num_vars && order == o.order && field == o.field;
    }
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <class F>
RingPtr<F> make_ring(std::vector<std::string> names, F field,
                     OrderSpec ord = OrderSpec::grevlex()) {
    int n = static_cast<int>(names.size());
    return std::make_shared<const Ring<F>>(n, std::move(names), std::move(field), ord);
}

// Terms are kept strictly descending in the ring order, with no zero
// coefficients; the empty term list is the zero polynomial.
template <class F>
class Polynomial {
public:
    using Elem = typename F::Elem;
    struct Term {
        Elem coef;
        Monomial mono;
    };

    Polynomial() = default;
    explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr<F> ring, std::vector<Term> terms)
        : ring_(std::move(ring)), terms_(std::move(terms)) {
        normalize();
    }

    const RingPtr<F>& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    const Term& leading_term() const {
        if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
        return terms_.front();
    }
    const Monomial& leading_monomial() const { return leading_term().mono; }

    bool is_homogeneous() const {
        for (const Term& t : terms_)
            if (t.mono.degree() != terms_.front().mono.degree()) return false;
        return true;
    }
    // total degree when homogeneous, absent otherwise (and for zero)
    std::optional<int> homogeneous_degree() const {
        if (terms_.empty() || !is_homogeneous()) return std::nullopt;
        return terms_.front().mono.degree();
    }

    Polynomial operator+(const Polynomial& o) const {
        check_ring(o);
        const F& K = ring_->field;
        std::vector<Term> out;
        out.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            int c = mono_cmp(terms_[i].mono, o.terms_[j].mono, ring_->order);
            if (c > 0) {
                out.push_back(terms_[i++]);
            } else if (c < 0) {
                out.push_back(o.terms_[j++]);
            } else {
                Elem s = K.add(terms_[i].coef, o.terms_[j].coef);
                if (!K.is_zero(s)) out.push_back({std::move(s), terms_[i].mono});
                ++i, ++j;
            }
        }
        for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
        return from_sorted(ring_, std::move(out));
    }

    Polynomial operator-(const Polynomial& o) const { return *this + o.negated(); }

    Polynomial negated() const {
        const F& K = ring_->field;
        std::vector<Term> out(terms_);
        for (Term& t : out) t.coef = K.neg(t.coef);
        return from_sorted(ring_, std::move(out));
    }

    Polynomial operator*(const Polynomial& o) const {
        check_ring(o);
        Polynomial acc(ring_);
        for (const Term& t : o.terms_) acc = acc + scaled_shift(t.coef, t.mono);
        return acc;
    }

    // c * m * this
    Polynomial scaled_shift(const Elem& c, const Monomial& m) const {
        const F& K = ring_->field;
        if (K.is_zero(c)) return Polynomial(ring_);
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const Term& t : terms_)
            out.push_back({K.mul(t.coef, c), t.mono * m});
        return from_sorted(ring_, std::move(out));
    }

    Polynomial scaled(const Elem& c) const {
        return scaled_shift(c, Monomial(ring_->num_vars));
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scaled(ring_->field.inv(terms_.front().coef));
    }

    bool operator==(const Polynomial& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        const F& K = ring_->field;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (terms_[i].mono != o.terms_[i].mono) return false;
            if (!K.is_zero(K.sub(terms_[i].coef, o.terms_[i].coef))) return false;
        }
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    static Polynomial variable(const RingPtr<F>& ring, int i) {
        std::vector<int> e(ring->num_vars, 0);
        e[i] = 1;
        return monomial_poly(ring, Monomial(std::move(e)));
    }
    static Polynomial monomial_poly(const RingPtr<F>& ring, Monomial m) {
        std::vector<Term> t{{ring->field.one(), std::move(m)}};
        return from_sorted(ring, std::move(t));
    }
    static Polynomial constant(const RingPtr<F>& ring, const Elem& c) {
        if (ring->field.is_zero(c)) return Polynomial(ring);
        std::vector<Term> t{{c, Monomial(ring->num_vars)}};
        return from_sorted(ring, std::move(t));
    }

private:
    // terms already strictly descending with nonzero coefficients
    static Polynomial from_sorted(const RingPtr<F>& ring, std::vector<Term> terms) {
        Polynomial p(ring);
        p.terms_ = std::move(terms);
        return p;
    }

    void check_ring(const Polynomial& o) const {
        if (!ring_ || !o.ring_ || !ring_->compatible(*o.ring_))
            throw std::invalid_argument("polynomial arithmetic: mismatched rings");
    }

    void normalize() {
        const F& K = ring_->field;
        std::stable_sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
            return mono_cmp(a.mono, b.mono, ring_->order) > 0;
        });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (Term& t : terms_) {
            if (!out.empty() && out.back().mono == t.mono)
                out.back().coef = K.add(out.back().coef, t.coef);
            else
                out.push_back(std::move(t));
        }
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [&](const Term& t) { return K.is_zero(t.coef); }),
                  out.end());
        terms_ = std::move(out);
    }

    RingPtr<F> ring_;
    std::vector<Term> terms_;
};

// (is_homogeneous, degree-or-absent); the zero polynomial reports (true, absent).
template <class F>
std::pair<bool, std::optional<int>> degree_info(const Polynomial<F>& f) {
    if (f.is_zero()) return {true, std::nullopt};
    if (!f.is_homogeneous()) return {false, std::nullopt};
    return {true, f.terms().front().mono.degree()};
}

template <class F>
std::string poly_str(const Polynomial<F>& f) {
    if (f.is_zero()) return "0";
    const F& K = f.ring()->field;
    std::string s;
    bool first = true;
    for (const auto& t : f.terms()) {
        std::string c = K.str(t.coef);
        bool neg = !c.empty() && c[0] == '-';
        if (first) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        if (neg) c = c.substr(1);
        first = false;
        if (t.mono.is_one())
            s += c;
        else if (c == "1")
            s += mono_str(t.mono, f.ring()->var_names);
        else
            s += c + "*" + mono_str(t.mono, f.ring()->var_names);
    }
    return s;
}

} // namespace lqb

#endif
