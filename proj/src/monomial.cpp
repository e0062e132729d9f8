#include "lqbetti/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace lqb {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_)
        if (e < 0) throw std::invalid_argument("negative exponent");
    degree_ = std::accumulate(exps_.begin(), exps_.end(), 0);
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (num_vars() != o.num_vars())
        throw std::invalid_argument("monomial product: mismatched variable count");
    std::vector<int> e(exps_);
    for (int i = 0; i < num_vars(); ++i) e[i] += o.exps_[i];
    return Monomial(std::move(e));
}

int Monomial::max_var() const {
    for (int i = num_vars() - 1; i >= 0; --i)
        if (exps_[i] > 0) return i + 1;
    throw std::domain_error("max_var of the unit monomial");
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
    if (a.num_vars() != b.num_vars())
        throw std::invalid_argument("mono_gcd: mismatched variable count");
    std::vector<int> e(a.num_vars());
    for (int i = 0; i < a.num_vars(); ++i) e[i] = std::min(a[i], b[i]);
    return Monomial(std::move(e));
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    if (a.num_vars() != b.num_vars())
        throw std::invalid_argument("mono_lcm: mismatched variable count");
    std::vector<int> e(a.num_vars());
    for (int i = 0; i < a.num_vars(); ++i) e[i] = std::max(a[i], b[i]);
    return Monomial(std::move(e));
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    if (a.num_vars() != b.num_vars())
        throw std::invalid_argument("mono_divides: mismatched variable count");
    for (int i = 0; i < a.num_vars(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::optional<Monomial> mono_div(const Monomial& a, const Monomial& b) {
    if (a.num_vars() != b.num_vars())
        throw std::invalid_argument("mono_div: mismatched variable count");
    std::vector<int> e(a.num_vars());
    for (int i = 0; i < a.num_vars(); ++i) {
        e[i] = a[i] - b[i];
        if (e[i] < 0) return std::nullopt;
    }
    return Monomial(std::move(e));
}

std::string OrderSpec::str() const {
    switch (kind) {
        case Kind::grevlex: return "grevlex";
        case Kind::lex: return "lex";
        case Kind::elim_block: return "elim(" + std::to_string(block) + ")";
    }
    return "?";
}

namespace {

// revlex tiebreak on [lo, hi): a > b when the last differing exponent is
// smaller in a.
int revlex_tail(const Monomial& a, const Monomial& b, int lo, int hi) {
    for (int i = hi - 1; i >= lo; --i) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

int cmp_grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    return revlex_tail(a, b, lo, hi);
}

} // namespace

int mono_cmp(const Monomial& a, const Monomial& b, const OrderSpec& ord) {
    const int n = a.num_vars();
    if (n != b.num_vars())
        throw std::invalid_argument("mono_cmp: mismatched variable count");
    switch (ord.kind) {
        case OrderSpec::Kind::grevlex:
            return cmp_grevlex_range(a, b, 0, n);
        case OrderSpec::Kind::lex:
            for (int i = 0; i < n; ++i)
                if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
            return 0;
        case OrderSpec::Kind::elim_block: {
            if (int c = cmp_grevlex_range(a, b, 0, ord.block)) return c;
            return cmp_grevlex_range(a, b, ord.block, n);
        }
    }
    return 0;
}

int mono_cmp_deg_revlex(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    return revlex_tail(a, b, 0, a.num_vars());
}

std::vector<Monomial> monomials_of_degree(int num_vars, int degree,
                                          const OrderSpec& ord) {
    std::vector<Monomial> out;
    std::vector<int> e(num_vars, 0);
    // enumerate exponent vectors summing to `degree`
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == num_vars - 1) {
            e[pos] = rem;
            out.emplace_back(e);
            return;
        }
        for (int k = rem; k >= 0; --k) {
            e[pos] = k;
            self(self, pos + 1, rem - k);
        }
    };
    if (num_vars == 0) {
        if (degree == 0) out.emplace_back(e);
        return out;
    }
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), [&](const Monomial& x, const Monomial& y) {
        return mono_cmp(x, y, ord) > 0;
    });
    return out;
}

std::string mono_str(const Monomial& m, const std::vector<std::string>& names) {
    if (m.is_one()) return "1";
    std::string s;
    for (int i = 0; i < m.num_vars(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[i];
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
}

} // namespace lqb
