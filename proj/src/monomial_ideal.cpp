#include "lqbetti/monomial_ideal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lqb {

namespace {

// canonical generator order: ascending degree, ties by descending revlex
bool canonical_less(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return mono_cmp_deg_revlex(a, b) > 0;
}

void check_vars(int num_vars, const std::vector<Monomial>& gens) {
    for (const Monomial& g : gens)
        if (g.num_vars() != num_vars)
            throw std::invalid_argument("monomial ideal: mismatched variable count");
}

} // namespace

MonomialIdeal::MonomialIdeal(int num_vars, std::vector<Monomial> min_gens)
    : num_vars_(num_vars), min_gens_(std::move(min_gens)) {
    if (num_vars_ <= 0) throw std::invalid_argument("monomial ideal: num_vars <= 0");
    check_vars(num_vars_, min_gens_);
    std::sort(min_gens_.begin(), min_gens_.end(), canonical_less);
    for (std::size_t a = 0; a < min_gens_.size(); ++a)
        for (std::size_t b = 0; b < min_gens_.size(); ++b)
            if (a != b && mono_divides(min_gens_[a], min_gens_[b]))
                throw std::invalid_argument(
                    "monomial ideal: generators are not divisibility-minimal");
}

bool MonomialIdeal::contains(const Monomial& u) const {
    for (const Monomial& g : min_gens_)
        if (mono_divides(g, u)) return true;
    return false;
}

MonomialIdeal minimalize(int num_vars, const std::vector<Monomial>& gens) {
    check_vars(num_vars, gens);
    std::vector<Monomial> sorted = gens;
    std::sort(sorted.begin(), sorted.end(), canonical_less);
    std::vector<Monomial> kept;
    for (const Monomial& g : sorted) {
        bool redundant = false;
        for (const Monomial& k : kept)
            if (mono_divides(k, g)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(g);
    }
    return MonomialIdeal(num_vars, std::move(kept));
}

MonomialIdeal colon_mono(int num_vars, const std::vector<Monomial>& gens,
                         const Monomial& u) {
    check_vars(num_vars, gens);
    std::vector<Monomial> quotients;
    quotients.reserve(gens.size());
    for (const Monomial& g : gens) quotients.push_back(*mono_div(g, mono_gcd(g, u)));
    return minimalize(num_vars, quotients);
}

MonoCheckOutcome lq_check_mono(int num_vars, const std::vector<Monomial>& ordered) {
    if (ordered.empty())
        throw std::invalid_argument("lq_check_mono: empty generator list");
    check_vars(num_vars, ordered);
    for (const Monomial& g : ordered)
        if (g.is_one()) throw std::invalid_argument("lq_check_mono: unit generator");
    for (std::size_t a = 0; a < ordered.size(); ++a)
        for (std::size_t b = a + 1; b < ordered.size(); ++b)
            if (ordered[a] == ordered[b])
                throw std::invalid_argument("lq_check_mono: duplicate generator");

    bool minimal = true;
    for (std::size_t a = 0; a < ordered.size() && minimal; ++a)
        for (std::size_t b = 0; b < ordered.size(); ++b)
            if (a != b && mono_divides(ordered[a], ordered[b])) {
                minimal = false;
                break;
            }

    MonoCertificate cert;
    cert.core.minimal = minimal;
    std::vector<Monomial> prefix;
    for (std::size_t p = 0; p < ordered.size(); ++p) {
        const Monomial& u = ordered[p];
        MonomialIdeal colon = colon_mono(num_vars, prefix, u);
        std::vector<int> vars;
        for (const Monomial& g : colon.min_gens()) {
            if (g.degree() != 1) {
                MonoCheckOutcome fail;
                fail.fail_step = p;
                fail.witness = g;
                return fail;
            }
            vars.push_back(g.max_var() - 1);
        }
        std::sort(vars.begin(), vars.end());
        cert.core.degrees.push_back(u.degree());
        cert.core.ranks.push_back(static_cast<int>(vars.size()));
        cert.step_vars.push_back(std::move(vars));
        prefix.push_back(u);
    }
    MonoCheckOutcome ok;
    ok.cert = std::move(cert);
    return ok;
}

namespace {

struct OrderSearch {
    int num_vars;
    const std::vector<Monomial>& gens;
    bool all_orders;
    std::vector<bool> used;
    std::vector<std::size_t> chosen;
    MonoCertificate cert;

    bool dfs() {
        if (chosen.size() == gens.size()) return true;
        int min_deg = -1;
        if (!all_orders) {
            for (std::size_t k = 0; k < gens.size(); ++k)
                if (!used[k] && (min_deg < 0 || gens[k].degree() < min_deg))
                    min_deg = gens[k].degree();
        }
        std::vector<Monomial> prefix;
        for (std::size_t k : chosen) prefix.push_back(gens[k]);
        for (std::size_t k = 0; k < gens.size(); ++k) {
            if (used[k]) continue;
            if (!all_orders && gens[k].degree() != min_deg) continue;
            MonomialIdeal colon = colon_mono(num_vars, prefix, gens[k]);
            std::vector<int> vars;
            bool linear = true;
            for (const Monomial& g : colon.min_gens()) {
                if (g.degree() != 1) {
                    linear = false;
                    break;
                }
                vars.push_back(g.max_var() - 1);
            }
            if (!linear) continue;
            std::sort(vars.begin(), vars.end());
            used[k] = true;
            chosen.push_back(k);
            cert.core.degrees.push_back(gens[k].degree());
            cert.core.ranks.push_back(static_cast<int>(vars.size()));
            cert.step_vars.push_back(std::move(vars));
            if (dfs()) return true;
            cert.core.degrees.pop_back();
            cert.core.ranks.pop_back();
            cert.step_vars.pop_back();
            chosen.pop_back();
            used[k] = false;
        }
        return false;
    }
};

} // namespace

std::optional<std::pair<std::vector<Monomial>, MonoCertificate>> lq_order_search(
    const MonomialIdeal& J, bool all_orders) {
    if (J.is_zero()) return std::nullopt;
    OrderSearch s{J.num_vars(), J.min_gens(), all_orders,
                  std::vector<bool>(J.min_gens().size(), false), {}, {}};
    s.cert.core.minimal = true;
    if (!s.dfs()) return std::nullopt;
    std::vector<Monomial> order;
    for (std::size_t k : s.chosen) order.push_back(J.min_gens()[k]);
    return std::make_pair(std::move(order), std::move(s.cert));
}

bool is_stable(const MonomialIdeal& J) {
    for (const Monomial& u : J.min_gens()) {
        if (u.is_one()) continue;
        int m = u.max_var(); // 1-based
        for (int i = 0; i + 1 < m; ++i) {
            std::vector<int> e = u.exponents();
            --e[m - 1];
            ++e[i];
            if (!J.contains(Monomial(std::move(e)))) return false;
        }
    }
    return true;
}

std::vector<Monomial> ek_order(const MonomialIdeal& J) {
    std::vector<Monomial> order = J.min_gens();
    std::sort(order.begin(), order.end(), canonical_less);
    return order;
}

BettiTable ek_betti(const MonomialIdeal& J) {
    if (!is_stable(J)) throw std::invalid_argument("ek_betti: ideal is not stable");
    BettiTable t;
    for (const Monomial& u : ek_order(J)) {
        int j = u.degree();
        int n = u.max_var() - 1;
        for (int i = 0; i <= n; ++i) t.add(i, i + j, binomial(n, i));
    }
    return t;
}

MonomialIdeal stable_closure(int num_vars, const std::vector<Monomial>& gens) {
    check_vars(num_vars, gens);
    auto exp_less = [](const Monomial& a, const Monomial& b) {
        return a.exponents() < b.exponents();
    };
    std::set<Monomial, decltype(exp_less)> pool(exp_less);
    std::vector<Monomial> queue = gens;
    for (const Monomial& g : gens) pool.insert(g);
    while (!queue.empty()) {
        Monomial u = queue.back();
        queue.pop_back();
        if (u.is_one()) continue;
        int m = u.max_var();
        for (int i = 0; i + 1 < m; ++i) {
            std::vector<int> e = u.exponents();
            --e[m - 1];
            ++e[i];
            Monomial v(std::move(e));
            bool covered = false;
            for (const Monomial& w : pool)
                if (mono_divides(w, v)) {
                    covered = true;
                    break;
                }
            if (!covered) {
                pool.insert(v);
                queue.push_back(v);
            }
        }
    }
    return minimalize(num_vars, {pool.begin(), pool.end()});
}

} // namespace lqb
