#ifndef LQBETTI_KOSZUL_HPP
#define LQBETTI_KOSZUL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lqbetti/betti.hpp"
#include "lqbetti/groebner.hpp"
#include "lqbetti/rank.hpp"

namespace lqb {

// Degree-d monomials outside the leading-term ideal of G: a basis of (S/I)_d.
template <class F>
std::vector<Monomial> standard_monomials(const GroebnerBasis<F>& G, int d,
                                         const RingPtr<F>& ring) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    for (const Monomial& m : monomials_of_degree(ring->num_vars, d, ring->order)) {
        bool standard = true;
        for (const Polynomial<F>& g : G.elements())
            if (mono_divides(g.leading_monomial(), m)) {
                standard = false;
                break;
            }
        if (standard) out.push_back(m);
    }
    return out;
}

// Brute-force graded Betti numbers of an ideal I: beta_{i,j}(I) is the
// dimension of H_{i+1}(K tensor S/I) in internal degree j, where K is the
// Koszul complex on all the variables. The basis of the (e, j) piece is
// {e_T tensor w : |T| = e, w standard of degree j - e} and the differential
// sends e_T tensor w to sum_k (-1)^{k+1} e_{T minus t_k} tensor NF(x_{t_k} w).
// Homology dimensions come from exact ranks of the two adjacent
// differentials.
template <class F>
class KoszulOracle {
public:
    using Elem = typename F::Elem;

    KoszulOracle(RingPtr<F> ring, const std::vector<Polynomial<F>>& gens)
        : ring_(std::move(ring)), max_gen_degree_(0) {
        std::vector<Polynomial<F>> nonzero;
        for (const Polynomial<F>& g : gens) {
            if (g.is_zero()) continue;
            if (!g.ring()->compatible(*ring_))
                throw std::invalid_argument("koszul: mismatched rings");
            auto d = g.homogeneous_degree();
            if (!d) throw std::invalid_argument("koszul: inhomogeneous generator");
            if (*d > max_gen_degree_) max_gen_degree_ = *d;
            nonzero.push_back(g);
        }
        if (nonzero.empty())
            gb_.emplace(GroebnerBasis<F>(ring_, {}));
        else
            gb_.emplace(buchberger(nonzero));
    }

    int num_vars() const { return ring_->num_vars; }
    int default_i_max() const { return ring_->num_vars; }
    int default_j_max() const { return max_gen_degree_ + ring_->num_vars; }

    std::int64_t chain_dim(int e, int j) {
        if (e < 0 || e > num_vars()) return 0;
        return binomial(num_vars(), e) *
               static_cast<std::int64_t>(std_basis(j - e).size());
    }

    // dim H_e(K tensor S/I) in internal degree j
    std::int64_t homology_dim(int e, int j) {
        if (e < 0 || e > num_vars()) return 0;
        std::int64_t dim = chain_dim(e, j);
        if (dim == 0) return 0;
        std::int64_t h = dim - differential_rank(e, j) - differential_rank(e + 1, j);
        if (h < 0) throw std::logic_error("koszul: negative homology dimension");
        return h;
    }

    std::int64_t betti(int i, int j) {
        if (i < 0 || j < i + 1) return 0;
        return homology_dim(i + 1, j);
    }

    BettiTable table(int i_max = -1, int j_max = -1) {
        if (i_max < 0) i_max = default_i_max();
        if (j_max < 0) j_max = default_j_max();
        BettiTable t;
        for (int j = 1; j <= j_max; ++j)
            for (int i = 0; i <= i_max; ++i) t.add(i, j, betti(i, j));
        return t;
    }

private:
    const std::vector<Monomial>& std_basis(int d) {
        auto it = std_cache_.find(d);
        if (it != std_cache_.end()) return it->second;
        std::vector<Monomial> basis =
            d < 0 ? std::vector<Monomial>{} : standard_monomials(*gb_, d, ring_);
        std::map<std::vector<int>, int> index;
        for (std::size_t k = 0; k < basis.size(); ++k)
            index.emplace(basis[k].exponents(), static_cast<int>(k));
        std_index_.emplace(d, std::move(index));
        return std_cache_.emplace(d, std::move(basis)).first->second;
    }

    // products[w][k]: NF(x_k * w) expanded over the standard basis one degree up
    using SparseRow = std::vector<std::pair<int, Elem>>;
    const std::vector<std::vector<SparseRow>>& products(int d) {
        auto it = prod_cache_.find(d);
        if (it != prod_cache_.end()) return it->second;
        const std::vector<Monomial>& basis = std_basis(d);
        std_basis(d + 1);
        const auto& up_index = std_index_.at(d + 1);
        std::vector<std::vector<SparseRow>> rows(basis.size());
        for (std::size_t w = 0; w < basis.size(); ++w) {
            rows[w].resize(num_vars());
            for (int k = 0; k < num_vars(); ++k) {
                std::vector<int> e(num_vars(), 0);
                e[k] = 1;
                Polynomial<F> prod(ring_, {{ring_->field.one(),
                                            basis[w] * Monomial(std::move(e))}});
                Polynomial<F> nf = normal_form(prod, *gb_);
                for (const auto& t : nf.terms())
                    rows[w][k].emplace_back(up_index.at(t.mono.exponents()), t.coef);
            }
        }
        return prod_cache_.emplace(d, std::move(rows)).first->second;
    }

    const std::vector<int>& subsets(int e) {
        // each subset of size e encoded as a bitmask, ascending
        auto it = subset_cache_.find(e);
        if (it != subset_cache_.end()) return it->second;
        std::vector<int> masks;
        for (int m = 0; m < (1 << num_vars()); ++m)
            if (__builtin_popcount(static_cast<unsigned>(m)) == e) masks.push_back(m);
        std::vector<int>& stored = subset_cache_.emplace(e, std::move(masks)).first->second;
        for (std::size_t k = 0; k < stored.size(); ++k)
            subset_index_[stored[k]] = static_cast<int>(k);
        return stored;
    }

    // rank of the differential K_{e,j} -> K_{e-1,j}
    int differential_rank(int e, int j) {
        if (e <= 0 || e > num_vars()) return 0;
        auto key = std::make_pair(e, j);
        auto it = rank_cache_.find(key);
        if (it != rank_cache_.end()) return it->second;

        const F& K = ring_->field;
        const auto& col_subsets = subsets(e);
        const auto& row_subsets = subsets(e - 1);
        const auto& col_std = std_basis(j - e);
        const auto& row_std = std_basis(j - e + 1);
        int rows = static_cast<int>(row_subsets.size() * row_std.size());
        int cols = static_cast<int>(col_subsets.size() * col_std.size());
        int result = 0;
        if (rows > 0 && cols > 0) {
            const auto& prod = products(j - e);
            DenseMatrix<F> m(rows, cols, K);
            for (std::size_t ts = 0; ts < col_subsets.size(); ++ts) {
                int mask = col_subsets[ts];
                int sign_pos = 0;
                for (int v = 0; v < num_vars(); ++v) {
                    if (!(mask & (1 << v))) continue;
                    ++sign_pos; // v is the sign_pos-th smallest element of T
                    int sub = subset_index_.at(mask & ~(1 << v));
                    bool negate = (sign_pos % 2) == 0;
                    for (std::size_t w = 0; w < col_std.size(); ++w) {
                        int col = static_cast<int>(ts * col_std.size() + w);
                        for (const auto& [up, coef] : prod[w][v]) {
                            int row = static_cast<int>(sub * row_std.size()) + up;
                            Elem c = negate ? K.neg(coef) : coef;
                            m.at(row, col) = K.add(m.at(row, col), c);
                        }
                    }
                }
            }
            result = rank(m, K);
        }
        rank_cache_.emplace(key, result);
        return result;
    }

    RingPtr<F> ring_;
    int max_gen_degree_;
    std::optional<GroebnerBasis<F>> gb_;
    std::map<int, std::vector<Monomial>> std_cache_;
    std::map<int, std::map<std::vector<int>, int>> std_index_;
    std::map<int, std::vector<std::vector<SparseRow>>> prod_cache_;
    std::map<int, std::vector<int>> subset_cache_;
    std::map<int, int> subset_index_;
    std::map<std::pair<int, int>, int> rank_cache_;
};

template <class F>
std::int64_t koszul_betti(const RingPtr<F>& ring,
                          const std::vector<Polynomial<F>>& gens, int i, int j) {
    return KoszulOracle<F>(ring, gens).betti(i, j);
}

template <class F>
BettiTable betti_table_oracle(const RingPtr<F>& ring,
                              const std::vector<Polynomial<F>>& gens,
                              int i_max = -1, int j_max = -1) {
    return KoszulOracle<F>(ring, gens).table(i_max, j_max);
}

// True iff the resolution is d-linear: every nonzero Betti entry in the
// window sits on the diagonal j = i + d. Ideals not generated in degree d
// are rejected up front.
template <class F>
bool has_linear_resolution(const RingPtr<F>& ring,
                           const std::vector<Polynomial<F>>& gens, int d) {
    bool any = false;
    for (const Polynomial<F>& g : gens) {
        if (g.is_zero()) continue;
        any = true;
        if (g.homogeneous_degree() != std::optional<int>(d)) return false;
    }
    if (!any) return true;
    BettiTable t = betti_table_oracle(ring, gens);
    for (const auto& [key, v] : t.entries())
        if (key.second != key.first + d) return false;
    return true;
}

struct ComponentReport {
    int j = 0;
    bool nonzero = false;
    bool linear = true;
};

struct CwlResult {
    bool componentwise_linear = true;
    std::vector<ComponentReport> components;
    std::optional<int> first_failure;
};

// Componentwise linearity over the finite window [min degree, max degree + 1];
// the extra degree probes the stabilization I_<d+1> = m * I_<d> beyond the
// last generator.
template <class F>
CwlResult is_componentwise_linear(const RingPtr<F>& ring,
                                  const std::vector<Polynomial<F>>& gens) {
    int lo = 0, hi = 0;
    bool any = false;
    for (const Polynomial<F>& g : gens) {
        if (g.is_zero()) continue;
        int d = *g.homogeneous_degree();
        lo = any ? std::min(lo, d) : d;
        hi = any ? std::max(hi, d) : d;
        any = true;
    }
    CwlResult res;
    if (!any) return res;
    for (int j = lo; j <= hi + 1; ++j) {
        ComponentReport rep;
        rep.j = j;
        std::vector<Polynomial<F>> comp = component_ideal(gens, j, ring);
        rep.nonzero = !comp.empty();
        if (rep.nonzero) rep.linear = has_linear_resolution(ring, comp, j);
        if (!rep.linear && !res.first_failure) {
            res.componentwise_linear = false;
            res.first_failure = j;
        }
        res.components.push_back(rep);
    }
    return res;
}

struct HHMismatch {
    int i = 0, j = 0;
    std::int64_t lhs = 0, rhs = 0;
};

struct HHReport {
    bool ok = true;
    std::vector<HHMismatch> mismatches;
};

// Checks beta_{i,i+j}(I) = beta_i(I_<j>) - beta_i(m * I_<j-1>) over the
// window j in [1, max degree + 1], i in [0, n]; beta_i on the right are total
// Betti numbers of the component ideals. Meaningful for componentwise linear
// ideals; for others the finite window is the caller's risk.
template <class F>
HHReport herzog_hibi_check(const RingPtr<F>& ring,
                           const std::vector<Polynomial<F>>& gens) {
    KoszulOracle<F> oracle(ring, gens);
    int n = ring->num_vars;
    int maxdeg = 0;
    for (const Polynomial<F>& g : gens)
        if (!g.is_zero()) maxdeg = std::max(maxdeg, *g.homogeneous_degree());

    auto total = [&](const std::vector<Polynomial<F>>& sub, int i) -> std::int64_t {
        if (sub.empty()) return 0;
        KoszulOracle<F> sub_oracle(ring, sub);
        std::int64_t s = 0;
        for (int j = 1; j <= sub_oracle.default_j_max(); ++j)
            s += sub_oracle.betti(i, j);
        return s;
    };

    HHReport rep;
    for (int j = 1; j <= maxdeg + 1; ++j) {
        std::vector<Polynomial<F>> comp = component_ideal(gens, j, ring);
        std::vector<Polynomial<F>> prev = component_ideal(gens, j - 1, ring);
        std::vector<Polynomial<F>> m_prev = times_maximal_ideal(prev, ring);
        for (int i = 0; i <= n; ++i) {
            std::int64_t lhs = oracle.betti(i, i + j);
            std::int64_t rhs = total(comp, i) - total(m_prev, i);
            if (lhs != rhs) {
                rep.ok = false;
                rep.mismatches.push_back({i, j, lhs, rhs});
            }
        }
    }
    return rep;
}

} // namespace lqb

#endif
