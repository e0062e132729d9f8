#ifndef LQBETTI_MONOMIAL_IDEAL_HPP
#define LQBETTI_MONOMIAL_IDEAL_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lqbetti/betti.hpp"
#include "lqbetti/monomial.hpp"

namespace lqb {

// Minimal monomial generators as a divisibility antichain, kept in the
// canonical order: ascending degree, ties broken by descending revlex.
class MonomialIdeal {
public:
    MonomialIdeal(int num_vars, std::vector<Monomial> min_gens);

    int num_vars() const { return num_vars_; }
    const std::vector<Monomial>& min_gens() const { return min_gens_; }
    bool is_zero() const { return min_gens_.empty(); }

    bool contains(const Monomial& u) const; // some generator divides u

    bool operator==(const MonomialIdeal& o) const {
        return num_vars_ == o.num_vars_ && min_gens_ == o.min_gens_;
    }

private:
    int num_vars_;
    std::vector<Monomial> min_gens_;
};

// Divisibility-minimal subset of gens in canonical order.
MonomialIdeal minimalize(int num_vars, const std::vector<Monomial>& gens);

// <gens> : u, computed as minimalize({g / gcd(g, u)}).
MonomialIdeal colon_mono(int num_vars, const std::vector<Monomial>& gens,
                         const Monomial& u);

struct MonoCertificate {
    CertificateCore core;
    std::vector<std::vector<int>> step_vars; // 0-based variable indices per colon
};

struct MonoCheckOutcome {
    std::optional<MonoCertificate> cert;
    std::size_t fail_step = 0;          // 0-based step p where the check failed
    std::optional<Monomial> witness;    // a non-linear minimal colon generator

    bool ok() const { return cert.has_value(); }
};

// Linear-quotient check of the generators in the given order: every colon of a
// prefix by the next generator must be generated by variables. The certificate
// is marked minimal iff the input is an antichain of distinct monomials.
MonoCheckOutcome lq_check_mono(int num_vars, const std::vector<Monomial>& ordered);

// Backtracking search for an order with linear quotients, restricted to
// degree-nondecreasing orders (complete: when any order of the minimal
// generators works, a degree-increasing one does). Ties are broken by input
// position, so the result is deterministic. all_orders widens the search to
// every permutation, for cross-validation on tiny inputs.
std::optional<std::pair<std::vector<Monomial>, MonoCertificate>> lq_order_search(
    const MonomialIdeal& J, bool all_orders = false);

// Exchange condition checked on the minimal generators: for every generator u
// and every i < m(u), x_i * u / x_{m(u)} lies in J.
bool is_stable(const MonomialIdeal& J);

// Generators ordered by ascending degree, ties by descending revlex.
std::vector<Monomial> ek_order(const MonomialIdeal& J);

// beta_{i,i+j}(J) = sum over generators u of degree j of C(m(u)-1, i).
// Only valid for stable ideals; rejects others.
BettiTable ek_betti(const MonomialIdeal& J);

// Smallest stable ideal containing the given monomials.
MonomialIdeal stable_closure(int num_vars, const std::vector<Monomial>& gens);

} // namespace lqb

#endif
