#ifndef LQBETTI_LINQUOT_HPP
#define LQBETTI_LINQUOT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lqbetti/betti.hpp"
#include "lqbetti/groebner.hpp"
#include "lqbetti/monomial_ideal.hpp"

namespace lqb {

template <class F>
struct Certificate {
    CertificateCore core;
    std::vector<LinearSpan<F>> spans; // colon generators per step
};

template <class F>
struct CheckOutcome {
    std::optional<Certificate<F>> cert;
    std::size_t fail_step = 0;               // 0-based step of the failure
    std::string reason;                      // empty on success
    std::optional<Polynomial<F>> witness;    // offending element, when one exists

    bool ok() const { return cert.has_value(); }
};

// Certifies that the generators, in the given order, have linear quotients:
// each colon <f_1,...,f_{p-1}> : f_p must be generated by linear forms. The
// minimality of the system is always verified and recorded; without
// allow_nonminimal a non-minimal system is rejected outright, since the Betti
// formulas downstream are only valid for minimal systems. A colon equal to
// the whole ring (f_p inside the prefix ideal) is likewise reported as a
// minimality failure, never as "generated by linear forms".
template <class F>
CheckOutcome<F> check_linear_quotients(const std::vector<Polynomial<F>>& ordered,
                                       bool allow_nonminimal = false) {
    if (ordered.empty())
        throw std::invalid_argument("check_linear_quotients: empty generator list");
    for (const Polynomial<F>& f : ordered) {
        if (f.is_zero())
            throw std::invalid_argument("check_linear_quotients: zero generator");
        if (!f.is_homogeneous())
            throw std::invalid_argument(
                "check_linear_quotients: inhomogeneous generator");
    }

    CheckOutcome<F> out;
    auto [minimal, offending] = is_minimal_system(ordered);
    if (!minimal && !allow_nonminimal) {
        out.fail_step = *offending;
        out.reason = "not a minimal generating system";
        out.witness = ordered[*offending];
        return out;
    }

    Certificate<F> cert;
    cert.core.minimal = minimal;
    std::vector<Polynomial<F>> prefix;
    for (std::size_t p = 0; p < ordered.size(); ++p) {
        const Polynomial<F>& f = ordered[p];
        GroebnerBasis<F> colon = colon_principal(prefix, f);
        if (colon.is_unit_ideal()) {
            out.fail_step = p;
            out.reason = "generator lies in the ideal of its predecessors";
            out.witness = f;
            return out;
        }
        LinearityCheck<F> lin = is_generated_by_linear_forms(colon);
        if (!lin.linear) {
            out.fail_step = p;
            out.reason = "colon ideal is not generated by linear forms";
            out.witness = lin.witness;
            return out;
        }
        cert.core.degrees.push_back(*f.homogeneous_degree());
        cert.core.ranks.push_back(lin.rank);
        cert.spans.push_back(std::move(lin.span));
        prefix.push_back(f);
    }
    out.cert = std::move(cert);
    return out;
}

// Bridges between the combinatorial monomial path and the polynomial ring.
template <class F>
Polynomial<F> monomial_to_poly(const RingPtr<F>& ring, const Monomial& m) {
    return Polynomial<F>(ring, {{ring->field.one(), m}});
}

template <class F>
std::vector<Polynomial<F>> monomials_to_polys(const RingPtr<F>& ring,
                                              const std::vector<Monomial>& ms) {
    std::vector<Polynomial<F>> out;
    out.reserve(ms.size());
    for (const Monomial& m : ms) out.push_back(monomial_to_poly(ring, m));
    return out;
}

// When every generator is a single monomial, the list of those monomials.
template <class F>
std::optional<std::vector<Monomial>> as_monomials(
    const std::vector<Polynomial<F>>& gens) {
    std::vector<Monomial> out;
    out.reserve(gens.size());
    for (const Polynomial<F>& g : gens) {
        if (g.terms().size() != 1) return std::nullopt;
        out.push_back(g.leading_monomial());
    }
    return out;
}

} // namespace lqb

#endif
