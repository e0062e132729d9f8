#ifndef LQBETTI_PARSE_HPP
#define LQBETTI_PARSE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "lqbetti/field.hpp"
#include "lqbetti/polynomial.hpp"

namespace lqb {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int col, const std::string& msg)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                             std::to_string(col) + ")"),
          line(line), col(col) {}

    int line;
    int col;
};

// One parsed term: num/den * x^exps, field not yet applied.
struct RawTerm {
    long long num = 1;
    long long den = 1;
    std::vector<int> exps;
};

struct RawPoly {
    std::vector<RawTerm> terms;
    int line = 0;
};

// ring declaration plus ordered generators, still field-generic
struct IdealFile {
    std::vector<std::string> var_names;
    FieldSpec field;
    OrderSpec order;
    std::vector<RawPoly> generators;
};

// Text DSL:
//   ring x y z : GF(32003) : grevlex
//   x*y^3*z + y^4*z - y^3*z^2    # one generator per line, order-significant
// '#' starts a comment; blank lines are skipped. Coefficients are integers
// (optionally num/den fractions); a leading sign is accepted. Every generator
// must be homogeneous. Alternatively the text may be a JSON document
//   {"ring": {"vars": [...], "field": "...", "order": "..."},
//    "generators": ["x*y", ...]}
// with the same polynomial syntax inside the strings.
IdealFile parse_ideal_file(const std::string& text);

// Applies the field to the raw generators; rejects zero and constant
// generators with their source positions.
template <class F>
std::vector<Polynomial<F>> realize(const IdealFile& file, const RingPtr<F>& ring) {
    std::vector<Polynomial<F>> out;
    out.reserve(file.generators.size());
    for (const RawPoly& rp : file.generators) {
        std::vector<typename Polynomial<F>::Term> terms;
        for (const RawTerm& t : rp.terms) {
            typename F::Elem c;
            try {
                c = ring->field.from_fraction(t.num, t.den);
            } catch (const std::exception& e) {
                throw ParseError(rp.line, 1, e.what());
            }
            terms.push_back({c, Monomial(t.exps)});
        }
        Polynomial<F> p(ring, std::move(terms));
        if (p.is_zero()) throw ParseError(rp.line, 1, "zero generator");
        if (p.homogeneous_degree() == std::optional<int>(0))
            throw ParseError(rp.line, 1, "constant generator");
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace lqb

#endif
