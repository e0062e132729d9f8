#ifndef LQBETTI_MONOMIAL_HPP
#define LQBETTI_MONOMIAL_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lqb {

// A monomial is an exponent vector; the total degree is cached alongside.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int num_vars) : exps_(num_vars, 0), degree_(0) {}
    explicit Monomial(std::vector<int> exps);

    int num_vars() const { return static_cast<int>(exps_.size()); }
    int degree() const { return degree_; }
    int operator[](int i) const { return exps_[i]; }
    const std::vector<int>& exponents() const { return exps_; }
    bool is_one() const { return degree_ == 0; }

    Monomial operator*(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    // 1-based index of the largest variable dividing the monomial.
    int max_var() const;

private:
    std::vector<int> exps_;
    int degree_ = 0;
};

Monomial mono_gcd(const Monomial& a, const Monomial& b);
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b); // a | b
std::optional<Monomial> mono_div(const Monomial& a, const Monomial& b); // a / b

// Term orders. The elimination block order compares the first `block`
// variables strictly before the rest; it only appears inside the colon
// computation, never in user-facing rings.
struct OrderSpec {
    enum class Kind { grevlex, lex, elim_block };
    Kind kind = Kind::grevlex;
    int block = 0;

    static OrderSpec grevlex() { return {Kind::grevlex, 0}; }
    static OrderSpec lex() { return {Kind::lex, 0}; }
    static OrderSpec elim(int k) { return {Kind::elim_block, k}; }

    bool operator==(const OrderSpec& o) const {
        return kind == o.kind && (kind != Kind::elim_block || block == o.block);
    }
    std::string str() const;
};

// Three-way comparison under `ord`: positive when a > b.
int mono_cmp(const Monomial& a, const Monomial& b, const OrderSpec& ord);

// Degree-then-revlex comparison used by the stable-ideal generator ordering;
// independent of any ring order.
int mono_cmp_deg_revlex(const Monomial& a, const Monomial& b);

// All monomials of the given total degree in `num_vars` variables, listed in
// descending order under `ord`.
std::vector<Monomial> monomials_of_degree(int num_vars, int degree,
                                          const OrderSpec& ord);

std::string mono_str(const Monomial& m, const std::vector<std::string>& names);

} // namespace lqb

#endif
