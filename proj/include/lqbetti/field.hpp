#ifndef LQBETTI_FIELD_HPP
#define LQBETTI_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace lqb {

// Arithmetic in GF(p) for a word-sized prime p. Elements are always kept
// normalized to [0, p); p < 2^31 so products fit in int64 without overflow.
class PrimeField {
public:
    using Elem = std::int64_t;

    explicit PrimeField(std::int64_t p) : p_(p) {
        if (p < 2 || p >= (std::int64_t(1) << 31) || !is_prime(p))
            throw std::invalid_argument("field modulus must be a prime < 2^31");
    }

    std::int64_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == 1; }

    Elem from_int(long long v) const {
        Elem r = static_cast<Elem>(v % p_);
        return r < 0 ? r + p_ : r;
    }
    Elem from_fraction(long long num, long long den) const {
        return mul(from_int(num), inv(from_int(den)));
    }

    Elem add(Elem a, Elem b) const {
        Elem r = a + b;
        return r >= p_ ? r - p_ : r;
    }
    Elem sub(Elem a, Elem b) const {
        Elem r = a - b;
        return r < 0 ? r + p_ : r;
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }

    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("inverse of zero in GF(p)");
        // extended Euclid
        Elem t = 0, new_t = 1, r = p_, new_r = a;
        while (new_r != 0) {
            Elem q = r / new_r;
            t -= q * new_t;
            std::swap(t, new_t);
            r -= q * new_r;
            std::swap(r, new_r);
        }
        return t < 0 ? t + p_ : t;
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    std::string str(Elem a) const { return std::to_string(a); }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

    static bool is_prime(std::int64_t n) {
        if (n < 2) return false;
        for (std::int64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    std::int64_t p_;
};

// Exact rational arithmetic backed by GMP. Stateless; the class exists so the
// groebner/koszul templates can treat both fields uniformly.
class Rationals {
public:
    using Elem = mpq_class;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool is_one(const Elem& a) const { return a == 1; }

    Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }
    Elem from_fraction(long long num, long long den) const {
        Elem q(static_cast<long>(num), static_cast<long>(den));
        q.canonicalize();
        return q;
    }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("inverse of zero in QQ");
        return Elem(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }

    std::string str(const Elem& a) const { return a.get_str(); }

    bool operator==(const Rationals&) const { return true; }

private:
    const Elem& inv_guard(const Elem& b) const {
        if (b == 0) throw std::domain_error("division by zero in QQ");
        return b;
    }
};

// Runtime description of the coefficient field, as it appears in ideal files.
struct FieldSpec {
    enum class Kind { prime_field, rationals };
    Kind kind = Kind::prime_field;
    std::int64_t p = 32003;

    static FieldSpec gf(std::int64_t p) { return {Kind::prime_field, p}; }
    static FieldSpec qq() { return {Kind::rationals, 0}; }

    bool operator==(const FieldSpec& o) const {
        return kind == o.kind && (kind == Kind::rationals || p == o.p);
    }
    std::string str() const {
        return kind == Kind::rationals ? "QQ" : "GF(" + std::to_string(p) + ")";
    }
};

} // namespace lqb

#endif
