#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

#include "lqbetti/field.hpp"
#include "lqbetti/monomial.hpp"
#include "lqbetti/polynomial.hpp"

using namespace lqb;

namespace {

Monomial rand_mono(std::mt19937& rng, int num_vars, int max_exp) {
    std::uniform_int_distribution<int> d(0, max_exp);
    std::vector<int> e(num_vars);
    for (int& x : e) x = d(rng);
    return Monomial(std::move(e));
}

template <class F>
Polynomial<F> rand_poly(std::mt19937& rng, const RingPtr<F>& ring, int max_terms,
                        int max_exp) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<long long> coef(-50, 50);
    std::vector<typename Polynomial<F>::Term> terms;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t)
        terms.push_back({ring->field.from_int(coef(rng)),
                         rand_mono(rng, ring->num_vars, max_exp)});
    return Polynomial<F>(ring, std::move(terms));
}

int sign(int v) { return (v > 0) - (v < 0); }

} // namespace

TEST_CASE("prime field arithmetic axioms") {
    PrimeField K(32003);
    std::mt19937 rng(7001);
    std::uniform_int_distribution<long long> d(-100000, 100000);
    for (int t = 0; t < 500; ++t) {
        auto a = K.from_int(d(rng)), b = K.from_int(d(rng)), c = K.from_int(d(rng));
        CHECK(K.add(a, b) == K.add(b, a));
        CHECK(K.mul(a, b) == K.mul(b, a));
        CHECK(K.add(K.add(a, b), c) == K.add(a, K.add(b, c)));
        CHECK(K.mul(K.mul(a, b), c) == K.mul(a, K.mul(b, c)));
        CHECK(K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c)));
        CHECK(K.add(a, K.neg(a)) == K.zero());
        CHECK(K.sub(a, b) == K.add(a, K.neg(b)));
        if (!K.is_zero(a)) {
            CHECK(K.mul(a, K.inv(a)) == K.one());
            CHECK(K.div(K.mul(a, b), a) == b);
        }
    }
    CHECK(K.from_int(32003) == 0);
    CHECK(K.from_int(-1) == 32002);
    CHECK(K.from_fraction(1, 2) == K.inv(2));
    CHECK_THROWS_AS(K.inv(0), std::domain_error);
}

TEST_CASE("prime field rejects non-prime moduli") {
    CHECK(PrimeField::is_prime(2));
    CHECK(PrimeField::is_prime(32003));
    CHECK(!PrimeField::is_prime(1));
    CHECK(!PrimeField::is_prime(32001)); // 3 * 10667
    CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact") {
    Rationals Q;
    auto third = Q.from_fraction(1, 3);
    auto sixth = Q.from_fraction(1, 6);
    CHECK(Q.add(third, sixth) == Q.from_fraction(1, 2));
    CHECK(Q.mul(third, Q.from_int(3)) == Q.one());
    CHECK(Q.from_fraction(2, 4) == Q.from_fraction(1, 2));
    CHECK(Q.from_fraction(-2, 4) == Q.from_fraction(1, -2));
    CHECK(Q.inv(Q.from_fraction(3, 7)) == Q.from_fraction(7, 3));
    CHECK_THROWS_AS(Q.inv(Q.zero()), std::domain_error);
    CHECK(Q.str(Q.from_fraction(1, 3)) == "1/3");
}

TEST_CASE("monomial gcd lcm divide identities") {
    std::mt19937 rng(7002);
    for (int t = 0; t < 300; ++t) {
        Monomial a = rand_mono(rng, 4, 5), b = rand_mono(rng, 4, 5);
        Monomial g = mono_gcd(a, b), l = mono_lcm(a, b);
        CHECK(mono_divides(g, a));
        CHECK(mono_divides(g, b));
        CHECK(mono_divides(a, l));
        CHECK(mono_divides(b, l));
        CHECK(g * l == a * b);
        CHECK(g.degree() + l.degree() == a.degree() + b.degree());
        auto q = mono_div(l, a);
        REQUIRE(q.has_value());
        CHECK(*q * a == l);
        if (!mono_divides(a, b)) CHECK(!mono_div(b, a).has_value());
    }
    CHECK_THROWS_AS(Monomial({1, -1}), std::invalid_argument);
}

TEST_CASE("term orders are multiplicative total orders") {
    std::mt19937 rng(7003);
    for (OrderSpec ord : {OrderSpec::grevlex(), OrderSpec::lex(), OrderSpec::elim(1)}) {
        CAPTURE(ord.str());
        for (int t = 0; t < 300; ++t) {
            Monomial a = rand_mono(rng, 3, 4), b = rand_mono(rng, 3, 4);
            Monomial c = rand_mono(rng, 3, 4);
            int ab = mono_cmp(a, b, ord);
            CHECK(sign(mono_cmp(b, a, ord)) == -sign(ab));
            CHECK((ab == 0) == (a == b));
            // multiplying both sides by c never flips the comparison
            CHECK(sign(mono_cmp(a * c, b * c, ord)) == sign(ab));
            // transitivity on a sorted triple
            std::vector<Monomial> v{a, b, c};
            std::sort(v.begin(), v.end(), [&](const Monomial& x, const Monomial& y) {
                return mono_cmp(x, y, ord) > 0;
            });
            CHECK(mono_cmp(v[0], v[2], ord) >= 0);
        }
    }
}

TEST_CASE("grevlex and lex disagree where expected") {
    OrderSpec grevlex = OrderSpec::grevlex(), lex = OrderSpec::lex();
    Monomial xy2({1, 2, 0}), x2z({2, 0, 1});
    CHECK(mono_cmp(xy2, x2z, grevlex) > 0);
    CHECK(mono_cmp(xy2, x2z, lex) < 0);
    // grevlex refines degree, lex does not
    Monomial x({1, 0, 0}), y5({0, 5, 0});
    CHECK(mono_cmp(x, y5, grevlex) < 0);
    CHECK(mono_cmp(x, y5, lex) > 0);
}

TEST_CASE("elimination block dominates the tail") {
    OrderSpec ord = OrderSpec::elim(1);
    Monomial t({1, 0, 0}), x5({0, 5, 0}), tx({1, 1, 0});
    CHECK(mono_cmp(t, x5, ord) > 0);
    CHECK(mono_cmp(tx, t, ord) > 0);
    // within equal block degree it falls back to grevlex on the tail
    Monomial txy({1, 1, 1});
    CHECK(mono_cmp(txy, tx, ord) > 0);
}

TEST_CASE("degree revlex tiebreak puts earlier variables first") {
    Monomial x2({2, 0, 0}), xy({1, 1, 0}), xz({1, 0, 1}), y2({0, 2, 0});
    CHECK(mono_cmp_deg_revlex(x2, xy) > 0);
    CHECK(mono_cmp_deg_revlex(xy, y2) > 0);
    CHECK(mono_cmp_deg_revlex(y2, xz) > 0);
    Monomial z({0, 0, 1}), w2({2, 0, 0});
    CHECK(mono_cmp_deg_revlex(z, w2) < 0); // degree decides first
}

TEST_CASE("monomials_of_degree enumerates exactly and in order") {
    for (int n : {1, 2, 3, 4}) {
        for (int d : {0, 1, 2, 3}) {
            auto ms = monomials_of_degree(n, d, OrderSpec::grevlex());
            // count must be C(n + d - 1, d)
            long long expect = 1;
            for (int k = 1; k <= d; ++k) expect = expect * (n + k - 1) / k;
            CHECK(static_cast<long long>(ms.size()) == expect);
            for (const Monomial& m : ms) CHECK(m.degree() == d);
            for (std::size_t k = 1; k < ms.size(); ++k)
                CHECK(mono_cmp(ms[k - 1], ms[k], OrderSpec::grevlex()) > 0);
        }
    }
}

TEST_CASE("mono_str formats exponents") {
    std::vector<std::string> names{"x", "y", "z"};
    CHECK(mono_str(Monomial({0, 0, 0}), names) == "1");
    CHECK(mono_str(Monomial({1, 0, 0}), names) == "x");
    CHECK(mono_str(Monomial({2, 1, 0}), names) == "x^2*y");
    CHECK(mono_str(Monomial({1, 3, 2}), names) == "x*y^3*z^2");
}

TEST_CASE("polynomial ring axioms over GF(32003)") {
    auto ring = make_ring<PrimeField>({"x", "y", "z"}, PrimeField(32003),
                                      OrderSpec::grevlex());
    std::mt19937 rng(7004);
    for (int t = 0; t < 120; ++t) {
        auto f = rand_poly(rng, ring, 4, 3);
        auto g = rand_poly(rng, ring, 4, 3);
        auto h = rand_poly(rng, ring, 4, 3);
        CHECK(f + g == g + f);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK((f - f).is_zero());
        if (!f.is_zero() && !g.is_zero()) {
            // leading terms multiply because a field has no zero divisors
            CHECK((f * g).leading_monomial() ==
                  f.leading_monomial() * g.leading_monomial());
            CHECK(f.monic().leading_term().coef == ring->field.one());
        }
    }
}

TEST_CASE("polynomial ring axioms over the rationals") {
    auto ring = make_ring<Rationals>({"x", "y"}, Rationals(), OrderSpec::grevlex());
    std::mt19937 rng(7005);
    for (int t = 0; t < 60; ++t) {
        auto f = rand_poly(rng, ring, 4, 3);
        auto g = rand_poly(rng, ring, 4, 3);
        CHECK(f * g == g * f);
        CHECK((f + g) - g == f);
        if (!f.is_zero())
            CHECK(f.monic().leading_term().coef == Rationals().one());
    }
}

TEST_CASE("terms stay sorted and merged") {
    auto ring = make_ring<PrimeField>({"x", "y"}, PrimeField(32003),
                                      OrderSpec::grevlex());
    using P = Polynomial<PrimeField>;
    // duplicate monomials merge, zero coefficients vanish
    P f(ring, {{1, Monomial({1, 0})}, {2, Monomial({1, 0})}, {32003 - 3, Monomial({0, 1})},
               {3, Monomial({0, 1})}});
    REQUIRE(f.terms().size() == 1);
    CHECK(f.terms().front().coef == 3);
    CHECK(f.terms().front().mono == Monomial({1, 0}));
    auto ms = monomials_of_degree(2, 5, ring->order);
    std::vector<P::Term> shuffled;
    for (auto it = ms.rbegin(); it != ms.rend(); ++it) shuffled.push_back({1, *it});
    P g(ring, std::move(shuffled));
    for (std::size_t k = 1; k < g.terms().size(); ++k)
        CHECK(mono_cmp(g.terms()[k - 1].mono, g.terms()[k].mono, ring->order) > 0);
}

TEST_CASE("homogeneity detection") {
    auto ring = make_ring<PrimeField>({"x", "y"}, PrimeField(32003),
                                      OrderSpec::grevlex());
    using P = Polynomial<PrimeField>;
    P f(ring, {{1, Monomial({2, 0})}, {1, Monomial({1, 1})}});
    P g(ring, {{1, Monomial({2, 0})}, {1, Monomial({0, 1})}});
    CHECK(f.is_homogeneous());
    CHECK(f.homogeneous_degree() == std::optional<int>(2));
    CHECK(!g.is_homogeneous());
    CHECK(!g.homogeneous_degree().has_value());
    CHECK(degree_info(P(ring)).first);
    CHECK(!degree_info(P(ring)).second.has_value());
}

TEST_CASE("mismatched rings are rejected") {
    auto r2 = make_ring<PrimeField>({"x", "y"}, PrimeField(32003),
                                    OrderSpec::grevlex());
    auto r3 = make_ring<PrimeField>({"x", "y", "z"}, PrimeField(32003),
                                    OrderSpec::grevlex());
    using P = Polynomial<PrimeField>;
    P f(r2, {{1, Monomial({1, 0})}});
    P g(r3, {{1, Monomial({1, 0, 0})}});
    CHECK_THROWS_AS(f + g, std::invalid_argument);
    CHECK_THROWS_AS(f * g, std::invalid_argument);
}
