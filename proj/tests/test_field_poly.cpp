#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "frobsig/parse.hpp"
#include "frobsig/poly.hpp"
#include "frobsig/rational.hpp"

using namespace frobsig;

TEST_CASE("prime field arithmetic") {
    PrimeField F(7);
    CHECK(F.add(3, 5) == 1);
    CHECK(F.sub(2, 5) == 4);
    CHECK(F.mul(3, 5) == 1);
    CHECK(F.inv(3) == 5);
    CHECK(F.pow(3, 6) == 1);
    for (fp_t a = 1; a < 7; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
    CHECK_THROWS(PrimeField(6));
    CHECK_THROWS(PrimeField(1));
    CHECK_THROWS(PrimeField(101));
    PrimeField F97(97);
    CHECK(F97.mul(96, 96) == 1);
}

TEST_CASE("rationals") {
    Rat a(1, 2), b(3, 4);
    CHECK((a + b) == Rat(5, 4));
    CHECK((a * b) == Rat(3, 8));
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(1, 2).ceil_mul(4) == 2);
    CHECK(Rat(1, 2).ceil_mul(5) == 3);
    CHECK(Rat(5, 6).ceil_mul(6) == 5);
    CHECK(Rat(-1, 2).ceil_mul(3) == -1);
    CHECK(Rat::parse("5/4") == Rat(5, 4));
    CHECK(Rat::parse("-3") == Rat(-3));
    CHECK(Rat(3, -6) == Rat(-1, 2));
    CHECK_THROWS(Rat(1, 0));
}

TEST_CASE("parser accepts canonical text and rejects juxtaposition") {
    auto R = make_ring(2, {"x", "y", "z", "u", "v"});
    // the paper's hypersurface summand needs explicit '*'
    CHECK_THROWS_AS(poly_parse("x^3+y^3+xyz", R), ParseError);
    Poly f = poly_parse("x^3+y^3+x*y*z+u*v", R);
    CHECK(f.size() == 4);
    CHECK(f.degree() == 3);

    auto R3 = make_ring(3, {"x", "y"});
    CHECK(poly_parse("0", R3).is_zero());
    CHECK(poly_parse("x^2 - x^2", R3).is_zero());
    CHECK(poly_parse("(x+y)^2", R3) == poly_parse("x^2+2*x*y+y^2", R3));
    CHECK(poly_parse("-x", R3) == -Poly::variable(R3, 0));
    CHECK(poly_parse("3", R3) == Poly::constant(R3, 3));
    CHECK_THROWS(poly_parse("x^", R3));
    CHECK_THROWS(poly_parse("w", R3));
    CHECK_THROWS(poly_parse("x+", R3));
}

TEST_CASE("printing round-trips through the parser") {
    auto R = make_ring(5, {"x", "y"});
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> coef(0, 4), ex(0, 6), nt(1, 8);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Term> raw;
        int terms = nt(rng);
        for (int i = 0; i < terms; ++i)
            raw.push_back({{(exp_t)ex(rng), (exp_t)ex(rng)}, (fp_t)coef(rng)});
        Poly f = Poly::from_terms(R, raw);
        CHECK(poly_parse(f.str(), R) == f);
    }
}

TEST_CASE("polynomial ring axioms on random triples") {
    for (fp_t p : {2u, 3u, 5u, 7u}) {
        auto R = make_ring(p, {"x", "y"});
        std::mt19937 rng(p);
        std::uniform_int_distribution<int> coef(0, (int)p - 1), ex(0, 4), nt(0, 4);
        auto rand_poly = [&] {
            std::vector<Term> raw;
            int terms = nt(rng);
            for (int i = 0; i < terms; ++i)
                raw.push_back({{(exp_t)ex(rng), (exp_t)ex(rng)}, (fp_t)coef(rng)});
            return Poly::from_terms(R, raw);
        };
        for (int trial = 0; trial < 250; ++trial) {
            Poly f = rand_poly(), g = rand_poly(), h = rand_poly();
            CHECK((f * g) * h == f * (g * h));
            CHECK(f * (g + h) == f * g + f * h);
            CHECK(f + g == g + f);
            CHECK(f * g == g * f);
            CHECK((f - f).is_zero());
        }
    }
}

TEST_CASE("Frobenius identity (f+g)^p = f^p + g^p") {
    for (fp_t p : {2u, 3u, 5u, 7u}) {
        auto R = make_ring(p, {"x", "y", "z"});
        std::mt19937 rng(p + 100);
        std::uniform_int_distribution<int> coef(0, (int)p - 1), ex(0, 3), nt(0, 5);
        auto rand_poly = [&] {
            std::vector<Term> raw;
            int terms = nt(rng);
            for (int i = 0; i < terms; ++i)
                raw.push_back({{(exp_t)ex(rng), (exp_t)ex(rng), (exp_t)ex(rng)}, (fp_t)coef(rng)});
            return Poly::from_terms(R, raw);
        };
        for (int trial = 0; trial < 100; ++trial) {
            Poly f = rand_poly(), g = rand_poly();
            CHECK((f + g).pow(p) == f.pow(p) + g.pow(p));
            CHECK(f.pow(p) == f.frobenius(p));
        }
    }
}

TEST_CASE("degrevlex order on the textbook example") {
    auto R = make_ring(5, {"s", "t", "u"});
    Poly f = poly_parse("s*u - t^2", R);
    CHECK(f.leading_monomial() == Monomial{0, 2, 0});  // t^2 beats s*u
    auto R2 = make_ring(5, {"a", "b", "c"});
    Poly g = poly_parse("a*c - b^2", R2);
    CHECK(g.leading_monomial() == Monomial{0, 2, 0});
}

TEST_CASE("substitute") {
    auto A = make_ring(5, {"x"});
    auto S = make_ring(5, {"y"});
    Poly f = poly_parse("x^2+2*x+1", A);
    Poly img = poly_parse("y^2", S);
    CHECK(f.substitute(S, {img}) == poly_parse("y^4+2*y^2+1", S));
}
