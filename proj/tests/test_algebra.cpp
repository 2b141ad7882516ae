#include "jackmaps/poly.hpp"
#include "jackmaps/ratfun.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace jackmaps;

TEST_CASE("rational basics") {
    CHECK(rat(6, 4) == rat(3, 2));
    CHECK(to_string(rat(-3, 2)) == "-3/2");
    CHECK(rat_from_string("-3/2") == rat(-3, 2));
    CHECK(binomial(Integer(5), 2) == 10);
}

TEST_CASE("laurent arithmetic and printing") {
    LaurentA g = LaurentA::gamma();
    CHECK(g.str() == "-A + A^-1");
    CHECK((g * g).str() == "A^2 - 2 + A^-2");
    CHECK((g - g).is_zero());
    CHECK(g.eval_at(1) == 0);
    CHECK(LaurentA::variable_A().pow(3).coeff(3) == 1);
}

TEST_CASE("gamma_substitute examples") {
    MultiPoly g = MultiPoly::variable("g");
    CHECK(gamma_substitute(g).constant_value() == LaurentA::gamma());
    CHECK(gamma_substitute(g * g).constant_value() == LaurentA::gamma().pow(2));
    MultiPoly f = g * Rational(3) + MultiPoly(Rational(1));
    LaurentA expect = LaurentA::monomial(-3, 1) + LaurentA::monomial(3, -1) + LaurentA(1);
    CHECK(gamma_substitute(f).constant_value() == expect);
    // variables other than g survive
    MultiPoly h = MultiPoly::variable("p1") * g;
    PolyOverA hs = gamma_substitute(h);
    CHECK(hs.vars() == std::vector<std::string>{"p1"});
}

TEST_CASE("a_to_gamma examples") {
    LaurentA g2 = LaurentA::gamma().pow(2);
    MultiPoly back = a_to_gamma(g2);
    CHECK(back == MultiPoly::variable("g").pow(2));
    CHECK(a_to_gamma(LaurentA::gamma()) == MultiPoly::variable("g"));
    LaurentA bad = LaurentA::monomial(1, 1) + LaurentA::monomial(1, -1);  // A + A^-1
    CHECK_THROWS_AS(a_to_gamma(bad), NotExpressibleError);
}

TEST_CASE("a_to_gamma round trip on random g-polynomials") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int trial = 0; trial < 120; ++trial) {
        MultiPoly p;
        MultiPoly g = MultiPoly::variable("g");
        for (unsigned d = 0; d <= 8; ++d) p += g.pow(d) * Rational(coef(rng));
        LaurentA image = gamma_substitute(p).constant_value();
        CHECK(a_to_gamma(image) == p);
        // invariance under A -> -A^{-1}
        LaurentA flipped;
        for (const auto& [e, c] : image.terms())
            flipped += LaurentA::monomial((e % 2 == 0) ? c : -c, -e);
        CHECK(flipped == image);
    }
}

TEST_CASE("homogeneous_part") {
    MultiPoly p1 = MultiPoly::variable("p1"), q1 = MultiPoly::variable("q1");
    MultiPoly f = p1 * q1 + p1 * p1 * q1 + MultiPoly(Rational(7));
    CHECK(f.homogeneous_part(2) == p1 * q1);
    CHECK(f.homogeneous_part(0) == MultiPoly(Rational(7)));
    CHECK(MultiPoly(Rational(7)).homogeneous_part(0) == MultiPoly(Rational(7)));
    // all parts sum back to the input
    MultiPoly sum;
    for (unsigned d = 0; d <= f.total_degree(); ++d) sum += f.homogeneous_part(d);
    CHECK(sum == f);
}

TEST_CASE("faulhaber examples") {
    MultiPoly N = MultiPoly::variable("l1");
    MultiPoly tri = faulhaber_range_sum(1, MultiPoly(Rational(0)), N);
    CHECK(tri == (N * N + N) * rat(1, 2));
    MultiPoly c = MultiPoly::variable("c1"), L = MultiPoly::variable("l1");
    CHECK(faulhaber_range_sum(0, c, L) == L);
    MultiPoly fifty = faulhaber_range_sum(2, MultiPoly(Rational(2)), MultiPoly(Rational(3)));
    CHECK(fifty == MultiPoly(Rational(50)));  // 3^2 + 4^2 + 5^2
}

TEST_CASE("faulhaber vs literal sums at random integers") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> small(0, 12);
    std::uniform_int_distribution<unsigned> mdist(0, 6);
    for (int trial = 0; trial < 150; ++trial) {
        unsigned m = mdist(rng);
        long c = small(rng), L = small(rng);
        MultiPoly v = faulhaber_range_sum(m, MultiPoly(Rational(c)), MultiPoly(Rational(L)));
        Rational lit = 0;
        for (long x = c + 1; x <= c + L; ++x) lit += rat_pow(Rational(x), m);
        CHECK(v == MultiPoly(lit));
    }
}

TEST_CASE("canonical polynomial grammar") {
    MultiPoly p1 = MultiPoly::variable("p1"), q1 = MultiPoly::variable("q1"),
              g = MultiPoly::variable("g");
    MultiPoly f = p1.pow(2) * q1 * g * Rational(3);
    CHECK(f.str() == "3*p1^2*q1*g");
    MultiPoly zero;
    CHECK(zero.str() == "0");
    CHECK((p1 - q1).str() == "p1 - q1");
    CHECK((g * rat(-3, 2)).str() == "-3/2*g");
}

TEST_CASE("rational function field") {
    RationalFunctionA a = RationalFunctionA::alpha();
    RationalFunctionA one(1);
    RationalFunctionA x = (a * a - one) / (a - one);  // = a + 1
    CHECK(x == a + one);
    CHECK((x - x).is_zero());
    CHECK_THROWS_AS(x / RationalFunctionA(0), std::domain_error);
    // monic denominator after reduction
    RationalFunctionA y = one / (a * Rational(2) + RationalFunctionA(2));
    CHECK(y.den().leading() == 1);
    // to_laurent on A-power denominators only
    RationalFunctionA z = RationalFunctionA(UniPolyA::monomial(1, 3)) / a;
    CHECK(z.to_laurent() == LaurentA::variable_A());
    CHECK_THROWS_AS((one / (a + one)).to_laurent(), NotLaurentError);
}
