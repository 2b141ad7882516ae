#include "jackmaps/jack.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace jackmaps;

namespace {

YoungDiagram yd(std::vector<unsigned long> parts) { return YoungDiagram(std::move(parts)); }

RationalFunctionA rf(long c) { return RationalFunctionA(Rational(c)); }

}  // namespace

TEST_CASE("z factor") {
    CHECK(z_factor(yd({})) == 1);
    CHECK(z_factor(yd({1})) == 1);
    CHECK(z_factor(yd({2})) == 2);
    CHECK(z_factor(yd({1, 1})) == 2);
    CHECK(z_factor(yd({2, 1})) == 2);
    CHECK(z_factor(yd({3, 1, 1})) == 6);
    CHECK(z_factor(yd({2, 2, 2})) == 48);
}

TEST_CASE("powersum to monomial expansion") {
    SymFunc p2 = powersum_to_monomial(yd({2}));
    CHECK(p2.coeffs.size() == 1);
    CHECK(p2.coeff(yd({2})) == rf(1));

    SymFunc p11 = powersum_to_monomial(yd({1, 1}));
    CHECK(p11.coeff(yd({2})) == rf(1));
    CHECK(p11.coeff(yd({1, 1})) == rf(2));

    SymFunc p21 = powersum_to_monomial(yd({2, 1}));
    CHECK(p21.coeff(yd({3})) == rf(1));
    CHECK(p21.coeff(yd({2, 1})) == rf(1));
    CHECK(p21.coeff(yd({1, 1, 1})) == rf(0));

    SymFunc p111 = powersum_to_monomial(yd({1, 1, 1}));
    CHECK(p111.coeff(yd({3})) == rf(1));
    CHECK(p111.coeff(yd({2, 1})) == rf(3));
    CHECK(p111.coeff(yd({1, 1, 1})) == rf(6));

    CHECK_THROWS_AS(powersum_to_monomial(yd({11})), TooLargeError);
}

TEST_CASE("small integral-form polynomials in the powersum basis") {
    RationalFunctionA alpha = RationalFunctionA::alpha();

    SymFunc j1 = jack_J(yd({1}));
    CHECK(j1.coeff(yd({1})) == rf(1));

    SymFunc j2 = jack_J(yd({2}));
    CHECK(j2.coeff(yd({1, 1})) == rf(1));
    CHECK(j2.coeff(yd({2})) == alpha);

    SymFunc j11 = jack_J(yd({1, 1}));
    CHECK(j11.coeff(yd({1, 1})) == rf(1));
    CHECK(j11.coeff(yd({2})) == rf(-1));

    // monomial expansions normalize the m_{1^d} coefficient to d!
    CHECK(jack_J_monomial(yd({2})).coeff(yd({1, 1})) == rf(2));
    CHECK(jack_J_monomial(yd({3, 1})).coeff(yd({1, 1, 1, 1})) == rf(24));

    CHECK_THROWS_AS(jack_J(yd({})), TooLargeError);
    CHECK_THROWS_AS(jack_J(yd({9})), TooLargeError);
}

TEST_CASE("theta coefficients") {
    RationalFunctionA alpha = RationalFunctionA::alpha();
    CHECK(theta(yd({1}), yd({1})) == rf(1));
    CHECK(theta(yd({2}), yd({2})) == alpha);
    CHECK(theta(yd({1, 1}), yd({2})) == rf(1));
    CHECK(theta(yd({2}), yd({1, 1})) == rf(-1));
    CHECK_THROWS_AS(theta(yd({2}), yd({2, 1})), SizeMismatchError);
}

TEST_CASE("orthogonality of the integral forms") {
    // <J_lambda, J_mu> = 0 for lambda != mu under the alpha-deformed
    // powersum pairing, exercised on every pair of sizes up to 7
    RationalFunctionA alpha = RationalFunctionA::alpha();
    unsigned checked = 0;
    for (unsigned long d = 1; d <= 7; ++d) {
        std::vector<YoungDiagram> parts = partitions_of(d);
        std::vector<SymFunc> js;
        js.reserve(parts.size());
        for (const auto& lam : parts) js.push_back(jack_J(lam));
        for (size_t i = 0; i < parts.size(); ++i) {
            for (size_t j = i + 1; j < parts.size(); ++j) {
                RationalFunctionA dot;
                for (const auto& [pi, a] : js[i].coeffs) {
                    RationalFunctionA b = js[j].coeff(pi);
                    if (b.is_zero()) continue;
                    dot += a * b * alpha.pow(pi.parts().size()) *
                           RationalFunctionA(Rational(z_factor(pi)));
                }
                CHECK(dot.is_zero());
                ++checked;
            }
        }
    }
    CHECK(checked >= 100);
}

TEST_CASE("character spot values") {
    CHECK(jack_character(yd({1}), yd({1})) == LaurentA(1));
    CHECK(jack_character(yd({1}), yd({2})) == LaurentA(2));
    CHECK(jack_character(yd({1}), yd({3, 1})) == LaurentA(4));
    CHECK(jack_character(yd({2}), yd({2})) == LaurentA::monomial(2, 1));
    CHECK(jack_character(yd({2}), yd({1, 1})) == LaurentA::monomial(-2, -1));
    CHECK(jack_character(yd({3}), yd({2, 1})) == LaurentA(-3));
    CHECK(jack_character(yd({3}), yd({3})) == LaurentA::monomial(6, 2));
    CHECK(jack_character(yd({3}), yd({1, 1, 1})) == LaurentA::monomial(6, -2));
    // vanishing below the support size
    for (unsigned long n = 2; n <= 5; ++n)
        for (unsigned long d = 1; d < n; ++d)
            for (const auto& lam : partitions_of(d))
                CHECK(jack_character(yd({n}), lam).is_zero());
}

TEST_CASE("character conjugation symmetry") {
    // transposing the diagram inverts A and flips the sign by the size-rank
    // parity of mu; checked as Ch_mu(lambda')(A) == +/- Ch_mu(lambda)(1/A)
    std::vector<YoungDiagram> mus = {yd({2}), yd({3}), yd({2, 1})};
    for (const auto& mu : mus) {
        long sign = (mu.size() - mu.parts().size()) % 2 == 0 ? 1 : -1;
        for (const auto& lam : partitions_up_to(5)) {
            if (lam.empty()) continue;
            LaurentA lhs = jack_character(mu, lam.conjugate());
            LaurentA direct = jack_character(mu, lam);
            LaurentA rhs;
            for (const auto& [e, c] : direct.terms()) rhs += LaurentA::monomial(c, -e);
            CHECK(lhs == rhs * Rational(sign));
        }
    }
}

TEST_CASE("classical specialization matches symmetric group characters") {
    CHECK(mn_character(yd({2, 1}), yd({3})) == -1);
    CHECK(mn_character(yd({3}), yd({3})) == 1);
    CHECK(mn_character(yd({1, 1, 1}), yd({3})) == 1);
    CHECK(mn_character(yd({2, 1}), yd({})) == 2);  // dimension
    CHECK(normalized_character(yd({3}), yd({2, 1})) == Rational(-3));

    for (unsigned long n = 1; n <= 5; ++n) {
        YoungDiagram mu = yd({n});
        for (const auto& lam : partitions_up_to(7)) {
            if (lam.empty()) continue;
            Rational classical =
                lam.size() < n ? Rational(0) : normalized_character(mu, lam);
            CHECK(jack_character(mu, lam).eval_at(1) == classical);
        }
    }
}

TEST_CASE("products expand over the character basis") {
    std::map<YoungDiagram, LaurentA> g11 = structure_constants(yd({1}), yd({1}));
    CHECK(g11.size() == 2);
    CHECK(g11.at(yd({1, 1})) == LaurentA(1));
    CHECK(g11.at(yd({1})) == LaurentA(1));

    std::map<YoungDiagram, LaurentA> g21 = structure_constants(yd({2}), yd({1}));
    CHECK(g21.at(yd({2, 1})).eval_at(1) == 1);
    CHECK(g21.at(yd({2})).eval_at(1) == 2);
}

TEST_CASE("product of two 3-cycles in the delta form") {
    std::map<YoungDiagram, MultiPoly> g = structure_constants_delta(yd({3}), yd({3}));
    MultiPoly d = MultiPoly::variable("d");
    CHECK(g.size() == 8);
    CHECK(g.at(yd({3})) == d * d * Rational(6) + MultiPoly(Rational(3)));
    CHECK(g.at(yd({2, 1})) == d * Rational(9));
    CHECK(g.at(yd({4})) == d * Rational(18));
    CHECK(g.at(yd({1, 1, 1})) == MultiPoly(Rational(3)));
    CHECK(g.at(yd({3, 1})) == MultiPoly(Rational(9)));
    CHECK(g.at(yd({2, 2})) == MultiPoly(Rational(9)));
    CHECK(g.at(yd({5})) == MultiPoly(Rational(9)));
    CHECK(g.at(yd({3, 3})) == MultiPoly(Rational(1)));

    CHECK_THROWS_AS(structure_constants(yd({4}), yd({3})), TooLargeError);
}

TEST_CASE("random product evaluations agree with the expansion") {
    std::mt19937 rng(424242);
    std::vector<std::pair<YoungDiagram, YoungDiagram>> cases = {
        {yd({1}), yd({1})}, {yd({2}), yd({1})}, {yd({2}), yd({2})},
        {yd({3}), yd({2})}, {yd({2, 1}), yd({2})}, {yd({1, 1}), yd({1, 1})}};
    for (const auto& [mu, nu] : cases) {
        auto g = structure_constants(mu, nu);
        std::vector<YoungDiagram> lams = partitions_up_to(7);
        std::shuffle(lams.begin(), lams.end(), rng);
        for (size_t i = 0; i < lams.size() && i < 20; ++i) {
            const YoungDiagram& lam = lams[i];
            if (lam.empty()) continue;
            LaurentA lhs = jack_character(mu, lam) * jack_character(nu, lam);
            LaurentA rhs;
            for (const auto& [rho, c] : g) rhs += c * jack_character(rho, lam);
            CHECK(lhs == rhs);
        }
    }
}
