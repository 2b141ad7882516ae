#include "jackmaps/characters.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace jackmaps;

namespace {

YoungDiagram yd(std::vector<unsigned long> parts) { return YoungDiagram(std::move(parts)); }

MultiPoly var(const std::string& v) { return MultiPoly::variable(v); }

// random valid family of total degree <= d (used for invariance checks)
ContentPolynomialFamily random_family(std::mt19937& rng, unsigned d) {
    std::uniform_int_distribution<long> dist(-3, 3);
    ContentPolynomialFamily fam;
    fam.degree = d;
    for (size_t k = 0; k <= d / 2; ++k) {
        MultiPoly p;
        for (const auto& u : char_detail::basis_for(k, d - 2 * static_cast<unsigned>(k)))
            p += char_detail::sym_monomial_poly(u) * Rational(dist(rng));
        fam.polys.push_back(p);
    }
    fam.validate();
    return fam;
}

}  // namespace

TEST_CASE("explicit 3-cycle family") {
    ContentPolynomialFamily fam = ch3_explicit_family();
    CHECK(fam.degree == 4);
    CHECK(fam.polys[0].is_zero());
    CHECK(fam.polys[1].coeff_of("c1", 2).constant_value() == 3);
    CHECK(fam.polys[2] == MultiPoly(rat(-3, 2)));

    CHECK(evaluate_family(fam, yd({1})).is_zero());
    CHECK(evaluate_family(fam, yd({2})).is_zero());
    CHECK(evaluate_family(fam, yd({1, 1})).is_zero());
    CHECK(evaluate_family(fam, yd({2, 1})) == LaurentA(-3));
}

TEST_CASE("linear characterization recovers the small families") {
    CharacterSolution s1 = solve_character_family(1);
    CHECK(s1.family.polys[0].is_zero());
    CHECK(s1.family.polys[1] == MultiPoly(Rational(1)));

    CharacterSolution s2 = solve_character_family(2);
    CHECK(s2.family.polys[0].is_zero());
    CHECK(s2.family.polys[1] == (var("c1") + var("g")) * Rational(2));

    CharacterSolution s3 = solve_character_family(3);
    ContentPolynomialFamily expect = ch3_explicit_family();
    REQUIRE(s3.family.polys.size() == expect.polys.size());
    for (size_t k = 0; k < expect.polys.size(); ++k) CHECK(s3.family.polys[k] == expect.polys[k]);

    CHECK_THROWS_AS(solve_character_family(6), TooLargeError);
    CHECK_THROWS_AS(solve_character_family(0), TooLargeError);
}

TEST_CASE("solutions satisfy the defining conditions") {
    for (unsigned n = 1; n <= 5; ++n) {
        CharacterSolution sol = solve_character_family(n);
        CHECK(sol.family.polys[1].coeff_of("c1", n - 1).constant_value() ==
              Rational(static_cast<long>(n)));
        for (const auto& lam : partitions_up_to(n - 1))
            CHECK(evaluate_family(sol.family, lam).is_zero());
    }
}

TEST_CASE("oracle route agrees with the solved families") {
    for (unsigned n = 1; n <= 4; ++n) {
        CharacterSolution sol = solve_character_family(n);
        for (const auto& lam : partitions_up_to(7)) {
            if (lam.empty()) continue;
            CHECK(jack_character(yd({n}), lam) == evaluate_family(sol.family, lam));
        }
    }
}

TEST_CASE("small Stanley polynomials") {
    MultiPoly p1 = var("p1"), q1 = var("q1"), g = var("g");
    CHECK(stanley_polynomial(solve_character_family(1), 1) == -(p1 * q1));
    CHECK(stanley_polynomial(solve_character_family(2), 1) ==
          -(p1 * p1 * q1 + p1 * q1 * q1 + g * p1 * q1));
    CHECK_THROWS_AS(stanley_polynomial(solve_character_family(1), 4), TooLargeError);
}

TEST_CASE("top degree parts and the remainder") {
    // Ch_2's one-rectangle Stanley polynomial is already homogeneous
    CharacterSolution s2 = solve_character_family(2);
    CHECK(top_degree(s2, 1).stanley_top == stanley_polynomial(s2, 1));

    // the degree-4 remainder of Ch_3 on two rectangles
    CharacterSolution s3 = solve_character_family(3);
    MultiPoly delta3 = stanley_polynomial(s3, 2) - top_degree(s3, 2).stanley_top;
    CHECK(delta3 == -(var("p1") * var("q1") + var("p2") * var("q2")));

    for (unsigned n = 1; n <= 5; ++n) {
        CharacterSolution sol = solve_character_family(n);
        for (unsigned ell = 1; ell <= 2; ++ell) {
            MultiPoly st = stanley_polynomial(sol, ell);
            MultiPoly top = st.homogeneous_part(n + 1);
            MultiPoly rest = st - top;
            CHECK(rest.total_degree() <= n);
            // the top part factors through the truncated family
            CHECK(evaluate_family_multirect(family_top(sol), ell).homogeneous_part(n + 1) == top);
        }
    }
}

TEST_CASE("map enumeration gives the top degree part") {
    for (unsigned n = 1; n <= 5; ++n) {
        CharacterSolution sol = solve_character_family(n);
        for (unsigned ell = 1; ell <= 2; ++ell)
            CHECK(stanley_polynomial(sol, ell).homogeneous_part(n + 1) == ch_top_maps(n, ell));
    }
}

TEST_CASE("negated Stanley coefficients are non-negative integers") {
    for (unsigned n = 1; n <= 5; ++n) {
        CharacterSolution sol = solve_character_family(n);
        for (unsigned ell = 1; ell <= 2; ++ell) {
            MultiPoly neg = -stanley_polynomial(sol, ell);
            for (const auto& [mono, c] : neg.terms()) {
                CHECK(sgn(c) >= 0);
                CHECK(is_integer(c));
            }
        }
    }
}

TEST_CASE("vanishing system holds for the oracle characters") {
    for (unsigned n = 1; n <= 4; ++n) {
        auto G = [n](const YoungDiagram& lam) { return jack_character(YoungDiagram({n}), lam); };
        VanishingReport rep = verify_vanishing_system(G, n);
        CHECK(rep.all_pass());
        CHECK(!rep.checks.empty());
    }
}

TEST_CASE("vanishing system holds for the map-formula top part") {
    for (unsigned n = 1; n <= 4; ++n) {
        CharacterSolution sol = solve_character_family(n);
        ContentPolynomialFamily top = family_top(sol);
        auto G = [n](const YoungDiagram& lam) { return ch_top_maps_value(n, lam); };
        VanishingReport rep = verify_vanishing_system(G, n, &top);
        for (const auto& c : rep.checks) {
            INFO(c.equation << " k=" << c.k << " lhs=" << c.lhs.str());
            CHECK(c.pass);
        }
    }
}

TEST_CASE("vanishing system ignores subdominant terms") {
    std::mt19937 rng(13371337);
    unsigned cases = 0;
    for (unsigned n = 3; n <= 4; ++n) {
        auto base = [n](const YoungDiagram& lam) { return ch_top_maps_value(n, lam); };
        VanishingReport ref = verify_vanishing_system(base, n);
        for (unsigned trial = 0; trial < 60; ++trial) {
            ContentPolynomialFamily low = random_family(rng, n);
            auto bumped = [&](const YoungDiagram& lam) {
                return ch_top_maps_value(n, lam) + evaluate_family(low, lam);
            };
            VanishingReport rep = verify_vanishing_system(bumped, n);
            REQUIRE(rep.checks.size() == ref.checks.size());
            for (size_t i = 0; i < rep.checks.size(); ++i) {
                CHECK(rep.checks[i].lhs == ref.checks[i].lhs);
                ++cases;
            }
        }
    }
    CHECK(cases >= 100);
}
