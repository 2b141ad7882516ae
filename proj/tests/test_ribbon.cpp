#include <catch2/catch_amalgamated.hpp>

#include <jackmaps/ribbon.hpp>

#include <random>

using namespace jackmaps;

namespace {

RibbonGraph single_edge(bool twisted = false) {
    return make_ribbon(1, {0}, {0}, {twisted});
}

// Two parallel edges between one white and one black vertex.
RibbonGraph double_edge(bool t1, bool t2) {
    return make_ribbon(2, {1, 0}, {1, 0}, {t1, t2});
}

// Path white - black - white: two edges sharing the black vertex.
RibbonGraph path_wbw() { return make_ribbon(2, {0, 1}, {1, 0}, {false, false}); }

}  // namespace

TEST_CASE("boundary walk counts") {
    CHECK(trace_faces(single_edge()) == 1);
    CHECK(trace_faces(single_edge(true)) == 1);
    CHECK(trace_faces(double_edge(false, false)) == 2);
    CHECK(trace_faces(double_edge(true, false)) == 1);
    CHECK(trace_faces(double_edge(true, true)) == 2);
    CHECK(trace_faces(path_wbw()) == 1);
}

TEST_CASE("flip equivalence") {
    CHECK(flip_equivalent(double_edge(false, true), double_edge(true, false)));
    CHECK_FALSE(flip_equivalent(double_edge(false, false), double_edge(false, true)));
    CHECK(flip_equivalent(path_wbw(), path_wbw()));
    // a twist at a leaf is absorbed by flipping the leaf
    CHECK(flip_equivalent(single_edge(), single_edge(true)));
    CHECK(flip_equivalent(path_wbw(), twist_edge(path_wbw(), 1)));
    // twisting twice is the identity
    CHECK(flip_equivalent(double_edge(false, false),
                          twist_edge(twist_edge(double_edge(false, false), 1), 1)));
}

TEST_CASE("edge deletion keeps endpoints") {
    RibbonGraph g = remove_edge(path_wbw(), 1);
    CHECK(component_count(g) == 2);  // one edge plus an isolated white vertex
    CHECK(trace_faces(g) == 2);
    RibbonGraph h = remove_edge(g, 2);
    CHECK(h.rho.empty());
    CHECK(h.isolated == 3);
    CHECK_THROWS_AS(remove_edge(g, 1), UnknownEdgeError);
    CHECK_THROWS_AS(twist_edge(g, 1), UnknownEdgeError);
}

TEST_CASE("progressive condition") {
    CHECK(progressive_condition({single_edge(), {1}}));
    CHECK(progressive_condition({path_wbw(), {1, 2}}));
    CHECK(progressive_condition({path_wbw(), {2, 1}}));
    CHECK(progressive_condition({double_edge(true, false), {1, 2}}));

    // Any 3-edge one-face map where deleting the first edge leaves a
    // connected two-face rest (e.g. an untwisted double edge) must fail.
    unsigned found = 0;
    std::vector<unsigned> order{1, 2, 3};
    for (const auto& g : enumerate_nonoriented_labeled(3)) {
        if (trace_faces(g) != 1) continue;
        std::sort(order.begin(), order.end());
        do {
            RibbonGraph rest = remove_edge(g, order[0]);
            if (component_count(rest) == 1 && trace_faces(rest) == 2) {
                ++found;
                REQUIRE_FALSE(progressive_condition({g, order}));
            }
        } while (std::next_permutation(order.begin(), order.end()));
    }
    CHECK(found > 0);
}

TEST_CASE("flip-class enumeration") {
    CHECK(enumerate_nonoriented_labeled(1).size() == 1);
    auto classes2 = enumerate_nonoriented_labeled(2);
    CHECK(classes2.size() == 4);
    unsigned orientable2 = 0;
    for (const auto& r : classes2) orientable2 += orientable(r) ? 1 : 0;
    CHECK(orientable2 == 3);
    CHECK_THROWS_AS(enumerate_nonoriented_labeled(5), TooLargeError);
}

TEST_CASE("orientable classes match oriented pairs up to mirror image") {
    // Reversing both rotation systems is the global flip (all vertices at
    // once), so each orientable flip class collapses the labeled pair (s, t)
    // with its inverse pair (s^-1, t^-1).
    for (unsigned n = 1; n <= 3; ++n) {
        unsigned classes = 0;
        for (const auto& r : enumerate_nonoriented_labeled(n))
            classes += orientable(r) ? 1 : 0;
        auto pairs = enumerate_labeled(n);
        std::set<std::pair<Perm, Perm>> mod_inv;
        for (const auto& m : pairs) {
            Perm si(m.n), ti(m.n);
            for (unsigned i = 0; i < m.n; ++i) {
                si[m.sigma[i]] = i;
                ti[m.tau[i]] = i;
            }
            mod_inv.insert(std::min(std::make_pair(m.sigma, m.tau), std::make_pair(si, ti)));
        }
        CHECK(classes == mod_inv.size());
    }
}

TEST_CASE("two-sided counts agree") {
    auto [a1, b1] = count_S1_S2(1);
    CHECK(a1 == 1);
    CHECK(b1 == 1);
    auto [a2, b2] = count_S1_S2(2);
    CHECK(a2 == 6);
    CHECK(b2 == 6);
    auto [a3, b3] = count_S1_S2(3);
    CHECK(a3 == 78);
    CHECK(b3 == 78);
}

TEST_CASE("flip invariants under random flip sequences") {
    std::mt19937 rng(987654);
    for (unsigned n = 1; n <= 3; ++n) {
        for (const auto& r : enumerate_nonoriented_labeled(n)) {
            unsigned f = trace_faces(r), c = component_count(r);
            bool ori = orientable(r);
            RibbonGraph g = r;
            for (int step = 0; step < 30; ++step) {
                auto cycles = ribbon_detail::vertex_cycles(g);
                g = flip(g, cycles[rng() % cycles.size()][0]);
                REQUIRE(trace_faces(g) == f);
                REQUIRE(component_count(g) == c);
                REQUIRE(orientable(g) == ori);
                REQUIRE(flip_equivalent(g, r));
            }
        }
    }
}

TEST_CASE("components never exceed faces on enumerated classes") {
    for (unsigned n = 1; n <= 3; ++n)
        for (const auto& r : enumerate_nonoriented_labeled(n))
            REQUIRE(component_count(r) <= trace_faces(r));
}

TEST_CASE("normalized one-face items") {
    // bridges carry no twist at their insertion stage, so the single edge and
    // both 2-edge paths appear exactly once, the double edge only twisted
    auto items1 = enumerate_S1_items(1);
    REQUIRE(items1.size() == 1);
    CHECK_FALSE(items1[0].twists[0]);

    auto items2 = enumerate_S1_items(2);
    REQUIRE(items2.size() == 3);
    unsigned doubles = 0;
    for (const auto& r : items2) {
        if (ribbon_detail::vertex_cycles(r).size() == 2) {
            ++doubles;
            CHECK(r.twists[0]);   // the label-1 edge closes the cycle, twisted
            CHECK_FALSE(r.twists[1]);
        }
    }
    CHECK(doubles == 1);

    CHECK(enumerate_S1_items(3).size() == 26);
}

TEST_CASE("constructive matching of the two-sided count") {
    auto b1 = build_bijection(1);
    REQUIRE(b1.size() == 1);

    auto b2 = build_bijection(2);
    REQUIRE(b2.size() == 6);
    // twisted-double-edge items land on the only oriented double edge
    for (const auto& [s1, s2] : b2) {
        if (ribbon_detail::vertex_cycles(s1.map).size() != 2) continue;
        CHECK(cycle_count(s2.map.sigma) == 1);
        CHECK(cycle_count(s2.map.tau) == 1);
    }

    auto b3 = build_bijection(3);
    REQUIRE(b3.size() == 78);
    // injective and total onto S2
    std::set<std::string> hit;
    for (const auto& [s1, s2] : b3) {
        std::ostringstream os;
        for (unsigned v : s2.map.sigma) os << v << ',';
        for (unsigned v : s2.map.tau) os << v << ',';
        os << s2.root_rank;
        REQUIRE(hit.insert(os.str()).second);
        // labels, decoration, and underlying labeled graph are preserved
        REQUIRE(s1.root_rank == s2.root_rank);
        REQUIRE(ribbon_detail::underlying_graph_key(s1.map) ==
                ribbon_detail::underlying_graph_key(s2.map));
    }
    CHECK(hit.size() == 78);
}
