#include "bondage/error.hpp"
#include "bondage/exact.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace bondage;

namespace {

const std::vector<oracle::AtlasEntry>& atlas() {
    static const auto a = oracle::load_atlas(fixture_path("atlas7.g6"));
    return a;
}

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

}  // namespace

TEST_SUITE("exact") {

TEST_CASE("branch and bound matches enumeration up to seven vertices") {
    for (const auto& e : atlas()) {
        const Graph& g = e.graph;
        auto gd = min_dominating_set(g), vc = min_vertex_cover(g), is = max_independent_set(g);
        REQUIRE(gd.value == oracle::gamma(g));
        REQUIRE(vc.value == oracle::tau(g));
        REQUIRE(is.value == oracle::alpha(g));
        CHECK(is.value + vc.value == g.n());
        CHECK(is_dominating(g, gd.witness));
        CHECK(is_vertex_cover(g, vc.witness));
        CHECK(is_independent(g, is.witness));
        CHECK(std::is_sorted(gd.witness.begin(), gd.witness.end()));
    }
}

TEST_CASE("cores and anticores match enumeration up to six vertices") {
    for (const auto& e : atlas()) {
        if (e.graph.n() > 6) continue;
        for (const char* what : {"gamma", "tau", "alpha"}) {
            auto kind = parse_objective(what);
            auto got = cores(e.graph, kind);
            auto want = oracle::cores(e.graph, what);
            CHECK(got.core == want.core);
            CHECK(got.anticore == want.anticore);
            auto fam = enumerate_optimal(e.graph, kind);
            CHECK(fam.sets.size() == oracle::optimal_sets(e.graph, what).size());
            auto from_family = cores_from_family(e.graph, fam);
            CHECK(from_family.core == want.core);
            CHECK(from_family.anticore == want.anticore);
        }
    }
}

TEST_CASE("single-vertex core tests") {
    for (const auto& e : atlas()) {
        if (e.graph.n() > 6) continue;
        auto tau_c = oracle::cores(e.graph, "tau");
        auto alpha_c = oracle::cores(e.graph, "alpha");
        CHECK(alpha_c.core == tau_c.anticore);
        for (int v = 0; v < e.graph.n(); ++v) {
            bool in_tau_anticore = std::count(tau_c.anticore.begin(), tau_c.anticore.end(), v) > 0;
            bool in_alpha_core = std::count(alpha_c.core.begin(), alpha_c.core.end(), v) > 0;
            CHECK(tau_anticore_leaf_test(e.graph, v) == in_tau_anticore);
            CHECK(alpha_core_delete_test(e.graph, v) == in_alpha_core);
        }
    }
}

TEST_CASE("gamma-set containing a prescribed set") {
    for (const auto& e : atlas()) {
        const Graph& g = e.graph;
        if (g.n() > 6) continue;
        for (int a = 0; a < g.n(); ++a) {
            CHECK(has_min_ds_containing(g, {a}) == oracle::gamma_set_containing(g, {a}));
            for (int b = a + 1; b < g.n(); ++b)
                CHECK(has_min_ds_containing(g, {a, b}) == oracle::gamma_set_containing(g, {a, b}));
        }
    }
}

TEST_CASE("bondage number matches edge-subset enumeration") {
    for (const auto& e : atlas()) {
        const Graph& g = e.graph;
        if (g.n() > 6 || g.m() == 0) continue;
        auto b = bondage_number(g, 3);
        int want = oracle::bondage(g, 3);
        CHECK(b.value.value_or(-1) == want);
        if (b.value) {
            CHECK(static_cast<int>(b.witness.size()) == *b.value);
            CHECK(oracle::gamma(oracle::without(g, b.witness)) > b.gamma);
        }
        for (const auto& edge : g.edges())
            CHECK(is_gamma_critical_edge(g, edge) ==
                  (oracle::gamma(oracle::without(g, {edge})) > oracle::gamma(g)));
    }
}

TEST_CASE("bondage of cycles") {
    // frozen from oracle::bondage
    const int expected[] = {2, 3, 2, 2, 3, 2, 2};  // n = 3..9
    for (int n = 3; n <= 9; ++n) {
        CHECK(oracle::bondage(cycle(n), 3) == expected[n - 3]);
        CHECK(bondage_number(cycle(n), 3).value == expected[n - 3]);
    }
}

TEST_CASE("threads do not change bondage results") {
    for (const char* f : {"c8.txt", "theta_4_4_4.txt", "bull.txt", "k4.txt"}) {
        Graph g = fixture(f);
        auto one = bondage_number(g, 3, SearchOptions{1});
        auto four = bondage_number(g, 3, SearchOptions{4});
        CHECK(one.value == four.value);
        CHECK(one.witness == four.witness);
        CHECK(one.subsets_tested == four.subsets_tested);
    }
}

TEST_CASE("non-critical filters are sound") {
    for (const auto& e : atlas()) {
        const Graph& g = e.graph;
        if (g.n() > 6 || g.m() == 0) continue;
        auto fam = enumerate_optimal(g, Objective::Gamma);
        for (const auto& edge : non_critical_filters(g, fam))
            CHECK(oracle::gamma(oracle::without(g, {edge})) == oracle::gamma(g));
    }
    Graph c4 = fixture("c4.txt");
    OptimalFamily bogus{Objective::Gamma, 1, {{0}}, false};
    CHECK_THROWS_AS(non_critical_filters(c4, bogus), InputError);
}

TEST_CASE("constrained domination") {
    Graph p = fixture("tree_path7.txt");
    auto q = DominationQuery::plain(p);
    CHECK(solve_domination(p, q)->value == 3);
    q.forced = VertexSet::of(7, {0});
    CHECK(solve_domination(p, q)->value == 3);
    q.forced = VertexSet::of(7, {0, 1});
    CHECK(solve_domination(p, q)->value == 4);
    q.forced = VertexSet(7);
    q.allowed = VertexSet::of(7, {0, 1, 2});
    CHECK_FALSE(solve_domination(p, q).has_value());
}

TEST_CASE("edgeless graphs have no bondage number") {
    CHECK_THROWS_AS(bondage_number(Graph(3), 1), PreconditionError);
    CHECK(gamma_number(Graph(3)) == 3);
    CHECK_THROWS_AS(parse_objective("beta"), InputError);
}

}  // TEST_SUITE
