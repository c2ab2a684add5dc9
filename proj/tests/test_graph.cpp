#include "bondage/error.hpp"
#include "bondage/geometry.hpp"
#include "bondage/graph.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace bondage;

namespace {

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("girth") {
    for (int n = 3; n <= 12; ++n) CHECK(girth(cycle(n)) == n);
    for (const char* t : {"tree_path7.txt", "tree_spider.txt", "tree_caterpillar.txt", "k13.txt"})
        CHECK_FALSE(girth(fixture(t)).has_value());
    CHECK(girth(fixture("theta_4_4_4.txt")) == 8);
    CHECK(girth(fixture("k4_subdivided.txt")) == 9);
    CHECK(girth(fixture("k4.txt")) == 3);
}

TEST_CASE("distance is a metric on small connected fixtures") {
    for (const auto& e : oracle::load_atlas(fixture_path("atlas7.g6"))) {
        const Graph& g = e.graph;
        if (!oracle::connected(g)) continue;
        for (int a = 0; a < g.n(); ++a)
            for (int b = 0; b < g.n(); ++b) {
                int ab = distance(g, a, b);
                REQUIRE(ab == distance(g, b, a));
                CHECK((ab == 0) == (a == b));
                for (int c = 0; c < g.n(); ++c) CHECK(ab <= distance(g, a, c) + distance(g, c, b));
            }
    }
}

TEST_CASE("planarity agrees with the atlas") {
    int nonplanar = 0;
    for (const auto& e : oracle::load_atlas(fixture_path("atlas7.g6"))) {
        CHECK(is_planar(e.graph) == e.planar);
        nonplanar += !e.planar;
    }
    // K5 and K3,3 subdivisions first appear at n = 5 and n = 6
    CHECK(nonplanar == 237);
}

TEST_CASE("bipartite, connectivity, claws") {
    CHECK(is_bipartite(cycle(6)).bipartite);
    CHECK_FALSE(is_bipartite(cycle(7)).bipartite);
    CHECK(is_connected(fixture("spider.txt")));
    Graph two(4);
    two.add_edge(0, 1);
    two.add_edge(2, 3);
    CHECK(connected_components(two).size() == 2);
    CHECK(claw_centers(fixture("k13.txt")) == std::vector<VertexId>{0});
    CHECK(claw_centers(fixture("spider.txt")) == std::vector<VertexId>{0});
    CHECK(claw_centers(fixture("k4.txt")).empty());
    CHECK(claw_centers(fixture("bull.txt")).empty());
}

TEST_CASE("edge edits") {
    Graph g = fixture("c4.txt");
    CHECK_THROWS_AS(g.add_edge(0, 1), InputError);
    CHECK_THROWS_AS(g.add_edge(2, 2), InputError);
    CHECK_THROWS_AS(g.remove_edge(0, 2), InputError);
    Graph h = delete_edges(g, {EdgeRef(0, 1)});
    CHECK(h.m() == 3);
    CHECK(isolate_vertex(g, 0).degree(0) == 0);
    Graph leaves = attach_leaves(g, {0, 2});
    CHECK(leaves.n() == 6);
    CHECK(leaves.has_edge(0, 4));
    CHECK(leaves.has_edge(2, 5));
}

TEST_CASE("crossings of the K5 fixture") {
    auto d = fixture_doc("k5_one_crossing.txt");
    auto rep = segment_crossings(d.graph, *d.drawing);
    REQUIRE(rep.crossings.size() == 1);
    CHECK(rep.crossings[0].first == EdgeRef(0, 3));
    CHECK(rep.crossings[0].second == EdgeRef(2, 4));
    CHECK(rep.along_edge.size() == 2);
}

TEST_CASE("general position is enforced") {
    Graph g = Graph::build(3, {{0, 1}});
    Drawing d;
    d.points = {{0, 0}, {2, 0}, {1, 0}};  // vertex 3 sits on edge 1-2
    CHECK_THROWS_AS(segment_crossings(g, d), InputError);
    d.points = {{0, 0}, {0, 0}, {1, 1}};
    CHECK_THROWS_AS(segment_crossings(g, d), InputError);
}

TEST_CASE("rotations") {
    auto d = fixture_doc("k5_one_crossing.txt");
    auto r = rotation_from_drawing(d.graph, *d.drawing);
    CHECK(rotation_matches(d.graph, r));
    Graph c = cycle(5);
    RotationSystem rc;
    for (int v = 0; v < 5; ++v) rc.order.push_back({(v + 4) % 5, (v + 1) % 5});
    CHECK(rotation_face_count(c, rc) == 2);
}

}  // TEST_SUITE
