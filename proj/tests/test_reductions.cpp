#include <set>

#include "bondage/error.hpp"
#include "bondage/exact.hpp"
#include "bondage/gadgets.hpp"
#include "bondage/geometry.hpp"
#include "bondage/reductions.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace bondage;

namespace {

Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle(int n) {
    Graph g = path(n);
    g.add_edge(0, n - 1);
    return g;
}

RotationSystem rotation_of(const Graph& g) {
    // sorted neighbor order is a valid planar rotation for trees and cycles
    RotationSystem r;
    for (VertexId v = 0; v < g.n(); ++v) r.order.push_back(g.neighbors(v));
    return r;
}

VerifyOptions wide() {
    VerifyOptions o;
    o.max_vertices_gamma = 80;
    o.max_edges_sweep = 80;
    return o;
}

void check_ledger(const Graph& in, Reduction& r, const VerifyOptions& o = wide()) {
    bool ok = verify_trace(in, r.graph, r.trace, o);
    for (const auto& c : r.trace.ledger) {
        CAPTURE(c.claim);
        CAPTURE(c.detail);
        CHECK(c.status != ClaimStatus::Failed);
    }
    CHECK(ok);
}

void check_copies_disjoint(const ReductionTrace& t) {
    std::set<VertexId> seen;
    for (const auto& [name, vs] : t.gadget_copies)
        for (VertexId v : vs) {
            CAPTURE(name);
            CHECK(seen.insert(v).second);
        }
}

Drawing points(std::vector<std::pair<int, int>> xy) {
    Drawing d;
    for (auto [x, y] : xy) d.points.push_back({Rational(x), Rational(y)});
    return d;
}

}  // namespace

TEST_SUITE("reductions") {

TEST_CASE("planarize K5 with one crossing") {
    auto doc = fixture_doc("k5_one_crossing.txt");
    auto r = planarize_vc(doc.graph, *doc.drawing);
    CHECK(r.graph.n() == 27);
    CHECK(r.trace.terms.at("crossings") == 1);
    CHECK(tau_number(r.graph) == 17);
    CHECK(is_planar(r.graph));
    CHECK(cores(r.graph, Objective::Tau).anticore.empty());
    CHECK(r.trace.element_map.size() == 15);  // 5 vertices, 10 edges
    check_ledger(doc.graph, r);
}

TEST_CASE("planarize without crossings is the identity") {
    Graph c4 = fixture("c4.txt");
    auto r = planarize_vc(c4, points({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
    CHECK(r.graph == c4);
    CHECK(r.trace.gadget_copies.empty());
    check_ledger(c4, r);
}

TEST_CASE("planarize chains gadgets along an edge crossed twice") {
    // a vertical edge 1-2 crossed by 3-4 and 5-6
    Graph g = Graph::build(6, {{0, 1}, {2, 3}, {4, 5}});
    auto r = planarize_vc(g, points({{0, 0}, {0, 4}, {-1, 1}, {1, 1}, {-1, 3}, {1, 3}}));
    CHECK(r.trace.terms.at("crossings") == 2);
    CHECK(r.graph.n() == 6 + 2 * 22);
    CHECK(tau_number(r.graph) == 3 + 26);
    CHECK(is_planar(r.graph));
    check_copies_disjoint(r.trace);
    check_ledger(g, r);
}

TEST_CASE("bondage reduction on K2 and P3") {
    Graph k2 = path(2), p3 = path(3);
    auto a = anticore_to_bondage(k2, rotation_of(k2));
    auto b = anticore_to_bondage(p3, rotation_of(p3));
    CHECK(gamma_number(a.graph) == 9);
    CHECK(gamma_number(b.graph) == 16);
    for (auto* r : {&a, &b}) {
        CHECK(r->graph.max_degree() <= 3);
        CHECK(is_planar(r->graph));
        CHECK(is_connected(r->graph));
        check_copies_disjoint(r->trace);
    }
    // tau-anticore(K2) is empty: no edge of G' is critical
    CHECK_FALSE(has_gamma_critical_edge(a.graph));
    // tau-anticore(P3) = {1,3}: cd is critical in the leaf components only
    auto cd = [&](int v) {
        auto s = b.trace.exhibits.at("cd" + std::to_string(v));
        return EdgeRef(s[0], s[1]);
    };
    CHECK(is_gamma_critical_edge(b.graph, cd(1)));
    CHECK(is_gamma_critical_edge(b.graph, cd(3)));
    CHECK_FALSE(is_gamma_critical_edge(b.graph, cd(2)));
    check_ledger(k2, a);
    check_ledger(p3, b);
}

TEST_CASE("bondage reduction input checks") {
    Graph p3 = path(3);
    RotationSystem bad = rotation_of(p3);
    bad.order[1] = {0};
    CHECK_THROWS_AS(anticore_to_bondage(p3, bad), InputError);
    Graph split = Graph::build(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(anticore_to_bondage(split, rotation_of(split)), PreconditionError);
    auto k5 = fixture_doc("k5_one_crossing.txt");
    CHECK_THROWS_AS(anticore_to_bondage(k5.graph, rotation_from_drawing(k5.graph, *k5.drawing)),
                    PreconditionError);
    CHECK_THROWS_AS(anticore_to_bondage(Graph(1), RotationSystem{{{}}}), PreconditionError);
}

TEST_CASE("component floor with free boundary") {
    for (int l = 1; l <= 3; ++l) {
        Graph gv = gv_component(l);
        CHECK(gv.n() == 7 * l + 3);
        oracle::Mask target = oracle::all(gv.n());
        for (VertexId v = 0; v < gv.n(); ++v) {
            const auto& lab = gv.label(v);
            if (lab.rfind("vbar_", 0) == 0 && lab != "vbar_0") target &= ~oracle::bit(v);
        }
        CHECK(oracle::min_dominating(gv, target, 2 * l + 1) == 2 * l + 1);
    }
}

TEST_CASE("component configurations") {
    auto names = [](int l, const std::vector<VertexId>& s) {
        Graph gv = gv_component(l);
        std::set<std::string> r;
        for (VertexId v : s) r.insert(gv.label(v));
        return r;
    };
    CHECK(names(1, gv_configuration(1, ConfigurationKind::NonDominating, 1)) ==
          std::set<std::string>{"c", "v_0", "v_1"});
    auto dom = gv_configuration(2, ConfigurationKind::Dominating, 3, 0);
    CHECK(dom.size() == 6);
    CHECK(names(2, dom).count("vbar_1"));
    CHECK(names(2, dom).count("vbar_2"));
    for (int l = 1; l <= 3; ++l) {
        Graph gv = gv_component(l);
        for (int item : {1, 2})
            for (int opt = 0; opt < 3; ++opt)
                CHECK(gv_configuration(l, ConfigurationKind::NonDominating, item, opt).size() ==
                      static_cast<std::size_t>(2 * l + 1));
        for (int opt = 0; opt < 3; ++opt) {
            auto s = gv_configuration(l, ConfigurationKind::Dominating, 3, opt);
            CHECK(s.size() == static_cast<std::size_t>(2 * l + 2));
            CHECK(is_dominating(gv, s));
        }
    }
    CHECK_THROWS_AS(gv_configuration(1, ConfigurationKind::NonDominating, 9), InputError);
    CHECK_THROWS_AS(gv_configuration(1, ConfigurationKind::Dominating, 1), InputError);
}

TEST_CASE("claw elimination") {
    Graph k13 = fixture("k13.txt");
    auto r = eliminate_claws(k13);
    CHECK(r.trace.terms.at("applications") == 1);
    CHECK(gamma_number(r.graph) == 3);
    CHECK(claw_centers(r.graph).empty());
    check_ledger(k13, r);

    // two claws on a subcubic host
    Graph two = Graph::build(7, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {4, 6}});
    auto t = eliminate_claws(two);
    CHECK(t.trace.terms.at("applications") == 2);
    CHECK(t.trace.gamma_offset() == 4);
    CHECK(gamma_number(t.graph) == oracle::gamma(two) + 4);
    check_ledger(two, t);

    Graph c4 = fixture("c4.txt");
    auto id = eliminate_claws(c4);
    CHECK(id.graph == c4);
    CHECK(id.trace.gamma_offset() == 0);
    CHECK_THROWS_AS(eliminate_claws(Graph::build(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})), PreconditionError);
}

TEST_CASE("cubicization") {
    Graph k4 = fixture("k4.txt");
    CHECK(cubicize(k4).graph == k4);
    Graph k2 = path(2);
    auto r = cubicize(k2);
    CHECK(r.trace.terms.at("O1") == 2);
    CHECK(gamma_number(r.graph) == 5);
    CHECK(r.graph.min_degree() == 3);
    CHECK(r.graph.max_degree() == 3);
    check_ledger(k2, r);
    Graph c4 = fixture("c4.txt");
    auto s = cubicize(c4);
    CHECK(gamma_number(s.graph) == 2 + s.trace.gamma_offset());
    CHECK(s.graph.min_degree() == 3);
    check_ledger(c4, s);
    CHECK_THROWS_AS(cubicize(Graph::build(3, {{0, 1}})), PreconditionError);
}

TEST_CASE("3-subdivision") {
    auto r = subdivide3(path(2), EdgeRef(0, 1));
    CHECK(r.graph.n() == 5);
    CHECK(gamma_number(r.graph) == 2);
    CHECK(bondage_number(r.graph, 1).value == 1);
    auto c = subdivide3(cycle(3), EdgeRef(0, 1), true);
    CHECK(girth(c.graph) == 6);
    CHECK(gamma_number(c.graph) == 2);
    check_ledger(cycle(3), c);
    check_ledger(path(2), r);
    CHECK_THROWS_AS(subdivide3(path(3), EdgeRef(0, 2)), InputError);
    // the leaves of P3 lie in its gamma-anticore
    CHECK_THROWS_AS(subdivide3(path(3), EdgeRef(0, 1), true), PreconditionError);
}

TEST_CASE("edge gadget") {
    for (const Graph& g : {path(2), cycle(3), path(3)}) {
        auto r = apply_edge_gadget(g, g.edges().front());
        CHECK(r.graph.n() == g.n() + 29);
        CHECK(gamma_number(r.graph) == gamma_number(g) + 8);
        CHECK(bondage_number(r.graph, 1).value.has_value() == bondage_number(g, 1).value.has_value());
        CHECK(r.trace.exhibits.count("covered"));
        check_ledger(g, r);
    }
}

TEST_CASE("girth lifting") {
    for (auto [g, k] : {std::pair{path(2), 6}, std::pair{cycle(3), 8}, std::pair{path(2), 3}}) {
        auto r = lift_girth(g, k);
        CHECK(is_bipartite(r.graph).bipartite);
        CHECK(girth(r.graph).value_or(1000) >= k);
        CHECK(r.graph.max_degree() <= 3);
        CHECK(is_planar(r.graph));
        CHECK(r.trace.gadget_copies.size() >= static_cast<std::size_t>(g.m()));
    }
    auto k2 = lift_girth(path(2), 6);
    CHECK(gamma_number(k2.graph) == 1 + k2.trace.gamma_offset());
    for (VertexId v = 0; v < lift_girth(cycle(3), 8).graph.n(); ++v) {
        int d = lift_girth(cycle(3), 8).graph.degree(v);
        CHECK((d == 2 || d == 3));
    }
}

TEST_CASE("element maps cover the input") {
    Graph p3 = path(3);
    for (const auto& r : {eliminate_claws(fixture("spider.txt")), cubicize(p3), lift_girth(p3, 6),
                          anticore_to_bondage(p3, rotation_of(p3))}) {
        CAPTURE(r.trace.operation);
        check_copies_disjoint(r.trace);
    }
    auto r = anticore_to_bondage(p3, rotation_of(p3));
    for (const char* key : {"v1", "v2", "v3", "e1-2", "e2-3"}) CHECK(r.trace.element_map.count(key));
}

TEST_CASE("verification bounds leave large claims unverified") {
    Graph p3 = path(3);
    auto r = anticore_to_bondage(p3, rotation_of(p3));
    CHECK(verify_trace(p3, r.graph, r.trace));
    bool unverified = false;
    for (const auto& c : r.trace.ledger) unverified = unverified || c.status == ClaimStatus::Unverified;
    CHECK(unverified);
}

}  // TEST_SUITE
