#include <filesystem>

#include "bondage/error.hpp"
#include "bondage/io.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace bondage;

TEST_SUITE("io") {

TEST_CASE("dimacs K2") {
    auto d = parse_graph("p edge 2 1\ne 1 2\n");
    CHECK(d.graph.n() == 2);
    CHECK(d.graph.m() == 1);
    CHECK(d.graph.has_edge(0, 1));
    CHECK(d.format == GraphFormat::Dimacs);
}

TEST_CASE("graph6 C5") {
    // C5 as 0-1-2-3-4-0: upper-triangle bits 1001 01010 -> "Dhc"
    Graph g = parse_graph6("Dhc");
    REQUIRE(g.n() == 5);
    CHECK(g.m() == 5);
    for (int v = 0; v < 5; ++v) CHECK(g.degree(v) == 2);
    CHECK(girth(g) == 5);
    CHECK(to_graph6(g) == "Dhc");
    CHECK(parse_graph("Dhc\n").format == GraphFormat::Graph6);
}

TEST_CASE("graph6 round trip over the atlas") {
    for (const auto& e : oracle::load_atlas(fixture_path("atlas7.g6"))) {
        Graph back = parse_graph6(to_graph6(e.graph));
        CHECK(back == e.graph);
    }
}

TEST_CASE("gadget ports need a contract") {
    CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 2\nport x 1\n"), InputError);
    CHECK_NOTHROW(parse_graph("p edge 2 1\ne 1 2\nport x 1\ncontract leaf\n"));
}

TEST_CASE("errors carry line numbers") {
    auto message = [](const std::string& text) {
        try {
            parse_graph(text);
        } catch (const InputError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message("p edge 2 1\ne 1 3\n").rfind("line 2", 0) == 0);
    CHECK(message("p edge 3 1\ne 1 2\nport x 1\nport x 2\ncontract leaf\n").find("duplicate port role") !=
          std::string::npos);
    CHECK(message("p edge 3 2\ne 1 2\n").find("line") != std::string::npos);
    CHECK(message("e 1 2\n").find("header") != std::string::npos);
    CHECK(message("p edge 2 1\ne 1 1\n").rfind("line 2", 0) == 0);
}

TEST_CASE("drawings and rotations") {
    auto d = fixture_doc("k5_one_crossing.txt");
    REQUIRE(d.drawing);
    CHECK(d.drawing->points.size() == 5);
    CHECK(d.drawing->points[1].x == Rational(12));
    auto r = parse_rotation(read_text_file(fixture_path("p3_rotation.txt")), 3);
    CHECK(r.order[1] == std::vector<VertexId>{0, 2});
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(rational_to_string(Rational(-1, 2)) == "-1/2");
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
}

TEST_CASE("every fixture round-trips") {
    namespace fs = std::filesystem;
    int files = 0;
    for (const char* dir : {BONDAGE_FIXTURE_DIR, BONDAGE_GADGET_DIR}) {
        for (const auto& entry : fs::directory_iterator(dir)) {
            auto name = entry.path().filename().string();
            if (name == "atlas7.g6" || name.find("rotation") != std::string::npos) continue;
            CAPTURE(name);
            auto first = parse_graph(read_text_file(entry.path().string()));
            auto again = parse_graph(serialize(first));
            CHECK(again.graph == first.graph);
            CHECK(serialize(again) == serialize(first));
            CHECK(again.ports == first.ports);
            CHECK(again.contract == first.contract);
            CHECK(again.drawing.has_value() == first.drawing.has_value());
            ++files;
        }
    }
    CHECK(files >= 20);
}

}  // TEST_SUITE
