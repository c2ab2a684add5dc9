#include <string>

#include "bondage/bondage.h"
#include "doctest.h"

namespace {

std::string fixture_path(const std::string& name) { return std::string(BONDAGE_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("graph handles") {
    bdg_graph* g = nullptr;
    REQUIRE(bdg_graph_parse("p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n", &g) == BDG_OK);
    CHECK(bdg_graph_n(g) == 4);
    CHECK(bdg_graph_m(g) == 4);
    int v = 0;
    CHECK(bdg_gamma(g, &v) == BDG_OK);
    CHECK(v == 2);
    CHECK(bdg_tau(g, &v) == BDG_OK);
    CHECK(v == 2);
    CHECK(bdg_alpha(g, &v) == BDG_OK);
    CHECK(v == 2);
    CHECK(bdg_bondage(g, 2, 1, &v) == BDG_OK);
    CHECK(v == -1);
    CHECK(bdg_bondage(g, 3, 1, &v) == BDG_OK);
    CHECK(v == 3);
    char* text = nullptr;
    REQUIRE(bdg_graph_serialize(g, &text) == BDG_OK);
    CHECK(std::string(text).rfind("p edge 4 4", 0) == 0);
    bdg_string_free(text);
    bdg_graph_free(g);
}

TEST_CASE("errors map to status codes") {
    bdg_graph* g = nullptr;
    CHECK(bdg_graph_parse("p edge 2 1\ne 1 5\n", &g) == BDG_INPUT_ERROR);
    CHECK(std::string(bdg_last_error()).find("line 2") != std::string::npos);
    CHECK(bdg_graph_read_file("/nonexistent/graph.txt", &g) == BDG_INPUT_ERROR);
    CHECK(bdg_graph_parse(nullptr, &g) == BDG_INPUT_ERROR);

    REQUIRE(bdg_graph_read_file(fixture_path("c4.txt").c_str(), &g) == BDG_OK);
    bdg_report* r = nullptr;
    CHECK(bdg_critical3(g, 0, 0, &r) == BDG_PRECONDITION);
    CHECK(r == nullptr);
    bdg_graph* out = nullptr;
    CHECK(bdg_reduce(g, "bondage", 0, 0, 1, &r, &out) == BDG_INPUT_ERROR);
    CHECK(bdg_reduce(g, "sideways", 0, 0, 1, &r, &out) == BDG_INPUT_ERROR);
    bdg_graph_free(g);
}

TEST_CASE("reports") {
    bdg_graph* g = nullptr;
    REQUIRE(bdg_graph_read_file(fixture_path("k5_one_crossing.txt").c_str(), &g) == BDG_OK);
    bdg_report* r = nullptr;
    bdg_graph* out = nullptr;
    REQUIRE(bdg_reduce(g, "planarize-vc", 0, 1, 1, &r, &out) == BDG_OK);
    CHECK(bdg_report_failed(r) == 0);
    CHECK(std::string(bdg_report_text(r)).find("[verified] tau(G') = tau(G) + 13d") != std::string::npos);
    CHECK(std::string(bdg_report_trace(r)).rfind("operation planarize-vc", 0) == 0);
    CHECK(bdg_graph_n(out) == 27);
    bdg_report_free(r);
    bdg_graph_free(out);

    REQUIRE(bdg_solve(g, "tau", 0, 1, 1, &r) == BDG_OK);
    CHECK(std::string(bdg_report_text(r)).find("tau: 4") != std::string::npos);
    bdg_report_free(r);
    REQUIRE(bdg_poly_bondage(g, 1, "closed", &r) == BDG_OK);
    bdg_report_free(r);
    bdg_graph_free(g);

    REQUIRE(bdg_verify_gadget((std::string(BONDAGE_GADGET_DIR) + "/h1.gadget").c_str(), 1, &r) == BDG_OK);
    CHECK(bdg_report_failed(r) == 0);
    bdg_report_free(r);
}
