#include "bondage/bondage.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "bondage/error.hpp"
#include "bondage/exact.hpp"
#include "bondage/io.hpp"
#include "bondage/report.hpp"

struct bdg_graph {
    bondage::GraphDocument doc;
};

struct bdg_report {
    std::string text;
    std::string trace;
    bool failed = false;
};

namespace {

thread_local std::string last_error;

template <class F>
bdg_status guarded(F&& f) {
    try {
        last_error.clear();
        f();
        return BDG_OK;
    } catch (const bondage::InputError& e) {
        last_error = e.what();
        return BDG_INPUT_ERROR;
    } catch (const bondage::PreconditionError& e) {
        last_error = e.what();
        return BDG_PRECONDITION;
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return BDG_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return BDG_INTERNAL;
    }
}

bdg_status null_arg() {
    last_error = "null argument";
    return BDG_INPUT_ERROR;
}

bdg_report* wrap(const bondage::Report& r, std::string trace = {}) {
    return new bdg_report{r.render(), std::move(trace), r.failed};
}

}  // namespace

extern "C" {

const char* bdg_last_error(void) { return last_error.c_str(); }

bdg_status bdg_graph_parse(const char* text, bdg_graph** out) {
    if (!text || !out) return null_arg();
    return guarded([&] { *out = new bdg_graph{bondage::parse_graph(text)}; });
}

bdg_status bdg_graph_read_file(const char* path, bdg_graph** out) {
    if (!path || !out) return null_arg();
    return guarded([&] { *out = new bdg_graph{bondage::parse_graph(bondage::read_text_file(path))}; });
}

bdg_status bdg_graph_load_drawing(bdg_graph* g, const char* path) {
    if (!g || !path) return null_arg();
    return guarded([&] { g->doc.drawing = bondage::parse_drawing(bondage::read_text_file(path), g->doc.graph.n()); });
}

bdg_status bdg_graph_load_rotation(bdg_graph* g, const char* path) {
    if (!g || !path) return null_arg();
    return guarded(
        [&] { g->doc.rotation = bondage::parse_rotation(bondage::read_text_file(path), g->doc.graph.n()); });
}

void bdg_graph_free(bdg_graph* g) { delete g; }

int bdg_graph_n(const bdg_graph* g) { return g ? g->doc.graph.n() : 0; }
int bdg_graph_m(const bdg_graph* g) { return g ? g->doc.graph.m() : 0; }

bdg_status bdg_graph_serialize(const bdg_graph* g, char** text) {
    if (!g || !text) return null_arg();
    return guarded([&] {
        std::string s = bondage::serialize(g->doc);
        char* buf = new char[s.size() + 1];
        std::memcpy(buf, s.c_str(), s.size() + 1);
        *text = buf;
    });
}

void bdg_string_free(char* s) { delete[] s; }

bdg_status bdg_gamma(const bdg_graph* g, int* value) {
    if (!g || !value) return null_arg();
    return guarded([&] { *value = bondage::gamma_number(g->doc.graph); });
}

bdg_status bdg_tau(const bdg_graph* g, int* value) {
    if (!g || !value) return null_arg();
    return guarded([&] { *value = bondage::tau_number(g->doc.graph); });
}

bdg_status bdg_alpha(const bdg_graph* g, int* value) {
    if (!g || !value) return null_arg();
    return guarded([&] { *value = bondage::alpha_number(g->doc.graph); });
}

bdg_status bdg_bondage(const bdg_graph* g, int d_max, int threads, int* value) {
    if (!g || !value) return null_arg();
    return guarded([&] {
        auto b = bondage::bondage_number(g->doc.graph, d_max, bondage::SearchOptions{threads});
        *value = b.value ? *b.value : -1;
    });
}

bdg_status bdg_solve(const bdg_graph* g, const char* what, int max_d, int witness, int threads, bdg_report** out) {
    if (!g || !what || !out) return null_arg();
    return guarded([&] { *out = wrap(bondage::run_solve(g->doc.graph, what, max_d, witness != 0, threads)); });
}

bdg_status bdg_cores(const bdg_graph* g, const char* what, bdg_report** out) {
    if (!g || !what || !out) return null_arg();
    return guarded([&] { *out = wrap(bondage::run_cores(g->doc.graph, what)); });
}

bdg_status bdg_critical3(const bdg_graph* g, int pad_to_3, int verify, bdg_report** out) {
    if (!g || !out) return null_arg();
    return guarded([&] { *out = wrap(bondage::run_critical3(g->doc.graph, pad_to_3 != 0, verify != 0)); });
}

bdg_status bdg_reduce(const bdg_graph* g, const char* kind, int girth, int verify, int threads, bdg_report** out,
                      bdg_graph** out_graph) {
    if (!g || !kind || !out) return null_arg();
    return guarded([&] {
        bondage::ReduceRequest req{kind, girth, verify != 0, threads};
        auto res = bondage::run_reduce(g->doc, req);
        if (out_graph) {
            bondage::GraphDocument d;
            d.graph = std::move(res.graph);
            *out_graph = new bdg_graph{std::move(d)};
        }
        *out = wrap(res.report, std::move(res.trace));
    });
}

bdg_status bdg_verify_gadget(const char* path, int threads, bdg_report** out) {
    if (!path || !out) return null_arg();
    return guarded([&] {
        std::string p = path;
        std::string name = p.substr(p.find_last_of('/') == std::string::npos ? 0 : p.find_last_of('/') + 1);
        *out = wrap(bondage::run_verify_gadget(bondage::read_text_file(p), name, threads));
    });
}

bdg_status bdg_gadget_search(const char* contract, int max_n, int min_n, size_t limit, bdg_report** out) {
    if (!contract || !out) return null_arg();
    return guarded([&] { *out = wrap(bondage::run_gadget_search(contract, max_n, min_n, limit)); });
}

bdg_status bdg_poly_bondage(const bdg_graph* g, int d, const char* mode, bdg_report** out) {
    if (!g || !mode || !out) return null_arg();
    return guarded([&] { *out = wrap(bondage::run_poly_bondage(g->doc.graph, d, mode)); });
}

const char* bdg_report_text(const bdg_report* r) { return r ? r->text.c_str() : ""; }
const char* bdg_report_trace(const bdg_report* r) { return r ? r->trace.c_str() : ""; }
int bdg_report_failed(const bdg_report* r) { return r && r->failed ? 1 : 0; }
void bdg_report_free(bdg_report* r) { delete r; }

}  // extern "C"
