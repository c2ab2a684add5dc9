#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "bondage/bondage.h"

namespace {

struct GraphDeleter {
    void operator()(bdg_graph* g) const { bdg_graph_free(g); }
};
struct ReportDeleter {
    void operator()(bdg_report* r) const { bdg_report_free(r); }
};
using GraphPtr = std::unique_ptr<bdg_graph, GraphDeleter>;
using ReportPtr = std::unique_ptr<bdg_report, ReportDeleter>;

int fail(bdg_status s) {
    std::cerr << "error: " << bdg_last_error() << "\n";
    return static_cast<int>(s);
}

bool write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) return false;
    f << text;
    return static_cast<bool>(f);
}

// raw is taken by reference so it is read after the command has filled it
int finish(bdg_status s, bdg_report* const& raw) {
    ReportPtr r(raw);
    if (s != BDG_OK) return fail(s);
    std::cout << bdg_report_text(r.get());
    return bdg_report_failed(r.get()) ? BDG_PRECONDITION : BDG_OK;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Domination, bondage and reduction gadgets"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "Worker threads for exact searches")->check(CLI::PositiveNumber);

    std::string input;
    auto add_input = [&](CLI::App* sub) { sub->add_option("graph", input, "Graph file")->required(); };

    auto* solve = app.add_subcommand("solve", "Exact gamma, tau, alpha or bondage number");
    add_input(solve);
    std::string what = "gamma";
    int max_d = 3;
    bool witness = false;
    solve->add_option("--what", what)->check(CLI::IsMember({"gamma", "tau", "alpha", "bondage"}));
    solve->add_option("--max-d", max_d)->check(CLI::PositiveNumber);
    solve->add_flag("--witness", witness);

    auto* cores = app.add_subcommand("cores", "Core and anticore");
    add_input(cores);
    std::string core_what = "gamma";
    cores->add_option("--what", core_what)->check(CLI::IsMember({"gamma", "tau", "alpha"}));

    auto* crit = app.add_subcommand("critical3", "At most three edges raising gamma (planar, girth >= 8)");
    add_input(crit);
    bool pad = false, crit_verify = false;
    crit->add_flag("--pad-to-3", pad);
    crit->add_flag("--verify", crit_verify);

    auto* reduce = app.add_subcommand("reduce", "Gadget reductions");
    add_input(reduce);
    std::string kind, drawing, rotation, trace_path, output_path;
    int girth = 0;
    bool verify = false;
    reduce->add_option("--kind", kind)
        ->required()
        ->check(CLI::IsMember({"planarize-vc", "bondage", "claw-free", "cubic", "girth"}));
    reduce->add_option("--girth", girth);
    reduce->add_option("--drawing", drawing);
    reduce->add_option("--rotation", rotation);
    reduce->add_option("--trace", trace_path);
    reduce->add_option("--output", output_path);
    reduce->add_flag("--verify", verify);

    auto* vg = app.add_subcommand("verify-gadget", "Check a gadget file against its contract");
    std::string gadget;
    vg->add_option("--gadget", gadget)->required();

    auto* gs = app.add_subcommand("gadget-search", "Enumerate small gadgets meeting a contract");
    std::string contract;
    int max_n = 0, min_n = 1;
    std::size_t limit = 0;
    gs->add_option("--contract", contract)->required();
    gs->add_option("--max-n", max_n)->required()->check(CLI::PositiveNumber);
    gs->add_option("--min-n", min_n)->check(CLI::PositiveNumber);
    gs->add_option("--limit", limit);

    auto* pb = app.add_subcommand("poly-bondage", "Decide b(G) <= d with the polynomial procedures");
    add_input(pb);
    int d = 1;
    std::string mode = "closed";
    pb->add_option("--d", d)->required()->check(CLI::PositiveNumber);
    pb->add_option("--mode", mode)->check(CLI::IsMember({"closed", "hfree", "bounded"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return BDG_INPUT_ERROR;
    }

    if (vg->parsed()) {
        bdg_report* r = nullptr;
        return finish(bdg_verify_gadget(gadget.c_str(), threads, &r), r);
    }
    if (gs->parsed()) {
        bdg_report* r = nullptr;
        return finish(bdg_gadget_search(contract.c_str(), max_n, min_n, limit, &r), r);
    }

    bdg_graph* raw = nullptr;
    if (bdg_status s = bdg_graph_read_file(input.c_str(), &raw); s != BDG_OK) return fail(s);
    GraphPtr g(raw);

    bdg_report* r = nullptr;
    if (solve->parsed()) return finish(bdg_solve(g.get(), what.c_str(), max_d, witness, threads, &r), r);
    if (cores->parsed()) return finish(bdg_cores(g.get(), core_what.c_str(), &r), r);
    if (crit->parsed()) return finish(bdg_critical3(g.get(), pad, crit_verify, &r), r);
    if (pb->parsed()) return finish(bdg_poly_bondage(g.get(), d, mode.c_str(), &r), r);

    if (!drawing.empty())
        if (bdg_status s = bdg_graph_load_drawing(g.get(), drawing.c_str()); s != BDG_OK) return fail(s);
    if (!rotation.empty())
        if (bdg_status s = bdg_graph_load_rotation(g.get(), rotation.c_str()); s != BDG_OK) return fail(s);
    bdg_graph* out_raw = nullptr;
    bdg_status s = bdg_reduce(g.get(), kind.c_str(), girth, verify, threads, &r, &out_raw);
    ReportPtr rep(r);
    GraphPtr out(out_raw);
    if (s != BDG_OK) return fail(s);
    if (!trace_path.empty() && !write_file(trace_path, bdg_report_trace(rep.get()))) {
        std::cerr << "error: cannot write " << trace_path << "\n";
        return BDG_INPUT_ERROR;
    }
    if (!output_path.empty()) {
        char* text = nullptr;
        if (bdg_status st = bdg_graph_serialize(out.get(), &text); st != BDG_OK) return fail(st);
        bool ok = write_file(output_path, text);
        bdg_string_free(text);
        if (!ok) {
            std::cerr << "error: cannot write " << output_path << "\n";
            return BDG_INPUT_ERROR;
        }
    }
    std::cout << bdg_report_text(rep.get());
    return bdg_report_failed(rep.get()) ? BDG_PRECONDITION : BDG_OK;
}
