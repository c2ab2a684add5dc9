#include "bondage/report.hpp"

#include <algorithm>
#include <sstream>

#include "bondage/error.hpp"
#include "bondage/exact.hpp"
#include "bondage/gadgets.hpp"
#include "bondage/polyalgos.hpp"

namespace bondage {

std::string format_vertices(std::vector<VertexId> s) {
    std::sort(s.begin(), s.end());
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
    return out + "}";
}

std::string format_edges(std::vector<EdgeRef> e) {
    std::sort(e.begin(), e.end());
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i)
        out += (i ? " " : "") + std::to_string(e[i].u + 1) + "-" + std::to_string(e[i].v + 1);
    return out.empty() ? "(none)" : out;
}

std::string format_ledger_entry(const LedgerEntry& c) {
    std::string s = "[" + to_string(c.status) + "] " + c.claim;
    if (!c.detail.empty()) s += " (" + c.detail + ")";
    return s;
}

std::string Report::render() const {
    std::ostringstream os;
    os << "command: " << command << "\n";
    for (const auto& [k, v] : fields) os << k << ":" << (!v.empty() && v[0] == '\n' ? "" : " ") << v << "\n";
    if (!ledger.empty()) {
        os << "ledger:\n";
        for (const auto& l : ledger) os << "  " << l << "\n";
    }
    return os.str();
}

std::string render_trace(const ReductionTrace& t) {
    std::ostringstream os;
    os << "operation " << t.operation << "\n";
    for (const auto& s : t.steps) os << "step " << s << "\n";
    for (const auto& [k, v] : t.terms) os << "term " << k << " " << v << "\n";
    for (const auto& [k, v] : t.element_map) os << "map " << k << " " << format_vertices(v) << "\n";
    for (const auto& [k, v] : t.gadget_copies) os << "copy " << k << " " << format_vertices(v) << "\n";
    for (const auto& [k, v] : t.exhibits) os << "exhibit " << k << " " << format_vertices(v) << "\n";
    for (const auto& c : t.ledger) os << "claim " << format_ledger_entry(c) << "\n";
    return os.str();
}

Report run_solve(const Graph& g, const std::string& what, int max_d, bool witness, int threads) {
    Report r;
    r.command = "solve --what " + what;
    r.fields.push_back({"graph", "n " + std::to_string(g.n()) + ", m " + std::to_string(g.m())});
    if (what == "bondage") {
        r.command += " --max-d " + std::to_string(max_d);
        auto b = bondage_number(g, max_d, SearchOptions{threads});
        r.fields.push_back({"gamma", std::to_string(b.gamma)});
        if (b.value) {
            r.fields.push_back({"bondage", std::to_string(*b.value)});
            r.value = *b.value;
            if (witness) r.fields.push_back({"witness", format_edges(b.witness)});
        } else {
            r.fields.push_back({"bondage", "exceeds " + std::to_string(max_d)});
            r.value = -1;
        }
        r.fields.push_back({"subsets tested", std::to_string(b.subsets_tested)});
    } else {
        auto res = solve(g, parse_objective(what));
        r.fields.push_back({what, std::to_string(res.value)});
        r.value = res.value;
        if (witness) r.fields.push_back({"witness", format_vertices(res.witness)});
    }
    if (witness) r.command += " --witness";
    return r;
}

Report run_cores(const Graph& g, const std::string& what) {
    Report r;
    r.command = "cores --what " + what;
    auto kind = parse_objective(what);
    auto c = cores(g, kind);
    r.fields.push_back({what, std::to_string(solve(g, kind).value)});
    r.fields.push_back({"core", format_vertices(c.core)});
    r.fields.push_back({"anticore", format_vertices(c.anticore)});
    return r;
}

Report run_critical3(const Graph& g, bool pad, bool verify) {
    Report r;
    r.command = std::string("critical3") + (pad ? " --pad-to-3" : "") + (verify ? " --verify" : "");
    auto t = find_three_critical_edges_girth8(g, pad, verify);
    r.fields.push_back({"case", t.case_tag == 1 ? "1 (adjacent pair)" : "2 (distance-two pair)"});
    std::string wit = "u " + std::to_string(t.u + 1) + ", v " + std::to_string(t.v + 1);
    if (t.w >= 0) wit += ", w " + std::to_string(t.w + 1);
    r.fields.push_back({"pair", wit});
    r.fields.push_back({"edges", format_edges(t.edges)});
    r.fields.push_back({"count", std::to_string(t.edges.size())});
    r.value = static_cast<long long>(t.edges.size());
    if (verify) {
        bool ok = *t.gamma_after > *t.gamma_before;
        r.fields.push_back({"gamma", std::to_string(*t.gamma_before) + " -> " + std::to_string(*t.gamma_after)});
        r.ledger.push_back(std::string("[") + (ok ? "verified" : "failed") + "] gamma(G - E') > gamma(G)");
        r.failed = !ok;
    }
    return r;
}

ReduceOutcome run_reduce(const GraphDocument& doc, const ReduceRequest& req) {
    const Graph& g = doc.graph;
    Reduction red;
    std::string cmd = "reduce --kind " + req.kind;
    if (req.kind == "planarize-vc") {
        if (!doc.drawing) throw InputError("planarize-vc needs a drawing");
        red = planarize_vc(g, *doc.drawing);
    } else if (req.kind == "bondage") {
        RotationSystem rot;
        if (doc.rotation)
            rot = *doc.rotation;
        else if (doc.drawing)
            rot = rotation_from_drawing(g, *doc.drawing);
        else
            throw InputError("bondage reduction needs a rotation system or a drawing");
        red = anticore_to_bondage(g, rot);
    } else if (req.kind == "claw-free") {
        red = eliminate_claws(g);
    } else if (req.kind == "cubic") {
        red = cubicize(g);
    } else if (req.kind == "girth") {
        if (req.girth < 3) throw InputError("girth reduction needs --girth K with K >= 3");
        cmd += " --girth " + std::to_string(req.girth);
        red = lift_girth(g, req.girth);
    } else {
        throw InputError("unknown reduction kind '" + req.kind + "'");
    }
    ReduceOutcome out;
    Report& r = out.report;
    if (req.verify) {
        cmd += " --verify";
        VerifyOptions o;
        o.threads = req.threads;
        r.failed = !verify_trace(g, red.graph, red.trace, o);
    }
    r.command = cmd;
    r.fields.push_back({"input", "n " + std::to_string(g.n()) + ", m " + std::to_string(g.m())});
    r.fields.push_back({"output", "n " + std::to_string(red.graph.n()) + ", m " + std::to_string(red.graph.m())});
    r.fields.push_back({"gadget copies", std::to_string(red.trace.gadget_copies.size())});
    std::string terms;
    for (const auto& [k, v] : red.trace.terms) terms += (terms.empty() ? "" : ", ") + k + " " + std::to_string(v);
    if (!terms.empty()) r.fields.push_back({"terms", terms});
    bool has_offset = std::any_of(red.trace.ledger.begin(), red.trace.ledger.end(),
                                  [](const LedgerEntry& c) { return c.kind == ClaimKind::GammaOffset; });
    if (has_offset) r.fields.push_back({"gamma offset", std::to_string(red.trace.gamma_offset())});
    for (const auto& c : red.trace.ledger) r.ledger.push_back(format_ledger_entry(c));
    out.trace = render_trace(red.trace);
    out.graph = std::move(red.graph);
    return out;
}

Report run_verify_gadget(const std::string& text, const std::string& name, int threads) {
    Gadget g = gadget_from_text(text, name);
    auto rep = verify_gadget(g, threads);
    Report r;
    r.command = "verify-gadget";
    r.fields.push_back({"gadget", name});
    r.fields.push_back({"contract", rep.contract});
    r.fields.push_back({"graph", "n " + std::to_string(g.graph.n()) + ", m " + std::to_string(g.graph.m())});
    for (const auto& c : rep.clauses)
        r.ledger.push_back(std::string("[") + (c.pass ? "pass" : "FAIL") + "] " + c.clause +
                           (c.detail.empty() ? "" : " (" + c.detail + ")"));
    r.fields.push_back({"result", rep.pass() ? "pass" : "fail"});
    r.failed = !rep.pass();
    return r;
}

Report run_gadget_search(const std::string& contract, int max_n, int min_n, std::size_t limit) {
    SearchFilters f;
    f.min_n = min_n;
    f.limit = limit;
    auto found = gadget_search(contract_by_name(contract), max_n, f);
    Report r;
    r.command = "gadget-search --contract " + contract + " --max-n " + std::to_string(max_n);
    if (min_n > 1) r.command += " --min-n " + std::to_string(min_n);
    if (limit) r.command += " --limit " + std::to_string(limit);
    r.fields.push_back({"found", std::to_string(found.size())});
    r.value = static_cast<long long>(found.size());
    for (const auto& gd : found) {
        GraphDocument d;
        d.format = GraphFormat::Gadget;
        d.graph = gd.graph;
        for (const auto& [role, v] : gd.ports) d.ports.push_back({role, v});
        d.contract = gd.contract;
        std::string body = serialize(d);
        std::string indented;
        std::istringstream is(body);
        for (std::string line; std::getline(is, line);) indented += "\n  " + line;
        r.fields.push_back({gd.name, indented});
    }
    return r;
}

Report run_poly_bondage(const Graph& g, int d, const std::string& mode) {
    auto m = parse_poly_mode(mode);
    auto res = poly_bondage(g, d, m);
    Report r;
    r.command = "poly-bondage --d " + std::to_string(d) + " --mode " + to_string(m);
    r.fields.push_back({"graph", "n " + std::to_string(g.n()) + ", m " + std::to_string(g.m())});
    r.fields.push_back({"b <= " + std::to_string(d), res.yes ? "yes" : "no"});
    if (res.yes) r.fields.push_back({"witness", format_edges(res.witness)});
    r.fields.push_back({"candidates", std::to_string(res.candidates)});
    r.fields.push_back({"oracle calls", std::to_string(res.oracle_calls)});
    r.value = res.yes ? 1 : 0;
    return r;
}

}  // namespace bondage
