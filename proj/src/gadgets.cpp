#include "bondage/gadgets.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "bondage/error.hpp"
#include "bondage/exact.hpp"
#include "bondage/io.hpp"

namespace bondage {
namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& embedded_gadgets();
}

VertexId Gadget::port(const std::string& role) const {
    auto it = ports.find(role);
    if (it == ports.end()) throw InputError("gadget '" + name + "' has no port '" + role + "'");
    return it->second;
}

VertexId Gadget::vertex(const std::string& label) const {
    for (VertexId v = 0; v < graph.n(); ++v)
        if (graph.label(v) == label) return v;
    throw InputError("gadget '" + name + "' has no vertex labelled '" + label + "'");
}

bool GadgetReport::pass() const {
    return std::all_of(clauses.begin(), clauses.end(), [](const ClauseOutcome& c) { return c.pass; });
}

int conditional_gamma(const Graph& g, const std::vector<VertexId>& externally_dominated,
                      const std::vector<VertexId>& forced) {
    DominationQuery q = DominationQuery::plain(g);
    for (VertexId v : externally_dominated) q.must_dominate.erase(v);
    for (VertexId v : forced) q.forced.insert(v);
    auto r = solve_domination(g, q);
    return r ? r->value : -1;
}

int conditional_tau(const Graph& g, const std::vector<VertexId>& in, const std::vector<VertexId>& out) {
    VertexSet in_set = VertexSet::of(g.n(), in), out_set = VertexSet::of(g.n(), out);
    if (in_set.intersects(out_set)) return -1;
    VertexSet cover = in_set;
    for (VertexId v : out)
        for (VertexId w : g.neighbors(v)) {
            if (out_set.contains(w)) return -1;
            cover.insert(w);
        }
    VertexSet rest = VertexSet::full(g.n()) - cover - out_set;
    auto keep = rest.members();
    Graph h = induced_subgraph(g, keep);
    return cover.count() + tau_number(h);
}

namespace {

std::string join(const std::vector<VertexId>& vs, const Graph& g) {
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ",";
        s += g.label(vs[i]).empty() ? std::to_string(vs[i] + 1) : g.label(vs[i]);
    }
    return s + "}";
}

ClauseOutcome expect_value(std::string text, int got, int want) {
    return {std::move(text), got == want, "got " + std::to_string(got) + ", expected " + std::to_string(want)};
}

ClauseOutcome expect_true(std::string text, bool ok, std::string detail = {}) {
    return {std::move(text), ok, ok ? (detail.empty() ? "holds" : detail) : (detail.empty() ? "fails" : detail)};
}

std::vector<VertexId> ports_of(const Gadget& g, const std::vector<std::string>& roles) {
    std::vector<VertexId> out;
    for (const auto& r : roles) out.push_back(g.port(r));
    return out;
}

// Ports lie on one face: adding a hub adjacent to all of them, plus a cycle
// through them in the given order (subdivided), keeps the graph planar.
bool ports_on_common_face(const Graph& g, const std::vector<VertexId>& order) {
    Graph h = g;
    VertexId hub = h.add_vertex();
    for (VertexId p : order) h.add_edge(hub, p);
    if (order.size() >= 3)
        for (std::size_t i = 0; i < order.size(); ++i) {
            VertexId mid = h.add_vertex();
            h.add_edge(order[i], mid);
            h.add_edge(mid, order[(i + 1) % order.size()]);
        }
    return is_planar(h);
}

ContractClause port_degree_clause(std::vector<std::string> roles, int lo, int hi) {
    std::string text = "port degree in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
    return {text, [roles, lo, hi, text](const Gadget& g) {
                std::string bad;
                for (const auto& r : roles) {
                    int d = g.graph.degree(g.port(r));
                    if (d < lo || d > hi) bad += r + ":" + std::to_string(d) + " ";
                }
                return expect_true(text, bad.empty(), bad.empty() ? "" : "violations " + bad);
            }};
}

ContractClause interior_degree_clause(int lo, int hi) {
    std::string text = "non-port degree in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
    return {text, [lo, hi, text](const Gadget& g) {
                std::set<VertexId> ports;
                for (auto& [r, v] : g.ports) ports.insert(v);
                for (VertexId v = 0; v < g.graph.n(); ++v) {
                    if (ports.count(v)) continue;
                    int d = g.graph.degree(v);
                    if (d < lo || d > hi)
                        return expect_true(text, false, "vertex " + std::to_string(v + 1) + " has degree " + std::to_string(d));
                }
                return expect_true(text, true);
            }};
}

ContractClause common_face_clause(std::vector<std::string> roles) {
    std::string text = "planar with ports";
    for (const auto& r : roles) text += " " + r;
    text += " around one face";
    return {text, [roles, text](const Gadget& g) {
                return expect_true(text, ports_on_common_face(g.graph, ports_of(g, roles)));
            }};
}

ContractClause connected_clause() {
    return {"connected", [](const Gadget& g) { return expect_true("connected", is_connected(g.graph)); }};
}

ContractClause gamma_clause(int want) {
    std::string text = "gamma = " + std::to_string(want);
    return {text, [want, text](const Gadget& g) { return expect_value(text, gamma_number(g.graph), want); }};
}

// Value of the cheapest internal set when the listed ports are dominated
// from outside.
ContractClause conditional_gamma_clause(std::vector<std::string> external, std::vector<std::string> forced,
                                        int want, bool at_least = false) {
    std::string text = "internal domination";
    text += external.empty() ? " with no outside help" : " with";
    for (const auto& r : external) text += " " + r;
    if (!external.empty()) text += " dominated outside";
    if (!forced.empty()) {
        text += ", containing";
        for (const auto& r : forced) text += " " + r;
    }
    text += at_least ? " >= " : " = ";
    text += std::to_string(want);
    return {text, [=](const Gadget& g) {
                int got = conditional_gamma(g.graph, ports_of(g, external), ports_of(g, forced));
                bool ok = at_least ? got >= want : got == want;
                return ClauseOutcome{text, ok, "got " + std::to_string(got)};
            }};
}

ContractClause deleted_gamma_clause(std::vector<std::string> removed, int want) {
    std::string text = "gamma after deleting";
    for (const auto& r : removed) text += " " + r;
    text += " = " + std::to_string(want);
    return {text, [=](const Gadget& g) {
                auto drop = ports_of(g, removed);
                std::vector<VertexId> keep;
                for (VertexId v = 0; v < g.graph.n(); ++v)
                    if (std::find(drop.begin(), drop.end(), v) == drop.end()) keep.push_back(v);
                return expect_value(text, gamma_number(induced_subgraph(g.graph, keep)), want);
            }};
}

ContractClause deleted_bondage_clause(std::vector<std::string> removed, int want) {
    std::string text = "bondage number";
    if (!removed.empty()) {
        text += " after deleting";
        for (const auto& r : removed) text += " " + r;
    }
    text += " = " + std::to_string(want);
    return {text, [=](const Gadget& g) {
                auto drop = ports_of(g, removed);
                std::vector<VertexId> keep;
                for (VertexId v = 0; v < g.graph.n(); ++v)
                    if (std::find(drop.begin(), drop.end(), v) == drop.end()) keep.push_back(v);
                Graph h = induced_subgraph(g.graph, keep);
                if (h.m() == 0) return expect_true(text, false, "edgeless");
                auto b = bondage_number(h, want);
                int got = b.value.value_or(want + 1);
                return ClauseOutcome{text, got == want,
                                     b.value ? "got " + std::to_string(got) : "exceeds " + std::to_string(want)};
            }};
}

ContractClause anticore_member_clause(std::vector<std::string> roles) {
    std::string text = "gamma-anticore contains";
    for (const auto& r : roles) text += " " + r;
    return {text, [=](const Gadget& g) {
                int gam = gamma_number(g.graph);
                std::string bad;
                for (const auto& r : roles)
                    if (conditional_gamma(g.graph, {}, {g.port(r)}) == gam) bad += r + " ";
                return expect_true(text, bad.empty(), bad.empty() ? "" : "in some gamma-set: " + bad);
            }};
}

ContractClause gamma_set_clause(std::string name, std::vector<std::string> labels) {
    std::string text = "exhibit " + name + " is a gamma-set";
    return {text, [=](const Gadget& g) {
                std::vector<VertexId> s;
                for (const auto& l : labels) s.push_back(g.vertex(l));
                std::sort(s.begin(), s.end());
                bool dom = is_dominating(g.graph, s);
                int gam = gamma_number(g.graph);
                bool ok = dom && static_cast<int>(s.size()) == gam;
                return ClauseOutcome{text, ok, join(s, g.graph) + (dom ? " dominates" : " does not dominate") +
                                                   ", size " + std::to_string(s.size()) + ", gamma " + std::to_string(gam)};
            }};
}

ContractClause no_critical_edge_clause() {
    std::string text = "no gamma-critical edge";
    return {text, [=](const Gadget& g) {
                for (const auto& e : g.graph.edges())
                    if (is_gamma_critical_edge(g.graph, e))
                        return expect_true(text, false, "edge " + join({e.u, e.v}, g.graph) + " is critical");
                return expect_true(text, true);
            }};
}

ContractClause anticore_equals_ports_clause(std::vector<std::string> roles) {
    std::string text = "gamma-anticore equals";
    for (const auto& r : roles) text += " " + r;
    return {text, [=](const Gadget& g) {
                auto rep = cores(g.graph, Objective::Gamma);
                auto want = ports_of(g, roles);
                std::sort(want.begin(), want.end());
                return ClauseOutcome{text, rep.anticore == want, "anticore " + join(rep.anticore, g.graph)};
            }};
}

GadgetContract crossing_contract() {
    GadgetContract c;
    c.name = "crossing";
    c.roles = {"v1", "v1'", "v2", "v2'"};
    c.max_degree = 0;
    c.clauses.push_back(connected_clause());
    c.clauses.push_back(common_face_clause({"v1", "v2", "v1'", "v2'"}));
    static const int table[3][3] = {{13, 13, 14}, {14, 13, 14}, {15, 14, 15}};  // [i][j]
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j) {
            std::string text = "c[" + std::to_string(i) + "," + std::to_string(j) + "] = " + std::to_string(table[i][j]);
            c.clauses.push_back({text, [=](const Gadget& g) {
                                     VertexId p[4] = {g.port("v1"), g.port("v1'"), g.port("v2"), g.port("v2'")};
                                     int best = -1;
                                     for (int mask = 0; mask < 16; ++mask) {
                                         int ci = (mask & 1) + ((mask >> 1) & 1);
                                         int cj = ((mask >> 2) & 1) + ((mask >> 3) & 1);
                                         if (ci != i || cj != j) continue;
                                         std::vector<VertexId> in, out;
                                         for (int k = 0; k < 4; ++k) ((mask >> k) & 1 ? in : out).push_back(p[k]);
                                         int v = conditional_tau(g.graph, in, out);
                                         if (v >= 0 && (best < 0 || v < best)) best = v;
                                     }
                                     return expect_value(text, best, table[i][j]);
                                 }});
        }
    c.clauses.push_back({"tau = 13", [](const Gadget& g) { return expect_value("tau = 13", tau_number(g.graph), 13); }});
    c.clauses.push_back({"every one-corner-per-pair pattern has a cover of size 13", [](const Gadget& g) {
                             const std::string text = "every one-corner-per-pair pattern has a cover of size 13";
                             VertexId a[2] = {g.port("v1"), g.port("v1'")};
                             VertexId b[2] = {g.port("v2"), g.port("v2'")};
                             for (int s = 0; s < 2; ++s)
                                 for (int t = 0; t < 2; ++t) {
                                     int v = conditional_tau(g.graph, {a[s], b[t]}, {a[1 - s], b[1 - t]});
                                     if (v != 13)
                                         return expect_true(text, false, "pattern " + std::to_string(s) + std::to_string(t) +
                                                                             " needs " + std::to_string(v));
                                 }
                             return expect_true(text, true);
                         }});
    return c;
}

GadgetContract h_uv_contract() {
    GadgetContract c;
    c.name = "h_uv";
    c.roles = {"h_u", "h_v"};
    c.clauses.push_back(connected_clause());
    c.clauses.push_back(port_degree_clause({"h_u", "h_v"}, 1, 2));
    c.clauses.push_back(common_face_clause({"h_u", "h_v"}));
    c.clauses.push_back(conditional_gamma_clause({}, {}, 3, true));
    c.clauses.push_back(conditional_gamma_clause({"h_u"}, {}, 2));
    c.clauses.push_back(conditional_gamma_clause({"h_v"}, {}, 2));
    c.clauses.push_back(conditional_gamma_clause({"h_u", "h_v"}, {}, 2));
    c.clauses.push_back(conditional_gamma_clause({"h_u"}, {"h_v"}, 2));
    c.clauses.push_back(conditional_gamma_clause({"h_v"}, {"h_u"}, 2));
    return c;
}

GadgetContract h_v_contract() {
    GadgetContract c;
    c.name = "h_v";
    c.roles = {"u1", "u2", "u3"};
    std::vector<std::string> roles = c.roles;
    c.clauses.push_back(connected_clause());
    c.clauses.push_back(port_degree_clause(roles, 1, 2));
    c.clauses.push_back(common_face_clause(roles));
    c.clauses.push_back({"claw-free", [](const Gadget& g) {
                             return expect_true("claw-free", claw_centers(g.graph).empty());
                         }});
    c.clauses.push_back(gamma_clause(3));
    c.clauses.push_back({"the ports form a gamma-set", [roles](const Gadget& g) {
                             auto s = ports_of(g, roles);
                             std::sort(s.begin(), s.end());
                             return expect_true("the ports form a gamma-set",
                                                is_dominating(g.graph, s) && gamma_number(g.graph) == 3);
                         }});
    for (const auto& r : roles) {
        std::string text = "deleting " + r + " leaves a unique gamma-set of size 2";
        c.clauses.push_back({text, [r, text](const Gadget& g) {
                                 std::vector<VertexId> keep;
                                 for (VertexId v = 0; v < g.graph.n(); ++v)
                                     if (v != g.port(r)) keep.push_back(v);
                                 auto fam = enumerate_optimal(induced_subgraph(g.graph, keep), Objective::Gamma);
                                 bool ok = fam.value == 2 && fam.sets.size() == 1;
                                 return ClauseOutcome{text, ok,
                                                      "gamma " + std::to_string(fam.value) + ", " +
                                                          std::to_string(fam.sets.size()) + " gamma-sets"};
                             }});
    }
    for (int mask = 1; mask < 8; ++mask) {
        std::vector<std::string> ext;
        for (int k = 0; k < 3; ++k)
            if ((mask >> k) & 1) ext.push_back(roles[k]);
        c.clauses.push_back(conditional_gamma_clause(ext, {}, 2));
    }
    c.clauses.push_back({"no two-vertex internal set containing a port works", [roles](const Gadget& g) {
                             const std::string text = "no two-vertex internal set containing a port works";
                             auto p = ports_of(g, roles);
                             for (int mask = 0; mask < 8; ++mask) {
                                 std::vector<VertexId> ext;
                                 for (int k = 0; k < 3; ++k)
                                     if ((mask >> k) & 1) ext.push_back(p[k]);
                                 for (VertexId f : p)
                                     if (conditional_gamma(g.graph, ext, {f}) <= 2) return expect_true(text, false);
                             }
                             return expect_true(text, true);
                         }});
    return c;
}

GadgetContract h1_contract() {
    GadgetContract c;
    c.name = "h1";
    c.roles = {"u1", "u2"};
    c.clauses.push_back(connected_clause());
    c.clauses.push_back(port_degree_clause({"u1", "u2"}, 2, 2));
    c.clauses.push_back(interior_degree_clause(3, 3));
    c.clauses.push_back(common_face_clause({"u1", "u2"}));
    c.clauses.push_back(gamma_clause(2));
    c.clauses.push_back(deleted_gamma_clause({"u1", "u2"}, 2));
    c.clauses.push_back(anticore_member_clause({"u1", "u2"}));
    c.clauses.push_back(deleted_bondage_clause({"u1", "u2"}, 2));
    return c;
}

GadgetContract h2_contract() {
    GadgetContract c;
    c.name = "h2";
    c.roles = {"u"};
    c.clauses.push_back(connected_clause());
    c.clauses.push_back(port_degree_clause({"u"}, 2, 2));
    c.clauses.push_back(interior_degree_clause(3, 3));
    c.clauses.push_back(common_face_clause({"u"}));
    c.clauses.push_back(gamma_clause(2));
    c.clauses.push_back(deleted_gamma_clause({"u"}, 2));
    c.clauses.push_back(anticore_member_clause({"u"}));
    c.clauses.push_back(deleted_bondage_clause({}, 2));
    return c;
}

GadgetContract h_e_contract() {
    GadgetContract c;
    c.name = "h_e";
    c.roles = {"x", "y"};
    c.clauses.push_back(connected_clause());
    c.clauses.push_back(port_degree_clause({"x", "y"}, 1, 2));
    c.clauses.push_back(interior_degree_clause(2, 3));
    c.clauses.push_back(common_face_clause({"x", "y"}));
    c.clauses.push_back({"x and y are not adjacent", [](const Gadget& g) {
                             return expect_true("x and y are not adjacent", !g.graph.has_edge(g.port("x"), g.port("y")));
                         }});
    c.clauses.push_back(gamma_clause(8));
    c.clauses.push_back(deleted_gamma_clause({"x"}, 8));
    c.clauses.push_back(deleted_gamma_clause({"y"}, 8));
    c.clauses.push_back(deleted_gamma_clause({"x", "y"}, 8));
    c.clauses.push_back(anticore_equals_ports_clause({"x", "y"}));
    c.clauses.push_back(no_critical_edge_clause());
    const std::vector<std::pair<std::string, std::vector<std::string>>> exhibits = {
        {"A", {"a1", "a3", "b1", "b4", "d2", "e2", "f2", "g2"}},
        {"B", {"a1", "a3", "b1", "b4", "d3", "e3", "f3", "g3"}},
        {"C", {"a1", "a3", "b2", "c3", "d3", "e1", "f1", "g2"}},
        {"D", {"a2", "b1", "b4", "c1", "d4", "e3", "f2", "g4"}},
        {"E", {"a1", "a3", "b3", "c4", "d3", "e2", "f4", "g1"}},
        {"F", {"a1", "b2", "b4", "c2", "d1", "e4", "f3", "g4"}},
    };
    for (const auto& [name, labels] : exhibits) c.clauses.push_back(gamma_set_clause(name, labels));
    c.clauses.push_back({"covered exhibit dominates everything but x", [](const Gadget& g) {
                             const std::string text = "covered exhibit dominates everything but x";
                             std::vector<VertexId> s;
                             for (const char* l : {"a1", "b2", "c3", "d2", "e1", "f1", "g2"}) s.push_back(g.vertex(l));
                             s.push_back(g.port("y"));
                             VertexSet dom(g.graph.n());
                             for (VertexId v : s) dom |= g.graph.closed_neighborhood(v);
                             VertexId x = g.port("x");
                             bool ok = !dom.contains(x) && dom.count() == g.graph.n() - 1;
                             return expect_true(text, ok);
                         }});
    // the symmetric case of the covered construction: x takes the role of y
    c.clauses.push_back({"some 8-set containing x dominates everything but y", [](const Gadget& g) {
                             int v = conditional_gamma(g.graph, {g.port("y")}, {g.port("x")});
                             ClauseOutcome o{"some 8-set containing x dominates everything but y", v == 8,
                                             "smallest such set has size " + std::to_string(v)};
                             return o;
                         }});
    return c;
}

GadgetContract leaf_contract() {
    GadgetContract c;
    c.name = "leaf";
    c.roles = {"p"};
    c.clauses.push_back(connected_clause());
    c.clauses.push_back(port_degree_clause({"p"}, 1, 1));
    c.clauses.push_back(gamma_clause(1));
    return c;
}

const std::vector<GadgetContract>& all_contracts() {
    static const std::vector<GadgetContract> table = {crossing_contract(), h_uv_contract(), h_v_contract(),
                                                      h1_contract(),       h2_contract(),   h_e_contract(),
                                                      leaf_contract()};
    return table;
}

}  // namespace

const GadgetContract& contract_by_name(const std::string& name) {
    for (const auto& c : all_contracts())
        if (c.name == name) return c;
    throw InputError("unknown contract '" + name + "'");
}

std::vector<std::string> contract_names() {
    std::vector<std::string> out;
    for (const auto& c : all_contracts()) out.push_back(c.name);
    return out;
}

std::vector<std::string> registry_names() {
    std::vector<std::string> out;
    for (const auto& [name, text] : detail::embedded_gadgets()) out.emplace_back(name);
    return out;
}

Gadget gadget_from_text(const std::string& text, const std::string& name) {
    GraphDocument doc = parse_graph(text);
    if (doc.format != GraphFormat::Gadget) throw InputError("'" + name + "' is not a gadget file (no contract line)");
    Gadget g;
    g.name = name;
    g.graph = std::move(doc.graph);
    g.contract = *doc.contract;
    for (auto& [role, v] : doc.ports) g.ports[role] = v;
    return g;
}

Gadget load_gadget(const std::string& name) {
    for (const auto& [n, text] : detail::embedded_gadgets())
        if (n == name) return gadget_from_text(std::string(text), name);
    throw InputError("unknown gadget '" + name + "'");
}

namespace {

std::vector<ClauseOutcome> structural_outcomes(const Gadget& g, const GadgetContract& c) {
    std::vector<ClauseOutcome> out;
    std::string missing;
    std::set<VertexId> used;
    bool distinct = true;
    for (const auto& r : c.roles) {
        auto it = g.ports.find(r);
        if (it == g.ports.end()) {
            missing += " " + r;
            continue;
        }
        if (!g.graph.valid(it->second) || !used.insert(it->second).second) distinct = false;
    }
    out.push_back({"port roles present and distinct", missing.empty() && distinct,
                   missing.empty() ? (distinct ? "holds" : "two roles share a vertex") : "missing" + missing});
    if (c.max_degree > 0)
        out.push_back({"maximum degree <= " + std::to_string(c.max_degree), g.graph.max_degree() <= c.max_degree,
                       "maximum degree " + std::to_string(g.graph.max_degree())});
    return out;
}

}  // namespace

GadgetReport verify_gadget(const Gadget& g, int threads) {
    const GadgetContract& c = contract_by_name(g.contract);
    GadgetReport report;
    report.gadget = g.name;
    report.contract = c.name;
    report.clauses = structural_outcomes(g, c);
    if (!report.clauses.front().pass) return report;  // later clauses need the ports

    std::vector<ClauseOutcome> results(c.clauses.size());
    auto run = [&](std::size_t i) {
        try {
            results[i] = c.clauses[i].check(g);
        } catch (const std::exception& e) {
            results[i] = {c.clauses[i].text, false, e.what()};
        }
    };
    if (threads <= 1) {
        for (std::size_t i = 0; i < c.clauses.size(); ++i) run(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < c.clauses.size(); i = next++) run(i);
            });
        for (auto& th : pool) th.join();
    }
    report.clauses.insert(report.clauses.end(), results.begin(), results.end());
    return report;
}

std::string canonical_code(const Graph& g, int fixed) {
    const int n = g.n();
    // Colour refinement seeded with (pinned index, degree).
    std::vector<long long> color(n);
    for (VertexId v = 0; v < n; ++v) color[v] = v < fixed ? v : fixed + g.degree(v);
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<long long, std::vector<long long>>> sig(n);
        for (VertexId v = 0; v < n; ++v) {
            sig[v].first = color[v];
            for (VertexId w : g.neighbors(v)) sig[v].second.push_back(color[w]);
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<long long> next(n);
        for (VertexId v = 0; v < n; ++v)
            next[v] = std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin();
        bool same = std::set<long long>(next.begin(), next.end()).size() ==
                    std::set<long long>(color.begin(), color.end()).size();
        color = next;
        if (same) break;
    }
    // Cells in colour order; try every ordering inside each cell.
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return color[a] < color[b]; });
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && color[order[j]] == color[order[i]]) ++j;
        cells.emplace_back(i, j);
        i = j;
    }
    auto code_of = [&](const std::vector<VertexId>& ord) {
        std::string s(static_cast<std::size_t>(n) * (n - 1) / 2, '0');
        std::size_t k = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) s[k++] = g.has_edge(ord[i], ord[j]) ? '1' : '0';
        return s;
    };
    std::string best;
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == cells.size()) {
            std::string s = code_of(order);
            if (s > best) best = s;
            return;
        }
        auto [lo, hi] = cells[c];
        std::sort(order.begin() + lo, order.begin() + hi);
        do {
            rec(c + 1);
        } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
    };
    rec(0);
    std::ostringstream out;
    out << n << ':';
    for (VertexId v = 0; v < fixed; ++v) out << color[v] << ',';
    out << best;
    return out.str();
}

std::vector<Gadget> gadget_search(const GadgetContract& contract, int max_n, const SearchFilters& filters) {
    const int ports = static_cast<int>(contract.roles.size());
    std::vector<Gadget> found;
    std::set<std::string> seen;
    for (int n = std::max(filters.min_n, std::max(ports, 1)); n <= max_n; ++n) {
        const int cap = contract.max_degree > 0 ? contract.max_degree : n - 1;
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        Graph g(n);
        std::vector<std::pair<std::string, Gadget>> level;
        Gadget probe;
        probe.contract = contract.name;
        for (int k = 0; k < ports; ++k) probe.ports[contract.roles[k]] = k;

        auto accept = [&]() {
            if (filters.connected && !is_connected(g)) return;
            if (filters.planar && !is_planar(g)) return;
            probe.graph = g;
            for (const auto& clause : contract.clauses)
                if (!clause.check(probe).pass) return;
            std::string code = canonical_code(g, ports);
            if (!seen.insert(code).second) return;
            level.emplace_back(code, probe);
        };
        std::function<void(std::size_t)> rec = [&](std::size_t k) {
            if (filters.limit && found.size() + level.size() >= filters.limit) return;
            if (k == pairs.size()) {
                accept();
                return;
            }
            auto [i, j] = pairs[k];
            rec(k + 1);
            if (g.degree(i) < cap && g.degree(j) < cap) {
                g.add_edge(i, j);
                rec(k + 1);
                g.remove_edge(i, j);
            }
        };
        rec(0);
        std::sort(level.begin(), level.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 0; i < level.size(); ++i) {
            level[i].second.name = contract.name + "-" + std::to_string(n) + "-" + std::to_string(i + 1);
            found.push_back(std::move(level[i].second));
        }
    }
    return found;
}

}  // namespace bondage
