#include "bondage/polyalgos.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bondage/error.hpp"
#include "bondage/exact.hpp"

namespace bondage {

namespace {

std::vector<EdgeRef> incident_edges(const Graph& g, VertexId v) {
    std::vector<EdgeRef> r;
    for (VertexId u : g.neighbors(v)) r.emplace_back(u, v);
    return r;
}

std::vector<EdgeRef> unique_sorted(std::vector<EdgeRef> e) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return e;
}

std::vector<EdgeRef> colex_edges(const Graph& g) {
    auto e = g.edges();
    std::sort(e.begin(), e.end(), colex_less);
    return e;
}

}  // namespace

CriticalTriple find_three_critical_edges_girth8(const Graph& g, bool pad_to_3, bool verify) {
    if (g.m() == 0) throw PreconditionError("graph has no edge");
    if (!is_planar(g)) throw PreconditionError("graph is not planar");
    auto gi = girth(g);
    if (gi && *gi < 8) throw PreconditionError("girth " + std::to_string(*gi) + " is below 8");

    CriticalTriple t;
    bool found = false;
    const auto edges = colex_edges(g);
    for (const auto& e : edges) {
        if (g.degree(e.u) + g.degree(e.v) <= 4) {
            t.case_tag = 1;
            t.u = e.u;
            t.v = e.v;
            auto a = incident_edges(g, e.u), b = incident_edges(g, e.v);
            a.insert(a.end(), b.begin(), b.end());
            t.edges = unique_sorted(a);
            found = true;
            break;
        }
    }
    for (VertexId p = 0; p < g.n() && !found; ++p) {
        for (VertexId q = p + 1; q < g.n() && !found; ++q) {
            if (g.has_edge(p, q) || g.degree(p) + g.degree(q) > 3) continue;
            VertexId w = -1;
            for (VertexId z : g.neighbors(p))
                if (g.has_edge(z, q)) {
                    w = z;
                    break;
                }
            if (w < 0) continue;
            VertexId v = g.degree(q) < g.degree(p) ? q : p;
            VertexId u = v == p ? q : p;
            t.case_tag = 2;
            t.u = u;
            t.v = v;
            t.w = w;
            auto a = incident_edges(g, u);
            a.emplace_back(v, w);
            t.edges = unique_sorted(a);
            found = true;
        }
    }
    if (!found) throw PreconditionError("no qualifying pair found");
    if (pad_to_3) {
        for (const auto& e : edges) {
            if (t.edges.size() >= 3) break;
            if (std::find(t.edges.begin(), t.edges.end(), e) == t.edges.end()) t.edges.push_back(e);
        }
        t.edges = unique_sorted(t.edges);
    }
    if (verify) {
        t.gamma_before = gamma_number(g);
        t.gamma_after = gamma_number(delete_edges(g, t.edges));
    }
    return t;
}

DominatorCollection dominator_collection(const Graph& g, const std::vector<EdgeRef>& deleted, int d) {
    if (static_cast<int>(deleted.size()) > d)
        throw PreconditionError("edge set has " + std::to_string(deleted.size()) + " edges, budget is " +
                                std::to_string(d));
    for (const auto& e : deleted)
        if (!g.valid(e.u) || !g.valid(e.v) || !g.has_edge(e)) throw InputError("deleted edge is not in the graph");
    DominatorCollection c;
    c.deleted = unique_sorted(deleted);
    std::set<VertexId> w;
    for (const auto& e : c.deleted) {
        w.insert(e.u);
        w.insert(e.v);
    }
    c.w.assign(w.begin(), w.end());
    std::set<VertexId> pool;
    for (VertexId v : c.w)
        for (VertexId u : g.closed_neighborhood(v).members()) pool.insert(u);
    std::vector<VertexId> cand(pool.begin(), pool.end());
    Graph h = delete_edges(g, c.deleted);
    auto dominates_w = [&](const std::vector<VertexId>& a) {
        for (VertexId x : c.w) {
            bool hit = false;
            for (VertexId s : a)
                if (s == x || h.has_edge(s, x)) {
                    hit = true;
                    break;
                }
            if (!hit) return false;
        }
        return true;
    };
    int kmax = std::min<int>(2 * d, static_cast<int>(cand.size()));
    for (int k = 0; k <= kmax; ++k) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            std::vector<VertexId> a;
            for (int i : idx) a.push_back(cand[i]);
            if (dominates_w(a)) c.family.push_back(a);
            // lexicographic successor
            int i = k - 1;
            while (i >= 0 && idx[i] == static_cast<int>(cand.size()) - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return c;
}

std::string to_string(PolyMode m) {
    switch (m) {
        case PolyMode::Closed: return "closed";
        case PolyMode::HFree: return "hfree";
        case PolyMode::BoundedGamma: return "bounded";
    }
    return "?";
}

PolyMode parse_poly_mode(const std::string& s) {
    if (s == "closed") return PolyMode::Closed;
    if (s == "hfree") return PolyMode::HFree;
    if (s == "bounded") return PolyMode::BoundedGamma;
    throw InputError("unknown mode '" + s + "' (expected closed, hfree or bounded)");
}

GammaOracle exact_gamma_oracle() {
    return [](const Graph& g) { return gamma_number(g); };
}

CriticalOracle exact_critical_oracle() {
    return [](const Graph& g, const EdgeRef& e) { return gamma_number(delete_edges(g, {e})) > gamma_number(g); };
}

CoreOracle exact_core_oracle() {
    return [](const Graph& g, VertexId v) { return alpha_core_delete_test(g, v); };
}

PolyBondageResult poly_bondage(const Graph& g, int d, PolyMode mode, const GammaOracle& oracle) {
    if (d < 1) throw InputError("d must be at least 1");
    if (g.m() == 0) throw PreconditionError("bondage number is undefined for an edgeless graph");
    PolyBondageResult r;
    const int base = oracle(g);
    ++r.oracle_calls;
    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    std::map<std::vector<VertexId>, int> leaf_cache;

    for (int k = 1; k <= std::min(d, m); ++k) {
        std::vector<int> comb(k);
        for (int i = 0; i < k; ++i) comb[i] = i;
        do {
            std::vector<EdgeRef> sub;
            for (int i : comb) sub.push_back(edges[i]);
            ++r.candidates;
            bool raised = true;
            if (mode == PolyMode::Closed) {
                raised = oracle(delete_edges(g, sub)) > base;
                ++r.oracle_calls;
            } else {
                auto coll = dominator_collection(g, sub, d);
                for (const auto& a : coll.family) {
                    auto it = leaf_cache.find(a);
                    if (it == leaf_cache.end()) {
                        it = leaf_cache.emplace(a, oracle(attach_leaves(g, a))).first;
                        ++r.oracle_calls;
                    }
                    // A extends to a gamma-set of G, which then dominates G - E'
                    if (it->second == base) {
                        raised = false;
                        break;
                    }
                }
            }
            if (raised) {
                r.yes = true;
                r.witness = sub;
                return r;
            }
        } while (next_colex_combination(comb, m));
    }
    return r;
}

OracleRecovery gamma_via_edge_deletion_oracle(const Graph& g, const CriticalOracle& oracle) {
    OracleRecovery r;
    Graph cur = g;
    while (cur.m() > 0) {
        EdgeRef e = colex_edges(cur).front();
        ++r.calls;
        if (oracle(cur, e)) ++r.hits;
        cur.remove_edge(e.u, e.v);
    }
    r.value = g.n() - r.hits;
    return r;
}

OracleRecovery alpha_via_core_oracle(const Graph& g, const CoreOracle& oracle) {
    OracleRecovery r;
    Graph cur = g;
    for (VertexId v = 0; v < g.n(); ++v) {
        ++r.calls;
        if (oracle(cur, v)) ++r.hits;
        // deleted vertices stay as isolated placeholders and are never queried again
        cur = isolate_vertex(cur, v);
    }
    r.value = r.hits;
    return r;
}

}  // namespace bondage
