#pragma once

// Brute-force reference implementations. Everything here works on 64-bit
// masks and plain subset enumeration, sharing no code with the solvers.

#include <bit>
#include <cstdint>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bondage/graph.hpp"
#include "bondage/io.hpp"

namespace oracle {

using Mask = std::uint64_t;
using bondage::EdgeRef;
using bondage::Graph;

inline Mask bit(int v) { return Mask{1} << v; }

inline std::vector<Mask> closed_masks(const Graph& g) {
    if (g.n() > 64) throw std::logic_error("oracle limited to 64 vertices");
    std::vector<Mask> r(g.n());
    for (int v = 0; v < g.n(); ++v) {
        r[v] = bit(v);
        for (int u : g.neighbors(v)) r[v] |= bit(u);
    }
    return r;
}

inline Mask all(int n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }

inline std::vector<int> members(Mask m) {
    std::vector<int> r;
    for (; m; m &= m - 1) r.push_back(std::countr_zero(m));
    return r;
}

/// Calls f on every k-subset of {0..n-1} until f returns true.
inline bool any_subset(int n, int k, const std::function<bool(Mask)>& f) {
    if (k > n) return false;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        Mask m = 0;
        for (int i : idx) m |= bit(i);
        if (f(m)) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline Mask dominated_by(const std::vector<Mask>& nb, Mask s) {
    Mask d = 0;
    for (; s; s &= s - 1) d |= nb[std::countr_zero(s)];
    return d;
}

/// Smallest k such that some k-subset of V(g) dominates `target`; -1 if
/// none up to kmax.
inline int min_dominating(const Graph& g, Mask target, int kmax) {
    auto nb = closed_masks(g);
    for (int k = 0; k <= kmax; ++k)
        if (any_subset(g.n(), k, [&](Mask s) { return (dominated_by(nb, s) & target) == target; })) return k;
    return -1;
}

inline int gamma(const Graph& g) { return min_dominating(g, all(g.n()), g.n()); }

inline bool is_cover(const Graph& g, Mask s) {
    for (const auto& e : g.edges())
        if (!(s & (bit(e.u) | bit(e.v)))) return false;
    return true;
}

inline int tau(const Graph& g) {
    for (int k = 0; k <= g.n(); ++k)
        if (any_subset(g.n(), k, [&](Mask s) { return is_cover(g, s); })) return k;
    return -1;
}

inline bool is_independent(const Graph& g, Mask s) {
    for (const auto& e : g.edges())
        if ((s & bit(e.u)) && (s & bit(e.v))) return false;
    return true;
}

inline int alpha(const Graph& g) {
    for (int k = g.n(); k >= 0; --k)
        if (any_subset(g.n(), k, [&](Mask s) { return is_independent(g, s); })) return k;
    return 0;
}

/// Every optimal set for "gamma", "tau" or "alpha" (small n only).
inline std::vector<Mask> optimal_sets(const Graph& g, const std::string& what) {
    std::vector<Mask> r;
    auto nb = closed_masks(g);
    int target = what == "gamma" ? gamma(g) : what == "tau" ? tau(g) : alpha(g);
    any_subset(g.n(), target, [&](Mask s) {
        bool ok = what == "gamma" ? dominated_by(nb, s) == all(g.n())
                  : what == "tau" ? is_cover(g, s)
                                  : is_independent(g, s);
        if (ok) r.push_back(s);
        return false;
    });
    return r;
}

struct Cores {
    std::vector<int> core;
    std::vector<int> anticore;
};

inline Cores cores(const Graph& g, const std::string& what) {
    auto sets = optimal_sets(g, what);
    Mask in_all = all(g.n()), in_any = 0;
    for (Mask s : sets) {
        in_all &= s;
        in_any |= s;
    }
    return {members(in_all), members(all(g.n()) & ~in_any)};
}

/// Some minimum dominating set contains A.
inline bool gamma_set_containing(const Graph& g, const std::vector<int>& a) {
    Mask am = 0;
    for (int v : a) am |= bit(v);
    for (Mask s : optimal_sets(g, "gamma"))
        if ((s & am) == am) return true;
    return false;
}

inline Graph without(const Graph& g, const std::vector<EdgeRef>& es) {
    Graph h = g;
    for (const auto& e : es) h.remove_edge(e.u, e.v);
    return h;
}

/// b(G) if at most dmax, else -1. Edge subsets by increasing size.
inline int bondage(const Graph& g, int dmax) {
    const int base = gamma(g);
    auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    for (int k = 1; k <= dmax && k <= m; ++k) {
        bool hit = any_subset(m, k, [&](Mask s) {
            std::vector<EdgeRef> del;
            for (int i : members(s)) del.push_back(edges[i]);
            return gamma(without(g, del)) > base;
        });
        if (hit) return k;
    }
    return -1;
}

struct AtlasEntry {
    Graph graph;
    bool planar = false;
};

/// fixtures/atlas7.g6: every graph on 1..7 vertices up to isomorphism.
inline std::vector<AtlasEntry> load_atlas(const std::string& path, int max_n = 7) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::vector<AtlasEntry> r;
    std::string token;
    int flag = 0;
    while (f >> token >> flag) {
        Graph g = bondage::parse_graph6(token);
        if (g.n() <= max_n) r.push_back({std::move(g), flag != 0});
    }
    return r;
}

inline bool connected(const Graph& g) {
    if (g.n() == 0) return true;
    Mask seen = 1, frontier = 1;
    auto nb = closed_masks(g);
    while (frontier) {
        Mask next = dominated_by(nb, frontier) & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == all(g.n());
}

}  // namespace oracle
