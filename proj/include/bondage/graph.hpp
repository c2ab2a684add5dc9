#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bondage/vertex_set.hpp"

namespace bondage {

using VertexId = int;

/// Undirected edge handle, normalized so that u < v.
struct EdgeRef {
    VertexId u = 0;
    VertexId v = 0;

    EdgeRef() = default;
    EdgeRef(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

/// Colexicographic comparison: larger endpoint first, then smaller.
inline bool colex_less(const EdgeRef& a, const EdgeRef& b) {
    return a.v != b.v ? a.v < b.v : a.u < b.u;
}

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are kept sorted ascending. Vertices are never
/// renumbered by edge edits; constructions append new vertices. Every
/// vertex carries an optional provenance label.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    /// Build from a list of pairs. Duplicate pairs collapse silently;
    /// out-of-range ids and self-loops throw InputError.
    static Graph build(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const { return m_; }

    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
    int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(VertexId u, VertexId v) const;
    bool has_edge(const EdgeRef& e) const { return has_edge(e.u, e.v); }
    bool valid(VertexId v) const { return v >= 0 && v < n(); }

    int max_degree() const;
    int min_degree() const;

    /// All edges, lexicographically ordered by (u, v).
    std::vector<EdgeRef> edges() const;

    const std::string& label(VertexId v) const { return labels_[v]; }
    void set_label(VertexId v, std::string label) { labels_[v] = std::move(label); }

    VertexId add_vertex(std::string label = {});
    /// Strict insertion: rejects self-loops, bad ids and parallel edges.
    void add_edge(VertexId u, VertexId v);
    /// Throws InputError if the edge is absent.
    void remove_edge(VertexId u, VertexId v);

    VertexSet closed_neighborhood(VertexId v) const;
    VertexSet open_neighborhood(VertexId v) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    std::vector<std::vector<VertexId>> adj_;
    std::vector<std::string> labels_;
    int m_ = 0;
};

inline constexpr int kUnreachable = -1;

/// G - E'. Throws InputError if some edge is missing.
Graph delete_edges(const Graph& g, const std::vector<EdgeRef>& edges);
/// G - v keeping ids: v becomes isolated. Used by oracle procedures that
/// need stable indices.
Graph isolate_vertex(const Graph& g, VertexId v);
/// Induced subgraph on the kept vertices, renumbered in ascending order.
Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& keep);
/// G_A+: one new pendant vertex per element of A (in the given order).
Graph attach_leaves(const Graph& g, const std::vector<VertexId>& parents);

/// Breadth-first distance; kUnreachable when no path exists.
int distance(const Graph& g, VertexId u, VertexId v);
/// All distances from a source.
std::vector<int> bfs_distances(const Graph& g, VertexId source);

/// Length of a shortest cycle, nullopt for forests.
std::optional<int> girth(const Graph& g);

struct BipartiteResult {
    bool bipartite = false;
    std::vector<int> coloring;       // 0/1 per vertex when bipartite
    std::vector<VertexId> odd_cycle; // closed walk order, first != last
};
BipartiteResult is_bipartite(const Graph& g);

bool is_planar(const Graph& g);

std::vector<std::vector<VertexId>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Vertices that are the center of an induced claw K_{1,3}, ascending.
std::vector<VertexId> claw_centers(const Graph& g);

/// Relabel-free structural copy of `part` appended to `host`; returns the
/// id offset of the first appended vertex. Labels are prefixed.
int append_disjoint(Graph& host, const Graph& part, const std::string& label_prefix);

}  // namespace bondage
