#include "bondage/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "bondage/error.hpp"

namespace bondage {

Graph::Graph(int n) : adj_(n), labels_(n) {}

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw InputError("negative vertex count");
    Graph g(n);
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw InputError("vertex id out of range in edge (" + std::to_string(a) + ", " +
                             std::to_string(b) + ")");
        if (a == b) throw InputError("self-loop at vertex " + std::to_string(a));
        if (!g.has_edge(a, b)) g.add_edge(a, b);
    }
    return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    if (!valid(u) || !valid(v)) return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    VertexId other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), other);
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

int Graph::min_degree() const {
    if (adj_.empty()) return 0;
    int d = std::numeric_limits<int>::max();
    for (const auto& a : adj_) d = std::min(d, static_cast<int>(a.size()));
    return d;
}

std::vector<EdgeRef> Graph::edges() const {
    std::vector<EdgeRef> out;
    out.reserve(m_);
    for (VertexId u = 0; u < n(); ++u)
        for (VertexId v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexId Graph::add_vertex(std::string label) {
    adj_.emplace_back();
    labels_.push_back(std::move(label));
    return n() - 1;
}

void Graph::add_edge(VertexId u, VertexId v) {
    if (!valid(u) || !valid(v))
        throw InputError("vertex id out of range in edge (" + std::to_string(u) + ", " +
                         std::to_string(v) + ")");
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v))
        throw InputError("parallel edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++m_;
}

void Graph::remove_edge(VertexId u, VertexId v) {
    if (!has_edge(u, v))
        throw InputError("missing edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    adj_[u].erase(std::lower_bound(adj_[u].begin(), adj_[u].end(), v));
    adj_[v].erase(std::lower_bound(adj_[v].begin(), adj_[v].end(), u));
    --m_;
}

VertexSet Graph::closed_neighborhood(VertexId v) const {
    VertexSet s = open_neighborhood(v);
    s.insert(v);
    return s;
}

VertexSet Graph::open_neighborhood(VertexId v) const {
    VertexSet s(n());
    for (VertexId w : adj_[v]) s.insert(w);
    return s;
}

Graph delete_edges(const Graph& g, const std::vector<EdgeRef>& edges) {
    Graph out = g;
    for (const auto& e : edges) out.remove_edge(e.u, e.v);
    return out;
}

Graph isolate_vertex(const Graph& g, VertexId v) {
    Graph out = g;
    auto nbrs = g.neighbors(v);
    for (VertexId w : nbrs) out.remove_edge(v, w);
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& keep) {
    std::vector<VertexId> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> index(g.n(), -1);
    Graph out(static_cast<int>(sorted.size()));
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        index[sorted[i]] = static_cast<int>(i);
        out.set_label(static_cast<int>(i), g.label(sorted[i]));
    }
    for (const auto& e : g.edges())
        if (index[e.u] >= 0 && index[e.v] >= 0) out.add_edge(index[e.u], index[e.v]);
    return out;
}

Graph attach_leaves(const Graph& g, const std::vector<VertexId>& parents) {
    Graph out = g;
    for (VertexId p : parents) {
        if (!g.valid(p)) throw InputError("leaf parent out of range: " + std::to_string(p));
        VertexId leaf = out.add_vertex("leaf:" + std::to_string(p));
        out.add_edge(p, leaf);
    }
    return out;
}

std::vector<int> bfs_distances(const Graph& g, VertexId source) {
    std::vector<int> dist(g.n(), kUnreachable);
    std::deque<VertexId> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop_front();
        for (VertexId y : g.neighbors(x))
            if (dist[y] == kUnreachable) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
    }
    return dist;
}

int distance(const Graph& g, VertexId u, VertexId v) {
    if (!g.valid(u) || !g.valid(v)) throw InputError("vertex id out of range");
    return bfs_distances(g, u)[v];
}

std::optional<int> girth(const Graph& g) {
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(g.n());
    std::vector<int> parent(g.n());
    for (VertexId root = 0; root < g.n(); ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<VertexId> queue{root};
        dist[root] = 0;
        parent[root] = -1;
        while (!queue.empty()) {
            VertexId x = queue.front();
            queue.pop_front();
            if (2 * dist[x] + 1 >= best) break;
            for (VertexId y : g.neighbors(x)) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if (y != parent[x]) {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

BipartiteResult is_bipartite(const Graph& g) {
    BipartiteResult r;
    std::vector<int> color(g.n(), -1);
    std::vector<int> parent(g.n(), -1);
    std::vector<int> depth(g.n(), 0);
    for (VertexId s = 0; s < g.n(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::deque<VertexId> queue{s};
        while (!queue.empty()) {
            VertexId x = queue.front();
            queue.pop_front();
            for (VertexId y : g.neighbors(x)) {
                if (color[y] < 0) {
                    color[y] = 1 - color[x];
                    parent[y] = x;
                    depth[y] = depth[x] + 1;
                    queue.push_back(y);
                } else if (color[y] == color[x]) {
                    // Both endpoints sit at equal BFS depth; climb to the
                    // common ancestor to close an odd cycle.
                    std::vector<VertexId> left{x}, right{y};
                    VertexId a = x, b = y;
                    while (a != b) {
                        a = parent[a];
                        b = parent[b];
                        left.push_back(a);
                        right.push_back(b);
                    }
                    right.pop_back();
                    std::reverse(right.begin(), right.end());
                    r.bipartite = false;
                    r.odd_cycle = left;
                    r.odd_cycle.insert(r.odd_cycle.end(), right.begin(), right.end());
                    return r;
                }
            }
        }
    }
    r.bipartite = true;
    r.coloring = std::move(color);
    return r;
}

bool is_planar(const Graph& g) {
    if (g.n() < 5 || g.m() < 9) return true;
    if (g.m() > 3 * g.n() - 6) return false;
    using BoostGraph =
        boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                              boost::property<boost::vertex_index_t, int>,
                              boost::property<boost::edge_index_t, int>>;
    BoostGraph bg(g.n());
    for (const auto& e : g.edges()) boost::add_edge(e.u, e.v, bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
    std::vector<std::vector<VertexId>> out;
    std::vector<bool> seen(g.n(), false);
    for (VertexId s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        std::vector<VertexId> comp{s};
        seen[s] = true;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (VertexId y : g.neighbors(comp[i]))
                if (!seen[y]) {
                    seen[y] = true;
                    comp.push_back(y);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::vector<VertexId> claw_centers(const Graph& g) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.n(); ++v) {
        const auto& nb = g.neighbors(v);
        bool found = false;
        for (std::size_t i = 0; i < nb.size() && !found; ++i)
            for (std::size_t j = i + 1; j < nb.size() && !found; ++j)
                for (std::size_t k = j + 1; k < nb.size() && !found; ++k)
                    found = !g.has_edge(nb[i], nb[j]) && !g.has_edge(nb[i], nb[k]) &&
                            !g.has_edge(nb[j], nb[k]);
        if (found) out.push_back(v);
    }
    return out;
}

int append_disjoint(Graph& host, const Graph& part, const std::string& label_prefix) {
    int offset = host.n();
    for (VertexId v = 0; v < part.n(); ++v) host.add_vertex(label_prefix + part.label(v));
    for (const auto& e : part.edges()) host.add_edge(offset + e.u, offset + e.v);
    return offset;
}

}  // namespace bondage
