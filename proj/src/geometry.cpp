#include "bondage/geometry.hpp"

#include <algorithm>
#include <set>

#include "bondage/error.hpp"

namespace bondage {
namespace {

Rational orient(const Point& a, const Point& b, const Point& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

bool on_segment(const Point& a, const Point& b, const Point& p) {
    if (orient(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

std::string edge_name(const EdgeRef& e) {
    return "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")";
}

void check_drawing(const Graph& g, const Drawing& d) {
    if (static_cast<int>(d.points.size()) != g.n())
        throw InputError("drawing has " + std::to_string(d.points.size()) + " points for " +
                         std::to_string(g.n()) + " vertices");
    std::set<std::pair<Rational, Rational>> seen;
    for (VertexId v = 0; v < g.n(); ++v)
        if (!seen.emplace(d.points[v].x, d.points[v].y).second)
            throw InputError("drawing places two vertices at the same point (vertex " +
                             std::to_string(v) + ")");
}

// Upper half-plane (including the positive x axis) comes first.
int half(const Rational& dx, const Rational& dy) { return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1; }

}  // namespace

CrossingReport segment_crossings(const Graph& g, const Drawing& d) {
    check_drawing(g, d);
    const auto edges = g.edges();
    const auto& P = d.points;

    for (const auto& e : edges)
        for (VertexId w = 0; w < g.n(); ++w)
            if (w != e.u && w != e.v && on_segment(P[e.u], P[e.v], P[w]))
                throw InputError("general position violated: vertex " + std::to_string(w) +
                                 " lies on edge " + edge_name(e));

    CrossingReport report;
    std::vector<Rational> param_first, param_second;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& a = edges[i];
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto& b = edges[j];
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
            Rational o1 = orient(P[b.u], P[b.v], P[a.u]);
            Rational o2 = orient(P[b.u], P[b.v], P[a.v]);
            Rational o3 = orient(P[a.u], P[a.v], P[b.u]);
            Rational o4 = orient(P[a.u], P[a.v], P[b.v]);
            if (sign(o1) * sign(o2) >= 0 || sign(o3) * sign(o4) >= 0) continue;
            Rational t = o1 / (o1 - o2);
            Rational s = o3 / (o3 - o4);
            Point at{P[a.u].x + t * (P[a.v].x - P[a.u].x), P[a.u].y + t * (P[a.v].y - P[a.u].y)};
            report.crossings.push_back({a, b, at});
            param_first.push_back(t);
            param_second.push_back(s);
        }
    }

    std::set<std::pair<Rational, Rational>> points;
    for (const auto& c : report.crossings)
        if (!points.emplace(c.at.x, c.at.y).second)
            throw InputError("general position violated: three or more edges meet at one crossing "
                             "(edges " + edge_name(c.first) + " and " + edge_name(c.second) + ")");

    std::map<EdgeRef, std::vector<std::pair<Rational, int>>> staged;
    for (std::size_t k = 0; k < report.crossings.size(); ++k) {
        staged[report.crossings[k].first].emplace_back(param_first[k], static_cast<int>(k));
        staged[report.crossings[k].second].emplace_back(param_second[k], static_cast<int>(k));
    }
    for (auto& [edge, list] : staged) {
        std::sort(list.begin(), list.end());
        auto& out = report.along_edge[edge];
        for (const auto& item : list) out.push_back(item.second);
    }
    return report;
}

RotationSystem rotation_from_drawing(const Graph& g, const Drawing& d) {
    check_drawing(g, d);
    RotationSystem r;
    r.order.resize(g.n());
    for (VertexId v = 0; v < g.n(); ++v) {
        auto nbrs = g.neighbors(v);
        const Point& c = d.points[v];
        std::sort(nbrs.begin(), nbrs.end(), [&](VertexId a, VertexId b) {
            Rational ax = d.points[a].x - c.x, ay = d.points[a].y - c.y;
            Rational bx = d.points[b].x - c.x, by = d.points[b].y - c.y;
            int ha = half(ax, ay), hb = half(bx, by);
            if (ha != hb) return ha < hb;
            Rational cr = ax * by - ay * bx;
            if (cr != 0) return cr > 0;
            return a < b;
        });
        r.order[v] = std::move(nbrs);
    }
    return r;
}

bool rotation_matches(const Graph& g, const RotationSystem& r) {
    if (static_cast<int>(r.order.size()) != g.n()) return false;
    for (VertexId v = 0; v < g.n(); ++v) {
        auto sorted = r.order[v];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != g.neighbors(v)) return false;
    }
    return true;
}

int rotation_face_count(const Graph& g, const RotationSystem& r) {
    // Dart (u -> v) is followed by (v -> w), w the successor of u around v.
    std::map<std::pair<VertexId, VertexId>, bool> used;
    auto successor = [&](VertexId v, VertexId u) {
        const auto& ord = r.order[v];
        auto it = std::find(ord.begin(), ord.end(), u);
        ++it;
        return it == ord.end() ? ord.front() : *it;
    };
    int faces = 0;
    for (VertexId u = 0; u < g.n(); ++u)
        for (VertexId v : g.neighbors(u)) {
            if (used[{u, v}]) continue;
            ++faces;
            VertexId a = u, b = v;
            while (!used[{a, b}]) {
                used[{a, b}] = true;
                VertexId c = successor(b, a);
                a = b;
                b = c;
            }
        }
    return faces;
}

}  // namespace bondage
