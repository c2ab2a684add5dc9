#pragma once

#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bondage/graph.hpp"

namespace bondage {

using Rational = boost::multiprecision::cpp_rational;

struct Point {
    Rational x;
    Rational y;
    friend bool operator==(const Point&, const Point&) = default;
};

/// Straight-line drawing with exact rational coordinates, one per vertex.
struct Drawing {
    std::vector<Point> points;
};

/// Counterclockwise cyclic order of neighbors around each vertex.
struct RotationSystem {
    std::vector<std::vector<VertexId>> order;
};

struct Crossing {
    EdgeRef first;   // first < second
    EdgeRef second;
    Point at;
};

struct CrossingReport {
    std::vector<Crossing> crossings;  // ordered by (first, second)
    /// For each crossed edge: indices into `crossings`, ordered by distance
    /// from the edge's lower-indexed endpoint.
    std::map<EdgeRef, std::vector<int>> along_edge;
};

/// Throws InputError when the drawing has the wrong size, has coincident
/// vertices, or violates general position (a vertex on a foreign edge,
/// overlapping collinear edges, or three edges through one crossing).
CrossingReport segment_crossings(const Graph& g, const Drawing& d);

/// Rotation derived from counterclockwise angular order, starting at the
/// positive x direction.
RotationSystem rotation_from_drawing(const Graph& g, const Drawing& d);

/// True iff every vertex's cyclic order is a permutation of its neighbors.
bool rotation_matches(const Graph& g, const RotationSystem& r);

/// Number of faces traced by the rotation (Euler check: a connected graph's
/// rotation is planar iff n - m + faces == 2).
int rotation_face_count(const Graph& g, const RotationSystem& r);

}  // namespace bondage
