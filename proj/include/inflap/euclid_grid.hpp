#pragma once

#include <array>
#include <variant>
#include <vector>

#include "inflap/metric_graph.hpp"

namespace inflap {

using Point2 = std::array<double, 2>;

struct Disk {
  Point2 center{0.0, 0.0};
  double radius = 1.0;
};

/// Simple polygon (either orientation) with optional polygonal holes.
struct Polygon {
  std::vector<Point2> outer;
  std::vector<std::vector<Point2>> holes;
};

using Domain = std::variant<Disk, Polygon>;

/// Closed domain membership (points on the boundary count as inside).
bool contains(const Domain& domain, const Point2& p);

/// Whether the closed segment [p, q] lies in the closed domain.
bool segment_inside(const Domain& domain, const Point2& p, const Point2& q);

double area(const Domain& domain);

struct GridOptions {
  /// A node is a boundary node when one of the lattice neighbours within
  /// this Chebyshev radius is missing or not visible through the domain.
  int boundary_radius = 1;
};

struct GridGraph {
  GraphPtr<double> graph;
  /// Planar position of every vertex, indexed by VertexId.
  std::vector<Point2> coords;
  double h = 0.0;
  int stencil = 1;
};

/// Lattice points (i h, j h) inside the domain, joined along every
/// primitive offset (a, b) with max(|a|, |b|) <= k whose segment stays in
/// the domain; the edge length is the Euclidean offset length. Edges
/// between two boundary nodes are dropped, as are boundary nodes left
/// without edges. Throws std::invalid_argument for h <= 0, k < 1, zero
/// area, no interior node, or a disconnected interior.
GridGraph build_grid_graph(const Domain& domain, double h, int k, const GridOptions& options = {});

}  // namespace inflap
