#pragma once

#include <span>
#include <vector>

#include "inflap/metric_graph.hpp"
#include "inflap/pl_function.hpp"

namespace inflap {

/// Source for a multi-source shortest-path run: vertex v starts at `offset`.
template <class T>
struct Seed {
  VertexId vertex;
  T offset;
};

/// Dijkstra over vertices with edge weights `scale * length`. Throws
/// std::domain_error when some vertex is unreachable.
template <class T>
std::vector<T> vertex_potentials(const MetricGraph<T>& g, std::span<const Seed<T>> seeds,
                                 const T& scale = T(1));

/// Seeds that reproduce d(p, .) at the vertices.
template <class T>
std::vector<Seed<T>> seeds_for(const MetricGraph<T>& g, const GraphPoint<T>& p);

/// Intrinsic shortest-path distance. Throws InvalidPoint for points that are
/// not on g.
template <class T>
T point_distance(const MetricGraph<T>& g, const GraphPoint<T>& p, const GraphPoint<T>& q);

/// d(source, .) as an exact piecewise-linear function.
template <class T>
PLFunction<T> distance_field(const GraphPtr<T>& g, const GraphPoint<T>& source);

/// x -> min over seeds of (offset + scale * d(seed, x)), built edge by edge
/// from the vertex potentials.
template <class T>
PLFunction<T> potential_field(const GraphPtr<T>& g, std::span<const Seed<T>> seeds,
                              const T& scale = T(1));

/// x -> d(x, boundary).
template <class T>
PLFunction<T> boundary_distance_field(const GraphPtr<T>& g);

/// Maximizers of the boundary distance together with the maximum R.
template <class T>
struct RidgeSet {
  std::vector<GraphPoint<T>> points;
  T value;
};

template <class T>
RidgeSet<T> inradius_and_ridge(const GraphPtr<T>& g);

}  // namespace inflap
