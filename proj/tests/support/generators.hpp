#pragma once

// Random instances for the property suites. Everything is driven by an
// explicit std::mt19937_64 so every suite is reproducible from its seed.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "inflap/distance.hpp"
#include "inflap/eikonal.hpp"
#include "inflap/metric_graph.hpp"
#include "inflap/pl_function.hpp"

namespace inflap::testing {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// k / q with small integers; exact in both fields for the q used here.
template <class T>
T ratio(long k, long q) {
  if constexpr (is_exact_v<T>) {
    Rational r(k, q);
    r.canonicalize();
    return r;
  } else {
    return static_cast<double>(k) / static_cast<double>(q);
  }
}

/// Lengths in {1/4, ..., 3} with denominators 1, 2, 3 or 4.
template <class T>
T random_length(Rng& rng) {
  static constexpr long kDen[] = {1, 2, 3, 4};
  const long q = kDen[uniform_int(rng, 0, 3)];
  return ratio<T>(uniform_int(rng, 1, static_cast<int>(3 * q)), q);
}

/// Random tree on n vertices (3 <= n); the leaves form the boundary.
template <class T>
GraphPtr<T> random_tree(Rng& rng, int min_vertices = 3, int max_vertices = 8) {
  const int n = uniform_int(rng, min_vertices, max_vertices);
  MetricGraph<T> g;
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v));
  for (int v = 1; v < n; ++v) {
    const int parent = uniform_int(rng, 0, v - 1);
    g.add_edge("e" + std::to_string(v), static_cast<VertexId>(parent), static_cast<VertexId>(v),
               random_length<T>(rng));
    ++degree[static_cast<std::size_t>(parent)];
    ++degree[static_cast<std::size_t>(v)];
  }
  for (int v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) g.mark_boundary(static_cast<VertexId>(v));
  }
  return share(std::move(g));
}

/// Random connected graph with cycles (and occasionally parallel edges),
/// at most `max_vertices` vertices, and a boundary set that keeps the
/// domain connected.
template <class T>
GraphPtr<T> random_graph(Rng& rng, int max_vertices = 8) {
  for (;;) {
    const int n = uniform_int(rng, 3, max_vertices);
    MetricGraph<T> g;
    for (int v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v));
    int next_edge = 0;
    auto add = [&](int a, int b) {
      g.add_edge("e" + std::to_string(next_edge++), static_cast<VertexId>(a), static_cast<VertexId>(b),
                 random_length<T>(rng));
    };
    for (int v = 1; v < n; ++v) add(uniform_int(rng, 0, v - 1), v);
    const int extra = uniform_int(rng, 0, n);
    for (int k = 0; k < extra; ++k) {
      const int a = uniform_int(rng, 0, n - 1);
      const int b = uniform_int(rng, 0, n - 1);
      if (a != b) add(a, b);
    }
    const int nb = uniform_int(rng, 1, std::max(1, n / 2));
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::shuffle(order.begin(), order.end(), rng);
    for (int k = 0; k < nb; ++k) g.mark_boundary(static_cast<VertexId>(order[static_cast<std::size_t>(k)]));
    if (validate(g).empty()) return share(std::move(g));
  }
}

/// A point on a random edge at a parameter that is a multiple of length / 16.
template <class T>
GraphPoint<T> random_point(const MetricGraph<T>& g, Rng& rng) {
  const auto e = static_cast<EdgeId>(uniform_int(rng, 0, static_cast<int>(g.num_edges()) - 1));
  const T t = g.edge(e).length * ratio<T>(uniform_int(rng, 0, 16), 16);
  return GraphPoint<T>::on_edge(g, e, t);
}

/// Values in {-1, -3/4, ..., 2}.
template <class T>
BoundaryData<T> random_boundary_data(const MetricGraph<T>& g, Rng& rng) {
  BoundaryData<T> data;
  for (VertexId v : g.boundary_vertices()) data[v] = ratio<T>(uniform_int(rng, -4, 8), 4);
  return data;
}

template <class T>
T random_slope(Rng& rng, int max_quarters = 8) {
  return ratio<T>(uniform_int(rng, 1, max_quarters), 4);
}

/// Minimum of 1..max_cones downward cones a + kappa d(apex, .) with every
/// offset large enough that the cone stays nonnegative on the whole graph.
/// On a tree the result is infinity-superharmonic in the domain.
template <class T>
PLFunction<T> random_cone_minimum(const GraphPtr<T>& g, Rng& rng, int max_cones = 5) {
  const int k = uniform_int(rng, 1, max_cones);
  std::vector<PLFunction<T>> cones;
  for (int i = 0; i < k; ++i) {
    const auto apex = random_point(*g, rng);
    const T kappa = uniform_int(rng, 0, 5) == 0 ? T(0) : T(-random_slope<T>(rng));
    const T reach = distance_field(g, apex).max_value();
    const T a = -kappa * reach + ratio<T>(uniform_int(rng, 0, 8), 4);
    cones.push_back(cone_function(g, apex, a, kappa));
  }
  return pointwise_min<T>(cones);
}

/// min over boundary seeds of g(y) + s d(y, .) for one slope s.
template <class T>
PLFunction<T> upward_cones(const GraphPtr<T>& g, const BoundaryData<T>& data, const T& slope) {
  std::vector<Seed<T>> seeds;
  for (const auto& [v, value] : data) seeds.push_back({v, value});
  return potential_field<T>(g, seeds, slope);
}

}  // namespace inflap::testing
