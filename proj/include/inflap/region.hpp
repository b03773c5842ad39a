#pragma once

#include <random>
#include <vector>

#include "inflap/metric_graph.hpp"

namespace inflap {

/// Closed sub-interval [lo, hi] of one edge.
template <class T>
struct Interval {
  EdgeId edge;
  T lo;
  T hi;
};

/// Finite union of closed edge sub-intervals; the carrier for subdomains,
/// balls and their closures. Parts are kept sorted and merged per edge.
template <class T>
class Region {
 public:
  Region() = default;
  Region(const MetricGraph<T>& g, std::vector<Interval<T>> parts);

  const std::vector<Interval<T>>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  T length() const;
  bool contains(const MetricGraph<T>& g, const GraphPoint<T>& p) const;

 private:
  std::vector<Interval<T>> parts_;
};

template <class T>
class PLFunction;

/// {x : f(x) <= level}.
template <class T>
Region<T> sublevel_region(const PLFunction<T>& f, const T& level);

/// {x : d(center, x) <= radius}.
template <class T>
Region<T> closed_ball(const GraphPtr<T>& g, const GraphPoint<T>& center, const T& radius);

/// Topological boundary of the region inside the graph: interval ends that
/// are edge-interior points, and vertices not surrounded on every incident
/// edge end.
template <class T>
std::vector<GraphPoint<T>> region_boundary(const MetricGraph<T>& g, const Region<T>& region);

/// True when the region reaches a boundary vertex of the graph.
template <class T>
bool touches_boundary(const MetricGraph<T>& g, const Region<T>& region);

/// Points drawn uniformly by arclength.
template <class T>
std::vector<GraphPoint<T>> sample_region(const MetricGraph<T>& g, const Region<T>& region,
                                         std::size_t count, std::mt19937_64& rng);

/// Uniform points on the whole graph.
template <class T>
std::vector<GraphPoint<T>> sample_graph(const MetricGraph<T>& g, std::size_t count,
                                        std::mt19937_64& rng);

}  // namespace inflap
