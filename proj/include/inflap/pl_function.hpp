#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "inflap/metric_graph.hpp"

namespace inflap {

template <class T>
struct Knot {
  T t;
  T v;
};

/// value(t) = c + s * t
template <class T>
struct Line {
  T c;
  T s;
  T at(const T& t) const { return c + s * t; }
};

/// Continuous piecewise-linear function on a metric graph, stored as a
/// breakpoint list per edge. Construction checks that every edge list
/// spans [0, length] with strictly increasing parameters and that traces
/// agree at shared vertices; violations throw std::invalid_argument.
template <class T>
class PLFunction {
 public:
  PLFunction(GraphPtr<T> graph, std::vector<std::vector<Knot<T>>> knots);

  /// Builds a function that is linear on every edge from its vertex values.
  static PLFunction from_vertex_values(GraphPtr<T> graph, std::span<const T> values);

  const MetricGraph<T>& graph() const { return *graph_; }
  const GraphPtr<T>& graph_ptr() const { return graph_; }
  const std::vector<Knot<T>>& knots(EdgeId e) const { return knots_.at(e); }

  T operator()(const GraphPoint<T>& p) const;
  T on_edge(EdgeId e, const T& t) const;
  T at_vertex(VertexId v) const;

  T min_value() const;
  T max_value() const;
  /// Largest absolute segment slope.
  T lipschitz_constant() const;

  /// a * u + b
  PLFunction affine(const T& a, const T& b) const;

  friend bool operator==(const PLFunction& a, const PLFunction& b) {
    if (a.graph_ != b.graph_ || a.knots_.size() != b.knots_.size()) return false;
    for (std::size_t e = 0; e < a.knots_.size(); ++e) {
      const auto& ka = a.knots_[e];
      const auto& kb = b.knots_[e];
      if (ka.size() != kb.size()) return false;
      for (std::size_t i = 0; i < ka.size(); ++i) {
        if (!(ka[i].t == kb[i].t) || !(ka[i].v == kb[i].v)) return false;
      }
    }
    return true;
  }

 private:
  GraphPtr<T> graph_;
  std::vector<std::vector<Knot<T>>> knots_;
};

/// Drops interior knots where the two adjacent segments are collinear.
template <class T>
std::vector<Knot<T>> simplify_knots(std::vector<Knot<T>> knots);

/// Lower envelope of finitely many lines on [lo, hi] as knots.
template <class T>
std::vector<Knot<T>> lower_envelope(std::span<const Line<T>> lines, const T& lo, const T& hi);

/// Derivatives of u along every direction leaving x: two at an edge
/// interior point, one per incident edge end at a vertex.
template <class T>
std::vector<T> outgoing_derivatives(const PLFunction<T>& u, const GraphPoint<T>& x);

template <class T>
struct SlopeTriple {
  T slope;
  T subslope;
  T superslope;
};

/// Local slope, subslope and superslope of a piecewise-linear function,
/// read off its one-sided derivatives (exact for this class).
template <class T>
SlopeTriple<T> slopes_at(const PLFunction<T>& u, const GraphPoint<T>& x);

/// a + kappa * d(apex, .), kappa <= 0. Throws std::invalid_argument for kappa > 0.
template <class T>
PLFunction<T> cone_function(const GraphPtr<T>& g, const GraphPoint<T>& apex, const T& a,
                            const T& kappa);

/// Exact pointwise minimum; crossing points become breakpoints.
template <class T>
PLFunction<T> pointwise_min(std::span<const PLFunction<T>> us);

/// Scalar map given by its own breakpoints (t, h(t)); linear in between.
template <class T>
struct PLScalarMap {
  std::vector<Knot<T>> knots;
  T operator()(const T& x) const;
};

/// Smooth scalar map sampled through a callable, with optional first and
/// second derivatives for the composition-lemma preconditions.
struct SmoothScalarMap {
  std::string name;
  std::function<double(double)> f;
  std::function<double(double)> df;
  std::function<double(double)> d2f;
  double domain_lo = -1e300;
  double domain_hi = 1e300;
};

/// h o u, exact: breakpoints of h are pulled back onto every edge.
template <class T>
PLFunction<T> compose_scalar(const PLFunction<T>& u, const PLScalarMap<T>& h);

/// h o u approximated by recursive bisection until the chord deviates from
/// h o u by at most `tolerance` at the probe points of every segment.
/// Throws std::domain_error when the range of u leaves h's domain.
template <class T>
PLFunction<T> compose_scalar(const PLFunction<T>& u, const SmoothScalarMap& h, double tolerance);

/// Rows (edge id, t, value) at the given sampling step; edge breakpoints
/// are not added, the endpoints always are.
template <class T>
std::vector<std::tuple<std::string, double, double>> sample_rows(const PLFunction<T>& u,
                                                                 double step);

}  // namespace inflap
