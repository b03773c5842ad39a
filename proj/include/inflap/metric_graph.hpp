#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "inflap/numeric.hpp"

namespace inflap {

using VertexId = std::size_t;
using EdgeId = std::size_t;

/// Thrown for points that do not lie on the graph they are used with.
class InvalidPoint : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class T>
struct Edge {
  std::string id;
  VertexId from = 0;
  VertexId to = 0;
  T length;
};

/// One end of an edge as seen from a vertex. `at_start` means the vertex is
/// the edge's `from` end (parameter 0).
struct EdgeEnd {
  EdgeId edge;
  bool at_start;
};

/// Finite metric graph with a designated boundary vertex set. Each edge is
/// a segment [0, length] glued to its endpoints; the metric is the induced
/// shortest-path metric. Built incrementally, then shared as an immutable
/// value through GraphPtr.
template <class T>
class MetricGraph {
 public:
  using scalar_type = T;

  VertexId add_vertex(std::string name);
  EdgeId add_edge(std::string id, VertexId from, VertexId to, T length);
  void mark_boundary(VertexId v);

  std::size_t num_vertices() const { return names_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const Edge<T>& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge<T>>& edges() const { return edges_; }
  const std::string& vertex_name(VertexId v) const { return names_.at(v); }
  const std::vector<EdgeEnd>& incident(VertexId v) const { return incidence_.at(v); }
  bool is_boundary(VertexId v) const { return boundary_.at(v); }
  std::vector<VertexId> boundary_vertices() const;

  std::optional<VertexId> find_vertex(const std::string& name) const;
  std::optional<EdgeId> find_edge(const std::string& id) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::vector<Edge<T>> edges_;
  std::unordered_map<std::string, EdgeId> edge_index_;
  std::vector<std::vector<EdgeEnd>> incidence_;
  std::vector<bool> boundary_;
};

template <class T>
using GraphPtr = std::shared_ptr<const MetricGraph<T>>;

template <class T>
GraphPtr<T> share(MetricGraph<T> g) {
  return std::make_shared<const MetricGraph<T>>(std::move(g));
}

/// Same topology with lengths converted to another field.
template <class To, class From>
MetricGraph<To> convert_graph(const MetricGraph<From>& g) {
  MetricGraph<To> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) out.add_vertex(g.vertex_name(v));
  for (const auto& e : g.edges()) {
    if constexpr (std::is_same_v<To, From>) {
      out.add_edge(e.id, e.from, e.to, e.length);
    } else {
      out.add_edge(e.id, e.from, e.to, from_double<To>(to_double(e.length)));
    }
  }
  for (VertexId v : g.boundary_vertices()) out.mark_boundary(v);
  return out;
}

struct Violation {
  std::string invariant;
  std::string element;
};

/// Reports every broken structural invariant; never throws.
template <class T>
std::vector<Violation> validate(const MetricGraph<T>& g);

/// A location on the graph. Points at t = 0 or t = length are stored in
/// vertex form so that equality is well defined.
template <class T>
class GraphPoint {
 public:
  static GraphPoint at_vertex(VertexId v) {
    GraphPoint p;
    p.vertex_ = true;
    p.id_ = v;
    p.t_ = T(0);
    return p;
  }

  /// Throws InvalidPoint when `e` is unknown or t is outside [0, length].
  static GraphPoint on_edge(const MetricGraph<T>& g, EdgeId e, const T& t);

  bool is_vertex() const { return vertex_; }
  VertexId vertex() const { return id_; }
  EdgeId edge() const { return id_; }
  const T& param() const { return t_; }

  /// Parameter of this point on edge `e`, if the point lies on it. For a
  /// vertex that is both ends of a self-loop the start (0) is returned.
  std::optional<T> param_on(const MetricGraph<T>& g, EdgeId e) const;

  std::string describe(const MetricGraph<T>& g) const;

  friend bool operator==(const GraphPoint& a, const GraphPoint& b) {
    return a.vertex_ == b.vertex_ && a.id_ == b.id_ && (a.vertex_ || near(a.t_, b.t_));
  }
  friend bool operator<(const GraphPoint& a, const GraphPoint& b) {
    if (a.vertex_ != b.vertex_) return a.vertex_;
    if (a.id_ != b.id_) return a.id_ < b.id_;
    return lt(a.t_, b.t_);
  }

 private:
  bool vertex_ = true;
  std::size_t id_ = 0;
  T t_ = T(0);
};

/// Parses "V0" (vertex name) or "e3@1/2" (edge id @ parameter).
template <class T>
GraphPoint<T> parse_point(const MetricGraph<T>& g, const std::string& text);

}  // namespace inflap
