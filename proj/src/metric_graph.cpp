#include "inflap/metric_graph.hpp"

#include <numeric>
#include <set>

namespace inflap {

template <class T>
VertexId MetricGraph<T>::add_vertex(std::string name) {
  if (vertex_index_.count(name)) {
    throw std::invalid_argument("duplicate vertex '" + name + "'");
  }
  const VertexId v = names_.size();
  vertex_index_.emplace(name, v);
  names_.push_back(std::move(name));
  incidence_.emplace_back();
  boundary_.push_back(false);
  return v;
}

template <class T>
EdgeId MetricGraph<T>::add_edge(std::string id, VertexId from, VertexId to, T length) {
  if (from >= names_.size() || to >= names_.size()) {
    throw std::invalid_argument("edge '" + id + "' references an unknown vertex");
  }
  if (edge_index_.count(id)) throw std::invalid_argument("duplicate edge '" + id + "'");
  const EdgeId e = edges_.size();
  edge_index_.emplace(id, e);
  edges_.push_back(Edge<T>{std::move(id), from, to, std::move(length)});
  incidence_[from].push_back(EdgeEnd{e, true});
  incidence_[to].push_back(EdgeEnd{e, false});
  return e;
}

template <class T>
void MetricGraph<T>::mark_boundary(VertexId v) {
  boundary_.at(v) = true;
}

template <class T>
std::vector<VertexId> MetricGraph<T>::boundary_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < boundary_.size(); ++v) {
    if (boundary_[v]) out.push_back(v);
  }
  return out;
}

template <class T>
std::optional<VertexId> MetricGraph<T>::find_vertex(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

template <class T>
std::optional<EdgeId> MetricGraph<T>::find_edge(const std::string& id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

template <class T>
std::vector<Violation> validate(const MetricGraph<T>& g) {
  std::vector<Violation> out;
  if (g.num_vertices() == 0) out.push_back({"graph has no vertices", ""});
  for (const auto& e : g.edges()) {
    if (!(e.length > 0)) out.push_back({"nonpositive edge length", e.id});
  }
  const auto boundary = g.boundary_vertices();
  if (boundary.empty()) out.push_back({"boundary is empty", ""});
  for (VertexId v : boundary) {
    if (g.incident(v).empty()) out.push_back({"boundary vertex has degree 0", g.vertex_name(v)});
  }

  DisjointSets whole(g.num_vertices());
  for (const auto& e : g.edges()) whole.unite(e.from, e.to);
  std::set<std::size_t> roots;
  for (VertexId v = 0; v < g.num_vertices(); ++v) roots.insert(whole.find(v));
  if (roots.size() > 1) out.push_back({"graph not connected", std::to_string(roots.size()) + " components"});

  // Components of X minus the boundary vertices: interior vertices glued by
  // edges with both ends interior, plus one open segment per edge whose
  // two ends are both on the boundary.
  DisjointSets inner(g.num_vertices());
  std::size_t open_segments = 0;
  for (const auto& e : g.edges()) {
    const bool fb = g.is_boundary(e.from);
    const bool tb = g.is_boundary(e.to);
    if (!fb && !tb) inner.unite(e.from, e.to);
    if (fb && tb) ++open_segments;
  }
  std::set<std::size_t> inner_roots;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!g.is_boundary(v)) inner_roots.insert(inner.find(v));
  }
  const std::size_t pieces = inner_roots.size() + open_segments;
  if (pieces != 1) {
    out.push_back({"domain (graph minus boundary) not connected", std::to_string(pieces) + " components"});
  }
  return out;
}

template <class T>
GraphPoint<T> GraphPoint<T>::on_edge(const MetricGraph<T>& g, EdgeId e, const T& t) {
  if (e >= g.num_edges()) throw InvalidPoint("unknown edge index " + std::to_string(e));
  const auto& edge = g.edge(e);
  if (lt(t, T(0)) || lt(edge.length, t)) {
    throw InvalidPoint("parameter " + to_text(t) + " outside [0, " + to_text(edge.length) +
                       "] on edge '" + edge.id + "'");
  }
  if (near(t, T(0))) return at_vertex(edge.from);
  if (near(t, edge.length)) return at_vertex(edge.to);
  GraphPoint p;
  p.vertex_ = false;
  p.id_ = e;
  p.t_ = t;
  return p;
}

template <class T>
std::optional<T> GraphPoint<T>::param_on(const MetricGraph<T>& g, EdgeId e) const {
  const auto& edge = g.edge(e);
  if (!vertex_) {
    if (id_ == e) return t_;
    return std::nullopt;
  }
  if (edge.from == id_) return T(0);
  if (edge.to == id_) return edge.length;
  return std::nullopt;
}

template <class T>
std::string GraphPoint<T>::describe(const MetricGraph<T>& g) const {
  if (vertex_) return g.vertex_name(id_);
  return g.edge(id_).id + "@" + to_text(t_);
}

template <class T>
GraphPoint<T> parse_point(const MetricGraph<T>& g, const std::string& text) {
  const auto at = text.rfind('@');
  if (at == std::string::npos) {
    auto v = g.find_vertex(text);
    if (!v) throw InvalidPoint("unknown vertex '" + text + "'");
    return GraphPoint<T>::at_vertex(*v);
  }
  auto e = g.find_edge(text.substr(0, at));
  if (!e) throw InvalidPoint("unknown edge '" + text.substr(0, at) + "'");
  const Rational q = parse_rational(text.substr(at + 1));
  if constexpr (is_exact_v<T>) {
    return GraphPoint<T>::on_edge(g, *e, q);
  } else {
    return GraphPoint<T>::on_edge(g, *e, q.get_d());
  }
}

template class MetricGraph<Rational>;
template class MetricGraph<double>;
template class GraphPoint<Rational>;
template class GraphPoint<double>;
template std::vector<Violation> validate(const MetricGraph<Rational>&);
template std::vector<Violation> validate(const MetricGraph<double>&);
template GraphPoint<Rational> parse_point(const MetricGraph<Rational>&, const std::string&);
template GraphPoint<double> parse_point(const MetricGraph<double>&, const std::string&);

}  // namespace inflap
