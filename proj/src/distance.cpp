#include "inflap/distance.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace inflap {

template <class T>
std::vector<T> vertex_potentials(const MetricGraph<T>& g, std::span<const Seed<T>> seeds,
                                 const T& scale) {
  const std::size_t n = g.num_vertices();
  std::vector<T> dist(n);
  std::vector<char> reached(n, 0);
  std::vector<char> settled(n, 0);
  using Entry = std::pair<T, VertexId>;
  auto greater = [](const Entry& a, const Entry& b) { return b.first < a.first; };
  std::priority_queue<Entry, std::vector<Entry>, decltype(greater)> queue(greater);
  for (const auto& s : seeds) {
    if (s.vertex >= n) throw std::invalid_argument("seed vertex out of range");
    if (!reached[s.vertex] || s.offset < dist[s.vertex]) {
      dist[s.vertex] = s.offset;
      reached[s.vertex] = 1;
      queue.emplace(s.offset, s.vertex);
    }
  }
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (settled[v] || dist[v] < d) continue;
    settled[v] = 1;
    for (const EdgeEnd& end : g.incident(v)) {
      const auto& e = g.edge(end.edge);
      const VertexId w = end.at_start ? e.to : e.from;
      T cand = d + scale * e.length;
      if (!reached[w] || cand < dist[w]) {
        dist[w] = cand;
        reached[w] = 1;
        queue.emplace(std::move(cand), w);
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!reached[v]) throw std::domain_error("vertex '" + g.vertex_name(v) + "' is unreachable");
  }
  return dist;
}

template <class T>
std::vector<Seed<T>> seeds_for(const MetricGraph<T>& g, const GraphPoint<T>& p) {
  if (p.is_vertex()) {
    if (p.vertex() >= g.num_vertices()) throw InvalidPoint("unknown vertex index");
    return {Seed<T>{p.vertex(), T(0)}};
  }
  if (p.edge() >= g.num_edges()) throw InvalidPoint("unknown edge index");
  const auto& e = g.edge(p.edge());
  if (!(p.param() > 0) || !(p.param() < e.length)) throw InvalidPoint("parameter off edge");
  return {Seed<T>{e.from, p.param()}, Seed<T>{e.to, T(e.length - p.param())}};
}

template <class T>
T point_distance(const MetricGraph<T>& g, const GraphPoint<T>& p, const GraphPoint<T>& q) {
  const auto seeds = seeds_for(g, p);
  const auto target = seeds_for(g, q);
  const auto dist = vertex_potentials<T>(g, seeds);
  T best = dist[target[0].vertex] + target[0].offset;
  for (const auto& s : target) best = min_of<T>(best, dist[s.vertex] + s.offset);
  if (!p.is_vertex() && !q.is_vertex() && p.edge() == q.edge()) {
    best = min_of<T>(best, abs_of<T>(p.param() - q.param()));
  }
  return best;
}

namespace {

template <class T>
std::vector<Knot<T>> edge_envelope(const Edge<T>& e, const T& ua, const T& ub, const T& scale) {
  const Line<T> lines[2] = {Line<T>{ua, scale}, Line<T>{ub + scale * e.length, T(-scale)}};
  return lower_envelope<T>(lines, T(0), e.length);
}

}  // namespace

template <class T>
PLFunction<T> potential_field(const GraphPtr<T>& g, std::span<const Seed<T>> seeds,
                              const T& scale) {
  const auto pot = vertex_potentials<T>(*g, seeds, scale);
  std::vector<std::vector<Knot<T>>> knots;
  knots.reserve(g->num_edges());
  for (const auto& e : g->edges()) knots.push_back(edge_envelope(e, pot[e.from], pot[e.to], scale));
  return PLFunction<T>(g, std::move(knots));
}

template <class T>
PLFunction<T> distance_field(const GraphPtr<T>& g, const GraphPoint<T>& source) {
  const auto seeds = seeds_for(*g, source);
  if (source.is_vertex()) return potential_field<T>(g, seeds);

  const auto pot = vertex_potentials<T>(*g, seeds);
  std::vector<std::vector<Knot<T>>> knots;
  knots.reserve(g->num_edges());
  for (EdgeId id = 0; id < g->num_edges(); ++id) {
    const auto& e = g->edge(id);
    if (id != source.edge()) {
      knots.push_back(edge_envelope(e, pot[e.from], pot[e.to], T(1)));
      continue;
    }
    // The source's own edge: the direct segment competes with both routes.
    const T& t0 = source.param();
    const Line<T> around_a{pot[e.from], T(1)};
    const Line<T> around_b{pot[e.to] + e.length, T(-1)};
    const Line<T> left[3] = {Line<T>{t0, T(-1)}, around_a, around_b};
    const Line<T> right[3] = {Line<T>{T(-t0), T(1)}, around_a, around_b};
    auto k = lower_envelope<T>(left, T(0), t0);
    auto r = lower_envelope<T>(right, t0, e.length);
    k.insert(k.end(), r.begin() + 1, r.end());
    knots.push_back(simplify_knots(std::move(k)));
  }
  return PLFunction<T>(g, std::move(knots));
}

template <class T>
PLFunction<T> boundary_distance_field(const GraphPtr<T>& g) {
  std::vector<Seed<T>> seeds;
  for (VertexId v : g->boundary_vertices()) seeds.push_back(Seed<T>{v, T(0)});
  return potential_field<T>(g, seeds);
}

template <class T>
RidgeSet<T> inradius_and_ridge(const GraphPtr<T>& g) {
  const auto field = boundary_distance_field(g);
  RidgeSet<T> ridge{{}, field.max_value()};
  for (EdgeId e = 0; e < g->num_edges(); ++e) {
    const auto& ks = field.knots(e);
    for (std::size_t i = 0; i < ks.size(); ++i) {
      if (!near(ks[i].v, ridge.value)) continue;
      if (i + 1 < ks.size() && near(ks[i + 1].v, ridge.value)) {
        throw std::logic_error("boundary distance has a plateau on edge '" + g->edge(e).id + "'");
      }
      ridge.points.push_back(GraphPoint<T>::on_edge(*g, e, ks[i].t));
    }
  }
  std::sort(ridge.points.begin(), ridge.points.end());
  ridge.points.erase(std::unique(ridge.points.begin(), ridge.points.end()), ridge.points.end());
  return ridge;
}

#define INFLAP_INSTANTIATE(T)                                                                    \
  template std::vector<T> vertex_potentials(const MetricGraph<T>&, std::span<const Seed<T>>,    \
                                            const T&);                                          \
  template std::vector<Seed<T>> seeds_for(const MetricGraph<T>&, const GraphPoint<T>&);         \
  template T point_distance(const MetricGraph<T>&, const GraphPoint<T>&, const GraphPoint<T>&); \
  template PLFunction<T> distance_field(const GraphPtr<T>&, const GraphPoint<T>&);              \
  template PLFunction<T> potential_field(const GraphPtr<T>&, std::span<const Seed<T>>,          \
                                         const T&);                                             \
  template PLFunction<T> boundary_distance_field(const GraphPtr<T>&);                           \
  template RidgeSet<T> inradius_and_ridge(const GraphPtr<T>&);

INFLAP_INSTANTIATE(Rational)
INFLAP_INSTANTIATE(double)
#undef INFLAP_INSTANTIATE

}  // namespace inflap
