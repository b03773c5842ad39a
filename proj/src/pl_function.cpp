#include "inflap/pl_function.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "inflap/distance.hpp"

namespace inflap {

namespace {

template <class T>
T segment_slope(const Knot<T>& a, const Knot<T>& b) {
  return (b.v - a.v) / (b.t - a.t);
}

template <class T>
T interpolate(const Knot<T>& a, const Knot<T>& b, const T& t) {
  return a.v + (b.v - a.v) * ((t - a.t) / (b.t - a.t));
}

}  // namespace

template <class T>
PLFunction<T>::PLFunction(GraphPtr<T> graph, std::vector<std::vector<Knot<T>>> knots)
    : graph_(std::move(graph)), knots_(std::move(knots)) {
  if (!graph_) throw std::invalid_argument("PLFunction needs a graph");
  if (knots_.size() != graph_->num_edges()) {
    throw std::invalid_argument("PLFunction: expected " + std::to_string(graph_->num_edges()) +
                                " edge lists, got " + std::to_string(knots_.size()));
  }
  for (EdgeId e = 0; e < knots_.size(); ++e) {
    auto& ks = knots_[e];
    const auto& edge = graph_->edge(e);
    if (ks.size() < 2) throw std::invalid_argument("edge '" + edge.id + "' needs at least two knots");
    if (!near(ks.front().t, T(0)) || !near(ks.back().t, edge.length)) {
      throw std::invalid_argument("knots on edge '" + edge.id + "' must span [0, length]");
    }
    ks.front().t = T(0);
    ks.back().t = edge.length;
    for (std::size_t i = 1; i < ks.size(); ++i) {
      if (!lt(ks[i - 1].t, ks[i].t)) {
        throw std::invalid_argument("knots on edge '" + edge.id + "' are not strictly increasing");
      }
    }
  }
  for (VertexId v = 0; v < graph_->num_vertices(); ++v) {
    const auto& ends = graph_->incident(v);
    if (ends.empty()) continue;
    auto trace = [&](const EdgeEnd& end) {
      const auto& ks = knots_[end.edge];
      return end.at_start ? ks.front().v : ks.back().v;
    };
    const T first = trace(ends.front());
    for (const auto& end : ends) {
      if (!near(trace(end), first)) {
        throw std::invalid_argument("PLFunction is discontinuous at vertex '" +
                                    graph_->vertex_name(v) + "'");
      }
    }
  }
}

template <class T>
PLFunction<T> PLFunction<T>::from_vertex_values(GraphPtr<T> graph, std::span<const T> values) {
  if (values.size() != graph->num_vertices()) throw std::invalid_argument("one value per vertex");
  std::vector<std::vector<Knot<T>>> knots;
  for (const auto& e : graph->edges()) {
    knots.push_back({Knot<T>{T(0), values[e.from]}, Knot<T>{e.length, values[e.to]}});
  }
  return PLFunction(std::move(graph), std::move(knots));
}

template <class T>
T PLFunction<T>::on_edge(EdgeId e, const T& t) const {
  const auto& ks = knots_.at(e);
  auto it = std::lower_bound(ks.begin(), ks.end(), t,
                             [](const Knot<T>& k, const T& x) { return k.t < x; });
  if (it == ks.end()) return ks.back().v;
  if (it->t == t || it == ks.begin()) return it->v;
  return interpolate(*(it - 1), *it, t);
}

template <class T>
T PLFunction<T>::at_vertex(VertexId v) const {
  const auto& ends = graph_->incident(v);
  if (ends.empty()) throw InvalidPoint("vertex '" + graph_->vertex_name(v) + "' is isolated");
  const auto& ks = knots_[ends.front().edge];
  return ends.front().at_start ? ks.front().v : ks.back().v;
}

template <class T>
T PLFunction<T>::operator()(const GraphPoint<T>& p) const {
  if (p.is_vertex()) {
    if (p.vertex() >= graph_->num_vertices()) throw InvalidPoint("unknown vertex index");
    return at_vertex(p.vertex());
  }
  if (p.edge() >= graph_->num_edges()) throw InvalidPoint("unknown edge index");
  return on_edge(p.edge(), p.param());
}

template <class T>
T PLFunction<T>::min_value() const {
  T best = knots_.front().front().v;
  for (const auto& ks : knots_) {
    for (const auto& k : ks) best = min_of<T>(best, k.v);
  }
  return best;
}

template <class T>
T PLFunction<T>::max_value() const {
  T best = knots_.front().front().v;
  for (const auto& ks : knots_) {
    for (const auto& k : ks) best = max_of<T>(best, k.v);
  }
  return best;
}

template <class T>
T PLFunction<T>::lipschitz_constant() const {
  T best(0);
  for (const auto& ks : knots_) {
    for (std::size_t i = 1; i < ks.size(); ++i) best = max_of<T>(best, abs_of<T>(segment_slope(ks[i - 1], ks[i])));
  }
  return best;
}

template <class T>
PLFunction<T> PLFunction<T>::affine(const T& a, const T& b) const {
  auto knots = knots_;
  for (auto& ks : knots) {
    for (auto& k : ks) k.v = a * k.v + b;
    if (a == 0) ks = {ks.front(), ks.back()};
  }
  return PLFunction(graph_, std::move(knots));
}

template <class T>
std::vector<Knot<T>> simplify_knots(std::vector<Knot<T>> knots) {
  if (knots.size() <= 2) return knots;
  std::vector<Knot<T>> out;
  out.reserve(knots.size());
  out.push_back(knots.front());
  for (std::size_t i = 1; i + 1 < knots.size(); ++i) {
    const T left = segment_slope(out.back(), knots[i]);
    const T right = segment_slope(knots[i], knots[i + 1]);
    if (!near(left, right)) out.push_back(knots[i]);
  }
  out.push_back(knots.back());
  return out;
}

template <class T>
std::vector<Knot<T>> lower_envelope(std::span<const Line<T>> lines, const T& lo, const T& hi) {
  if (lines.empty()) throw std::invalid_argument("lower_envelope of no lines");
  std::vector<T> cuts;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (lines[i].s == lines[j].s) continue;
      T t = (lines[j].c - lines[i].c) / (lines[i].s - lines[j].s);
      if (lt(lo, t) && lt(t, hi)) cuts.push_back(std::move(t));
    }
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<T> ts{lo};
  for (auto& t : cuts) {
    if (lt(ts.back(), t)) ts.push_back(std::move(t));
  }
  if (ts.size() > 1 && !lt(ts.back(), hi)) ts.pop_back();
  ts.push_back(hi);

  std::vector<Knot<T>> knots;
  knots.reserve(ts.size());
  for (auto& t : ts) {
    T v = lines[0].at(t);
    for (std::size_t i = 1; i < lines.size(); ++i) v = min_of<T>(v, lines[i].at(t));
    knots.push_back(Knot<T>{std::move(t), std::move(v)});
  }
  return simplify_knots(std::move(knots));
}

template <class T>
std::vector<T> outgoing_derivatives(const PLFunction<T>& u, const GraphPoint<T>& x) {
  const auto& g = u.graph();
  std::vector<T> out;
  if (x.is_vertex()) {
    if (x.vertex() >= g.num_vertices()) throw InvalidPoint("unknown vertex index");
    for (const auto& end : g.incident(x.vertex())) {
      const auto& ks = u.knots(end.edge);
      if (end.at_start) {
        out.push_back(segment_slope(ks[0], ks[1]));
      } else {
        out.push_back(T(-segment_slope(ks[ks.size() - 2], ks.back())));
      }
    }
    return out;
  }
  if (x.edge() >= g.num_edges()) throw InvalidPoint("unknown edge index");
  const auto& ks = u.knots(x.edge());
  const T& t = x.param();
  auto it = std::lower_bound(ks.begin(), ks.end(), t,
                             [](const Knot<T>& k, const T& s) { return k.t < s; });
  const std::size_t i = static_cast<std::size_t>(it - ks.begin());
  if (i < ks.size() && near(ks[i].t, t)) {
    out.push_back(segment_slope(ks[i], ks[i + 1]));
    out.push_back(T(-segment_slope(ks[i - 1], ks[i])));
  } else {
    const T s = segment_slope(ks[i - 1], ks[i]);
    out.push_back(s);
    out.push_back(T(-s));
  }
  return out;
}

template <class T>
SlopeTriple<T> slopes_at(const PLFunction<T>& u, const GraphPoint<T>& x) {
  const auto ds = outgoing_derivatives(u, x);
  T sub(0);
  T super(0);
  for (const auto& d : ds) {
    sub = max_of<T>(sub, T(-d));
    super = max_of<T>(super, d);
  }
  return SlopeTriple<T>{max_of<T>(sub, super), sub, super};
}

template <class T>
PLFunction<T> cone_function(const GraphPtr<T>& g, const GraphPoint<T>& apex, const T& a,
                            const T& kappa) {
  if (kappa > 0) throw std::invalid_argument("cone slope kappa must be <= 0");
  return distance_field(g, apex).affine(kappa, a);
}

template <class T>
PLFunction<T> pointwise_min(std::span<const PLFunction<T>> us) {
  if (us.empty()) throw std::invalid_argument("pointwise_min of an empty list");
  const auto& g = us.front().graph_ptr();
  for (const auto& u : us) {
    if (u.graph_ptr() != g) throw std::invalid_argument("pointwise_min over mixed graphs");
  }
  std::vector<std::vector<Knot<T>>> knots;
  knots.reserve(g->num_edges());
  std::vector<Line<T>> lines(us.size());
  for (EdgeId e = 0; e < g->num_edges(); ++e) {
    std::vector<T> ts;
    for (const auto& u : us) {
      for (const auto& k : u.knots(e)) ts.push_back(k.t);
    }
    std::sort(ts.begin(), ts.end());
    std::vector<T> cuts{ts.front()};
    for (auto& t : ts) {
      if (lt(cuts.back(), t)) cuts.push_back(std::move(t));
    }
    cuts.back() = g->edge(e).length;

    std::vector<Knot<T>> merged;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      const T& lo = cuts[k];
      const T& hi = cuts[k + 1];
      for (std::size_t i = 0; i < us.size(); ++i) {
        const T vlo = us[i].on_edge(e, lo);
        const T vhi = us[i].on_edge(e, hi);
        const T s = (vhi - vlo) / (hi - lo);
        lines[i] = Line<T>{vlo - s * lo, s};
      }
      auto piece = lower_envelope<T>(lines, lo, hi);
      merged.insert(merged.end(), piece.begin() + (merged.empty() ? 0 : 1), piece.end());
    }
    knots.push_back(simplify_knots(std::move(merged)));
  }
  return PLFunction<T>(g, std::move(knots));
}

template <class T>
T PLScalarMap<T>::operator()(const T& x) const {
  if (knots.size() < 2 || lt(x, knots.front().t) || lt(knots.back().t, x)) {
    throw std::domain_error("scalar map evaluated outside its domain at " + to_text(x));
  }
  for (std::size_t i = 1; i < knots.size(); ++i) {
    if (le(x, knots[i].t)) return interpolate(knots[i - 1], knots[i], x);
  }
  return knots.back().v;
}

template <class T>
PLFunction<T> compose_scalar(const PLFunction<T>& u, const PLScalarMap<T>& h) {
  const auto& g = u.graph();
  std::vector<std::vector<Knot<T>>> knots;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto& ks = u.knots(e);
    std::vector<Knot<T>> out{Knot<T>{ks.front().t, h(ks.front().v)}};
    for (std::size_t i = 1; i < ks.size(); ++i) {
      const auto& a = ks[i - 1];
      const auto& b = ks[i];
      std::vector<Knot<T>> inner;
      if (!(a.v == b.v)) {
        const T lo = min_of<T>(a.v, b.v);
        const T hi = max_of<T>(a.v, b.v);
        for (const auto& hk : h.knots) {
          if (lt(lo, hk.t) && lt(hk.t, hi)) {
            const T t = a.t + (hk.t - a.v) / (b.v - a.v) * (b.t - a.t);
            inner.push_back(Knot<T>{t, hk.v});
          }
        }
        std::sort(inner.begin(), inner.end(), [](const Knot<T>& x, const Knot<T>& y) { return x.t < y.t; });
      }
      for (auto& k : inner) {
        if (lt(out.back().t, k.t) && lt(k.t, b.t)) out.push_back(std::move(k));
      }
      out.push_back(Knot<T>{b.t, h(b.v)});
    }
    knots.push_back(simplify_knots(std::move(out)));
  }
  return PLFunction<T>(u.graph_ptr(), std::move(knots));
}

namespace {

template <class T>
void bisect_segment(const Knot<T>& a, const Knot<T>& b, const SmoothScalarMap& h, double tol,
                    int depth, std::vector<Knot<T>>& out) {
  // a, b carry u-values; out receives h-values. `a` has already been emitted.
  const double ha = h.f(to_double(a.v));
  const double hb = h.f(to_double(b.v));
  double gap = 0.0;
  for (double w : {0.25, 0.5, 0.75}) {
    const double uv = to_double(a.v) + w * (to_double(b.v) - to_double(a.v));
    gap = std::max(gap, std::abs(h.f(uv) - (ha + w * (hb - ha))));
  }
  if (gap > tol && depth < 48) {
    const T tm = (a.t + b.t) / 2;
    const T um = (a.v + b.v) / 2;
    const Knot<T> mid{tm, um};
    bisect_segment(a, mid, h, tol, depth + 1, out);
    bisect_segment(mid, b, h, tol, depth + 1, out);
    return;
  }
  out.push_back(Knot<T>{b.t, from_double<T>(hb)});
}

}  // namespace

template <class T>
PLFunction<T> compose_scalar(const PLFunction<T>& u, const SmoothScalarMap& h, double tolerance) {
  const double lo = to_double(u.min_value());
  const double hi = to_double(u.max_value());
  if (lo < h.domain_lo || hi > h.domain_hi) {
    throw std::domain_error("range [" + to_text(lo) + ", " + to_text(hi) + "] of u leaves the domain of " +
                            h.name);
  }
  const auto& g = u.graph();
  std::vector<std::vector<Knot<T>>> knots;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto& ks = u.knots(e);
    std::vector<Knot<T>> out{Knot<T>{ks.front().t, from_double<T>(h.f(to_double(ks.front().v)))}};
    for (std::size_t i = 1; i < ks.size(); ++i) bisect_segment(ks[i - 1], ks[i], h, tolerance, 0, out);
    knots.push_back(std::move(out));
  }
  return PLFunction<T>(u.graph_ptr(), std::move(knots));
}

template <class T>
std::vector<std::tuple<std::string, double, double>> sample_rows(const PLFunction<T>& u,
                                                                 double step) {
  if (!(step > 0)) throw std::invalid_argument("sampling step must be positive");
  std::vector<std::tuple<std::string, double, double>> rows;
  const auto& g = u.graph();
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto& edge = g.edge(e);
    const double len = to_double(edge.length);
    const auto n = static_cast<std::size_t>(std::ceil(len / step - 1e-9));
    for (std::size_t k = 0; k <= n; ++k) {
      const double t = k == n ? len : static_cast<double>(k) * step;
      const T tt = k == n ? edge.length : from_double<T>(t);
      rows.emplace_back(edge.id, t, to_double(u.on_edge(e, tt)));
    }
  }
  return rows;
}

#define INFLAP_INSTANTIATE(T)                                                                     \
  template class PLFunction<T>;                                                                  \
  template struct PLScalarMap<T>;                                                                \
  template std::vector<Knot<T>> simplify_knots(std::vector<Knot<T>>);                            \
  template std::vector<Knot<T>> lower_envelope(std::span<const Line<T>>, const T&, const T&);    \
  template std::vector<T> outgoing_derivatives(const PLFunction<T>&, const GraphPoint<T>&);      \
  template SlopeTriple<T> slopes_at(const PLFunction<T>&, const GraphPoint<T>&);                 \
  template PLFunction<T> cone_function(const GraphPtr<T>&, const GraphPoint<T>&, const T&,       \
                                       const T&);                                                \
  template PLFunction<T> pointwise_min(std::span<const PLFunction<T>>);                          \
  template PLFunction<T> compose_scalar(const PLFunction<T>&, const PLScalarMap<T>&);            \
  template PLFunction<T> compose_scalar(const PLFunction<T>&, const SmoothScalarMap&, double);   \
  template std::vector<std::tuple<std::string, double, double>> sample_rows(const PLFunction<T>&, \
                                                                            double);

INFLAP_INSTANTIATE(Rational)
INFLAP_INSTANTIATE(double)
#undef INFLAP_INSTANTIATE

}  // namespace inflap
