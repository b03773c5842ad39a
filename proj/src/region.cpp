#include "inflap/region.hpp"

#include <algorithm>

#include "inflap/distance.hpp"

namespace inflap {

template <class T>
Region<T>::Region(const MetricGraph<T>& g, std::vector<Interval<T>> parts) {
  for (auto& p : parts) {
    if (p.edge >= g.num_edges()) throw InvalidPoint("region references an unknown edge");
    const T& len = g.edge(p.edge).length;
    if (lt(p.hi, p.lo) || lt(p.lo, T(0)) || lt(len, p.hi)) {
      throw InvalidPoint("region interval outside edge '" + g.edge(p.edge).id + "'");
    }
    if (near(p.lo, T(0))) p.lo = T(0);
    if (near(p.hi, len)) p.hi = len;
  }
  std::sort(parts.begin(), parts.end(), [](const Interval<T>& a, const Interval<T>& b) {
    return a.edge != b.edge ? a.edge < b.edge : a.lo < b.lo;
  });
  for (auto& p : parts) {
    if (!parts_.empty() && parts_.back().edge == p.edge && le(p.lo, parts_.back().hi)) {
      parts_.back().hi = max_of<T>(parts_.back().hi, p.hi);
    } else {
      parts_.push_back(std::move(p));
    }
  }
}

template <class T>
T Region<T>::length() const {
  T total(0);
  for (const auto& p : parts_) total += p.hi - p.lo;
  return total;
}

template <class T>
bool Region<T>::contains(const MetricGraph<T>& g, const GraphPoint<T>& p) const {
  for (const auto& part : parts_) {
    const auto t = p.param_on(g, part.edge);
    if (t && le(part.lo, *t) && le(*t, part.hi)) return true;
    // A vertex that closes a self-loop sits at both ends.
    const auto& e = g.edge(part.edge);
    if (p.is_vertex() && e.from == e.to && e.to == p.vertex() && near(part.hi, e.length)) return true;
  }
  return false;
}

template <class T>
Region<T> sublevel_region(const PLFunction<T>& d, const T& radius) {
  const auto& g = d.graph_ptr();
  std::vector<Interval<T>> parts;
  for (EdgeId e = 0; e < g->num_edges(); ++e) {
    const auto& ks = d.knots(e);
    for (std::size_t i = 1; i < ks.size(); ++i) {
      const auto& a = ks[i - 1];
      const auto& b = ks[i];
      const bool ain = le(a.v, radius);
      const bool bin = le(b.v, radius);
      if (ain && bin) {
        parts.push_back({e, a.t, b.t});
      } else if (ain) {
        parts.push_back({e, a.t, T(a.t + (radius - a.v) / (b.v - a.v) * (b.t - a.t))});
      } else if (bin) {
        parts.push_back({e, T(a.t + (radius - a.v) / (b.v - a.v) * (b.t - a.t)), b.t});
      }
    }
  }
  return Region<T>(*g, std::move(parts));
}

template <class T>
Region<T> closed_ball(const GraphPtr<T>& g, const GraphPoint<T>& center, const T& radius) {
  return sublevel_region(distance_field(g, center), radius);
}

template <class T>
std::vector<GraphPoint<T>> region_boundary(const MetricGraph<T>& g, const Region<T>& region) {
  auto covers_end = [&](const EdgeEnd& end) {
    const T at = end.at_start ? T(0) : g.edge(end.edge).length;
    for (const auto& p : region.parts()) {
      if (p.edge == end.edge && le(p.lo, at) && le(at, p.hi)) return true;
    }
    return false;
  };
  std::vector<GraphPoint<T>> out;
  for (const auto& p : region.parts()) {
    for (const T* t : {&p.lo, &p.hi}) {
      const auto pt = GraphPoint<T>::on_edge(g, p.edge, *t);
      if (pt.is_vertex()) {
        const auto& ends = g.incident(pt.vertex());
        if (std::all_of(ends.begin(), ends.end(), covers_end)) continue;
      }
      out.push_back(pt);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <class T>
bool touches_boundary(const MetricGraph<T>& g, const Region<T>& region) {
  for (const auto& p : region.parts()) {
    const auto& e = g.edge(p.edge);
    if (g.is_boundary(e.from) && near(p.lo, T(0))) return true;
    if (g.is_boundary(e.to) && near(p.hi, e.length)) return true;
  }
  return false;
}

template <class T>
std::vector<GraphPoint<T>> sample_region(const MetricGraph<T>& g, const Region<T>& region,
                                         std::size_t count, std::mt19937_64& rng) {
  std::vector<GraphPoint<T>> out;
  if (region.empty() || count == 0) return out;
  std::vector<double> weights;
  for (const auto& p : region.parts()) weights.push_back(to_double(T(p.hi - p.lo)));
  const bool degenerate = std::all_of(weights.begin(), weights.end(), [](double w) { return w <= 0; });
  if (degenerate) std::fill(weights.begin(), weights.end(), 1.0);
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const auto& p = region.parts()[pick(rng)];
    T t = p.lo + from_double<T>(unit(rng)) * (p.hi - p.lo);
    out.push_back(GraphPoint<T>::on_edge(g, p.edge, t));
  }
  return out;
}

template <class T>
std::vector<GraphPoint<T>> sample_graph(const MetricGraph<T>& g, std::size_t count,
                                        std::mt19937_64& rng) {
  std::vector<Interval<T>> all;
  for (EdgeId e = 0; e < g.num_edges(); ++e) all.push_back({e, T(0), g.edge(e).length});
  return sample_region(g, Region<T>(g, std::move(all)), count, rng);
}

#define INFLAP_INSTANTIATE(T)                                                                    \
  template class Region<T>;                                                                     \
  template Region<T> sublevel_region(const PLFunction<T>&, const T&);                          \
  template Region<T> closed_ball(const GraphPtr<T>&, const GraphPoint<T>&, const T&);           \
  template std::vector<GraphPoint<T>> region_boundary(const MetricGraph<T>&, const Region<T>&); \
  template bool touches_boundary(const MetricGraph<T>&, const Region<T>&);                      \
  template std::vector<GraphPoint<T>> sample_region(const MetricGraph<T>&, const Region<T>&,    \
                                                    std::size_t, std::mt19937_64&);             \
  template std::vector<GraphPoint<T>> sample_graph(const MetricGraph<T>&, std::size_t,          \
                                                   std::mt19937_64&);

INFLAP_INSTANTIATE(Rational)
INFLAP_INSTANTIATE(double)
#undef INFLAP_INSTANTIATE

}  // namespace inflap
