#include "inflap/dumbbell.hpp"

namespace inflap {

template <class T>
GraphPtr<T> dumbbell_graph() {
  MetricGraph<T> g;
  const auto o = g.add_vertex("O");
  const auto v0 = g.add_vertex("V0");
  const auto vp1 = g.add_vertex("V+1");
  const auto vm1 = g.add_vertex("V-1");
  const auto vp2 = g.add_vertex("V+2");
  const auto vm2 = g.add_vertex("V-2");
  const auto vp3 = g.add_vertex("V+3");
  const auto vm3 = g.add_vertex("V-3");
  g.add_edge("e0", o, v0, T(1));
  g.add_edge("e+1", o, vp1, T(1));
  g.add_edge("e-1", o, vm1, T(1));
  g.add_edge("e+2", vp1, vp2, T(1));
  g.add_edge("e-2", vm1, vm2, T(1));
  g.add_edge("e+3", vp1, vp3, T(3));
  g.add_edge("e-3", vm1, vm3, T(3));
  for (auto v : {v0, vp2, vm2, vp3, vm3}) g.mark_boundary(v);
  return share(std::move(g));
}

namespace {

template <class T>
T q(long p, long d) {
  return T(p) / T(d);
}

/// Knots of t -> a + s t on [0, len].
template <class T>
std::vector<Knot<T>> line(const T& a, const T& s, const T& len) {
  return {{T(0), a}, {len, T(a + s * len)}};
}

/// Knots of t -> peak - s |t - 1| on [0, 3].
template <class T>
std::vector<Knot<T>> tent(const T& peak, const T& s) {
  return {{T(0), T(peak - s)}, {T(1), peak}, {T(3), T(peak - 2 * s)}};
}

template <class T>
std::vector<std::vector<Knot<T>>> knots_for(const MetricGraph<T>& g, bool minus_free) {
  std::vector<std::vector<Knot<T>>> k(g.num_edges());
  k[*g.find_edge("e0")] = line<T>(q<T>(1, 4), q<T>(-1, 4), T(1));
  k[*g.find_edge("e+1")] = line<T>(q<T>(1, 4), q<T>(1, 4), T(1));
  k[*g.find_edge("e+2")] = line<T>(q<T>(1, 2), q<T>(-1, 2), T(1));
  k[*g.find_edge("e+3")] = tent<T>(T(1), q<T>(1, 2));
  if (minus_free) {
    k[*g.find_edge("e-1")] = line<T>(q<T>(1, 4), q<T>(-1, 8), T(1));
    k[*g.find_edge("e-2")] = line<T>(q<T>(1, 8), q<T>(-1, 8), T(1));
    k[*g.find_edge("e-3")] = tent<T>(q<T>(1, 4), q<T>(1, 8));
  } else {
    k[*g.find_edge("e-1")] = line<T>(q<T>(1, 4), q<T>(1, 4), T(1));
    k[*g.find_edge("e-2")] = line<T>(q<T>(1, 2), q<T>(-1, 2), T(1));
    k[*g.find_edge("e-3")] = tent<T>(T(1), q<T>(1, 2));
  }
  return k;
}

}  // namespace

template <class T>
PLFunction<T> dumbbell_ground_state(const GraphPtr<T>& g) {
  return PLFunction<T>(g, knots_for(*g, false));
}

template <class T>
PLFunction<T> dumbbell_ground_state_plus(const GraphPtr<T>& g) {
  return PLFunction<T>(g, knots_for(*g, true));
}

template GraphPtr<Rational> dumbbell_graph<Rational>();
template GraphPtr<double> dumbbell_graph<double>();
template PLFunction<Rational> dumbbell_ground_state(const GraphPtr<Rational>&);
template PLFunction<double> dumbbell_ground_state(const GraphPtr<double>&);
template PLFunction<Rational> dumbbell_ground_state_plus(const GraphPtr<Rational>&);
template PLFunction<double> dumbbell_ground_state_plus(const GraphPtr<double>&);

}  // namespace inflap
