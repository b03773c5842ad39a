#include "inflap/cone_harmonic.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "inflap/distance.hpp"

namespace inflap {

namespace {

template <class T>
T segment_slope(const Knot<T>& a, const Knot<T>& b) {
  return (b.v - a.v) / (b.t - a.t);
}

/// a > b by more than `tolerance` (and the field slack).
template <class T>
bool exceeds(const T& a, const T& b, double tolerance) {
  if (tolerance == 0.0) return lt(b, a);
  return lt(T(b + from_double<T>(tolerance)), a);
}

template <class T>
std::pair<T, T> extremes_on(const PLFunction<T>& u, const Region<T>& region) {
  const auto& g = u.graph();
  bool first = true;
  T lo(0);
  T hi(0);
  auto take = [&](const T& v) {
    if (first) {
      lo = hi = v;
      first = false;
    } else {
      lo = min_of<T>(lo, v);
      hi = max_of<T>(hi, v);
    }
  };
  for (const auto& part : region.parts()) {
    take(u.on_edge(part.edge, part.lo));
    take(u.on_edge(part.edge, part.hi));
    for (const auto& k : u.knots(part.edge)) {
      if (le(part.lo, k.t) && le(k.t, part.hi)) take(k.v);
    }
  }
  (void)g;
  return {lo, hi};
}

template <class T>
std::vector<GraphPoint<T>> knots_inside(const PLFunction<T>& u, const Region<T>& region) {
  std::vector<GraphPoint<T>> out;
  for (const auto& part : region.parts()) {
    for (const auto& k : u.knots(part.edge)) {
      if (le(part.lo, k.t) && le(k.t, part.hi)) {
        out.push_back(GraphPoint<T>::on_edge(u.graph(), part.edge, k.t));
      }
    }
  }
  return out;
}

template <class T>
std::vector<GraphPoint<T>> domain_breakpoints(const PLFunction<T>& u) {
  const auto& g = u.graph();
  std::vector<GraphPoint<T>> pts;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!g.is_boundary(v) && !g.incident(v).empty()) pts.push_back(GraphPoint<T>::at_vertex(v));
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto& ks = u.knots(e);
    for (std::size_t i = 1; i + 1 < ks.size(); ++i) pts.push_back(GraphPoint<T>::on_edge(g, e, ks[i].t));
  }
  return pts;
}

}  // namespace

template <class T>
SuperharmonicReport<T> is_inf_superharmonic_exact(const PLFunction<T>& u, double tolerance) {
  const auto& g = u.graph();
  SuperharmonicReport<T> report;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto& ks = u.knots(e);
    for (std::size_t i = 1; i + 1 < ks.size(); ++i) {
      const T left = segment_slope(ks[i - 1], ks[i]);
      const T right = segment_slope(ks[i], ks[i + 1]);
      if (exceeds(right, left, tolerance)) {
        report.violations.push_back(Witness<T>{GraphPoint<T>::on_edge(g, e, ks[i].t), T(right - left)});
      }
    }
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.is_boundary(v) || g.incident(v).empty()) continue;
    const auto x = GraphPoint<T>::at_vertex(v);
    const auto ds = outgoing_derivatives(u, x);
    const auto [lo, hi] = std::minmax_element(ds.begin(), ds.end());
    const T midrange = *hi + *lo;
    if (exceeds(midrange, T(0), tolerance)) report.violations.push_back(Witness<T>{x, midrange});
  }
  report.pass = report.violations.empty();
  return report;
}

template <class T>
ConeSampleReport<T> cone_comparison_sampled(const PLFunction<T>& u, std::size_t trials,
                                            std::uint64_t seed, std::size_t points_per_trial) {
  const auto& gp = u.graph_ptr();
  const auto& g = *gp;
  const auto bdist = boundary_distance_field(gp);
  const double lip = to_double(u.lipschitz_constant());
  std::vector<VertexId> domain_vertices;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!g.is_boundary(v) && !g.incident(v).empty()) domain_vertices.push_back(v);
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<EdgeId> pick_edge(0, g.num_edges() - 1);
  ConeSampleReport<T> report;

  for (std::size_t trial = 0; trial < trials; ++trial) {
    ++report.trials;
    Region<T> subdomain;
    if (unit(rng) < 0.5) {
      const auto center = sample_graph(g, 1, rng).front();
      const T room = bdist(center);
      if (!(room > 0)) {
        ++report.skipped;
        continue;
      }
      subdomain = closed_ball(gp, center, T(room * from_double<T>(0.05 + 0.9 * unit(rng))));
    } else {
      const EdgeId e = pick_edge(rng);
      const T& len = g.edge(e).length;
      T a = len * from_double<T>(unit(rng));
      T b = len * from_double<T>(unit(rng));
      if (b < a) std::swap(a, b);
      if (!lt(a, b)) {
        ++report.skipped;
        continue;
      }
      subdomain = Region<T>(g, {Interval<T>{e, a, b}});
    }
    if (touches_boundary(g, subdomain)) {
      ++report.skipped;
      continue;
    }
    const auto rim = region_boundary(g, subdomain);
    if (rim.empty()) {
      ++report.skipped;
      continue;
    }

    std::optional<GraphPoint<T>> apex;
    for (int attempt = 0; attempt < 20 && !apex; ++attempt) {
      GraphPoint<T> cand = (unit(rng) < 0.25 && !domain_vertices.empty())
                               ? GraphPoint<T>::at_vertex(domain_vertices[static_cast<std::size_t>(
                                     unit(rng) * static_cast<double>(domain_vertices.size())) %
                                                                         domain_vertices.size()])
                               : sample_graph(g, 1, rng).front();
      if (cand.is_vertex() && g.is_boundary(cand.vertex())) continue;
      const bool on_rim = std::find(rim.begin(), rim.end(), cand) != rim.end();
      if (subdomain.contains(g, cand) && !on_rim) continue;
      apex = cand;
    }
    if (!apex) {
      ++report.skipped;
      continue;
    }

    const T kappa = unit(rng) < 0.25 ? T(0) : from_double<T>(-(1.5 * lip + 0.1) * unit(rng));
    const auto d = distance_field(gp, *apex);
    T offset = u(rim[0]) - kappa * d(rim[0]);
    for (std::size_t i = 1; i < rim.size(); ++i) offset = min_of<T>(offset, u(rim[i]) - kappa * d(rim[i]));

    auto points = sample_region(g, subdomain, points_per_trial, rng);
    for (auto& k : knots_inside(u, subdomain)) points.push_back(std::move(k));
    for (const auto& z : points) {
      const T phi = offset + kappa * d(z);
      const T uz = u(z);
      if (lt(uz, phi)) {
        report.pass = false;
        report.counterexample = ConeCounterexample<T>{*apex, kappa, offset, subdomain, z, T(phi - uz)};
        return report;
      }
    }
  }
  return report;
}

template <class T>
HarnackReport<T> harnack_check(const PLFunction<T>& u, const GraphPoint<T>& center,
                               const T& outer_radius, const T& inner_radius, std::size_t samples,
                               std::uint64_t seed) {
  HarnackReport<T> report;
  const auto& gp = u.graph_ptr();
  const auto& g = *gp;
  if (!(inner_radius > 0) || !(T(4 * inner_radius) < outer_radius)) {
    report.reason = "requires 0 < 4r < R";
    return report;
  }
  if (lt(boundary_distance_field(gp)(center), outer_radius)) {
    report.reason = "ball of radius R leaves the domain";
    return report;
  }
  const auto d = distance_field(gp, center);
  const auto [outer_min, outer_max] = extremes_on(u, sublevel_region(d, outer_radius));
  (void)outer_max;
  if (lt(outer_min, T(0))) {
    report.reason = "u is negative on the ball of radius R";
    return report;
  }
  const auto inner = sublevel_region(d, inner_radius);
  const auto [lo, hi] = extremes_on(u, inner);
  report.max_ratio = lo > 0 ? to_double(hi) / to_double(lo)
                            : (hi > 0 ? std::numeric_limits<double>::infinity() : 1.0);

  std::mt19937_64 rng(seed);
  const auto xs = sample_region(g, inner, samples, rng);
  const auto ys = sample_region(g, inner, samples, rng);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    ++report.pairs;
    if (lt(T(3 * u(xs[i])), u(ys[i]))) report.witnesses.emplace_back(xs[i], ys[i]);
  }
  if (lt(T(3 * lo), hi)) {
    // Exact extremes over the inner ball also violate; report the pair.
    GraphPoint<T> argmin = center;
    GraphPoint<T> argmax = center;
    for (const auto& p : knots_inside(u, inner)) {
      if (u(p) == lo) argmin = p;
      if (u(p) == hi) argmax = p;
    }
    for (const auto& p : region_boundary(g, inner)) {
      if (u(p) == lo) argmin = p;
      if (u(p) == hi) argmax = p;
    }
    report.witnesses.emplace_back(argmin, argmax);
  }
  report.status = report.witnesses.empty() ? Status::kPass : Status::kFail;
  return report;
}

template <class T>
RegularityReport<T> regularity_checks(const PLFunction<T>& u, std::size_t samples,
                                      std::uint64_t seed) {
  RegularityReport<T> report;
  if (!is_inf_superharmonic_exact(u).pass) {
    report.reason = "u is not infinity-superharmonic";
    return report;
  }
  const auto& gp = u.graph_ptr();
  const auto& g = *gp;
  const auto bdist = boundary_distance_field(gp);
  const T inf_u = u.min_value();

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.05, 0.95);
  for (std::size_t k = 0; k < samples; ++k) {
    const auto x = sample_graph(g, 1, rng).front();
    const T room = bdist(x);
    if (!(room > 0)) continue;
    const T r = room / 2 * from_double<T>(unit(rng));
    const auto dx = distance_field(gp, x);
    const auto ball = sublevel_region(dx, r);
    const auto y = sample_region(g, ball, 1, rng).front();
    const T dxy = dx(y);
    if (!(dxy < r)) continue;
    ++report.lipschitz_pairs;
    const T ux = u(x);
    const T uy = u(y);
    const T lhs = abs_of<T>(ux - uy);
    const T rhs = (max_of<T>(ux, uy) - inf_u) / r * dxy;
    if (lt(rhs, lhs)) report.lipschitz_violations.push_back(Witness<T>{y, T(lhs - rhs)});
  }

  for (const auto& x : domain_breakpoints(u)) {
    const auto s = slopes_at(u, x);
    if (!near(s.slope, s.subslope)) report.slope_mismatches.push_back(Witness<T>{x, T(s.slope - s.subslope)});
    for (const auto& gdir : outgoing_derivatives(u, x)) {
      const T adjacent = abs_of<T>(gdir);
      if (lt(s.subslope, adjacent)) {
        report.semicontinuity_violations.push_back(Witness<T>{x, T(adjacent - s.subslope)});
      }
    }
  }
  // Segment interiors: the slope and subslope are both |segment slope|.
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto& ks = u.knots(e);
    for (std::size_t i = 0; i + 1 < ks.size(); ++i) {
      const auto mid = GraphPoint<T>::on_edge(g, e, T((ks[i].t + ks[i + 1].t) / 2));
      const auto s = slopes_at(u, mid);
      if (!near(s.slope, s.subslope)) report.slope_mismatches.push_back(Witness<T>{mid, T(s.slope - s.subslope)});
    }
  }
  const bool ok = report.lipschitz_violations.empty() && report.slope_mismatches.empty() &&
                  report.semicontinuity_violations.empty();
  report.status = ok ? Status::kPass : Status::kFail;
  return report;
}

template <class T>
CompositionReport<T> composition_check(const PLFunction<T>& v, const SmoothScalarMap& h,
                                       double tolerance) {
  CompositionReport<T> report;
  if (!(v.min_value() > 0)) {
    report.reason = "v must be positive";
    return report;
  }
  if (!is_inf_superharmonic_exact(v).pass) {
    report.reason = "v is not infinity-superharmonic";
    return report;
  }
  const double lo = to_double(v.min_value());
  const double hi = to_double(v.max_value());
  auto d1 = [&](double x) {
    if (h.df) return h.df(x);
    const double step = 1e-6 * std::max(1.0, std::abs(x));
    return (h.f(x + step) - h.f(x - step)) / (2 * step);
  };
  auto d2 = [&](double x) {
    if (h.d2f) return h.d2f(x);
    const double step = 1e-4 * std::max(1.0, std::abs(x));
    return (h.f(x + step) - 2 * h.f(x) + h.f(x - step)) / (step * step);
  };
  bool increasing = true;
  bool concave = true;
  bool flat = true;
  constexpr int kProbes = 1001;
  for (int i = 0; i < kProbes; ++i) {
    const double x = lo + (hi - lo) * i / (kProbes - 1);
    const double first = d1(x);
    const double second = d2(x);
    if (!(first > 0)) increasing = false;
    if (second > 1e-12) concave = false;
    if (std::abs(second) > 1e-12) flat = false;
  }
  report.affine = flat;
  report.composed = is_inf_superharmonic_exact(compose_scalar(v, h, tolerance), tolerance);
  if (!increasing || !concave) {
    report.reason = !increasing ? "h' > 0 fails on the range of v" : "h'' < 0 fails on the range of v";
    report.status = Status::kInapplicable;
    return report;
  }
  if (flat) report.reason = "h'' = 0 on the range: affine boundary case";
  report.status = report.composed.pass ? Status::kPass : Status::kFail;
  return report;
}

#define INFLAP_INSTANTIATE(T)                                                                        \
  template SuperharmonicReport<T> is_inf_superharmonic_exact(const PLFunction<T>&, double);         \
  template ConeSampleReport<T> cone_comparison_sampled(const PLFunction<T>&, std::size_t,           \
                                                       std::uint64_t, std::size_t);                 \
  template HarnackReport<T> harnack_check(const PLFunction<T>&, const GraphPoint<T>&, const T&,     \
                                          const T&, std::size_t, std::uint64_t);                    \
  template RegularityReport<T> regularity_checks(const PLFunction<T>&, std::size_t, std::uint64_t); \
  template CompositionReport<T> composition_check(const PLFunction<T>&, const SmoothScalarMap&,     \
                                                  double);

INFLAP_INSTANTIATE(Rational)
INFLAP_INSTANTIATE(double)
#undef INFLAP_INSTANTIATE

}  // namespace inflap
