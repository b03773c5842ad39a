#include "inflap/eikonal.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "inflap/distance.hpp"

namespace inflap {

std::string_view to_string(MongeClass c) {
  switch (c) {
    case MongeClass::kSolution:
      return "solution";
    case MongeClass::kSupersolution:
      return "supersolution";
    case MongeClass::kSubsolution:
      return "subsolution";
    case MongeClass::kNeither:
      return "neither";
  }
  return "?";
}

template <class T>
PLFunction<T> mcshane_extension(const GraphPtr<T>& g, const BoundaryData<T>& data,
                                const T& lambda) {
  if (!(lambda > 0)) throw std::invalid_argument("lambda must be positive");
  std::vector<Seed<T>> seeds;
  for (VertexId y : g->boundary_vertices()) {
    auto it = data.find(y);
    if (it == data.end()) {
      throw std::invalid_argument("missing boundary value at '" + g->vertex_name(y) + "'");
    }
    seeds.push_back(Seed<T>{y, it->second});
  }
  return potential_field<T>(g, seeds, lambda);
}

template <class T>
std::vector<Attainment<T>> boundary_attainment(const PLFunction<T>& u, const BoundaryData<T>& data) {
  std::vector<Attainment<T>> out;
  for (const auto& [y, gy] : data) {
    const T value = u.at_vertex(y);
    out.push_back(Attainment<T>{y, gy, value, near(value, gy)});
  }
  return out;
}

template <class T>
DppReport<T> dpp_check(const PLFunction<T>& u, const T& lambda, const Region<T>& subdomain,
                       std::size_t samples, std::uint64_t seed, std::size_t grid_points) {
  const auto& g = u.graph();
  if (subdomain.empty()) throw std::invalid_argument("subdomain is empty");
  if (touches_boundary(g, subdomain)) {
    throw std::invalid_argument("subdomain is not compactly contained in the domain");
  }
  std::vector<GraphPoint<T>> candidates = region_boundary(g, subdomain);
  const T total = subdomain.length();
  for (const auto& part : subdomain.parts()) {
    const double share = to_double(T((part.hi - part.lo) / total));
    const auto n = std::max<std::size_t>(1, static_cast<std::size_t>(share * static_cast<double>(grid_points)));
    for (std::size_t k = 0; k <= n; ++k) {
      const T t = part.lo + (part.hi - part.lo) * T(static_cast<long>(k)) / T(static_cast<long>(n));
      candidates.push_back(GraphPoint<T>::on_edge(g, part.edge, t));
    }
  }
  std::vector<T> cand_values;
  for (const auto& z : candidates) cand_values.push_back(u(z));

  std::mt19937_64 rng(seed);
  DppReport<T> report;
  report.samples = samples;
  report.candidates = candidates.size();
  report.max_defect = T(0);
  for (const auto& x : sample_region(g, subdomain, samples, rng)) {
    const auto dx = distance_field(u.graph_ptr(), x);
    T best = cand_values[0] + lambda * dx(candidates[0]);
    for (std::size_t i = 1; i < candidates.size(); ++i) {
      best = min_of<T>(best, cand_values[i] + lambda * dx(candidates[i]));
    }
    const T defect = abs_of<T>(u(x) - best);
    if (report.max_defect < defect) report.max_defect = defect;
    if (lt(T(0), defect)) report.witnesses.push_back(Witness<T>{x, defect});
  }
  return report;
}

namespace {

template <class T>
std::vector<GraphPoint<T>> domain_probe_points(const PLFunction<T>& u) {
  const auto& g = u.graph();
  std::vector<GraphPoint<T>> pts;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!g.is_boundary(v) && !g.incident(v).empty()) pts.push_back(GraphPoint<T>::at_vertex(v));
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto& ks = u.knots(e);
    for (std::size_t i = 0; i + 1 < ks.size(); ++i) {
      if (i > 0) pts.push_back(GraphPoint<T>::on_edge(g, e, ks[i].t));
      pts.push_back(GraphPoint<T>::on_edge(g, e, T((ks[i].t + ks[i + 1].t) / 2)));
    }
  }
  return pts;
}

}  // namespace

template <class T>
MongeReport<T> monge_classify(const PLFunction<T>& u, const T& lambda) {
  MongeReport<T> report;
  report.cls = MongeClass::kSolution;
  for (const auto& x : domain_probe_points(u)) {
    ++report.points_checked;
    const T sub = slopes_at(u, x).subslope;
    if (lt(sub, lambda)) report.below.push_back(Witness<T>{x, T(lambda - sub)});
    if (lt(lambda, sub)) report.above.push_back(Witness<T>{x, T(sub - lambda)});
  }
  const bool super = report.below.empty();
  const bool sub = report.above.empty();
  if (super && sub) {
    report.cls = MongeClass::kSolution;
  } else if (super) {
    report.cls = MongeClass::kSupersolution;
  } else if (sub) {
    report.cls = MongeClass::kSubsolution;
  } else {
    report.cls = MongeClass::kNeither;
  }
  return report;
}

template <class T>
ComparisonReport<T> comparison_harness(const PLFunction<T>& u, const PLFunction<T>& v,
                                       const T& lambda, std::size_t samples, std::uint64_t seed) {
  ComparisonReport<T> report;
  if (u.graph_ptr() != v.graph_ptr()) {
    report.reason = "u and v live on different graphs";
    return report;
  }
  const auto& g = u.graph();
  const auto cu = monge_classify(u, lambda).cls;
  const auto cv = monge_classify(v, lambda).cls;
  if (cu != MongeClass::kSubsolution && cu != MongeClass::kSolution) {
    report.reason = "u is not a Monge subsolution (" + std::string(to_string(cu)) + ")";
    return report;
  }
  if (cv != MongeClass::kSupersolution && cv != MongeClass::kSolution) {
    report.reason = "v is not a Monge supersolution (" + std::string(to_string(cv)) + ")";
    return report;
  }
  for (VertexId y : g.boundary_vertices()) {
    if (lt(v.at_vertex(y), u.at_vertex(y))) {
      report.reason = "u > v at boundary vertex '" + g.vertex_name(y) + "'";
      return report;
    }
  }
  auto check = [&](const GraphPoint<T>& x) {
    ++report.points_checked;
    const T diff = u(x) - v(x);
    if (lt(T(0), diff)) report.witnesses.push_back(Witness<T>{x, diff});
  };
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    for (const auto* f : {&u, &v}) {
      for (const auto& k : f->knots(e)) check(GraphPoint<T>::on_edge(g, e, k.t));
    }
  }
  std::mt19937_64 rng(seed);
  for (const auto& x : sample_graph(g, samples, rng)) check(x);
  report.status = report.witnesses.empty() ? Status::kPass : Status::kFail;
  return report;
}

#define INFLAP_INSTANTIATE(T)                                                                       \
  template PLFunction<T> mcshane_extension(const GraphPtr<T>&, const BoundaryData<T>&, const T&);  \
  template std::vector<Attainment<T>> boundary_attainment(const PLFunction<T>&,                    \
                                                          const BoundaryData<T>&);                 \
  template DppReport<T> dpp_check(const PLFunction<T>&, const T&, const Region<T>&, std::size_t,   \
                                  std::uint64_t, std::size_t);                                     \
  template MongeReport<T> monge_classify(const PLFunction<T>&, const T&);                          \
  template ComparisonReport<T> comparison_harness(const PLFunction<T>&, const PLFunction<T>&,      \
                                                  const T&, std::size_t, std::uint64_t);

INFLAP_INSTANTIATE(Rational)
INFLAP_INSTANTIATE(double)
#undef INFLAP_INSTANTIATE

}  // namespace inflap
