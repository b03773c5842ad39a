#include <doctest.h>

#include <cmath>

#include "inflap/cone_harmonic.hpp"
#include "inflap/distance.hpp"
#include "inflap/dumbbell.hpp"
#include "inflap/eikonal.hpp"
#include "support/dumbbell_reference.hpp"
#include "support/generators.hpp"

using namespace inflap;
using namespace inflap::testing;

namespace {

using Q = Rational;

Q q(long a, long b) { return ratio<Q>(a, b); }

GraphPtr<Q> interval(const Q& length) {
  MetricGraph<Q> g;
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_edge("e", 0, 1, length);
  g.mark_boundary(0);
  g.mark_boundary(1);
  return share(std::move(g));
}

PLFunction<Q> vee(const GraphPtr<Q>& g) {
  return PLFunction<Q>(g, {{{Q(0), q(1, 2)}, {q(1, 2), Q(0)}, {Q(1), q(1, 2)}}});
}

/// A random PL function that is usually not superharmonic: independent
/// vertex values, sometimes with an extra knot in the middle of an edge.
PLFunction<Q> random_pl(const GraphPtr<Q>& g, Rng& rng) {
  std::vector<std::vector<Knot<Q>>> knots(g->num_edges());
  std::vector<Q> at_vertex;
  for (VertexId v = 0; v < g->num_vertices(); ++v) at_vertex.push_back(q(uniform_int(rng, 0, 12), 4));
  for (EdgeId e = 0; e < g->num_edges(); ++e) {
    const auto& edge = g->edge(e);
    knots[e].push_back({Q(0), at_vertex[edge.from]});
    if (uniform_int(rng, 0, 1)) knots[e].push_back({edge.length / 2, q(uniform_int(rng, 0, 12), 4)});
    knots[e].push_back({edge.length, at_vertex[edge.to]});
  }
  return PLFunction<Q>(g, std::move(knots));
}

}  // namespace

TEST_CASE("the bundled closed forms match the written-out ground states") {
  const auto d = dumbbell_graph<Q>();
  const auto u = dumbbell_ground_state(d);
  const auto uy = dumbbell_ground_state_plus(d);
  for (EdgeId e = 0; e < d->num_edges(); ++e) {
    const auto& edge = d->edge(e);
    for (int k = 0; k <= 24; ++k) {
      const Q t = edge.length * q(k, 24);
      CHECK(to_double(u.on_edge(e, t)) == doctest::Approx(reference_u_inf(edge.id, to_double(t))).epsilon(1e-15));
      CHECK(to_double(uy.on_edge(e, t)) ==
            doctest::Approx(reference_u_inf_plus(edge.id, to_double(t))).epsilon(1e-15));
    }
  }
}

TEST_CASE("exact certificate on known functions") {
  const auto d = dumbbell_graph<Q>();
  CHECK(is_inf_superharmonic_exact(boundary_distance_field(d).affine(q(1, 2), Q(0))).pass);
  CHECK(is_inf_superharmonic_exact(dumbbell_ground_state(d)).pass);
  CHECK(is_inf_superharmonic_exact(dumbbell_ground_state_plus(d)).pass);

  const auto g = interval(Q(1));
  const auto r = is_inf_superharmonic_exact(vee(g));
  CHECK_FALSE(r.pass);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].point.param() == q(1, 2));
  CHECK(r.violations[0].defect > 0);

  // At a vertex: derivatives 1, 1, -1 give max + min = 0 (passes); 1, 1, 1/2 do not.
  MetricGraph<Q> star;
  star.add_vertex("c");
  for (int i = 0; i < 3; ++i) {
    star.add_vertex("l" + std::to_string(i));
    star.add_edge("e" + std::to_string(i), 0, static_cast<VertexId>(i + 1), Q(1));
    star.mark_boundary(static_cast<VertexId>(i + 1));
  }
  const auto s = share(std::move(star));
  const std::vector<Q> ok{Q(1), Q(2), Q(2), Q(0)};
  CHECK(is_inf_superharmonic_exact(PLFunction<Q>::from_vertex_values(s, ok)).pass);
  const std::vector<Q> bad{Q(1), Q(2), Q(2), q(3, 2)};
  CHECK_FALSE(is_inf_superharmonic_exact(PLFunction<Q>::from_vertex_values(s, bad)).pass);
}

TEST_CASE("sampled cone comparison on known functions") {
  const auto d = dumbbell_graph<Q>();
  const auto s = cone_comparison_sampled(dumbbell_ground_state(d), 500, 0);
  CHECK(s.pass);
  CHECK(s.trials == 500);

  const auto cone = cone_function(d, parse_point(*d, "e+3@1"), Q(3), q(-1, 2));
  CHECK(cone_comparison_sampled(cone, 500, 1).pass);

  const auto g = interval(Q(1));
  const auto v = cone_comparison_sampled(vee(g), 500, 2);
  CHECK_FALSE(v.pass);
  REQUIRE(v.counterexample);
  CHECK(v.counterexample->defect > 0);
  CHECK(v.counterexample->kappa <= 0);
}

TEST_CASE("sampled results are deterministic in the seed") {
  const auto d = dumbbell_graph<Q>();
  Rng rng(40);
  const auto u = random_pl(d, rng);
  const auto a = cone_comparison_sampled(u, 300, 7);
  const auto b = cone_comparison_sampled(u, 300, 7);
  CHECK(a.pass == b.pass);
  CHECK(a.skipped == b.skipped);
  if (a.counterexample && b.counterexample) CHECK(a.counterexample->defect == b.counterexample->defect);
}

TEST_CASE("exact and sampled checks agree on random instances") {
  Rng rng(41);
  int exact_pass = 0;
  int exact_fail = 0;
  int detected = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const bool tree = trial % 2 == 0;
    const auto g = tree ? random_tree<Q>(rng) : random_graph<Q>(rng, 6);
    PLFunction<Q> u = [&] {
      switch (trial % 4) {
        case 0:
          return random_cone_minimum(g, rng);
        case 1:
          return mcshane_extension(g, random_boundary_data(*g, rng), random_slope<Q>(rng));
        default:
          return random_pl(g, rng);
      }
    }();
    const auto exact = is_inf_superharmonic_exact(u);
    if (exact.pass) {
      ++exact_pass;
      const auto s = cone_comparison_sampled(u, 200, static_cast<std::uint64_t>(trial));
      CHECK_MESSAGE(s.pass, "sampled counterexample for a certified function, trial " << trial);
    } else {
      ++exact_fail;
      const auto s = cone_comparison_sampled(u, 1000, static_cast<std::uint64_t>(trial));
      if (!s.pass) ++detected;
    }
  }
  MESSAGE("certified " << exact_pass << ", rejected " << exact_fail << ", sampled detections " << detected);
  REQUIRE(exact_fail > 50);
  CHECK(detected >= 0.95 * exact_fail);
}

TEST_CASE("minima of certified functions stay certified") {
  Rng rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = random_tree<Q>(rng);
    std::vector<PLFunction<Q>> parts;
    const int k = uniform_int(rng, 1, 10);
    for (int i = 0; i < k; ++i) {
      auto part = i % 2 ? random_cone_minimum(g, rng, 2)
                        : mcshane_extension(g, random_boundary_data(*g, rng), random_slope<Q>(rng));
      REQUIRE(is_inf_superharmonic_exact(part).pass);
      parts.push_back(std::move(part));
    }
    CHECK(is_inf_superharmonic_exact(pointwise_min<Q>(parts)).pass);
  }
}

TEST_CASE("Harnack inequality on simple functions") {
  const auto g = interval(Q(10));
  const PLFunction<Q> x(g, {{{Q(0), Q(0)}, {Q(10), Q(10)}}});
  const auto center = GraphPoint<Q>::on_edge(*g, 0, q(49, 10));
  auto r = harnack_check(x, center, q(41, 10), Q(1), 100, 0);
  CHECK(r.status == Status::kPass);
  CHECK(r.max_ratio == doctest::Approx(5.9 / 3.9));
  CHECK(r.witnesses.empty());

  const auto c = x.affine(Q(0), Q(2));
  r = harnack_check(c, center, Q(4), q(9, 10), 100, 0);
  CHECK(r.status == Status::kPass);
  CHECK(r.max_ratio == doctest::Approx(1.0));

  CHECK(harnack_check(x, center, Q(4), q(9, 10), 100, 0).status == Status::kPass);
  CHECK(harnack_check(x, center, Q(4), q(11, 10), 100, 0).status == Status::kInapplicable);  // 4r > R
  CHECK(harnack_check(x, center, Q(5), Q(1), 100, 0).status == Status::kInapplicable);       // leaves domain
  CHECK(harnack_check(x.affine(Q(1), Q(-3)), center, Q(4), q(9, 10), 100, 0).status == Status::kInapplicable);
}

TEST_CASE("Harnack inequality on random cone minima") {
  Rng rng(43);
  std::size_t admissible = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = random_tree<Q>(rng);
    const auto u = random_cone_minimum(g, rng);
    const auto dist = boundary_distance_field(g);
    for (int k = 0; k < 5; ++k) {
      const auto x0 = random_point(*g, rng);
      const Q room = dist(x0);
      if (room == 0) continue;
      const Q outer = room * q(uniform_int(rng, 4, 8), 8);
      const Q inner = outer * q(uniform_int(rng, 1, 24), 100);
      const auto r = harnack_check(u, x0, outer, inner, 100, static_cast<std::uint64_t>(trial));
      REQUIRE(r.status != Status::kFail);
      if (r.status != Status::kPass) continue;
      ++admissible;
      worst = std::max(worst, r.max_ratio);
      // Independent look at the inner ball by dense sampling.
      const auto ball = closed_ball(g, x0, inner);
      double lo = std::numeric_limits<double>::infinity();
      double hi = 0.0;
      for (const auto& y : sample_region(*g, ball, 400, rng)) {
        lo = std::min(lo, to_double(u(y)));
        hi = std::max(hi, to_double(u(y)));
      }
      CHECK(hi <= 3 * lo);
      if (lo > 0) CHECK(hi / lo <= r.max_ratio * (1 + 1e-12));
    }
  }
  MESSAGE("admissible configurations " << admissible << ", largest ratio " << worst);
  CHECK(admissible > 100);
}

TEST_CASE("regularity of known functions") {
  const auto d = dumbbell_graph<Q>();
  auto r = regularity_checks(boundary_distance_field(d).affine(q(1, 2), Q(0)), 200, 0);
  CHECK(r.status == Status::kPass);
  r = regularity_checks(dumbbell_ground_state(d), 200, 0);
  CHECK(r.status == Status::kPass);
  CHECK(r.lipschitz_pairs > 0);

  const auto u = dumbbell_ground_state(d);
  for (const char* p : {"e+3@1", "e-3@1"}) {
    const auto s = slopes_at(u, parse_point(*d, p));
    CHECK(s.subslope == q(1, 2));
    CHECK(s.superslope == 0);
  }
  for (const char* p : {"e0@1/2", "e+1@1/3", "e-2@1/2", "e+3@2"}) {
    const auto s = slopes_at(u, parse_point(*d, p));
    CHECK(s.slope == s.subslope);
  }

  const auto cone = cone_function(d, parse_point(*d, "O"), Q(3), q(-3, 4));
  CHECK(regularity_checks(cone, 100, 0).status == Status::kPass);
  for (const char* p : {"e0@1/2", "e+3@2", "V+1"}) {
    const auto s = slopes_at(cone, parse_point(*d, p));
    CHECK(s.slope == q(3, 4));
    CHECK(s.subslope == q(3, 4));
  }

  const auto g = interval(Q(1));
  CHECK(regularity_checks(vee(g), 100, 0).status == Status::kInapplicable);
}

TEST_CASE("composition with increasing concave maps") {
  const auto g = interval(Q(2));
  const auto v = boundary_distance_field(g).affine(Q(1), Q(1));
  const SmoothScalarMap root{"sqrt", [](double t) { return std::sqrt(t); },
                             [](double t) { return 0.5 / std::sqrt(t); },
                             [](double t) { return -0.25 / (t * std::sqrt(t)); }, 0.0, 1e300};
  auto r = composition_check(v, root);
  CHECK(r.status == Status::kPass);
  CHECK_FALSE(r.affine);
  CHECK(r.composed.pass);

  const SmoothScalarMap affine{"3t+1", [](double t) { return 3 * t + 1; }, [](double) { return 3.0; },
                               [](double) { return 0.0; }};
  r = composition_check(v, affine);
  CHECK(r.status == Status::kPass);
  CHECK(r.affine);

  // A numeric second derivative is used when none is supplied.
  const SmoothScalarMap log_map{"log", [](double t) { return std::log(t); }, nullptr, nullptr, 1e-300, 1e300};
  CHECK(composition_check(v, log_map).status == Status::kPass);

  const auto tent = boundary_distance_field(g).affine(Q(1), Q(1));
  const SmoothScalarMap square{"t^2", [](double t) { return t * t; }, [](double t) { return 2 * t; },
                               [](double) { return 2.0; }};
  r = composition_check(tent, square);
  CHECK(r.status == Status::kInapplicable);
  CHECK_FALSE(r.composed.pass);
  // (t + 1)^2 is convex along each leg; the peak itself stays a concave kink.
  REQUIRE_FALSE(r.composed.violations.empty());
  for (const auto& w : r.composed.violations) CHECK(w.point.param() != 1);

  const auto positive_only = boundary_distance_field(g);
  CHECK(composition_check(positive_only, root).status == Status::kInapplicable);  // v = 0 at the ends
}
