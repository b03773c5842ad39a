#include <doctest.h>

#include <thread>

#include "inflap/distance.hpp"
#include "inflap/dumbbell.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace inflap;
using namespace inflap::testing;

namespace {

template <class T>
GraphPtr<T> interval(const T& length) {
  MetricGraph<T> g;
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_edge("e", 0, 1, length);
  g.mark_boundary(0);
  g.mark_boundary(1);
  return share(std::move(g));
}

template <class T>
GraphPoint<T> at(const MetricGraph<T>& g, const std::string& text) {
  return parse_point(g, text);
}

}  // namespace

TEST_CASE("validate accepts the dumbbell and names broken invariants") {
  CHECK(validate(*dumbbell_graph<Rational>()).empty());

  MetricGraph<Rational> zero;
  zero.add_vertex("a");
  zero.add_vertex("b");
  zero.add_edge("e", 0, 1, Rational(0));
  zero.mark_boundary(0);
  auto v = validate(zero);
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().invariant == "nonpositive edge length");

  MetricGraph<Rational> split;
  for (const char* n : {"a", "b", "c", "d"}) split.add_vertex(n);
  split.add_edge("e1", 0, 1, Rational(1));
  split.add_edge("e2", 2, 3, Rational(1));
  split.mark_boundary(0);
  split.mark_boundary(2);
  v = validate(split);
  CHECK(std::any_of(v.begin(), v.end(), [](const Violation& x) { return x.invariant == "graph not connected"; }));

  MetricGraph<Rational> no_boundary;
  no_boundary.add_vertex("a");
  no_boundary.add_vertex("b");
  no_boundary.add_edge("e", 0, 1, Rational(1));
  v = validate(no_boundary);
  CHECK(std::any_of(v.begin(), v.end(), [](const Violation& x) { return x.invariant == "boundary is empty"; }));
}

TEST_CASE("points at edge ends collapse to vertices") {
  const auto g = dumbbell_graph<Rational>();
  const EdgeId e3 = *g->find_edge("e+3");
  CHECK(GraphPoint<Rational>::on_edge(*g, e3, Rational(0)) == GraphPoint<Rational>::at_vertex(*g->find_vertex("V+1")));
  CHECK(GraphPoint<Rational>::on_edge(*g, e3, Rational(3)) == GraphPoint<Rational>::at_vertex(*g->find_vertex("V+3")));
  CHECK_THROWS_AS(GraphPoint<Rational>::on_edge(*g, e3, Rational(4)), InvalidPoint);
  CHECK_THROWS_AS(GraphPoint<Rational>::on_edge(*g, e3, Rational(-1)), InvalidPoint);
  CHECK_THROWS_AS(parse_point(*g, "nowhere"), InvalidPoint);
  CHECK(at(*g, "e+3@1").describe(*g) == "e+3@1");
  CHECK(at(*g, "e-3@5/2").describe(*g) == "e-3@5/2");
  CHECK(at(*g, "e+3@3").describe(*g) == "V+3");
}

TEST_CASE("dumbbell distances") {
  const auto g = dumbbell_graph<Rational>();
  CHECK(point_distance(*g, at(*g, "O"), at(*g, "e+3@1")) == 2);
  CHECK(point_distance(*g, at(*g, "V+2"), at(*g, "V-2")) == 4);
  const auto p = at(*g, "e-3@7/4");
  CHECK(point_distance(*g, p, p) == 0);
  CHECK(point_distance(*g, at(*g, "e+3@1"), at(*g, "e-3@1")) == 4);
  CHECK(point_distance(*g, at(*g, "e+3@1/2"), at(*g, "e+2@1/2")) == 1);
}

TEST_CASE("point distance agrees with subdivision Dijkstra on random graphs") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = random_graph<Rational>(rng);
    for (int k = 0; k < 10; ++k) {
      const auto p = random_point(*g, rng);
      const auto q = random_point(*g, rng);
      const double exact = to_double(point_distance(*g, p, q));
      CHECK(exact == doctest::Approx(subdivision_distance(*g, p, q)).epsilon(1e-12));
      CHECK(point_distance(*g, p, q) == point_distance(*g, q, p));
    }
  }
}

TEST_CASE("double mode matches exact mode") {
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const auto gq = random_graph<Rational>(rng);
    const auto gd = share(convert_graph<double>(*gq));
    const auto rq = inradius_and_ridge(gq);
    const auto rd = inradius_and_ridge(gd);
    CHECK(to_double(rq.value) == doctest::Approx(rd.value).epsilon(1e-12));
    CHECK(rq.points.size() == rd.points.size());
  }
}

TEST_CASE("boundary distance field") {
  const auto g = dumbbell_graph<Rational>();
  const auto f = boundary_distance_field(g);
  CHECK(f(at(*g, "O")) == 1);
  CHECK(f(at(*g, "e+3@3/2")) == ratio<Rational>(3, 2));
  CHECK(f(at(*g, "V+1")) == 1);
  CHECK(f(at(*g, "V0")) == 0);

  const Rational len(7, 3);
  const auto iv = interval(len);
  const auto fi = boundary_distance_field(iv);
  for (int k = 0; k <= 21; ++k) {
    const Rational t = len * ratio<Rational>(k, 21);
    CHECK(fi.on_edge(0, t) == min_of(t, Rational(len - t)));
  }
}

TEST_CASE("boundary distance is 1-Lipschitz and agrees with the oracle") {
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_graph<Rational>(rng);
    const auto f = boundary_distance_field(g);
    for (int k = 0; k < 20; ++k) {
      const auto p = random_point(*g, rng);
      const auto q = random_point(*g, rng);
      CHECK(abs_of(Rational(f(p) - f(q))) <= point_distance(*g, p, q));
    }
    const auto p = random_point(*g, rng);
    double nearest = std::numeric_limits<double>::infinity();
    for (VertexId b : g->boundary_vertices()) {
      nearest = std::min(nearest, subdivision_distance(*g, p, GraphPoint<Rational>::at_vertex(b)));
    }
    CHECK(to_double(f(p)) == doctest::Approx(nearest).epsilon(1e-12));
  }
}

TEST_CASE("inradius and ridge") {
  const auto g = dumbbell_graph<Rational>();
  const auto r = inradius_and_ridge(g);
  CHECK(r.value == 2);
  REQUIRE(r.points.size() == 2);
  CHECK(r.points[0].describe(*g) == "e+3@1");
  CHECK(r.points[1].describe(*g) == "e-3@1");

  const auto iv = interval(Rational(5));
  const auto ri = inradius_and_ridge(iv);
  CHECK(ri.value == ratio<Rational>(5, 2));
  REQUIRE(ri.points.size() == 1);
  CHECK(ri.points[0].param() == ratio<Rational>(5, 2));

  MetricGraph<Rational> star;
  star.add_vertex("c");
  for (int i = 0; i < 3; ++i) {
    star.add_vertex("l" + std::to_string(i));
    star.add_edge("e" + std::to_string(i), 0, static_cast<VertexId>(i + 1), Rational(1));
    star.mark_boundary(static_cast<VertexId>(i + 1));
  }
  const auto s = share(std::move(star));
  const auto rs = inradius_and_ridge(s);
  CHECK(rs.value == 1);
  REQUIRE(rs.points.size() == 1);
  CHECK(rs.points[0].describe(*s) == "c");
}

TEST_CASE("ridge points attain the inradius and nothing else does") {
  Rng rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = random_graph<Rational>(rng);
    const auto f = boundary_distance_field(g);
    const auto r = inradius_and_ridge(g);
    CHECK(f.max_value() == r.value);
    for (const auto& p : r.points) CHECK(f(p) == r.value);
    for (const auto& p : sample_graph(*g, 200, rng)) {
      const bool on_ridge = std::find(r.points.begin(), r.points.end(), p) != r.points.end();
      if (!on_ridge) CHECK(f(p) < r.value);
    }
    // Brute force: the maximum over a fine subdivision cannot exceed R.
    double best = 0.0;
    for (EdgeId e = 0; e < g->num_edges(); ++e) {
      for (int k = 0; k <= 64; ++k) {
        const auto p = GraphPoint<Rational>::on_edge(*g, e, g->edge(e).length * ratio<Rational>(k, 64));
        best = std::max(best, to_double(f(p)));
      }
    }
    CHECK(best <= to_double(r.value) + 1e-15);
  }
}

TEST_CASE("parallel edges and self-loops are accepted") {
  MetricGraph<Rational> g;
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_edge("short", 0, 1, Rational(1));
  g.add_edge("long", 0, 1, Rational(3));
  g.add_edge("loop", 1, 1, Rational(2));
  g.mark_boundary(0);
  CHECK(validate(g).empty());
  const auto gp = share(std::move(g));
  // Farthest point: the middle of the loop, 1 + 1 away from a.
  const auto r = inradius_and_ridge(gp);
  CHECK(r.value == 2);
  CHECK(point_distance(*gp, parse_point(*gp, "long@2"), parse_point(*gp, "a")) == 2);
}

TEST_CASE("distances are safe to compute concurrently") {
  const auto g = dumbbell_graph<Rational>();
  Rng rng(15);
  std::vector<std::pair<GraphPoint<Rational>, GraphPoint<Rational>>> pairs;
  for (int k = 0; k < 64; ++k) pairs.push_back({random_point(*g, rng), random_point(*g, rng)});
  std::vector<Rational> serial;
  for (const auto& [p, q] : pairs) serial.push_back(point_distance(*g, p, q));
  std::vector<Rational> parallel(pairs.size());
  {
    std::vector<std::jthread> workers;
    for (int w = 0; w < 4; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t k = static_cast<std::size_t>(w); k < pairs.size(); k += 4) {
          parallel[k] = point_distance(*g, pairs[k].first, pairs[k].second);
        }
      });
    }
  }
  CHECK(serial == parallel);
}
