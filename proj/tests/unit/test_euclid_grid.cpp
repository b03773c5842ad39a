#include <doctest.h>

#include <cmath>
#include <cstdio>

#include "inflap/distance.hpp"
#include "inflap/euclid_grid.hpp"
#include "inflap/perron.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace inflap;
using namespace inflap::testing;

namespace {

std::pair<int, int> lattice_of(const std::string& name) {
  int i = 0;
  int j = 0;
  REQUIRE(std::sscanf(name.c_str(), "g%d_%d", &i, &j) == 2);
  return {i, j};
}

Polygon square(double side) { return Polygon{{{0, 0}, {side, 0}, {side, side}, {0, side}}, {}}; }

void compare_with_brute_force(const Domain& domain, double h, int k) {
  const auto grid = build_grid_graph(domain, h, k);
  const auto brute = brute_grid(domain, h, k);
  const auto& g = *grid.graph;

  std::set<std::pair<int, int>> nodes;
  std::set<std::pair<int, int>> boundary;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto c = lattice_of(g.vertex_name(v));
    nodes.insert(c);
    if (g.is_boundary(v)) boundary.insert(c);
    CHECK(grid.coords[v][0] == doctest::Approx(c.first * h));
    CHECK(grid.coords[v][1] == doctest::Approx(c.second * h));
  }
  std::set<std::tuple<int, int, int, int>> edges;
  for (const auto& e : g.edges()) {
    auto a = lattice_of(g.vertex_name(e.from));
    auto b = lattice_of(g.vertex_name(e.to));
    if (b < a) std::swap(a, b);
    edges.insert({a.first, a.second, b.first, b.second});
    CHECK(e.length == doctest::Approx(h * std::hypot(b.first - a.first, b.second - a.second)));
  }
  CHECK(nodes == brute.nodes);
  CHECK(boundary == brute.boundary);
  CHECK(edges == brute.edges);
  CHECK(edges.size() == g.num_edges());
}

}  // namespace

TEST_CASE("grid graphs match the brute-force constructor") {
  compare_with_brute_force(square(1), 0.5, 1);
  compare_with_brute_force(square(1), 0.125, 2);
  compare_with_brute_force(Disk{{0, 0}, 1}, 0.1, 3);
  compare_with_brute_force(Disk{{0.3, -0.2}, 0.7}, 0.07, 2);
  const Polygon ell{{{0, 0}, {1, 0}, {1, 0.5}, {0.5, 0.5}, {0.5, 1}, {0, 1}}, {}};
  compare_with_brute_force(ell, 0.125, 2);
  compare_with_brute_force(ell, 0.1, 3);
  const Polygon holed{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{{0.4, 0.4}, {0.6, 0.4}, {0.6, 0.6}, {0.4, 0.6}}}};
  compare_with_brute_force(holed, 0.1, 2);
}

TEST_CASE("unit square with h = 1/2: one interior node") {
  const auto grid = build_grid_graph(square(1), 0.5, 1);
  const auto& g = *grid.graph;
  std::size_t interior = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) interior += !g.is_boundary(v);
  CHECK(interior == 1);
  CHECK(g.num_vertices() == 9);  // the centre reaches all eight neighbours, diagonals included
  CHECK(g.num_edges() == 8);
}

TEST_CASE("invalid grids are rejected") {
  const Polygon sliver{{{0, 0}, {1, 0}, {1, 0.01}, {0, 0.01}}, {}};
  CHECK_THROWS_AS(build_grid_graph(sliver, 0.1, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_grid_graph(square(1), 0.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_grid_graph(square(1), 0.1, 0), std::invalid_argument);
  const Polygon flat{{{0, 0}, {1, 0}, {2, 0}}, {}};
  CHECK_THROWS_AS(build_grid_graph(flat, 0.1, 2), std::invalid_argument);
}

TEST_CASE("geometry helpers") {
  CHECK(area(Domain{square(2)}) == doctest::Approx(4));
  CHECK(area(Domain{Disk{{0, 0}, 1}}) == doctest::Approx(M_PI));
  const Polygon holed{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{{0.4, 0.4}, {0.6, 0.4}, {0.6, 0.6}, {0.4, 0.6}}}};
  CHECK(area(Domain{holed}) == doctest::Approx(0.96));
  CHECK(contains(holed, {0.4, 0.5}));  // on the rim of the hole
  CHECK_FALSE(contains(holed, {0.5, 0.5}));
  CHECK_FALSE(segment_inside(holed, {0.3, 0.5}, {0.7, 0.5}));
  CHECK(segment_inside(holed, {0.3, 0.3}, {0.7, 0.3}));
  const Polygon ell{{{0, 0}, {1, 0}, {1, 0.5}, {0.5, 0.5}, {0.5, 1}, {0, 1}}, {}};
  CHECK_FALSE(segment_inside(ell, {0.9, 0.4}, {0.4, 0.9}));
  CHECK(segment_inside(ell, {0.5, 0.5}, {0.5, 1.0}));  // along the boundary
}

TEST_CASE("grid distances bracket Euclidean distances") {
  const Disk disk{{0, 0}, 1};
  const auto grid = build_grid_graph(disk, 0.05, 3);
  const auto& g = *grid.graph;
  std::vector<VertexId> central;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (std::hypot(grid.coords[v][0], grid.coords[v][1]) <= 0.5) central.push_back(v);
  }
  // Directions of the k = 3 stencil are at most atan(1/3) apart.
  const double distortion = 1.0 / std::cos(std::atan(1.0 / 3.0) / 2.0);
  Rng rng(61);
  double worst = 1.0;
  for (int k = 0; k < 200; ++k) {
    const VertexId a = central[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(central.size()) - 1))];
    const VertexId b = central[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(central.size()) - 1))];
    if (a == b) continue;
    const double euclid = std::hypot(grid.coords[a][0] - grid.coords[b][0], grid.coords[a][1] - grid.coords[b][1]);
    const double graph =
        point_distance(g, GraphPoint<double>::at_vertex(a), GraphPoint<double>::at_vertex(b));
    CHECK(graph >= euclid * (1 - 1e-12));
    CHECK(graph <= distortion * euclid * (1 + 1e-12));
    worst = std::max(worst, graph / euclid);
  }
  MESSAGE("largest grid/Euclid ratio " << worst << " (bound " << distortion << ")");
}

TEST_CASE("principal eigenvalue of grid domains") {
  const auto sq = build_grid_graph(square(1), 1.0 / 50, 3);
  const double lam_sq = principal_eigenvalue(sq.graph).lambda;
  MESSAGE("unit square: Lambda(grid) = " << lam_sq);
  CHECK(std::abs(lam_sq - 2.0) <= 0.1);

  const auto disk = build_grid_graph(Disk{{0, 0}, 1}, 1.0 / 50, 3);
  const double lam_disk = principal_eigenvalue(disk.graph).lambda;
  MESSAGE("unit disk: Lambda(grid) = " << lam_disk);
  CHECK(std::abs(lam_disk - 1.0) <= 0.05);
}
