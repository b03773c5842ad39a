#include "inflap/euclid_grid.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace inflap {

namespace {

constexpr double kEps = 1e-12;

double cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

bool on_segment(const Point2& p, const Point2& a, const Point2& b) {
  const double len = std::hypot(b[0] - a[0], b[1] - a[1]);
  if (std::abs(cross(a, b, p)) > kEps * std::max(1.0, len)) return false;
  return std::min(a[0], b[0]) - kEps <= p[0] && p[0] <= std::max(a[0], b[0]) + kEps &&
         std::min(a[1], b[1]) - kEps <= p[1] && p[1] <= std::max(a[1], b[1]) + kEps;
}

/// 1 inside, 0 on the boundary, -1 outside.
int ring_side(const std::vector<Point2>& ring, const Point2& p) {
  bool inside = false;
  for (std::size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
    const auto& a = ring[i];
    const auto& b = ring[j];
    if (on_segment(p, a, b)) return 0;
    if ((a[1] > p[1]) != (b[1] > p[1])) {
      const double x = a[0] + (p[1] - a[1]) * (b[0] - a[0]) / (b[1] - a[1]);
      if (p[0] < x) inside = !inside;
    }
  }
  return inside ? 1 : -1;
}

/// Proper crossing: the open segments meet in a single interior point.
bool crosses(const Point2& p, const Point2& q, const Point2& a, const Point2& b) {
  const double d1 = cross(a, b, p);
  const double d2 = cross(a, b, q);
  const double d3 = cross(p, q, a);
  const double d4 = cross(p, q, b);
  return ((d1 > kEps && d2 < -kEps) || (d1 < -kEps && d2 > kEps)) &&
         ((d3 > kEps && d4 < -kEps) || (d3 < -kEps && d4 > kEps));
}

double ring_area(const std::vector<Point2>& ring) {
  double a = 0.0;
  for (std::size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
    a += ring[j][0] * ring[i][1] - ring[i][0] * ring[j][1];
  }
  return std::abs(a) / 2;
}

struct Bounds {
  double xmin, xmax, ymin, ymax;
};

Bounds bounds(const Domain& domain) {
  if (const auto* d = std::get_if<Disk>(&domain)) {
    return {d->center[0] - d->radius, d->center[0] + d->radius, d->center[1] - d->radius,
            d->center[1] + d->radius};
  }
  const auto& poly = std::get<Polygon>(domain);
  Bounds b{poly.outer[0][0], poly.outer[0][0], poly.outer[0][1], poly.outer[0][1]};
  for (const auto& p : poly.outer) {
    b.xmin = std::min(b.xmin, p[0]);
    b.xmax = std::max(b.xmax, p[0]);
    b.ymin = std::min(b.ymin, p[1]);
    b.ymax = std::max(b.ymax, p[1]);
  }
  return b;
}

}  // namespace

bool contains(const Domain& domain, const Point2& p) {
  if (const auto* d = std::get_if<Disk>(&domain)) {
    return std::hypot(p[0] - d->center[0], p[1] - d->center[1]) <= d->radius * (1 + kEps);
  }
  const auto& poly = std::get<Polygon>(domain);
  if (ring_side(poly.outer, p) < 0) return false;
  for (const auto& hole : poly.holes) {
    if (ring_side(hole, p) > 0) return false;
  }
  return true;
}

bool segment_inside(const Domain& domain, const Point2& p, const Point2& q) {
  if (!contains(domain, p) || !contains(domain, q)) return false;
  if (std::holds_alternative<Disk>(domain)) return true;
  const auto& poly = std::get<Polygon>(domain);
  auto blocked = [&](const std::vector<Point2>& ring) {
    for (std::size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
      if (crosses(p, q, ring[i], ring[j])) return true;
    }
    return false;
  };
  if (blocked(poly.outer)) return false;
  for (const auto& hole : poly.holes) {
    if (blocked(hole)) return false;
  }
  // A segment can touch a reflex corner without crossing an edge; sample it.
  for (int s = 1; s < 8; ++s) {
    const double t = s / 8.0;
    if (!contains(domain, {p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])})) return false;
  }
  return true;
}

double area(const Domain& domain) {
  if (const auto* d = std::get_if<Disk>(&domain)) return M_PI * d->radius * d->radius;
  const auto& poly = std::get<Polygon>(domain);
  if (poly.outer.size() < 3) return 0.0;
  double a = ring_area(poly.outer);
  for (const auto& hole : poly.holes) {
    if (hole.size() >= 3) a -= ring_area(hole);
  }
  return a;
}

GridGraph build_grid_graph(const Domain& domain, double h, int k, const GridOptions& options) {
  if (!(h > 0)) throw std::invalid_argument("grid spacing must be positive");
  if (k < 1) throw std::invalid_argument("stencil radius must be at least 1");
  if (options.boundary_radius < 1) throw std::invalid_argument("boundary radius must be at least 1");
  if (!(area(domain) > 0)) throw std::invalid_argument("domain has zero area");

  const Bounds b = bounds(domain);
  const long i0 = static_cast<long>(std::ceil(b.xmin / h - kEps));
  const long i1 = static_cast<long>(std::floor(b.xmax / h + kEps));
  const long j0 = static_cast<long>(std::ceil(b.ymin / h - kEps));
  const long j1 = static_cast<long>(std::floor(b.ymax / h + kEps));

  std::map<std::pair<long, long>, std::size_t> lattice;
  std::vector<std::pair<long, long>> cells;
  for (long j = j0; j <= j1; ++j) {
    for (long i = i0; i <= i1; ++i) {
      if (contains(domain, {i * h, j * h})) {
        lattice.emplace(std::pair{i, j}, cells.size());
        cells.emplace_back(i, j);
      }
    }
  }
  auto pos = [&](const std::pair<long, long>& c) { return Point2{c.first * h, c.second * h}; };
  auto visible = [&](const std::pair<long, long>& c, long a, long bb) {
    const std::pair<long, long> d{c.first + a, c.second + bb};
    return lattice.count(d) > 0 && segment_inside(domain, pos(c), pos(d));
  };

  std::vector<bool> boundary(cells.size(), false);
  const long r = options.boundary_radius;
  for (std::size_t n = 0; n < cells.size(); ++n) {
    for (long a = -r; a <= r && !boundary[n]; ++a) {
      for (long bb = -r; bb <= r; ++bb) {
        if ((a != 0 || bb != 0) && !visible(cells[n], a, bb)) {
          boundary[n] = true;
          break;
        }
      }
    }
  }

  std::vector<std::array<long, 2>> offsets;
  for (long a = 0; a <= k; ++a) {
    for (long bb = -k; bb <= k; ++bb) {
      if (a == 0 && bb <= 0) continue;
      if (std::gcd(a, std::abs(bb)) != 1) continue;
      offsets.push_back({a, bb});
    }
  }

  struct Wire {
    std::size_t from, to;
    double length;
  };
  std::vector<Wire> wires;
  std::vector<std::size_t> degree(cells.size(), 0);
  for (std::size_t n = 0; n < cells.size(); ++n) {
    for (const auto& off : offsets) {
      const std::pair<long, long> d{cells[n].first + off[0], cells[n].second + off[1]};
      const auto it = lattice.find(d);
      if (it == lattice.end()) continue;
      if (boundary[n] && boundary[it->second]) continue;
      if (!segment_inside(domain, pos(cells[n]), pos(d))) continue;
      wires.push_back({n, it->second, h * std::hypot(double(off[0]), double(off[1]))});
      ++degree[n];
      ++degree[it->second];
    }
  }

  bool any_interior = false;
  for (std::size_t n = 0; n < cells.size(); ++n) any_interior = any_interior || !boundary[n];
  if (!any_interior) throw std::invalid_argument("empty interior: no lattice node is an interior node");

  GridGraph out;
  out.h = h;
  out.stencil = k;
  MetricGraph<double> g;
  std::vector<std::size_t> vid(cells.size(), 0);
  for (std::size_t n = 0; n < cells.size(); ++n) {
    if (degree[n] == 0 && boundary[n]) continue;
    vid[n] = g.add_vertex("g" + std::to_string(cells[n].first) + "_" + std::to_string(cells[n].second));
    out.coords.push_back(pos(cells[n]));
    if (boundary[n]) g.mark_boundary(vid[n]);
  }
  for (std::size_t w = 0; w < wires.size(); ++w) {
    g.add_edge("w" + std::to_string(w), vid[wires[w].from], vid[wires[w].to], wires[w].length);
  }
  const auto violations = validate(g);
  if (!violations.empty()) {
    throw std::invalid_argument("grid graph is not a valid domain: " + violations.front().invariant +
                                " (" + violations.front().element + ")");
  }
  out.graph = share(std::move(g));
  return out;
}

}  // namespace inflap
