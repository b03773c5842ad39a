#include "inflap/perron.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include <Eigen/SparseLU>

namespace inflap {

std::string_view to_string(NodeRole r) {
  switch (r) {
    case NodeRole::kInterior:
      return "interior";
    case NodeRole::kBoundary:
      return "boundary";
    case NodeRole::kConstraint:
      return "constraint";
  }
  return "?";
}

template <class T>
std::optional<std::size_t> Discretization<T>::find(const GraphPoint<T>& p) const {
  if (p.is_vertex()) {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (nodes_[i].point.is_vertex() && nodes_[i].point.vertex() == p.vertex()) return i;
    }
    return std::nullopt;
  }
  for (std::size_t i : edge_nodes_.at(p.edge())) {
    if (nodes_[i].point == p) return i;
  }
  return std::nullopt;
}

template <class T>
DiscretizationPtr<T> discretize(const GraphPtr<T>& gp, const T& h,
                                std::span<const GraphPoint<T>> constraint) {
  const auto& g = *gp;
  if (!(h > 0)) throw std::invalid_argument("spacing h must be positive");
  auto ridge = inradius_and_ridge(gp);
  if (!(h < ridge.value)) {
    throw std::invalid_argument("h * Lambda >= 1: spacing " + to_text(h) +
                                " is not below the inradius " + to_text(ridge.value));
  }
  for (const auto& y : constraint) {
    if (std::find(ridge.points.begin(), ridge.points.end(), y) == ridge.points.end()) {
      throw std::invalid_argument("constraint point " + y.describe(g) + " is not on the high ridge");
    }
  }

  auto disc = std::make_shared<Discretization<T>>();
  disc->graph_ = gp;
  disc->h_ = h;
  disc->ridge_ = ridge;
  disc->edge_nodes_.resize(g.num_edges());

  std::vector<std::size_t> vertex_node(g.num_vertices(), std::numeric_limits<std::size_t>::max());
  auto vertex_id = [&](VertexId v) {
    if (vertex_node[v] == std::numeric_limits<std::size_t>::max()) {
      vertex_node[v] = disc->nodes_.size();
      disc->nodes_.push_back(
          {GraphPoint<T>::at_vertex(v), g.is_boundary(v) ? NodeRole::kBoundary : NodeRole::kInterior});
    }
    return vertex_node[v];
  };

  std::vector<std::pair<std::size_t, std::size_t>> links;
  std::vector<double> link_gap;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto& edge = g.edge(e);
    const double pieces = std::ceil(to_double(T(edge.length / h)));
    auto n = static_cast<std::size_t>(pieces);
    if constexpr (is_exact_v<T>) {
      // Exact ceiling so divisible lengths do not get an extra piece.
      mpz_class q;
      mpz_cdiv_q(q.get_mpz_t(), T(edge.length / h).get_num_mpz_t(),
                 T(edge.length / h).get_den_mpz_t());
      n = q.get_ui();
    }
    n = std::max<std::size_t>(n, 1);
    std::vector<T> ts;
    for (std::size_t k = 0; k <= n; ++k) ts.push_back(edge.length * T(k) / T(n));
    ts.front() = T(0);
    ts.back() = edge.length;
    for (const auto& r : ridge.points) {
      if (auto t = r.param_on(g, e); t && !r.is_vertex()) ts.push_back(*t);
    }
    std::sort(ts.begin(), ts.end(), [](const T& a, const T& b) { return a < b; });
    std::vector<T> unique;
    for (const auto& t : ts) {
      if (unique.empty() || !near(unique.back(), t)) {
        unique.push_back(t);
      } else if (!(unique.back() == t)) {
        // Keep ridge parameters exactly; they win over a nearby grid point.
        const bool is_ridge = std::any_of(ridge.points.begin(), ridge.points.end(), [&](const auto& r) {
          auto rt = r.param_on(g, e);
          return !r.is_vertex() && rt && *rt == t;
        });
        if (is_ridge && unique.size() > 1) unique.back() = t;
      }
    }
    unique.front() = T(0);
    unique.back() = edge.length;

    auto& ids = disc->edge_nodes_[e];
    ids.push_back(vertex_id(edge.from));
    for (std::size_t k = 1; k + 1 < unique.size(); ++k) {
      ids.push_back(disc->nodes_.size());
      disc->nodes_.push_back({GraphPoint<T>::on_edge(g, e, unique[k]), NodeRole::kInterior});
    }
    ids.push_back(vertex_id(edge.to));
    for (std::size_t k = 0; k + 1 < unique.size(); ++k) {
      links.emplace_back(ids[k], ids[k + 1]);
      link_gap.push_back(to_double(T(unique[k + 1] - unique[k])));
    }
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) vertex_id(v);

  for (const auto& y : constraint) {
    auto i = disc->find(y);
    if (!i) throw std::logic_error("constraint point missing from node set");
    disc->nodes_[*i].role = NodeRole::kConstraint;
  }

  const std::size_t n = disc->nodes_.size();
  std::vector<std::size_t> degree(n, 0);
  for (const auto& [a, b] : links) {
    ++degree[a];
    ++degree[b];
  }
  disc->offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) disc->offsets_[i + 1] = disc->offsets_[i] + degree[i];
  disc->adj_.resize(disc->offsets_[n]);
  disc->gap_.resize(disc->offsets_[n]);
  std::vector<std::size_t> fill(disc->offsets_.begin(), disc->offsets_.end() - 1);
  for (std::size_t k = 0; k < links.size(); ++k) {
    const auto [a, b] = links[k];
    disc->adj_[fill[a]] = b;
    disc->gap_[fill[a]++] = link_gap[k];
    disc->adj_[fill[b]] = a;
    disc->gap_[fill[b]++] = link_gap[k];
    disc->max_gap_ = std::max(disc->max_gap_, link_gap[k]);
  }
  return disc;
}

template <class T>
double NodeFunction<T>::at(const GraphPoint<T>& p) const {
  auto i = disc->find(p);
  if (!i) throw std::invalid_argument("point " + p.describe(disc->graph()) + " is not a node");
  return values[*i];
}

template <class T>
PLFunction<T> to_pl_function(const NodeFunction<T>& u) {
  const auto& d = *u.disc;
  const auto& g = d.graph();
  std::vector<std::vector<Knot<T>>> knots(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto& ids = d.edge_nodes(e);
    for (std::size_t k = 0; k < ids.size(); ++k) {
      T t = k == 0 ? T(0) : (k + 1 == ids.size() ? g.edge(e).length : d.node(ids[k]).point.param());
      knots[e].push_back({t, from_double<T>(u.values[ids[k]])});
    }
  }
  return PLFunction<T>(d.graph_ptr(), std::move(knots));
}

template <class T>
NodeFunction<T> restrict_to_nodes(const PLFunction<T>& f, const DiscretizationPtr<T>& disc) {
  NodeFunction<T> out{disc, std::vector<double>(disc->size())};
  for (std::size_t i = 0; i < disc->size(); ++i) out.values[i] = to_double(f(disc->node(i).point));
  return out;
}

template <class T>
Eigenvalue<T> principal_eigenvalue(const GraphPtr<T>& g) {
  auto ridge = inradius_and_ridge(g);
  T lambda = T(1) / ridge.value;
  return {lambda, std::move(ridge)};
}

namespace {

struct Midrange {
  double value;
  std::size_t up;
  std::size_t down;
};

Midrange midrange_with_pair(std::span<const double> u, std::span<const double> gaps) {
  const std::size_t n = u.size();
  if (n == 1) return {u[0], 0, 0};
  if (n == 2) return {(gaps[1] * u[0] + gaps[0] * u[1]) / (gaps[0] + gaps[1]), 0, 1};
  double lo = u[0];
  double hi = u[0];
  for (double v : u) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  std::size_t imax = 0;
  std::size_t jmin = 0;
  if (lo == hi) return {lo, 0, 0};
  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 200; ++iter) {
    double smax = -std::numeric_limits<double>::infinity();
    double smin = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
      const double s = (u[k] - x) / gaps[k];
      if (s > smax) {
        smax = s;
        imax = k;
      }
      if (s < smin) {
        smin = s;
        jmin = k;
      }
    }
    const double f = smax + smin;
    if (f == 0.0) return {x, imax, jmin};
    if (f > 0) {
      lo = x;
    } else {
      hi = x;
    }
    double next = (gaps[jmin] * u[imax] + gaps[imax] * u[jmin]) / (gaps[imax] + gaps[jmin]);
    if (next == x || hi - lo <= 4 * std::numeric_limits<double>::epsilon() * std::abs(hi)) {
      return {x, imax, jmin};
    }
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    x = next;
  }
  return {x, imax, jmin};
}

}  // namespace

double discrete_midrange(std::span<const double> u, std::span<const double> gaps) {
  return midrange_with_pair(u, gaps).value;
}

double discrete_eikonal(std::span<const double> u, std::span<const double> gaps, double lambda) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < u.size(); ++k) best = std::min(best, u[k] / (1.0 - lambda * gaps[k]));
  return best;
}

namespace {

template <class T>
struct Stencil {
  const Discretization<T>& d;
  double lambda;
  mutable std::vector<double> buf;

  NodeResidual eval(const std::vector<double>& u, std::size_t i) const {
    const auto nb = d.neighbours(i);
    const auto gp = d.gaps(i);
    buf.resize(nb.size());
    for (std::size_t k = 0; k < nb.size(); ++k) buf[k] = u[nb[k]];
    NodeResidual r;
    r.midrange = discrete_midrange(buf, gp);
    r.eikonal = discrete_eikonal(buf, gp, lambda);
    r.residual = u[i] - std::max(r.midrange, r.eikonal);
    return r;
  }
  /// Linear branch active at node i: T u(i) = wa u[a] + wb u[b].
  struct Branch {
    std::size_t a;
    std::size_t b;
    double wa;
    double wb;
  };
  Branch active(const std::vector<double>& u, std::size_t i) const {
    const auto nb = d.neighbours(i);
    const auto gp = d.gaps(i);
    buf.resize(nb.size());
    for (std::size_t k = 0; k < nb.size(); ++k) buf[k] = u[nb[k]];
    const Midrange mid = midrange_with_pair(buf, gp);
    std::size_t best = 0;
    double eik = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < nb.size(); ++k) {
      const double v = buf[k] / (1.0 - lambda * gp[k]);
      if (v < eik) {
        eik = v;
        best = k;
      }
    }
    // Near-ties go to the midrange branch; polishing verifies the result.
    if (eik > mid.value + 1e-9 * (1.0 + std::abs(mid.value))) return {nb[best], nb[best], 1.0 / (1.0 - lambda * gp[best]), 0.0};
    if (mid.up == mid.down) return {nb[mid.up], nb[mid.up], 1.0, 0.0};
    const double gu = gp[mid.up];
    const double gd = gp[mid.down];
    return {nb[mid.up], nb[mid.down], gd / (gu + gd), gu / (gu + gd)};
  }
  double apply(const std::vector<double>& u, std::size_t i) const {
    const auto r = eval(u, i);
    return std::max(r.midrange, r.eikonal);
  }
};

template <class T>
std::vector<double> initializer(const Discretization<T>& d, double lambda, bool descending) {
  const auto dist = boundary_distance_field(d.graph_ptr());
  std::vector<double> u(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    switch (d.node(i).role) {
      case NodeRole::kBoundary:
        u[i] = 0.0;
        break;
      case NodeRole::kConstraint:
        u[i] = 1.0;
        break;
      case NodeRole::kInterior:
        u[i] = descending ? std::min(1.0, lambda * to_double(dist(d.node(i).point))) : 0.0;
        break;
    }
  }
  return u;
}

struct SweepStats {
  double max_update = 0.0;
  double max_backstep = 0.0;
};

/// Applies T at node i and clamps the move to the direction of travel.
inline void monotone_update(double tu, double& value, bool descending, SweepStats& s) {
  const double move = descending ? value - tu : tu - value;
  if (move < 0) {
    s.max_backstep = std::max(s.max_backstep, -move);
    return;
  }
  s.max_update = std::max(s.max_update, move);
  value = tu;
}

template <class T>
SweepStats gauss_seidel_sweep(const Stencil<T>& st, const std::vector<std::size_t>& free,
                              std::vector<double>& u, bool descending) {
  SweepStats s;
  for (std::size_t i : free) monotone_update(st.apply(u, i), u[i], descending, s);
  return s;
}

template <class T>
SweepStats jacobi_round(const Discretization<T>& d, double lambda,
                        const std::vector<std::size_t>& free, std::vector<double>& u,
                        std::vector<double>& next, unsigned threads, bool descending) {
  next = u;
  threads = std::max(1u, threads);
  std::vector<SweepStats> part(threads);
  auto work = [&](unsigned w) {
    Stencil<T> st{d, lambda, {}};
    const std::size_t lo = free.size() * w / threads;
    const std::size_t hi = free.size() * (w + 1) / threads;
    for (std::size_t k = lo; k < hi; ++k) {
      const std::size_t i = free[k];
      monotone_update(st.apply(u, i), next[i], descending, part[w]);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }
  SweepStats s;
  for (const auto& p : part) {
    s.max_update = std::max(s.max_update, p.max_update);
    s.max_backstep = std::max(s.max_backstep, p.max_backstep);
  }
  u.swap(next);
  return s;
}

/// Freezes the active branch at every free node, solves the resulting
/// linear system, and returns the solution if it is a fixed point of T
/// (within tol) lying below u. Returns nothing otherwise.
template <class T>
std::optional<std::vector<double>> polish_once(const Stencil<T>& st,
                                               const std::vector<std::size_t>& free,
                                               const std::vector<double>& u,
                                               const std::vector<double>& policy_at) {
  const std::size_t n = u.size();
  std::vector<std::ptrdiff_t> row(n, -1);
  for (std::size_t r = 0; r < free.size(); ++r) row[free[r]] = static_cast<std::ptrdiff_t>(r);
  std::vector<Eigen::Triplet<double>> entries;
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(free.size()));
  for (std::size_t r = 0; r < free.size(); ++r) {
    const auto br = st.active(policy_at, free[r]);
    const auto ri = static_cast<Eigen::Index>(r);
    entries.emplace_back(ri, ri, 1.0);
    for (const auto& [node, w] : {std::pair{br.a, br.wa}, std::pair{br.b, br.wb}}) {
      if (w == 0.0) continue;
      if (row[node] >= 0) {
        entries.emplace_back(ri, static_cast<Eigen::Index>(row[node]), -w);
      } else {
        rhs[ri] += w * u[node];
      }
    }
  }
  Eigen::SparseMatrix<double> a(static_cast<Eigen::Index>(free.size()),
                                static_cast<Eigen::Index>(free.size()));
  a.setFromTriplets(entries.begin(), entries.end());
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  lu.compute(a);
  if (lu.info() != Eigen::Success) return std::nullopt;
  const Eigen::VectorXd x = lu.solve(rhs);
  if (lu.info() != Eigen::Success) return std::nullopt;

  std::vector<double> v = u;
  for (std::size_t r = 0; r < free.size(); ++r) {
    const double xr = x[static_cast<Eigen::Index>(r)];
    if (!std::isfinite(xr)) return std::nullopt;
    v[free[r]] = xr;
  }
  return v;
}

/// Freezes the active branch at every free node, solves the resulting
/// linear system, and re-freezes at the solution a few times. The result
/// is returned only if it is a fixed point of T within tol lying on the
/// far side of u in the direction of travel (below it when descending).
template <class T>
std::optional<std::vector<double>> polish(const Stencil<T>& st, const std::vector<std::size_t>& free,
                                          const std::vector<double>& u, double tol, bool descending) {
  std::vector<double> policy_at = u;
  for (int round = 0; round < 4; ++round) {
    auto v = polish_once(st, free, u, policy_at);
    if (!v) return std::nullopt;
    bool fixed = true;
    for (std::size_t i : free) {
      if (std::abs((*v)[i] - st.apply(*v, i)) > tol) {
        fixed = false;
        break;
      }
    }
    if (fixed) {
      for (std::size_t i : free) {
        const double gap = descending ? (*v)[i] - u[i] : u[i] - (*v)[i];
        if (gap > tol) return std::nullopt;
        (*v)[i] = descending ? std::min((*v)[i], u[i]) : std::max((*v)[i], u[i]);
      }
      return v;
    }
    policy_at = std::move(*v);
  }
  return std::nullopt;
}

template <class T>
std::vector<std::size_t> free_nodes(const Discretization<T>& d) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.node(i).role == NodeRole::kInterior) out.push_back(i);
  }
  return out;
}

}  // namespace

constexpr double kPolishStart = 1e-6;
constexpr double kDivergence = 1e6;

template <class T>
EigenResult<T> solve_ground_state(const GraphPtr<T>& g, double lambda,
                                  std::span<const GraphPoint<T>> constraint,
                                  const SolverConfig<T>& config) {
  if (!(lambda >= 0)) throw std::invalid_argument("lambda must be nonnegative");
  if (!(to_double(config.h) * lambda < 1.0)) throw std::invalid_argument("h * lambda >= 1");
  auto disc = discretize(g, config.h, constraint);
  if (!(disc->max_gap() * lambda < 1.0)) throw std::invalid_argument("h * lambda >= 1");
  const auto& d = *disc;

  EigenResult<T> result;
  result.r_inf = d.ridge().value;
  result.lambda = T(1) / result.r_inf;
  result.ridge = d.ridge();
  const bool descending = config.start == Start::kFromAbove;
  std::vector<double> u = initializer(d, lambda, descending);
  const auto free = free_nodes(d);
  Stencil<T> st{d, lambda, {}};
  std::vector<double> scratch;
  std::size_t next_polish = 0;

  for (std::size_t it = 0; it < config.max_iters; ++it) {
    const SweepStats s = config.mode == SweepMode::kGaussSeidel
                             ? gauss_seidel_sweep(st, free, u, descending)
                             : jacobi_round(d, lambda, free, u, scratch, config.threads, descending);
    result.iterations = it + 1;
    result.max_update = s.max_update;
    result.max_backstep = std::max(result.max_backstep, s.max_backstep);
    if (s.max_update < config.tol) {
      result.converged = true;
      break;
    }
    if (!descending && !(*std::max_element(u.begin(), u.end()) <= kDivergence)) {
      result.diverged = true;
      break;
    }
    if (config.polish && s.max_update < kPolishStart && it >= next_polish) {
      if (auto v = polish(st, free, u, config.tol, descending)) {
        double jump = 0.0;
        for (std::size_t i : free) jump = std::max(jump, std::abs((*v)[i] - u[i]));
        result.polish_jump = std::max(result.polish_jump, jump);
        u = std::move(*v);
        ++result.polished;
      }
      next_polish = 2 * it + 16;
    }
  }
  result.u = NodeFunction<T>{disc, std::move(u)};
  result.residual_sup = residual_sup(result.u, lambda);
  return result;
}

template <class T>
std::vector<NodeResidual> residual_report(const NodeFunction<T>& u, double lambda) {
  const auto& d = *u.disc;
  Stencil<T> st{d, lambda, {}};
  std::vector<NodeResidual> out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.node(i).role != NodeRole::kInterior) continue;
    out[i] = st.eval(u.values, i);
  }
  return out;
}

template <class T>
double residual_sup(const NodeFunction<T>& u, double lambda) {
  double sup = 0.0;
  for (const auto& r : residual_report(u, lambda)) sup = std::max(sup, std::abs(r.residual));
  return sup;
}

namespace {

template <class T>
void judge(IncenterCheck<T>& c, double lambda, double big_lambda, double slack,
           IncenterReport<T>& report) {
  c.required = lambda * c.value;
  c.bound = big_lambda * c.value + slack;
  c.supersolution = c.value > 0 && c.subslope >= c.required - 1e-9 * std::max(1.0, c.required);
  c.within_bound = c.subslope <= c.bound;
  if (!c.supersolution || !c.within_bound) report.status = Status::kFail;
  report.checks.push_back(c);
}

}  // namespace

template <class T>
IncenterReport<T> incenter_bound_check(const NodeFunction<T>& u, double lambda, double slack) {
  const auto& d = *u.disc;
  const double big_lambda = 1.0 / to_double(d.ridge().value);
  IncenterReport<T> report;
  for (const auto& x0 : d.ridge().points) {
    const auto i = d.find(x0);
    if (!i) throw std::logic_error("ridge point missing from node set");
    IncenterCheck<T> c{x0};
    c.value = u.values[*i];
    const auto nb = d.neighbours(*i);
    const auto gp = d.gaps(*i);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      c.subslope = std::max(c.subslope, (c.value - u.values[nb[k]]) / gp[k]);
    }
    judge(c, lambda, big_lambda, slack, report);
  }
  return report;
}

template <class T>
IncenterReport<T> incenter_bound_check(const PLFunction<T>& u, const RidgeSet<T>& ridge,
                                       double lambda, double slack) {
  const double big_lambda = 1.0 / to_double(ridge.value);
  IncenterReport<T> report;
  for (const auto& x0 : ridge.points) {
    IncenterCheck<T> c{x0};
    c.value = to_double(u(x0));
    c.subslope = to_double(slopes_at(u, x0).subslope);
    judge(c, lambda, big_lambda, slack, report);
  }
  return report;
}

template <class T>
CollapseReport<T> subcritical_collapse_probe(const GraphPtr<T>& g, double lambda,
                                             const SolverConfig<T>& config, std::size_t sweeps,
                                             std::size_t record_every) {
  auto disc = discretize<T>(g, config.h, {});
  if (!(disc->max_gap() * lambda < 1.0)) throw std::invalid_argument("h * lambda >= 1");
  const auto& d = *disc;
  const auto& ridge = d.ridge();
  const auto bump_dist = distance_field(g, ridge.points.front());
  std::vector<double> u(d.size(), 0.0);
  const double r = to_double(ridge.value);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.node(i).role == NodeRole::kBoundary) continue;
    u[i] = std::max(0.0, 1.0 - to_double(bump_dist(d.node(i).point)) / r);
  }
  const auto free = free_nodes(d);
  Stencil<T> st{d, lambda, {}};
  CollapseReport<T> report;
  auto sup = [&] {
    double s = 0.0;
    for (double v : u) s = std::max(s, std::abs(v));
    return s;
  };
  report.sweeps.push_back(0);
  report.sup_norm.push_back(sup());
  record_every = std::max<std::size_t>(record_every, 1);
  for (std::size_t k = 1; k <= sweeps; ++k) {
    for (std::size_t i : free) u[i] = st.apply(u, i);
    if (k % record_every == 0 || k == sweeps) {
      const double s = sup();
      if (s > report.sup_norm.back()) report.monotone = false;
      report.sweeps.push_back(k);
      report.sup_norm.push_back(s);
    }
  }
  report.u = NodeFunction<T>{disc, std::move(u)};
  return report;
}

#define INFLAP_INSTANTIATE(T)                                                                      \
  template class Discretization<T>;                                                               \
  template DiscretizationPtr<T> discretize(const GraphPtr<T>&, const T&,                          \
                                           std::span<const GraphPoint<T>>);                       \
  template struct NodeFunction<T>;                                                                \
  template PLFunction<T> to_pl_function(const NodeFunction<T>&);                                  \
  template NodeFunction<T> restrict_to_nodes(const PLFunction<T>&, const DiscretizationPtr<T>&);  \
  template Eigenvalue<T> principal_eigenvalue(const GraphPtr<T>&);                                \
  template EigenResult<T> solve_ground_state(const GraphPtr<T>&, double,                          \
                                             std::span<const GraphPoint<T>>,                      \
                                             const SolverConfig<T>&);                             \
  template std::vector<NodeResidual> residual_report(const NodeFunction<T>&, double);             \
  template double residual_sup(const NodeFunction<T>&, double);                                   \
  template IncenterReport<T> incenter_bound_check(const NodeFunction<T>&, double, double);        \
  template IncenterReport<T> incenter_bound_check(const PLFunction<T>&, const RidgeSet<T>&,       \
                                                  double, double);                                \
  template CollapseReport<T> subcritical_collapse_probe(const GraphPtr<T>&, double,               \
                                                        const SolverConfig<T>&, std::size_t,      \
                                                        std::size_t);

INFLAP_INSTANTIATE(Rational)
INFLAP_INSTANTIATE(double)
#undef INFLAP_INSTANTIATE

}  // namespace inflap
