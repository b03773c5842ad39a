#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "inflap/distance.hpp"
#include "inflap/pl_function.hpp"
#include "inflap/report.hpp"

namespace inflap {

enum class NodeRole { kInterior, kBoundary, kConstraint };

std::string_view to_string(NodeRole r);

template <class T>
struct Node {
  GraphPoint<T> point;
  NodeRole role = NodeRole::kInterior;
};

/// Node set on a metric graph: all vertices, the ridge points, and a
/// uniform subdivision of every edge into ceil(length / h) pieces.
/// Neighbours are the consecutive nodes along each edge; gaps are exact in
/// T and stored as doubles for the sweeps.
template <class T>
class Discretization {
 public:
  const GraphPtr<T>& graph_ptr() const { return graph_; }
  const MetricGraph<T>& graph() const { return *graph_; }
  const T& spacing() const { return h_; }
  const RidgeSet<T>& ridge() const { return ridge_; }

  std::size_t size() const { return nodes_.size(); }
  const Node<T>& node(std::size_t i) const { return nodes_[i]; }
  const std::vector<Node<T>>& nodes() const { return nodes_; }

  std::span<const std::size_t> neighbours(std::size_t i) const {
    return {adj_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  std::span<const double> gaps(std::size_t i) const {
    return {gap_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  /// Largest gap between consecutive nodes.
  double max_gap() const { return max_gap_; }

  /// Node ids along edge e, ordered by parameter (both end vertices included).
  const std::vector<std::size_t>& edge_nodes(EdgeId e) const { return edge_nodes_.at(e); }
  /// Node id of a point, if the point is a node.
  std::optional<std::size_t> find(const GraphPoint<T>& p) const;

  template <class U>
  friend std::shared_ptr<const Discretization<U>> discretize(const GraphPtr<U>&, const U&,
                                                             std::span<const GraphPoint<U>>);

 private:
  GraphPtr<T> graph_;
  T h_;
  RidgeSet<T> ridge_;
  std::vector<Node<T>> nodes_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> adj_;
  std::vector<double> gap_;
  std::vector<std::vector<std::size_t>> edge_nodes_;
  double max_gap_ = 0.0;
};

template <class T>
using DiscretizationPtr = std::shared_ptr<const Discretization<T>>;

/// Throws std::invalid_argument when h <= 0, h * Lambda >= 1, or a
/// constraint point is not on the high ridge. Node order is by edge id and
/// then parameter, each vertex placed where it is first met.
template <class T>
DiscretizationPtr<T> discretize(const GraphPtr<T>& g, const T& h,
                                std::span<const GraphPoint<T>> constraint);

template <class T>
struct NodeFunction {
  DiscretizationPtr<T> disc;
  std::vector<double> values;

  double operator[](std::size_t i) const { return values[i]; }
  /// Value at a node point; throws std::invalid_argument for non-nodes.
  double at(const GraphPoint<T>& p) const;
};

/// Interpolates linearly between consecutive nodes.
template <class T>
PLFunction<T> to_pl_function(const NodeFunction<T>& u);

/// Evaluates f at the nodes.
template <class T>
NodeFunction<T> restrict_to_nodes(const PLFunction<T>& f, const DiscretizationPtr<T>& disc);

template <class T>
struct Eigenvalue {
  T lambda;
  RidgeSet<T> ridge;
};

/// Lambda = 1 / R, exact in Rational mode.
template <class T>
Eigenvalue<T> principal_eigenvalue(const GraphPtr<T>& g);

enum class SweepMode { kGaussSeidel, kJacobi };

/// kFromAbove starts at the supersolution min(1, lambda d(., boundary)) and
/// descends to the largest fixed point below it. kFromBelow starts at 0
/// (1 on the constraint) and ascends to the least fixed point, the discrete
/// Perron infimum over supersolutions that are 1 on the constraint.
enum class Start { kFromBelow, kFromAbove };

template <class T>
struct SolverConfig {
  T h = T(1) / 64;
  double tol = 1e-12;
  std::size_t max_iters = 1000000;
  SweepMode mode = SweepMode::kGaussSeidel;
  Start start = Start::kFromBelow;
  unsigned threads = 1;
  /// Once updates fall below 1e-6, periodically freeze the active branch of
  /// every node and solve the linear system exactly; the result is kept only
  /// if it is a fixed point below the current iterate.
  bool polish = true;
};

template <class T>
struct EigenResult {
  T lambda;
  T r_inf;
  RidgeSet<T> ridge;
  NodeFunction<T> u;
  std::size_t iterations = 0;
  double max_update = 0.0;
  double residual_sup = 0.0;
  /// Largest amount by which T u pointed against the direction of travel
  /// during any sweep (it is clamped away). Zero up to rounding when the
  /// initializer is a discrete super- (from above) or subsolution (from below).
  double max_backstep = 0.0;
  bool converged = false;
  /// Ascending iterates exceeded 1e6: no positive supersolution is 1 on the constraint.
  bool diverged = false;
  /// Number of accepted linear polishing steps.
  std::size_t polished = 0;
  /// Largest change made by an accepted polishing step.
  double polish_jump = 0.0;
};

/// Midrange of the neighbour values: the root of
/// max_i (u_i - x) / g_i + min_j (u_j - x) / g_j = 0.
double discrete_midrange(std::span<const double> values, std::span<const double> gaps);

/// min_i u_i / (1 - lambda g_i).
double discrete_eikonal(std::span<const double> values, std::span<const double> gaps,
                        double lambda);

/// Monotone iteration of T u = max(midrange, eikonal) with boundary nodes 0
/// and constraint nodes 1, each step clamped to the direction set by
/// config.start. Non-convergence is reported through `converged`, not thrown.
template <class T>
EigenResult<T> solve_ground_state(const GraphPtr<T>& g, double lambda,
                                  std::span<const GraphPoint<T>> constraint,
                                  const SolverConfig<T>& config);

struct NodeResidual {
  double midrange = 0.0;
  double eikonal = 0.0;
  /// u - T u; zero at fixed nodes.
  double residual = 0.0;
};

template <class T>
std::vector<NodeResidual> residual_report(const NodeFunction<T>& u, double lambda);

template <class T>
double residual_sup(const NodeFunction<T>& u, double lambda);

template <class T>
struct IncenterCheck {
  GraphPoint<T> point;
  double value = 0.0;
  double subslope = 0.0;
  /// lambda u(x0): a lambda-supersolution needs subslope >= required.
  double required = 0.0;
  /// Lambda u(x0) + slack.
  double bound = 0.0;
  bool supersolution = true;
  bool within_bound = true;
};

template <class T>
struct IncenterReport {
  Status status = Status::kPass;
  std::vector<IncenterCheck<T>> checks;
};

/// At every ridge point x0 of a candidate positive lambda-supersolution:
/// lambda u(x0) <= subslope(x0) <= Lambda u(x0) + slack, with Lambda = 1/R.
/// Fails when either side breaks; for lambda > Lambda + slack / u(x0) the
/// window is empty and no candidate can pass.
template <class T>
IncenterReport<T> incenter_bound_check(const NodeFunction<T>& u, double lambda, double slack);

template <class T>
IncenterReport<T> incenter_bound_check(const PLFunction<T>& u, const RidgeSet<T>& ridge,
                                       double lambda, double slack);

template <class T>
struct CollapseReport {
  std::vector<std::size_t> sweeps;
  std::vector<double> sup_norm;
  bool monotone = true;
  NodeFunction<T> u;
};

/// Iterates T (without the constraint and without the clamp) from the bump
/// max(0, 1 - d(., ridge[0]) / R) and records the sup norm every
/// `record_every` sweeps.
template <class T>
CollapseReport<T> subcritical_collapse_probe(const GraphPtr<T>& g, double lambda,
                                             const SolverConfig<T>& config, std::size_t sweeps,
                                             std::size_t record_every = 100);

}  // namespace inflap
