#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "inflap/pl_function.hpp"
#include "inflap/region.hpp"
#include "inflap/report.hpp"

namespace inflap {

template <class T>
struct SuperharmonicReport {
  bool pass = true;
  std::vector<Witness<T>> violations;
};

/// Local certificate for comparison with cones from below on a metric
/// graph: u is concave on every edge interior, and at every domain vertex
/// the outgoing derivatives g_i satisfy max g_i + min g_i <= 0 (the
/// midrange condition). `tolerance` relaxes both inequalities; the field's
/// own comparison slack always applies.
template <class T>
SuperharmonicReport<T> is_inf_superharmonic_exact(const PLFunction<T>& u, double tolerance = 0.0);

template <class T>
struct ConeCounterexample {
  GraphPoint<T> apex;
  T kappa;
  T offset;
  Region<T> subdomain;
  GraphPoint<T> point;
  T defect;  // phi - u at `point`
};

template <class T>
struct ConeSampleReport {
  bool pass = true;
  std::size_t trials = 0;
  std::size_t skipped = 0;
  std::optional<ConeCounterexample<T>> counterexample;
};

/// Randomized comparison with cones: draws subdomains O (balls or edge
/// sub-intervals compactly inside the domain), apexes outside O and slopes
/// kappa <= 0, calibrates the cone to touch u from below on the boundary
/// of O, then looks for points of the closure of O where the cone rises
/// above u. Deterministic in (seed, trials).
template <class T>
ConeSampleReport<T> cone_comparison_sampled(const PLFunction<T>& u, std::size_t trials,
                                            std::uint64_t seed, std::size_t points_per_trial = 48);

template <class T>
struct HarnackReport {
  Status status = Status::kInapplicable;
  std::string reason;
  std::size_t pairs = 0;
  double max_ratio = 0.0;  // sup / inf of u over the inner ball
  std::vector<std::pair<GraphPoint<T>, GraphPoint<T>>> witnesses;  // (x, y) with u(y) > 3 u(x)
};

/// u(y) <= 3 u(x) for x, y in the ball of radius r about x0, given
/// u >= 0 on the ball of radius R inside the domain and 4r < R.
template <class T>
HarnackReport<T> harnack_check(const PLFunction<T>& u, const GraphPoint<T>& center,
                               const T& outer_radius, const T& inner_radius, std::size_t samples,
                               std::uint64_t seed = 0);

template <class T>
struct RegularityReport {
  Status status = Status::kInapplicable;
  std::string reason;
  std::size_t lipschitz_pairs = 0;
  std::vector<Witness<T>> lipschitz_violations;  // defect = lhs - rhs of the local bound
  std::vector<Witness<T>> slope_mismatches;      // defect = slope - subslope
  std::vector<Witness<T>> semicontinuity_violations;
};

/// For an infinity-superharmonic u: the local Lipschitz bound
/// |u(x) - u(y)| <= (max(u(x), u(y)) - inf u) / r * d(x, y) on sampled
/// pairs with 2r < d(x, boundary); slope = subslope everywhere in the
/// domain; and upper semicontinuity of the subslope at breakpoints.
template <class T>
RegularityReport<T> regularity_checks(const PLFunction<T>& u, std::size_t samples = 200,
                                      std::uint64_t seed = 0);

template <class T>
struct CompositionReport {
  Status status = Status::kInapplicable;
  std::string reason;
  bool affine = false;  // h'' vanishes on the range: boundary case, still run
  SuperharmonicReport<T> composed;
};

/// Builds h o v and certifies it with the exact checker (up to the
/// composition tolerance). h must be increasing and concave on the range
/// of v (an affine h is reported as such); otherwise the result is
/// INAPPLICABLE, with the exact check still run for diagnosis.
template <class T>
CompositionReport<T> composition_check(const PLFunction<T>& v, const SmoothScalarMap& h,
                                       double tolerance = 1e-9);

}  // namespace inflap
