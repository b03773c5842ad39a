#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "inflap/pl_function.hpp"
#include "inflap/region.hpp"
#include "inflap/report.hpp"

namespace inflap {

/// Dirichlet data g on the boundary vertices.
template <class T>
using BoundaryData = std::map<VertexId, T>;

/// u(x) = min over boundary y of g(y) + lambda * d(x, y), exactly.
/// Throws std::invalid_argument if lambda <= 0 or g misses a boundary vertex.
template <class T>
PLFunction<T> mcshane_extension(const GraphPtr<T>& g, const BoundaryData<T>& data,
                                const T& lambda);

template <class T>
struct Attainment {
  VertexId vertex;
  T prescribed;
  T value;
  bool attained;
};

/// Whether u = g holds at each boundary vertex (the extension only
/// guarantees u <= g).
template <class T>
std::vector<Attainment<T>> boundary_attainment(const PLFunction<T>& u, const BoundaryData<T>& data);

template <class T>
struct DppReport {
  std::size_t samples = 0;
  std::size_t candidates = 0;
  T max_defect;
  std::vector<Witness<T>> witnesses;
};

/// Checks u(x) = min over z in (boundary of O) and a dense grid of the
/// closure of O of u(z) + lambda d(x, z) at `samples` random points of O.
/// The boundary of O is finite and always included, so a McShane extension
/// has zero defect. Throws std::invalid_argument when O touches the
/// boundary of the domain.
template <class T>
DppReport<T> dpp_check(const PLFunction<T>& u, const T& lambda, const Region<T>& subdomain,
                       std::size_t samples, std::uint64_t seed, std::size_t grid_points = 200);

enum class MongeClass { kSolution, kSupersolution, kSubsolution, kNeither };

std::string_view to_string(MongeClass c);

template <class T>
struct MongeReport {
  MongeClass cls = MongeClass::kNeither;
  std::size_t points_checked = 0;
  std::vector<Witness<T>> below;  // subslope < lambda; defect = lambda - subslope
  std::vector<Witness<T>> above;  // subslope > lambda; defect = subslope - lambda
};

/// Compares the subslope with lambda at every vertex of the domain, every
/// interior breakpoint and one interior point per segment. For a
/// piecewise-linear function these points see every subslope value.
template <class T>
MongeReport<T> monge_classify(const PLFunction<T>& u, const T& lambda);

template <class T>
struct ComparisonReport {
  Status status = Status::kInapplicable;
  std::string reason;
  std::size_t points_checked = 0;
  std::vector<Witness<T>> witnesses;  // defect = u - v > 0
};

/// Comparison principle harness: with u a Monge subsolution, v a Monge
/// supersolution and u <= v on the boundary, checks u <= v at every
/// breakpoint of either function and at `samples` random points.
template <class T>
ComparisonReport<T> comparison_harness(const PLFunction<T>& u, const PLFunction<T>& v,
                                       const T& lambda, std::size_t samples = 1000,
                                       std::uint64_t seed = 0);

}  // namespace inflap
