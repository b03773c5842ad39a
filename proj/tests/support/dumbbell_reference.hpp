#pragma once

// The dumbbell ground states written out edge by edge, in the edge
// parametrization of the bundled graph (t runs from the hub side).

#include <cmath>
#include <stdexcept>
#include <string>

namespace inflap::testing {

inline double reference_u_inf(const std::string& edge, double t) {
  if (edge == "e0") return -t / 4 + 0.25;
  if (edge == "e+1" || edge == "e-1") return t / 4 + 0.25;
  if (edge == "e+2" || edge == "e-2") return -t / 2 + 0.5;
  if (edge == "e+3" || edge == "e-3") return -std::abs(t - 1) / 2 + 1;
  throw std::invalid_argument("no edge " + edge);
}

/// Constrained at the incenter on e+3 only.
inline double reference_u_inf_plus(const std::string& edge, double t) {
  if (edge == "e-1") return -t / 8 + 0.25;
  if (edge == "e-2") return -t / 8 + 0.125;
  if (edge == "e-3") return -std::abs(t - 1) / 8 + 0.25;
  return reference_u_inf(edge, t);
}

}  // namespace inflap::testing
