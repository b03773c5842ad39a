#pragma once

#include "inflap/pl_function.hpp"

namespace inflap {

/// The dumbbell-shaped tree: a hub O with a short leg e0 to the boundary
/// vertex V0 and two arms O - V(+-1); each arm ends in a unit leg e(+-2)
/// and a long leg e(+-3) of length 3. Boundary = the five leaves.
template <class T>
GraphPtr<T> dumbbell_graph();

/// Closed-form ground state normalized to 1 at both incenters.
template <class T>
PLFunction<T> dumbbell_ground_state(const GraphPtr<T>& g);

/// Closed-form ground state constrained only at the incenter on e+3.
template <class T>
PLFunction<T> dumbbell_ground_state_plus(const GraphPtr<T>& g);

}  // namespace inflap
