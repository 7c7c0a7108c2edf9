#pragma once

#include <vector>

#include "pdlab/diagram.hpp"
#include "pdlab/flow.hpp"

namespace pdlab {

struct Rectification {
  PipeDream V;
  PipeDream U;
  int steps = 0;
  bool operator==(const Rectification&) const = default;
};

// Flows reds north-east until they sit strictly above every black checker.
// perm(W) = perm(U)^-1 * perm(V).
Rectification rect(const SuperPipeDream& W, FlowTrace* trace = nullptr);
SuperPipeDream rect_inverse(const PipeDream& V, const PipeDream& U);

// Flows reds south-west until they sit strictly below every black checker.
// perm(W) = perm(V) * perm(U^t).
Rectification corect(const SuperPipeDream& W, FlowTrace* trace = nullptr);
SuperPipeDream corect_inverse(const PipeDream& V, const PipeDream& U);

// The super pipe dream fed to rect by insert: P shifted one column east, and
// column 1 rows 1..m holding black checkers at rows I and red ones at [m] \ J.
SuperPipeDream insertion_diagram(const PipeDream& P, const std::vector<int>& I,
                                 const std::vector<int>& J, int m);
// (I, J) inserted into P.
PipeDream insert(const PipeDream& P, const std::vector<int>& I, const std::vector<int>& J, int m);

}  // namespace pdlab
