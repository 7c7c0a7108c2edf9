#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pdlab/diagram.hpp"
#include "pdlab/errors.hpp"

namespace pdlab {

// Raised when a flow operator is applied outside its domain.
class FlowDomainError : public PreconditionError {
 public:
  FlowDomainError(const std::string& what, Position offending)
      : PreconditionError(what), position(offending) {}
  Position position;
};

// Caller-owned log of the intermediate diagrams of a composite operator.
struct FlowTrace {
  std::vector<std::pair<std::string, SuperPipeDream>> steps;
  void record(std::string label, const SuperPipeDream& P) { steps.emplace_back(std::move(label), P); }
};

// Moves every red checker of column j into column j+1.
// Requires no red checker in column j+1.
SuperPipeDream y_plus_j(const SuperPipeDream& P, int j);
// Inverse of y_plus_j(., c - 1): moves the reds of column c into column c-1.
// Requires no red checker in column c-1.
SuperPipeDream y_minus_j(const SuperPipeDream& P, int c);

// Y+_j Y+_{j+1} ... Y+_M, M the largest red column.
SuperPipeDream y_plus_geq(const SuperPipeDream& P, int j, FlowTrace* trace = nullptr);
// Inverse of y_plus_geq(., j - 1): Y-_M ... Y-_{j+1} Y-_j, applied from column j upward.
SuperPipeDream y_minus_geq(const SuperPipeDream& P, int j, FlowTrace* trace = nullptr);
SuperPipeDream y_plus(const SuperPipeDream& P, FlowTrace* trace = nullptr);
SuperPipeDream y_minus(const SuperPipeDream& P, FlowTrace* trace = nullptr);

// Row versions, by conjugation with the adjoint.
SuperPipeDream x_plus_i(const SuperPipeDream& P, int i);
SuperPipeDream x_minus_i(const SuperPipeDream& P, int i);
SuperPipeDream x_plus_geq(const SuperPipeDream& P, int i, FlowTrace* trace = nullptr);
SuperPipeDream x_minus_geq(const SuperPipeDream& P, int i, FlowTrace* trace = nullptr);
SuperPipeDream x_plus(const SuperPipeDream& P, FlowTrace* trace = nullptr);
SuperPipeDream x_minus(const SuperPipeDream& P, FlowTrace* trace = nullptr);

// Single-checker move on a reduced diagram: flows only the highest red of
// column j. Identity when column j has no red checker.
SuperPipeDream y_prime_j(const SuperPipeDream& P, int j);

}  // namespace pdlab
