#include "pdlab/flow.hpp"

#include <algorithm>
#include <limits>
#include <optional>

namespace pdlab {

namespace {

std::string pos_str(Position p) {
  return "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")";
}

void require_no_reds(const SuperPipeDream& P, int col, const char* op) {
  for (Position p : P.red)
    if (p.col == col)
      throw FlowDomainError(std::string(op) + ": red checker at " + pos_str(p) +
                                " lies in column " + std::to_string(col),
                            p);
}

void swap_cells(SuperPipeDream& P, Position a, Position b) {
  const int ca = checkers_at(P, a), cb = checkers_at(P, b);
  set_checkers(P, a, cb);
  set_checkers(P, b, ca);
}

bool occupied(const SuperPipeDream& P, Position p) { return checkers_at(P, p) != kEmpty; }

// Lowest red in column j with row < bound.
std::optional<int> lowest_red_below(const SuperPipeDream& P, int j, int bound) {
  std::optional<int> best;
  for (Position p : P.red)
    if (p.col == j && p.row < bound && (!best || p.row > *best)) best = p.row;
  return best;
}

// Highest red in column j with row > bound.
std::optional<int> highest_red_above(const SuperPipeDream& P, int j, int bound) {
  for (Position p : P.red)  // row-major order: first hit is the highest
    if (p.col == j && p.row > bound) return p.row;
  return std::nullopt;
}

// First cell strictly above (i, j) holding no checker; cells outside H are vacant.
int first_vacant_above(const SuperPipeDream& P, int i, int j) {
  int r = i - 1;
  while (in_half_space({r, j}) && occupied(P, {r, j})) --r;
  return r;
}

int first_vacant_below(const SuperPipeDream& P, int i, int j) {
  int r = i + 1;
  while (occupied(P, {r, j})) ++r;
  return r;
}

void move_red(SuperPipeDream& P, Position from, Position to) {
  if (!in_half_space(to)) throw InternalError("flow: ladder corner " + pos_str(to) + " is outside H");
  P.red.erase(from);
  P.red.insert(to);
}

std::pair<int, int> red_column_range(const SuperPipeDream& P) {
  int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
  for (Position p : P.red) {
    lo = std::min(lo, p.col);
    hi = std::max(hi, p.col);
  }
  return {lo, hi};
}

}  // namespace

SuperPipeDream y_plus_j(const SuperPipeDream& P, int j) {
  require_no_reds(P, j + 1, "Y+_j");
  SuperPipeDream Q = P;
  int bound = std::numeric_limits<int>::max();
  while (auto row = lowest_red_below(Q, j, bound)) {
    const int i = *row;
    if (occupied(Q, {i, j + 1})) {
      swap_cells(Q, {i, j}, {i, j + 1});
      bound = i;
      continue;
    }
    const int top = first_vacant_above(Q, i, j);
    move_red(Q, {i, j}, {top, j + 1});
    for (int r = top + 1; r < i; ++r) swap_cells(Q, {r, j}, {r, j + 1});
    bound = top;
  }
  return Q;
}

SuperPipeDream y_minus_j(const SuperPipeDream& P, int c) {
  const int j = c - 1;
  require_no_reds(P, j, "Y-_j");
  SuperPipeDream Q = P;
  int bound = std::numeric_limits<int>::min();
  while (auto row = highest_red_above(Q, c, bound)) {
    const int top = *row;
    if (occupied(Q, {top, j})) {
      swap_cells(Q, {top, j}, {top, c});
      bound = top;
      continue;
    }
    const int bottom = first_vacant_below(Q, top, c);
    move_red(Q, {top, c}, {bottom, j});
    for (int r = top + 1; r < bottom; ++r) swap_cells(Q, {r, j}, {r, c});
    bound = bottom;
  }
  return Q;
}

SuperPipeDream y_plus_geq(const SuperPipeDream& P, int j, FlowTrace* trace) {
  if (P.red.empty()) return P;
  const int hi = red_column_range(P).second;
  SuperPipeDream Q = P;
  if (trace) trace->record("Y+>=" + std::to_string(hi + 1), Q);
  for (int c = hi; c >= j; --c) {
    Q = y_plus_j(Q, c);
    if (trace) trace->record("Y+>=" + std::to_string(c), Q);
  }
  return Q;
}

SuperPipeDream y_minus_geq(const SuperPipeDream& P, int j, FlowTrace* trace) {
  if (P.red.empty()) return P;
  const int hi = red_column_range(P).second;
  SuperPipeDream Q = P;
  if (trace) trace->record("start", Q);
  for (int c = j; c <= hi; ++c) {
    Q = y_minus_j(Q, c);
    if (trace) trace->record("Y-_" + std::to_string(c), Q);
  }
  return Q;
}

SuperPipeDream y_plus(const SuperPipeDream& P, FlowTrace* trace) {
  if (P.red.empty()) return P;
  return y_plus_geq(P, red_column_range(P).first, trace);
}

SuperPipeDream y_minus(const SuperPipeDream& P, FlowTrace* trace) {
  if (P.red.empty()) return P;
  return y_minus_geq(P, red_column_range(P).first, trace);
}

namespace {

// Runs a column operator on the adjoint and maps the trace back.
template <typename F>
SuperPipeDream via_adjoint(const SuperPipeDream& P, FlowTrace* trace, F op) {
  FlowTrace inner;
  SuperPipeDream Q = adjoint(op(adjoint(P), trace ? &inner : nullptr));
  if (trace) {
    for (auto& [label, D] : inner.steps) {
      std::string l = label;
      std::replace(l.begin(), l.end(), 'Y', 'X');
      trace->record(l, adjoint(D));
    }
  }
  return Q;
}

}  // namespace

SuperPipeDream x_plus_i(const SuperPipeDream& P, int i) { return adjoint(y_plus_j(adjoint(P), i)); }
SuperPipeDream x_minus_i(const SuperPipeDream& P, int i) {
  return adjoint(y_minus_j(adjoint(P), i));
}

SuperPipeDream x_plus_geq(const SuperPipeDream& P, int i, FlowTrace* trace) {
  return via_adjoint(P, trace, [i](const SuperPipeDream& D, FlowTrace* t) { return y_plus_geq(D, i, t); });
}
SuperPipeDream x_minus_geq(const SuperPipeDream& P, int i, FlowTrace* trace) {
  return via_adjoint(P, trace, [i](const SuperPipeDream& D, FlowTrace* t) { return y_minus_geq(D, i, t); });
}
SuperPipeDream x_plus(const SuperPipeDream& P, FlowTrace* trace) {
  return via_adjoint(P, trace, [](const SuperPipeDream& D, FlowTrace* t) { return y_plus(D, t); });
}
SuperPipeDream x_minus(const SuperPipeDream& P, FlowTrace* trace) {
  return via_adjoint(P, trace, [](const SuperPipeDream& D, FlowTrace* t) { return y_minus(D, t); });
}

SuperPipeDream y_prime_j(const SuperPipeDream& P, int j) {
  if (!is_reduced(P)) throw PreconditionError("Y'_j: super pipe dream is not reduced");
  auto row = highest_red_above(P, j, std::numeric_limits<int>::min());
  if (!row) return P;
  const int i = *row;
  SuperPipeDream Q = P;
  if (occupied(Q, {i, j + 1})) {
    swap_cells(Q, {i, j}, {i, j + 1});
    return Q;
  }
  const int top = first_vacant_above(Q, i, j);
  move_red(Q, {i, j}, {top, j + 1});
  for (int r = top + 1; r < i; ++r)
    if (checkers_at(Q, {r, j}) == kBlack && checkers_at(Q, {r, j + 1}) == kEmpty)
      swap_cells(Q, {r, j}, {r, j + 1});
  return Q;
}

}  // namespace pdlab
