#include "pdlab/rectify.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace pdlab {

namespace {

constexpr int kMax = std::numeric_limits<int>::max();
constexpr int kMin = std::numeric_limits<int>::min();

int min_row(const PipeDream& P) {
  int r = kMax;
  for (Position p : P) r = std::min(r, p.row);
  return r;
}

int max_row(const PipeDream& P) {
  int r = kMin;
  for (Position p : P) r = std::max(r, p.row);
  return r;
}

int min_col(const PipeDream& P) {
  int c = kMax;
  for (Position p : P) c = std::min(c, p.col);
  return c;
}

int max_col(const PipeDream& P) {
  int c = kMin;
  for (Position p : P) c = std::max(c, p.col);
  return c;
}

bool reds_north(const SuperPipeDream& W) {
  return W.red.empty() || W.black.empty() || max_row(W.red) < min_row(W.black);
}

bool reds_south(const SuperPipeDream& W) {
  return W.red.empty() || W.black.empty() || min_row(W.red) > max_row(W.black);
}

int diameter(const SuperPipeDream& W) {
  PipeDream u = underlying(W);
  if (u.empty()) return 0;
  return (max_row(u) - min_row(u)) + (max_col(u) - min_col(u));
}

}  // namespace

Rectification rect(const SuperPipeDream& W, FlowTrace* trace) {
  const Permutation w = permutation(W);
  int cap = w.length() + diameter(W) + 8;
  if (!W.red.empty() && !W.black.empty()) {
    // Every letter is at most n-1 and each Y+ moves all reds one column east,
    // so red rows fall below n - min_red_col - m while black rows stay put.
    cap = std::max(cap, w.size() - min_col(W.red) - min_row(W.black) + 1);
  }
  SuperPipeDream cur = W;
  int m = 0;
  if (trace) trace->record("W", cur);
  while (!reds_north(cur)) {
    if (++m > cap) throw InternalError("rect: separation not reached within the iteration cap");
    cur = y_plus(cur);
    if (trace) trace->record("(Y+)^" + std::to_string(m), cur);
  }
  return {cur.black, transpose(shift(cur.red, m)), m};
}

SuperPipeDream rect_inverse(const PipeDream& V, const PipeDream& U) {
  const PipeDream Ut = transpose(U);
  int m = 0;
  if (!V.empty() && !Ut.empty()) m = std::max(0, max_row(Ut) - min_row(V) + 1);
  SuperPipeDream cur{V, shift(Ut, -m)};
  for (int k = 0; k < m; ++k) cur = y_minus(cur);
  return cur;
}

Rectification corect(const SuperPipeDream& W, FlowTrace* trace) {
  const Permutation w = permutation(W);
  int cap = w.length() + diameter(W) + 8;
  if (!W.red.empty() && !W.black.empty()) {
    // Reds move one column west per step and stay in H, so their rows grow.
    cap = std::max(cap, max_row(W.black) + max_col(W.red) - 1);
  }
  SuperPipeDream cur = W;
  int m = 0;
  if (trace) trace->record("W", cur);
  while (!reds_south(cur)) {
    if (++m > cap) throw InternalError("corect: separation not reached within the iteration cap");
    cur = y_minus(cur);
    if (trace) trace->record("(Y-)^" + std::to_string(m), cur);
  }
  return {cur.black, transpose(shift(cur.red, -m)), m};
}

SuperPipeDream corect_inverse(const PipeDream& V, const PipeDream& U) {
  const PipeDream Ut = transpose(U);
  int m = 0;
  if (!V.empty() && !Ut.empty()) m = std::max(0, max_row(V) - min_row(Ut) + 1);
  SuperPipeDream cur{V, shift(Ut, m)};
  for (int k = 0; k < m; ++k) cur = y_plus(cur);
  return cur;
}

SuperPipeDream insertion_diagram(const PipeDream& P, const std::vector<int>& I,
                                 const std::vector<int>& J, int m) {
  if (m < 1) throw PreconditionError("insert: m must be positive");
  if (!is_ordinary(P)) throw PreconditionError("insert: pipe dream is not ordinary");
  for (int d : permutation(P).descents())
    if (d > m) throw PreconditionError("insert: descent " + std::to_string(d) + " exceeds m");
  const std::set<int> Iset(I.begin(), I.end()), Jset(J.begin(), J.end());
  if (Iset.size() != I.size() || Jset.size() != J.size())
    throw PreconditionError("insert: repeated row index");
  for (int i : Iset)
    if (i < 1 || i > m) throw PreconditionError("insert: I must be a subset of [m]");
  for (int j : Jset)
    if (!Iset.count(j)) throw PreconditionError("insert: J must be a subset of I");

  SuperPipeDream W;
  for (Position p : P) W.black.insert({p.row, p.col + 1});
  for (int r = 1; r <= m; ++r) {
    if (Iset.count(r)) W.black.insert({r, 1});
    if (!Jset.count(r)) W.red.insert({r, 1});
  }
  return W;
}

PipeDream insert(const PipeDream& P, const std::vector<int>& I, const std::vector<int>& J, int m) {
  return rect(insertion_diagram(P, I, J, m)).V;
}

}  // namespace pdlab
