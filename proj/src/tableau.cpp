#include "pdlab/tableau.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

#include "pdlab/errors.hpp"
#include "pdlab/flow.hpp"
#include "pdlab/rectify.hpp"

namespace pdlab {

Partition RevTableau::shape() const {
  Partition p;
  for (auto& r : rows) p.push_back(static_cast<int>(r.size()));
  return p;
}

int RevTableau::size() const {
  int s = 0;
  for (auto& r : rows) s += static_cast<int>(r.size());
  return s;
}

bool RevTableau::is_valid() const {
  for (std::size_t a = 0; a < rows.size(); ++a) {
    if (rows[a].empty()) return false;
    if (a > 0 && rows[a].size() > rows[a - 1].size()) return false;
    for (std::size_t b = 0; b < rows[a].size(); ++b) {
      if (b > 0 && rows[a][b] > rows[a][b - 1]) return false;
      if (a > 0 && rows[a][b] >= rows[a - 1][b]) return false;
    }
  }
  return true;
}

std::string RevTableau::str() const {
  std::string out;
  for (auto& r : rows) {
    for (std::size_t b = 0; b < r.size(); ++b) out += (b ? " " : "") + std::to_string(r[b]);
    out += "\n";
  }
  return out;
}

RevTableau RevTableau::parse(const std::string& text) {
  RevTableau T;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> row;
    for (int e; ls >> e;) row.push_back(e);
    if (!ls.eof()) throw PreconditionError("tableau text: bad entry in line '" + line + "'");
    if (!row.empty()) T.rows.push_back(std::move(row));
  }
  if (!T.is_valid()) throw PreconditionError("tableau text: not a rev-tableau");
  return T;
}

std::string ColoredRevTableau::str() const {
  std::string out;
  for (std::size_t a = 0; a < tableau.rows.size(); ++a) {
    for (std::size_t b = 0; b < tableau.rows[a].size(); ++b)
      out += (b ? " " : "") + std::to_string(tableau.rows[a][b]) + (red[a][b] ? "r" : "");
    out += "\n";
  }
  return out;
}

RevTableau column_tableau(std::vector<int> I) {
  std::sort(I.rbegin(), I.rend());
  if (std::adjacent_find(I.begin(), I.end()) != I.end())
    throw PreconditionError("column tableau: repeated entry");
  RevTableau T;
  for (int e : I) T.rows.push_back({e});
  return T;
}

std::vector<std::vector<Position>> tab_cells(const PipeDream& P, int m) {
  if (!is_reduced(P)) throw PreconditionError("tab: pipe dream is not reduced");
  const Permutation w = permutation(P);
  if (!grassmannian_shape(w, m))
    throw PreconditionError("tab: " + w.str() + " is not " + std::to_string(m) + "-Grassmannian");
  std::vector<std::vector<Position>> cells(m);
  for (auto& [p, lab] : pipe_labels(P)) {
    if (lab.h_pipe < 1 || lab.h_pipe > m)
      throw InternalError("tab: pipe " + std::to_string(lab.h_pipe) + " crosses horizontally");
    cells[m - lab.h_pipe].push_back(p);
  }
  for (auto& row : cells)
    std::sort(row.begin(), row.end(), [](Position x, Position y) { return x.col < y.col; });
  while (!cells.empty() && cells.back().empty()) cells.pop_back();
  return cells;
}

RevTableau tab(const PipeDream& P, int m) {
  RevTableau T;
  for (auto& row : tab_cells(P, m)) {
    std::vector<int> labels;
    for (Position p : row) labels.push_back(p.row);
    T.rows.push_back(std::move(labels));
  }
  if (!T.is_valid()) throw InternalError("tab: result is not a rev-tableau:\n" + T.str());
  return T;
}

ColoredRevTableau tab_colored(const SuperPipeDream& P, int m) {
  if (!is_reduced(P)) throw PreconditionError("tab: super pipe dream is not reduced");
  const auto cells = tab_cells(underlying(P), m);
  ColoredRevTableau C;
  C.tableau = tab(underlying(P), m);
  for (auto& row : cells) {
    std::vector<bool> colors;
    for (Position p : row) colors.push_back(P.red.contains(p));
    C.red.push_back(std::move(colors));
  }
  return C;
}

PipeDream tab_inverse(const RevTableau& T, int m) {
  if (!T.is_valid()) throw PreconditionError("tab_inverse: not a rev-tableau");
  if (static_cast<int>(T.rows.size()) > m)
    throw PreconditionError("tab_inverse: more than m rows");
  if (T.empty()) return {};
  int rmin = T.rows[0][0], rmax = T.rows[0][0];
  for (auto& r : T.rows)
    for (int e : r) rmin = std::min(rmin, e), rmax = std::max(rmax, e);
  const int width = static_cast<int>(T.rows[0].size());

  std::vector<std::deque<int>> pending(m + 1);
  for (std::size_t a = 0; a < T.rows.size(); ++a)
    pending[m - a].assign(T.rows[a].begin(), T.rows[a].end());

  PipeDream P;
  sweep_wiring(rmin, rmax, 1 - rmax, m + width + (rmax - rmin) + 2, [&](Position p, int h, int) {
    if (h < 1 || h > m || pending[h].empty() || pending[h].front() != p.row) return false;
    pending[h].pop_front();
    P.insert(p);
    return true;
  });
  for (auto& q : pending)
    if (!q.empty()) throw PreconditionError("tab_inverse: tableau is not realized by a pipe dream");
  if (!is_reduced(P) || !grassmannian_shape(permutation(P), m) || !(tab(P, m) == T))
    throw PreconditionError("tab_inverse: tableau is not realized by a pipe dream");
  return P;
}

std::vector<RevTableau> rssyt(const Partition& lambda_in, int m) {
  const Partition lambda = normalize_partition(lambda_in);
  std::vector<RevTableau> out;
  RevTableau T;
  for (int len : lambda) T.rows.emplace_back(len, 0);
  std::vector<std::pair<int, int>> order;
  for (std::size_t a = 0; a < lambda.size(); ++a)
    for (int b = 0; b < lambda[a]; ++b) order.push_back({static_cast<int>(a), b});

  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k == order.size()) {
      out.push_back(T);
      return;
    }
    auto [a, b] = order[k];
    int hi = m;
    if (b > 0) hi = std::min(hi, T.rows[a][b - 1]);
    if (a > 0) hi = std::min(hi, T.rows[a - 1][b] - 1);
    for (int e = 1; e <= hi; ++e) {
      T.rows[a][b] = e;
      fill(k + 1);
    }
  };
  fill(0);
  std::sort(out.begin(), out.end());
  return out;
}

MultiPoly tableau_weight(const RevTableau& T) {
  MultiPoly p = 1;
  for (auto& r : T.rows)
    for (int e : r) p *= MultiPoly::x(e);
  return p;
}

namespace {

// Schensted row insertion into a tableau with weakly increasing rows.
void row_insert(std::vector<std::vector<int>>& rows, int x) {
  for (auto& row : rows) {
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return;
    }
    std::swap(*it, x);
  }
  rows.push_back({x});
}

}  // namespace

RevTableau plactic_product(const RevTableau& A, const RevTableau& B) {
  if (A.empty()) return B;
  if (B.empty()) return A;
  int top = A.rows[0][0];
  for (auto* T : {&A, &B})
    for (auto& r : T->rows)
      for (int e : r) top = std::max(top, e);
  auto flip = [top](int e) { return top + 1 - e; };

  std::vector<std::vector<int>> rows;
  for (auto& r : A.rows) {
    rows.emplace_back();
    for (int e : r) rows.back().push_back(flip(e));
  }
  for (auto it = B.rows.rbegin(); it != B.rows.rend(); ++it)
    for (int e : *it) row_insert(rows, flip(e));

  RevTableau C;
  for (auto& r : rows) {
    C.rows.emplace_back();
    for (int e : r) C.rows.back().push_back(flip(e));
  }
  return C;
}

std::vector<std::vector<int>> column_supports(const BinaryMatrix& A) {
  std::vector<std::vector<int>> C(A.cols());
  for (int j = 1; j <= A.cols(); ++j)
    for (int i = 1; i <= A.rows(); ++i)
      if (A(i, j)) C[j - 1].push_back(i);
  return C;
}

RevTableau ins(const BinaryMatrix& A) {
  RevTableau T;
  for (auto& c : column_supports(A)) T = plactic_product(T, column_tableau(c));
  return T;
}

RevTableau rec(const BinaryMatrix& A) {
  const int n = A.cols();
  const auto C = column_supports(A);
  std::vector<Partition> suffix_shape(n + 2);
  RevTableau S;
  for (int r = n; r >= 1; --r) {
    S = plactic_product(column_tableau(C[r - 1]), S);
    suffix_shape[r] = S.shape();
  }
  RevTableau R;
  if (n == 0) return R;
  const Partition shape = conjugate(suffix_shape[1]);
  for (std::size_t i = 0; i < shape.size(); ++i) {
    R.rows.emplace_back();
    for (int j = 0; j < shape[i]; ++j) {
      // Cell (j+1, i+1) of the suffix shapes, 1-based.
      int best = 0;
      for (int r = n; r >= 1 && !best; --r) {
        const Partition& sh = suffix_shape[r];
        if (j < static_cast<int>(sh.size()) && sh[j] > static_cast<int>(i)) best = r;
      }
      R.rows.back().push_back(best);
    }
  }
  return R;
}

BinaryMatrix a_dagger(const BinaryMatrix& A) {
  BinaryMatrix D(A.cols(), A.rows());
  for (int i = 1; i <= A.rows(); ++i)
    for (int j = 1; j <= A.cols(); ++j) D.set(j, i, 1 - A(i, j));
  return D;
}

RevTableau overline(const RevTableau& T, int m, int n) {
  if (!T.is_valid()) throw PreconditionError("overline: not a rev-tableau");
  const int width = T.empty() ? 0 : static_cast<int>(T.rows[0].size());
  if (width > m || static_cast<int>(T.rows.size()) > n)
    throw PreconditionError("overline: shape does not fit the box");
  std::vector<std::vector<int>> columns(m);
  for (int j = 1; j <= m; ++j) {
    const int source = m + 1 - j;  // 1-based column of T
    std::vector<bool> present(n + 1, false);
    for (auto& r : T.rows) {
      if (static_cast<int>(r.size()) < source) continue;
      const int e = r[source - 1];
      if (e < 1 || e > n) throw PreconditionError("overline: entry outside [n]");
      present[e] = true;
    }
    for (int e = n; e >= 1; --e)
      if (!present[e]) columns[j - 1].push_back(e);
  }
  RevTableau R;
  for (int k = 0;; ++k) {
    std::vector<int> row;
    for (auto& c : columns)
      if (static_cast<int>(c.size()) > k) row.push_back(c[k]);
      else break;
    if (row.empty()) break;
    R.rows.push_back(std::move(row));
  }
  if (!R.is_valid() || R.size() != m * n - T.size())
    throw PreconditionError("overline: result is not a rev-tableau");
  return R;
}

SuperPipeDream mat_inverse(const BinaryMatrix& A) {
  SuperPipeDream W;
  for (int i = 1; i <= A.rows(); ++i)
    for (int j = 1; j <= A.cols(); ++j) (A(i, j) ? W.black : W.red).insert({i, j});
  return W;
}

BinaryMatrix mat(const SuperPipeDream& W, int m, int n) {
  BinaryMatrix A(m, n);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      const int bits = checkers_at(W, {i, j});
      if (bits != kBlack && bits != kRed) throw PreconditionError("mat: cell not singly occupied");
      A.set(i, j, bits == kBlack);
    }
  if (underlying(W).size() != m * n) throw PreconditionError("mat: crosses outside [m] x [n]");
  return A;
}

std::pair<RevTableau, RevTableau> rsk_prime(const BinaryMatrix& A) {
  const Rectification R = rect(mat_inverse(A));
  return {tab(R.V, A.rows()), tab(R.U, A.cols())};
}

ColoredRevTableau yprime_tableau_step(const SuperPipeDream& P, int j, int m) {
  const ColoredRevTableau before = tab_colored(P, m);
  const SuperPipeDream Q = y_prime_j(P, j);
  const ColoredRevTableau after = tab_colored(Q, m);

  std::optional<Position> top;
  for (Position p : P.red)
    if (p.col == j && (!top || p.row < top->row)) top = p;
  if (!top) {
    if (!(Q == P)) throw InternalError("y_prime_j moved a diagram without reds in its column");
    return after;
  }
  const int i = top->row;
  const auto cells = tab_cells(underlying(P), m);
  std::size_t a = 0, b = 0;
  bool found = false;
  for (std::size_t r = 0; r < cells.size() && !found; ++r)
    for (std::size_t c = 0; c < cells[r].size() && !found; ++c)
      if (cells[r][c] == *top) a = r, b = c, found = true;
  if (!found) throw InternalError("yprime_tableau_step: red cross missing from tab");

  ColoredRevTableau predicted = before;
  auto& rows = predicted.tableau.rows;
  const auto& old = before.tableau.rows;
  if (b + 1 < old[a].size() && old[a][b + 1] == i) {
    rows[a][b] = old[a][b + 1];
    predicted.red[a][b] = before.red[a][b + 1];
    rows[a][b + 1] = i;
    predicted.red[a][b + 1] = true;
  } else {
    std::size_t k = 0;
    while (a + k + 1 < old.size() && old[a + k + 1].size() > b &&
           old[a + k + 1][b] == i - static_cast<int>(k) - 1)
      ++k;
    for (std::size_t t = 0; t < k; ++t) {
      rows[a + t][b] = old[a + t + 1][b];
      predicted.red[a + t][b] = before.red[a + t + 1][b];
    }
    rows[a + k][b] = i - static_cast<int>(k) - 1;
    predicted.red[a + k][b] = true;
  }
  if (!(predicted == after))
    throw InternalError("yprime_tableau_step: local rule gives\n" + predicted.str() +
                        "but the diagram gives\n" + after.str());
  return after;
}

}  // namespace pdlab
