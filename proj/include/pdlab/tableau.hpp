#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pdlab/diagram.hpp"
#include "pdlab/enumerate.hpp"
#include "pdlab/perm.hpp"
#include "pdlab/poly.hpp"

namespace pdlab {

// Partition-shaped filling, weakly decreasing along rows and strictly
// decreasing down columns. Entries may be any integers.
struct RevTableau {
  std::vector<std::vector<int>> rows;

  Partition shape() const;
  bool empty() const { return rows.empty(); }
  int size() const;
  bool is_valid() const;
  // One row per line, entries separated by spaces; "" when empty.
  std::string str() const;
  static RevTableau parse(const std::string& text);
  auto operator<=>(const RevTableau&) const = default;
};

struct ColoredRevTableau {
  RevTableau tableau;
  std::vector<std::vector<bool>> red;  // same shape as tableau.rows

  // Red entries carry an "r" suffix, e.g. "8r 4 3 3 1".
  std::string str() const;
  bool operator==(const ColoredRevTableau&) const = default;
};

// Single column holding the elements of I in decreasing order.
RevTableau column_tableau(std::vector<int> I);

// Row a lists the rows of the crosses that pipe m - a + 1 passes through
// horizontally, left to right. Requires P reduced with perm(P) m-Grassmannian.
RevTableau tab(const PipeDream& P, int m);
// Same, with the position of the cross behind every entry.
std::vector<std::vector<Position>> tab_cells(const PipeDream& P, int m);
ColoredRevTableau tab_colored(const SuperPipeDream& P, int m);
PipeDream tab_inverse(const RevTableau& T, int m);

// All rev-tableaux of shape lambda with entries in [m], in lexicographic order
// of their row lists.
std::vector<RevTableau> rssyt(const Partition& lambda, int m);
// prod x_e over the entries e.
MultiPoly tableau_weight(const RevTableau& T);

// Product in the tableau monoid over the reversed alphabet: entries are
// reversed, the row word of B (rows bottom to top) is row-inserted into A,
// and the result is reversed back.
RevTableau plactic_product(const RevTableau& A, const RevTableau& B);

// Column supports C_j = {i : A_ij = 1}.
std::vector<std::vector<int>> column_supports(const BinaryMatrix& A);
// C_1 * ... * C_n
RevTableau ins(const BinaryMatrix& A);
// Cell (i,j) holds the largest r with (j,i) in the shape of C_r * ... * C_n.
RevTableau rec(const BinaryMatrix& A);
// Transpose with 0 and 1 exchanged.
BinaryMatrix a_dagger(const BinaryMatrix& A);
// Column j lists the values of [n] missing from column m + 1 - j of T.
RevTableau overline(const RevTableau& T, int m, int n);

// Super pipe dream on [m] x [n] with black where A_ij = 1 and red elsewhere.
SuperPipeDream mat_inverse(const BinaryMatrix& A);
BinaryMatrix mat(const SuperPipeDream& W, int m, int n);
// (tab(V, m), tab(U, n)) for (V, U) = rect(mat_inverse(A)).
std::pair<RevTableau, RevTableau> rsk_prime(const BinaryMatrix& A);

// tab(y_prime_j(P, j)) predicted from tab(P) by the local slide or swap rule,
// and checked against the direct computation.
ColoredRevTableau yprime_tableau_step(const SuperPipeDream& P, int j, int m);

}  // namespace pdlab
