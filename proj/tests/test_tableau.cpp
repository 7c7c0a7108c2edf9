#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "pdlab/enumerate.hpp"
#include "pdlab/errors.hpp"
#include "pdlab/io.hpp"
#include "pdlab/tableau.hpp"

using namespace pdlab;

namespace {

// Schensted row insertion for weakly decreasing rows: x bumps the leftmost
// entry strictly smaller than itself.
RevTableau schensted(const std::vector<int>& word) {
  RevTableau T;
  for (int x : word) {
    for (std::size_t r = 0;; ++r) {
      if (r == T.rows.size()) {
        T.rows.push_back({x});
        break;
      }
      auto& row = T.rows[r];
      auto it = std::find_if(row.begin(), row.end(), [&](int e) { return e < x; });
      if (it == row.end()) {
        row.push_back(x);
        break;
      }
      std::swap(*it, x);
    }
  }
  return T;
}

// Rows bottom to top, each left to right.
std::vector<int> reading_word(const RevTableau& T) {
  std::vector<int> w;
  for (auto r = T.rows.rbegin(); r != T.rows.rend(); ++r) w.insert(w.end(), r->begin(), r->end());
  return w;
}

// Hook-content formula for the number of tableaux of shape lambda over [m].
long long hook_content(const Partition& lambda, int m) {
  const Partition conj = conjugate(lambda);
  long long num = 1, den = 1;
  for (int i = 0; i < static_cast<int>(lambda.size()); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      num *= m + j - i;
      den *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
    }
  return num / den;
}

}  // namespace

TEST_CASE("rev-tableau text and validity") {
  const RevTableau T = RevTableau::parse("4 3 3 1\n3 2\n1\n");
  CHECK(T.shape() == Partition{4, 2, 1});
  CHECK(T.size() == 7);
  CHECK(T.is_valid());
  CHECK(T.str() == "4 3 3 1\n3 2\n1\n");
  CHECK_FALSE(RevTableau{{{1, 2}}}.is_valid());
  CHECK_THROWS_AS(RevTableau::parse("1 2\n"), PreconditionError);
  CHECK_FALSE(RevTableau{{{2, 1}, {2}}}.is_valid());
  CHECK(column_tableau({2, 5, 3}).str() == "5\n3\n2\n");
  CHECK(RevTableau().str().empty());
}

TEST_CASE("rssyt counts follow the hook-content formula") {
  for (int m = 1; m <= 4; ++m)
    for (const Partition& lambda : partitions_in_box(m, 3)) {
      const auto all = rssyt(lambda, m);
      CHECK(static_cast<long long>(all.size()) == hook_content(lambda, m));
      CHECK(std::is_sorted(all.begin(), all.end(),
                           [](const RevTableau& a, const RevTableau& b) { return a.rows < b.rows; }));
      for (const RevTableau& T : all) CHECK(T.is_valid());
    }
}

TEST_CASE("plactic product matches Schensted insertion of the concatenated reading words") {
  CHECK(plactic_product(RevTableau::parse("1\n"), RevTableau::parse("2\n")).str() == "2\n1\n");
  CHECK(plactic_product(RevTableau::parse("2\n"), RevTableau::parse("1\n")).str() == "2 1\n");
  std::mt19937_64 rng(7);
  const auto pool = [] {
    std::vector<RevTableau> out;
    for (const Partition& lambda : partitions_in_box(3, 2))
      for (auto& T : rssyt(lambda, 3)) out.push_back(T);
    return out;
  }();
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int trial = 0; trial < 500; ++trial) {
    const RevTableau& A = pool[pick(rng)];
    const RevTableau& B = pool[pick(rng)];
    const RevTableau& C = pool[pick(rng)];
    std::vector<int> word = reading_word(A);
    const auto wb = reading_word(B);
    word.insert(word.end(), wb.begin(), wb.end());
    const RevTableau AB = plactic_product(A, B);
    CHECK(AB == schensted(word));
    CHECK(plactic_product(AB, C) == plactic_product(A, plactic_product(B, C)));
  }
}

TEST_CASE("ins matches Schensted insertion of the column words, 3x3") {
  auto stream = enum_binary_matrices(3, 3);
  int seen = 0;
  while (auto A = stream.next()) {
    ++seen;
    std::vector<int> word;
    for (const auto& C : column_supports(*A)) word.insert(word.end(), C.begin(), C.end());
    CHECK(ins(*A) == schensted(word));
    CHECK(conjugate(ins(*A).shape()) == rec(*A).shape());
    CHECK(a_dagger(a_dagger(*A)) == *A);
  }
  CHECK(seen == 512);
}

TEST_CASE("overline is an involution on tableaux in the box") {
  const int m = 3, n = 3;
  for (const Partition& lambda : partitions_in_box(n, m))
    for (const RevTableau& T : rssyt(lambda, n)) {
      const RevTableau O = overline(T, m, n);
      CHECK(O.is_valid());
      CHECK(overline(O, m, n) == T);
    }
}

TEST_CASE("tab is a bijection onto rev-tableaux and inverts, Grass(lambda, 3)") {
  for (const Partition& lambda : partitions_in_box(3, 3)) {
    const Permutation w = grass(lambda, 3);
    std::set<RevTableau> image;
    for (const PipeDream& P : collect(enum_pd_plus(w, true))) {
      if (!is_ordinary(P)) continue;
      const RevTableau T = tab(P, 3);
      CHECK(T.shape() == lambda);
      CHECK(tab_inverse(T, 3) == P);
      image.insert(T);
    }
    const auto all = rssyt(lambda, 3);
    CHECK(image == std::set<RevTableau>(all.begin(), all.end()));
  }
}

TEST_CASE("property: only 2-row ladders apply on PD0(Grass(lambda, 3))") {
  for (const Partition& lambda : partitions_in_box(3, 3)) {
    const Permutation w = grass(lambda, 3);
    const int n = std::max(w.size(), 1);
    for (const PipeDream& P : collect(enum_pd_plus(w, true))) {
      if (!is_ordinary(P)) continue;
      for (int k = 3; k <= n; ++k)
        for (int top = 1; top + k - 1 <= n; ++top)
          for (int col = 1; col < n; ++col) CHECK_FALSE(ladder_form(P, Ladder{top, col, k}));
    }
  }
}

TEST_CASE("matrix diagrams") {
  const BinaryMatrix A = parse_matrix("110/011");
  const SuperPipeDream W = mat_inverse(A);
  CHECK(W.black.size() == 4);
  CHECK(W.red.size() == 2);
  CHECK(mat(W, 2, 3) == A);
  CHECK(a_dagger(A) == parse_matrix("01/00/10"));
  const auto supports = column_supports(A);
  CHECK(supports == std::vector<std::vector<int>>{{1}, {1, 2}, {2}});
}
