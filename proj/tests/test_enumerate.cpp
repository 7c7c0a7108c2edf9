#include <doctest.h>

#include <map>
#include <set>

#include "pdlab/enumerate.hpp"
#include "pdlab/errors.hpp"

using namespace pdlab;

namespace {

// Demazure fold over the reading word, written independently of the library.
std::vector<int> demazure_of_cells(const std::vector<Position>& cells, int n) {
  std::vector<Position> sorted = cells;
  std::sort(sorted.begin(), sorted.end(), [](Position a, Position b) {
    return a.row != b.row ? a.row < b.row : a.col > b.col;
  });
  std::vector<int> w(n + 1);
  for (int i = 0; i <= n; ++i) w[i] = i + 1;
  for (Position p : sorted) {
    const int a = p.row + p.col - 1;
    if (a >= n + 1) return {};
    if (w[a - 1] < w[a]) std::swap(w[a - 1], w[a]);
  }
  return w;
}

std::vector<int> padded(const Permutation& w, int n) {
  std::vector<int> out(n + 1);
  for (int i = 1; i <= n + 1; ++i) out[i - 1] = w(i);
  return out;
}

// Brute force over all subsets of `region`: count of diagrams per permutation,
// and of those with |D| = l(w).
std::pair<std::map<std::vector<int>, int>, std::map<std::vector<int>, int>> oracle_counts(
    const std::vector<Position>& region, int n) {
  std::map<std::vector<int>, int> all, reduced;
  for (unsigned mask = 0; mask < (1u << region.size()); ++mask) {
    std::vector<Position> cells;
    for (std::size_t b = 0; b < region.size(); ++b)
      if (mask >> b & 1) cells.push_back(region[b]);
    const auto w = demazure_of_cells(cells, n);
    ++all[w];
    int inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      for (std::size_t j = i + 1; j < w.size(); ++j) inv += w[i] > w[j];
    if (inv == static_cast<int>(cells.size())) ++reduced[w];
  }
  return {all, reduced};
}

}  // namespace

TEST_CASE("regions") {
  CHECK(staircase(1).empty());
  CHECK(staircase(4).size() == 6);
  CHECK(staircase(3) == std::vector<Position>{{1, 1}, {1, 2}, {2, 1}});
  const auto st = stable_region(3, 2);
  CHECK(st == std::vector<Position>{{1, 1}, {1, 2}, {2, 0}, {2, 1}});
}

TEST_CASE("PD+ and PD0+ counts match brute force over the staircase, S_4") {
  std::vector<Position> region;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; i + j <= 4; ++j) region.push_back({i, j});
  const auto [all, reduced] = oracle_counts(region, 4);
  for (const Permutation& w : permutations_of(4)) {
    const auto key = padded(w, 4);
    const int expect_all = all.count(key) ? all.at(key) : 0;
    const int expect_reduced = reduced.count(key) ? reduced.at(key) : 0;
    CHECK(collect(enum_pd_plus(w, false)).size() == static_cast<std::size_t>(expect_all));
    CHECK(collect(enum_pd_plus(w, true)).size() == static_cast<std::size_t>(expect_reduced));
  }
}

TEST_CASE("stable diagrams match brute force, S_4 with 3 rows") {
  std::vector<Position> region;
  for (int i = 1; i <= 3; ++i)
    for (int j = 2 - i; i + j <= 4; ++j) region.push_back({i, j});
  CHECK(region == stable_region(4, 3));
  const auto [all, reduced] = oracle_counts(region, 4);
  for (const Permutation& w : permutations_of(4)) {
    const auto key = padded(w, 4);
    const int expect_all = all.count(key) ? all.at(key) : 0;
    const int expect_reduced = reduced.count(key) ? reduced.at(key) : 0;
    CHECK(collect(enum_stable(w, 3, false)).size() == static_cast<std::size_t>(expect_all));
    CHECK(collect(enum_stable(w, 3, true)).size() == static_cast<std::size_t>(expect_reduced));
  }
}

TEST_CASE("streams yield distinct diagrams of the right permutation in canonical order") {
  for (const Permutation& w : permutations_of(4)) {
    const auto pds = collect(enum_pd_plus(w, false));
    CHECK(std::set<PipeDream>(pds.begin(), pds.end()).size() == pds.size());
    for (auto& P : pds) {
      CHECK(permutation(P) == w);
      CHECK(is_ordinary(P));
    }
    const auto spds = collect(enum_spd_plus(w, false));
    CHECK(std::set<SuperPipeDream>(spds.begin(), spds.end()).size() == spds.size());
    for (auto& P : spds) CHECK(permutation(P) == w);
    // Each underlying cell of a reduced diagram takes one of two colors.
    std::size_t expected = 0;
    for (auto& P : collect(enum_pd_plus(w, true))) expected += std::size_t{1} << P.size();
    CHECK(collect(enum_spd_plus(w, true)).size() == expected);
  }
  // Every coloring of the staircase for S_4 is some SPD+(w).
  std::size_t total = 0;
  for (const Permutation& w : permutations_of(4)) total += collect(enum_spd_plus(w, false)).size();
  CHECK(total == 4096);
}

TEST_CASE("identity and simple transpositions") {
  CHECK(collect(enum_pd_plus(Permutation(), false)).size() == 1);
  CHECK(collect(enum_pd_plus(Permutation::simple(1), true)).size() == 1);
  CHECK(collect(enum_pd_plus(Permutation::parse("4321"), true)).size() == 1);
}

TEST_CASE("caps") {
  EnumCaps caps;
  caps.max_n_nonreduced = 3;
  CHECK_THROWS_AS(enum_pd_plus(Permutation::parse("1243"), false, caps), ResourceError);
  CHECK_NOTHROW(enum_pd_plus(Permutation::parse("1243"), true, caps));
  caps.max_matrix_cells = 4;
  CHECK_THROWS_AS(enum_binary_matrices(2, 3, caps), ResourceError);
}

TEST_CASE("binary matrices") {
  CHECK(collect(enum_binary_matrices(3, 3)).size() == 512);
  CHECK(collect(enum_binary_matrices(3, 4)).size() == 4096);
  const auto two = collect(enum_binary_matrices(1, 2));
  std::set<std::vector<std::vector<int>>> distinct;
  for (auto& A : two) distinct.insert(A.to_rows());
  CHECK(distinct.size() == 4);
  BinaryMatrix A({{1, 0}, {1, 1}});
  CHECK(A(2, 1) == 1);
  CHECK(A.ones() == 3);
  CHECK(A.to_rows() == std::vector<std::vector<int>>{{1, 0}, {1, 1}});
}
