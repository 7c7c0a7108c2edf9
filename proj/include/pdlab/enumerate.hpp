#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pdlab/diagram.hpp"
#include "pdlab/perm.hpp"

namespace pdlab {

struct EnumCaps {
  int max_n_nonreduced = 7;
  int max_n_reduced = 8;
  int max_matrix_cells = 20;
  std::size_t max_reduced_words = 1'000'000;
};

// Binary m-by-n matrix with 1-based accessors.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(int m, int n) : m_(m), n_(n), a_(static_cast<std::size_t>(m) * n, 0) {}
  explicit BinaryMatrix(const std::vector<std::vector<int>>& rows);

  int rows() const { return m_; }
  int cols() const { return n_; }
  int operator()(int i, int j) const { return a_[index(i, j)]; }
  void set(int i, int j, int v) { a_[index(i, j)] = static_cast<std::uint8_t>(v != 0); }
  int ones() const;
  std::vector<std::vector<int>> to_rows() const;

  bool operator==(const BinaryMatrix&) const = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i - 1) * n_ + (j - 1); }
  int m_ = 0;
  int n_ = 0;
  std::vector<std::uint8_t> a_;
};

// Pre-order lexicographic scan over subsets of `cells` (kept in row-major
// order) whose Demazure product is w. A subset is pruned, together with all of
// its supersets, once its own product leaves the Bruhat interval below w:
// the word of a subset is a subword of the word of any superset, and 0-Hecke
// products of subwords are Bruhat-smaller.
class PipeDreamStream {
 public:
  PipeDreamStream(std::vector<Position> cells, Permutation w, bool reduced_only);
  std::optional<PipeDream> next();

 private:
  bool viable() const;
  bool accepted() const;
  bool advance();
  PipeDream current() const;

  std::vector<Position> cells_;
  Permutation w_;
  int target_length_;
  bool reduced_only_;
  std::vector<int> chosen_;
  bool started_ = false;
  bool done_ = false;
  bool viable_ = true;
};

class SuperPipeDreamStream {
 public:
  SuperPipeDreamStream(PipeDreamStream base, bool reduced_only);
  std::optional<SuperPipeDream> next();

 private:
  PipeDreamStream base_;
  bool reduced_only_;
  std::vector<Position> cells_;
  std::vector<int> colors_;
  bool have_base_ = false;
};

class BinaryMatrixStream {
 public:
  BinaryMatrixStream(int m, int n);
  std::optional<BinaryMatrix> next();

 private:
  int m_, n_;
  std::uint64_t counter_ = 0;
  std::uint64_t total_;
};

// Staircase {(i,j) : i, j >= 1, i + j - 1 <= n - 1}, row-major.
std::vector<Position> staircase(int n);
// {(i,j) : 1 <= i <= N, 1 <= i + j - 1 <= n - 1}, row-major.
std::vector<Position> stable_region(int n, int row_bound);

PipeDreamStream enum_pd_plus(const Permutation& w, bool reduced_only, const EnumCaps& caps = {});
SuperPipeDreamStream enum_spd_plus(const Permutation& w, bool reduced_only,
                                   const EnumCaps& caps = {});
PipeDreamStream enum_stable(const Permutation& w, int row_bound, bool reduced_only,
                            const EnumCaps& caps = {});
BinaryMatrixStream enum_binary_matrices(int m, int n, const EnumCaps& caps = {});

template <typename Stream>
auto collect(Stream&& s) {
  std::vector<typename decltype(s.next())::value_type> out;
  while (auto item = s.next()) out.push_back(std::move(*item));
  return out;
}

}  // namespace pdlab
