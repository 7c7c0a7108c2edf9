#include "pdlab/enumerate.hpp"

#include <algorithm>

#include "pdlab/errors.hpp"

namespace pdlab {

BinaryMatrix::BinaryMatrix(const std::vector<std::vector<int>>& rows)
    : BinaryMatrix(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size())) {
  for (int i = 1; i <= m_; ++i) {
    if (static_cast<int>(rows[i - 1].size()) != n_) throw PreconditionError("matrix rows differ in length");
    for (int j = 1; j <= n_; ++j) {
      const int v = rows[i - 1][j - 1];
      if (v != 0 && v != 1) throw PreconditionError("matrix entries must be 0 or 1");
      set(i, j, v);
    }
  }
}

int BinaryMatrix::ones() const { return static_cast<int>(std::count(a_.begin(), a_.end(), 1)); }

std::vector<std::vector<int>> BinaryMatrix::to_rows() const {
  std::vector<std::vector<int>> rows(m_, std::vector<int>(n_));
  for (int i = 1; i <= m_; ++i)
    for (int j = 1; j <= n_; ++j) rows[i - 1][j - 1] = (*this)(i, j);
  return rows;
}

PipeDreamStream::PipeDreamStream(std::vector<Position> cells, Permutation w, bool reduced_only)
    : cells_(std::move(cells)), w_(std::move(w)), target_length_(w_.length()),
      reduced_only_(reduced_only) {
  std::sort(cells_.begin(), cells_.end());
}

PipeDream PipeDreamStream::current() const {
  PipeDream P;
  for (int k : chosen_) P.insert(cells_[k]);
  return P;
}

bool PipeDreamStream::viable() const {
  if (reduced_only_ && static_cast<int>(chosen_.size()) > target_length_) return false;
  return bruhat_leq(permutation(current()), w_);
}

bool PipeDreamStream::accepted() const {
  const PipeDream P = current();
  if (reduced_only_ && P.size() != target_length_) return false;
  return permutation(P) == w_;
}

bool PipeDreamStream::advance() {
  const int n = static_cast<int>(cells_.size());
  const int first_child = chosen_.empty() ? 0 : chosen_.back() + 1;
  if (viable_ && first_child < n) {
    chosen_.push_back(first_child);
  } else {
    while (true) {
      if (chosen_.empty()) return false;
      const int sibling = chosen_.back() + 1;
      chosen_.pop_back();
      if (sibling < n) {
        chosen_.push_back(sibling);
        break;
      }
    }
  }
  viable_ = viable();
  return true;
}

std::optional<PipeDream> PipeDreamStream::next() {
  while (!done_) {
    if (!started_) {
      started_ = true;
      viable_ = viable();
    } else if (!advance()) {
      done_ = true;
      break;
    }
    if (viable_ && accepted()) return current();
  }
  return std::nullopt;
}

SuperPipeDreamStream::SuperPipeDreamStream(PipeDreamStream base, bool reduced_only)
    : base_(std::move(base)), reduced_only_(reduced_only) {}

std::optional<SuperPipeDream> SuperPipeDreamStream::next() {
  static constexpr int kColors[] = {kBlack, kRed, kBoth};
  const int last_color = reduced_only_ ? 1 : 2;
  while (true) {
    if (!have_base_) {
      auto Q = base_.next();
      if (!Q) return std::nullopt;
      cells_.assign(Q->begin(), Q->end());
      colors_.assign(cells_.size(), 0);
      have_base_ = true;
    } else {
      int k = static_cast<int>(cells_.size()) - 1;
      while (k >= 0 && colors_[k] == last_color) colors_[k--] = 0;
      if (k < 0) {
        have_base_ = false;
        continue;
      }
      ++colors_[k];
    }
    SuperPipeDream P;
    for (std::size_t k = 0; k < cells_.size(); ++k) set_checkers(P, cells_[k], kColors[colors_[k]]);
    return P;
  }
}

BinaryMatrixStream::BinaryMatrixStream(int m, int n)
    : m_(m), n_(n), total_(std::uint64_t{1} << (m * n)) {}

std::optional<BinaryMatrix> BinaryMatrixStream::next() {
  if (counter_ >= total_) return std::nullopt;
  BinaryMatrix A(m_, n_);
  const int cells = m_ * n_;
  for (int k = 0; k < cells; ++k) A.set(k / n_ + 1, k % n_ + 1, (counter_ >> (cells - 1 - k)) & 1);
  ++counter_;
  return A;
}

std::vector<Position> staircase(int n) {
  std::vector<Position> cells;
  for (int i = 1; i < n; ++i)
    for (int j = 1; i + j - 1 <= n - 1; ++j) cells.push_back({i, j});
  return cells;
}

std::vector<Position> stable_region(int n, int row_bound) {
  std::vector<Position> cells;
  for (int i = 1; i <= row_bound; ++i)
    for (int j = 2 - i; i + j - 1 <= n - 1; ++j) cells.push_back({i, j});
  return cells;
}

namespace {

void check_n(const Permutation& w, bool reduced_only, const EnumCaps& caps) {
  const int cap = reduced_only ? caps.max_n_reduced : caps.max_n_nonreduced;
  if (w.size() > cap)
    throw ResourceError("enumeration cap exceeded: " + w.str() + " lies in S_" +
                        std::to_string(w.size()) + ", cap is n <= " + std::to_string(cap));
}

}  // namespace

// Every letter of a word for w in S_n is at most n-1: the letter set of a word
// is the support of its 0-Hecke product. Hence the staircase suffices.
PipeDreamStream enum_pd_plus(const Permutation& w, bool reduced_only, const EnumCaps& caps) {
  check_n(w, reduced_only, caps);
  return PipeDreamStream(staircase(w.size()), w, reduced_only);
}

SuperPipeDreamStream enum_spd_plus(const Permutation& w, bool reduced_only, const EnumCaps& caps) {
  return SuperPipeDreamStream(enum_pd_plus(w, reduced_only, caps), reduced_only);
}

PipeDreamStream enum_stable(const Permutation& w, int row_bound, bool reduced_only,
                            const EnumCaps& caps) {
  check_n(w, reduced_only, caps);
  if (row_bound < 0) throw PreconditionError("enum_stable: row bound must be non-negative");
  return PipeDreamStream(stable_region(w.size(), row_bound), w, reduced_only);
}

BinaryMatrixStream enum_binary_matrices(int m, int n, const EnumCaps& caps) {
  if (m < 0 || n < 0) throw PreconditionError("matrix dimensions must be non-negative");
  if (m * n > caps.max_matrix_cells || m * n > 62)
    throw ResourceError("binary matrix cap exceeded: " + std::to_string(m * n) + " cells");
  return BinaryMatrixStream(m, n);
}

}  // namespace pdlab
