#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pdlab {

using Word = std::vector<int>;

// Weakly decreasing positive parts; zeros are stripped on normalization.
using Partition = std::vector<int>;

// Finitely supported permutation of {1, 2, ...}, stored as the shortest
// one-line prefix w(1..n) with w(i) = i beyond n.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  static Permutation simple(int i);
  // Accepts a digit string ("4231576"), a bracketed list ("[10,1,...]"),
  // or "id".
  static Permutation parse(std::string_view text);

  int operator()(int i) const;
  int size() const { return static_cast<int>(w_.size()); }
  const std::vector<int>& one_line() const { return w_; }
  std::vector<int> one_line(int n) const;

  bool is_identity() const { return w_.empty(); }
  int length() const;
  std::vector<int> code() const;
  std::vector<int> descents() const;
  Permutation inverse() const;

  // Group product: (u * v)(i) = u(v(i)).
  Permutation compose(const Permutation& v) const;
  // w s_i, i.e. positions i and i+1 swapped.
  Permutation times_simple(int i) const;
  // 0-Hecke action of e_i on the right.
  Permutation demazure_times(int i) const;

  std::string str() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> w_;
};

Permutation demazure_product(const Permutation& u, const Permutation& v);
Permutation from_word(const Word& a);
// Some reduced word of w (lexicographically canonical, not minimal).
Word reduced_word(const Permutation& w);
// Every reduced word of w, sorted lexicographically.
std::vector<Word> reduced_words(const Permutation& w, std::size_t cap = 1'000'000);

bool bruhat_leq(const Permutation& u, const Permutation& w);

// All permutations of S_n in lexicographic one-line order.
std::vector<Permutation> permutations_of(int n);

Partition normalize_partition(Partition lambda);
int partition_size(const Partition& lambda);
Partition conjugate(const Partition& lambda);
// Every partition with at most `rows` parts, each at most `cols`, in
// lexicographic order of the part lists (the empty partition first).
std::vector<Partition> partitions_in_box(int rows, int cols);
// Box complement inside the m-by-n rectangle, then transposed:
// (n - lambda_m, ..., n - lambda_1)^t.
Partition lambda_dagger(const Partition& lambda, int m, int n);

Permutation grass(const Partition& lambda, int m);
Permutation bigrass(int m, int n);

struct GrassmannianData {
  Partition shape;
  int descent = 0;  // 0 for the identity, which is m-Grassmannian for all m
};
std::optional<GrassmannianData> is_grassmannian(const Permutation& w);
// Shape of w when Des(w) is contained in {m}.
std::optional<Partition> grassmannian_shape(const Permutation& w, int m);

Permutation ominus(const Permutation& w, int m);

std::string word_str(const Word& a);

}  // namespace pdlab
