#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "pdlab/errors.hpp"
#include "pdlab/perm.hpp"

using namespace pdlab;

namespace {

std::vector<int> one_line(const Permutation& w, int n) {
  std::vector<int> out(n);
  for (int i = 1; i <= n; ++i) out[i - 1] = w(i);
  return out;
}

int inversions(const std::vector<int>& a) {
  int n = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) n += a[i] > a[j];
  return n;
}

// Bruhat order by the rank-matrix criterion.
bool bruhat_oracle(const std::vector<int>& u, const std::vector<int>& w) {
  const int n = static_cast<int>(u.size());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int ru = 0, rw = 0;
      for (int k = 1; k <= i; ++k) {
        ru += u[k - 1] >= j;
        rw += w[k - 1] >= j;
      }
      if (ru > rw) return false;
    }
  return true;
}

std::vector<std::vector<int>> all_one_lines(int n) {
  std::vector<int> a(n);
  std::iota(a.begin(), a.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(a);
  while (std::next_permutation(a.begin(), a.end()));
  return out;
}

// Demazure product as the Bruhat maximum of {u' v' : u' <= u, v' <= v}.
std::vector<int> demazure_oracle(const std::vector<int>& u, const std::vector<int>& v) {
  const int n = static_cast<int>(u.size());
  std::vector<std::vector<int>> products;
  for (auto& a : all_one_lines(n)) {
    if (!bruhat_oracle(a, u)) continue;
    for (auto& b : all_one_lines(n)) {
      if (!bruhat_oracle(b, v)) continue;
      std::vector<int> ab(n);
      for (int i = 0; i < n; ++i) ab[i] = a[b[i] - 1];
      products.push_back(ab);
    }
  }
  for (auto& p : products)
    if (std::all_of(products.begin(), products.end(), [&](auto& q) { return bruhat_oracle(q, p); })) return p;
  return {};
}

}  // namespace

TEST_CASE("parse and print") {
  CHECK(Permutation::parse("4231576").str() == "4231576");
  CHECK(Permutation::parse("id").is_identity());
  CHECK(Permutation::parse("123").str() == "id");
  CHECK(Permutation::parse("[3,1,2]").str() == "312");
  CHECK(Permutation::parse("[10,1,2,3,4,5,6,7,8,9]").str() == "[10,1,2,3,4,5,6,7,8,9]");
  CHECK_THROWS_AS(Permutation::parse("1123"), PreconditionError);
  CHECK_THROWS_AS(Permutation::parse("13"), PreconditionError);
}

TEST_CASE("length, inverse and composition agree with direct computation on S_5") {
  for (auto& a : all_one_lines(5)) {
    const Permutation w(a);
    CHECK(w.length() == inversions(a));
    CHECK(w.compose(w.inverse()).is_identity());
    const auto code = w.code();
    CHECK(std::accumulate(code.begin(), code.end(), 0) == w.length());
  }
  const Permutation u = Permutation::parse("2314"), v = Permutation::parse("1342");
  CHECK(one_line(u.compose(v), 4) == std::vector<int>{2, 1, 4, 3});
  CHECK(Permutation::parse("1234").times_simple(2).str() == "132");
}

TEST_CASE("Demazure product matches the Bruhat-maximum oracle on S_4") {
  for (auto& a : all_one_lines(4))
    for (auto& b : all_one_lines(4)) {
      const auto expect = demazure_oracle(a, b);
      CHECK(one_line(demazure_product(Permutation(a), Permutation(b)), 4) == expect);
    }
}

TEST_CASE("bruhat_leq matches the rank-matrix criterion on S_4") {
  for (auto& a : all_one_lines(4))
    for (auto& b : all_one_lines(4)) CHECK(bruhat_leq(Permutation(a), Permutation(b)) == bruhat_oracle(a, b));
}

TEST_CASE("words") {
  CHECK(from_word({3, 2, 1, 2, 6, 3}).str() == "4231576");
  CHECK(from_word({1, 1}).str() == "21");
  CHECK(from_word({}).is_identity());
  CHECK(reduced_words(Permutation::parse("4321")).size() == 16);
  CHECK(reduced_words(Permutation::parse("54321")).size() == 768);
  for (auto& a : all_one_lines(4)) {
    const Permutation w(a);
    const auto words = reduced_words(w);
    CHECK(std::is_sorted(words.begin(), words.end()));
    for (auto& word : words) {
      CHECK(static_cast<int>(word.size()) == w.length());
      CHECK(from_word(word) == w);
    }
    CHECK(from_word(reduced_word(w)) == w);
  }
  CHECK_THROWS_AS(reduced_words(Permutation::parse("54321"), 10), ResourceError);
}

TEST_CASE("permutations_of lists S_n in lexicographic order") {
  const auto s3 = permutations_of(3);
  REQUIRE(s3.size() == 6);
  CHECK(s3.front().is_identity());
  CHECK(s3.back().str() == "321");
  CHECK(permutations_of(5).size() == 120);
}

TEST_CASE("partitions") {
  CHECK(normalize_partition({3, 1, 0, 0}) == Partition{3, 1});
  CHECK(conjugate({4, 2, 1}) == Partition{3, 2, 1, 1});
  CHECK(partitions_in_box(2, 3).size() == 10);
  CHECK(partitions_in_box(3, 3).size() == 20);
  CHECK(partitions_in_box(2, 2).front().empty());
  // Box complement transpose inside 4x5.
  CHECK(lambda_dagger({4, 2, 2, 1}, 4, 5) == Partition{4, 3, 3, 1});
  CHECK(lambda_dagger({}, 2, 3) == Partition{2, 2, 2});
  CHECK(lambda_dagger({3, 3}, 2, 3).empty());
  for (auto& lambda : partitions_in_box(3, 4))
    CHECK(partition_size(lambda) + partition_size(lambda_dagger(lambda, 3, 4)) == 12);
}

TEST_CASE("Grassmannian permutations") {
  CHECK(grass({4, 2, 1}, 4).str() == "13582467");
  CHECK(grass({}, 3).is_identity());
  CHECK(bigrass(2, 3) == grass({3, 3}, 2));
  CHECK(bigrass(2, 3).length() == 6);
  for (auto& lambda : partitions_in_box(3, 3)) {
    const Permutation w = grass(lambda, 3);
    CHECK(w.length() == partition_size(lambda));
    const auto des = w.descents();
    CHECK((des.empty() || des == std::vector<int>{3}));
    CHECK(grassmannian_shape(w, 3) == normalize_partition(lambda));
  }
  const auto g = is_grassmannian(Permutation::parse("1342"));
  REQUIRE(g);
  CHECK(g->descent == 3);
  CHECK(g->shape == Partition{1, 1});
  CHECK(is_grassmannian(Permutation())->descent == 0);
  CHECK_FALSE(is_grassmannian(Permutation::parse("321")));
}

TEST_CASE("ominus") {
  CHECK(ominus(Permutation::parse("31648257"), 5).str() == "427591368");
  CHECK(ominus(Permutation(), 1).str() == "21");
  CHECK_THROWS_AS(ominus(Permutation(), 0), PreconditionError);
}

TEST_CASE("property: Demazure product is associative and monotone in length") {
  std::mt19937_64 rng(7);
  const auto s5 = permutations_of(5);
  std::uniform_int_distribution<std::size_t> pick(0, s5.size() - 1);
  for (int t = 0; t < 500; ++t) {
    const auto &a = s5[pick(rng)], &b = s5[pick(rng)], &c = s5[pick(rng)];
    CHECK(demazure_product(demazure_product(a, b), c) == demazure_product(a, demazure_product(b, c)));
    const Permutation ab = demazure_product(a, b);
    CHECK(ab.length() >= std::max(a.length(), b.length()));
    CHECK(ab.length() <= a.length() + b.length());
    CHECK(bruhat_leq(a, ab));
  }
}
