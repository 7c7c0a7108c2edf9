#include "pdlab/perm.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

#include "pdlab/errors.hpp"

namespace pdlab {

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (int v : w_) {
    if (v < 1 || v > n || seen[v]) {
      throw PreconditionError("not a permutation of [" + std::to_string(n) + "]");
    }
    seen[v] = true;
  }
  while (!w_.empty() && w_.back() == size()) w_.pop_back();
}

Permutation Permutation::simple(int i) {
  if (i < 1) throw PreconditionError("simple transposition index must be >= 1");
  std::vector<int> w(i + 1);
  std::iota(w.begin(), w.end(), 1);
  std::swap(w[i - 1], w[i]);
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty() || s == "id" || s == "e") return {};
  std::vector<int> w;
  if (s.front() == '[') {
    if (s.back() != ']') throw PreconditionError("unterminated permutation list");
    std::stringstream in(s.substr(1, s.size() - 2));
    std::string item;
    while (std::getline(in, item, ',')) {
      if (item.empty()) continue;
      try {
        w.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw PreconditionError("bad permutation entry '" + item + "'");
      }
    }
  } else {
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
        throw PreconditionError("bad one-line permutation '" + s + "'");
      w.push_back(c - '0');
    }
  }
  return Permutation(std::move(w));
}

int Permutation::operator()(int i) const { return i <= size() ? w_[i - 1] : i; }

std::vector<int> Permutation::one_line(int n) const {
  std::vector<int> w(std::max(n, size()));
  for (int i = 1; i <= static_cast<int>(w.size()); ++i) w[i - 1] = (*this)(i);
  return w;
}

int Permutation::length() const {
  int len = 0;
  for (int c : code()) len += c;
  return len;
}

std::vector<int> Permutation::code() const {
  std::vector<int> c(size(), 0);
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (w_[j] < w_[i]) ++c[i];
  return c;
}

std::vector<int> Permutation::descents() const {
  std::vector<int> d;
  for (int i = 1; i < size(); ++i)
    if (w_[i - 1] > w_[i]) d.push_back(i);
  return d;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(size());
  for (int i = 0; i < size(); ++i) inv[w_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& v) const {
  const int n = std::max(size(), v.size());
  std::vector<int> r(n);
  for (int i = 1; i <= n; ++i) r[i - 1] = (*this)(v(i));
  return Permutation(std::move(r));
}

Permutation Permutation::times_simple(int i) const {
  std::vector<int> w = one_line(i + 1);
  std::swap(w[i - 1], w[i]);
  return Permutation(std::move(w));
}

Permutation Permutation::demazure_times(int i) const {
  if (i < 1) throw PreconditionError("letters must be >= 1");
  return (*this)(i) < (*this)(i + 1) ? times_simple(i) : *this;
}

std::string Permutation::str() const {
  if (w_.empty()) return "id";
  std::string out;
  if (size() <= 9) {
    for (int v : w_) out.push_back(static_cast<char>('0' + v));
    return out;
  }
  out = "[";
  for (int i = 0; i < size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w_[i]);
  }
  return out + "]";
}

Permutation demazure_product(const Permutation& u, const Permutation& v) {
  Permutation r = u;
  for (int i : reduced_word(v)) r = r.demazure_times(i);
  return r;
}

Permutation from_word(const Word& a) {
  Permutation r;
  for (int i : a) r = r.demazure_times(i);
  return r;
}

Word reduced_word(const Permutation& w) {
  Word rev;
  Permutation cur = w;
  while (!cur.is_identity()) {
    int i = cur.descents().back();
    rev.push_back(i);
    cur = cur.times_simple(i);
  }
  return Word(rev.rbegin(), rev.rend());
}

namespace {

void collect_reduced_words(const Permutation& w, Word& suffix, std::vector<Word>& out,
                           std::size_t cap) {
  if (w.is_identity()) {
    if (out.size() >= cap) throw ResourceError("reduced_words: cap exceeded");
    out.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  for (int i : w.descents()) {
    suffix.push_back(i);
    collect_reduced_words(w.times_simple(i), suffix, out, cap);
    suffix.pop_back();
  }
}

}  // namespace

std::vector<Word> reduced_words(const Permutation& w, std::size_t cap) {
  std::vector<Word> out;
  Word suffix;
  collect_reduced_words(w, suffix, out, cap);
  std::sort(out.begin(), out.end());
  return out;
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  const int n = std::max(u.size(), w.size());
  // Tableau criterion: #{a <= i : u(a) >= j} <= #{a <= i : w(a) >= j}.
  std::vector<int> cu(n + 2, 0), cw(n + 2, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= u(i); ++j) ++cu[j];
    for (int j = 1; j <= w(i); ++j) ++cw[j];
    for (int j = 1; j <= n; ++j)
      if (cu[j] > cw[j]) return false;
  }
  return true;
}

std::vector<Permutation> permutations_of(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

Partition normalize_partition(Partition lambda) {
  for (std::size_t i = 1; i < lambda.size(); ++i)
    if (lambda[i] > lambda[i - 1]) throw PreconditionError("partition parts must weakly decrease");
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  if (!lambda.empty() && lambda.back() < 0) throw PreconditionError("negative partition part");
  return lambda;
}

int partition_size(const Partition& lambda) {
  return std::accumulate(lambda.begin(), lambda.end(), 0);
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int)> grow = [&](int cap) {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == rows) return;
    for (int p = 1; p <= cap; ++p) {
      cur.push_back(p);
      grow(p);
      cur.pop_back();
    }
  };
  grow(cols);
  std::sort(out.begin(), out.end());
  return out;
}

Partition conjugate(const Partition& lambda) {
  Partition lam = normalize_partition(lambda);
  Partition t(lam.empty() ? 0 : lam.front(), 0);
  for (int part : lam)
    for (int k = 0; k < part; ++k) ++t[k];
  return t;
}

Partition lambda_dagger(const Partition& lambda, int m, int n) {
  Partition lam = normalize_partition(lambda);
  if (static_cast<int>(lam.size()) > m || (!lam.empty() && lam.front() > n))
    throw PreconditionError("partition does not fit in the " + std::to_string(m) + "x" +
                            std::to_string(n) + " box");
  lam.resize(m, 0);
  Partition comp(m);
  for (int i = 0; i < m; ++i) comp[i] = n - lam[m - 1 - i];
  return conjugate(normalize_partition(comp));
}

Permutation grass(const Partition& lambda, int m) {
  Partition lam = normalize_partition(lambda);
  if (m < 1) throw PreconditionError("grass: m must be positive");
  if (static_cast<int>(lam.size()) > m) throw PreconditionError("grass: partition has more than m parts");
  lam.resize(m, 0);
  const int n = m + lam.front();
  std::vector<int> avail(n);
  std::iota(avail.begin(), avail.end(), 1);
  std::vector<int> w;
  for (int i = 0; i < n; ++i) {
    int c = i < m ? lam[m - 1 - i] : 0;
    w.push_back(avail[c]);
    avail.erase(avail.begin() + c);
  }
  return Permutation(std::move(w));
}

Permutation bigrass(int m, int n) { return grass(Partition(m, n), m); }

std::optional<GrassmannianData> is_grassmannian(const Permutation& w) {
  auto des = w.descents();
  if (des.size() > 1) return std::nullopt;
  if (des.empty()) return GrassmannianData{};
  const int m = des.front();
  std::vector<int> c = w.code();
  Partition lam(c.begin(), c.begin() + m);
  std::reverse(lam.begin(), lam.end());
  return GrassmannianData{normalize_partition(lam), m};
}

std::optional<Partition> grassmannian_shape(const Permutation& w, int m) {
  for (int d : w.descents())
    if (d != m) return std::nullopt;
  std::vector<int> c = w.code();
  c.resize(std::max<int>(m, c.size()), 0);
  Partition lam(c.begin(), c.begin() + m);
  std::reverse(lam.begin(), lam.end());
  return normalize_partition(lam);
}

Permutation ominus(const Permutation& w, int m) {
  if (m < 1) throw PreconditionError("ominus: m must be positive");
  const int n = std::max(w.size(), m);
  std::vector<int> r(n + 1);
  for (int i = 1; i <= n + 1; ++i) {
    if (i <= m) r[i - 1] = w(i) + 1;
    else if (i == m + 1) r[i - 1] = 1;
    else r[i - 1] = w(i - 1) + 1;
  }
  return Permutation(std::move(r));
}

std::string word_str(const Word& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(a[i]);
  }
  return out + ")";
}

}  // namespace pdlab
