#include "pdlab/poly.hpp"

#include <algorithm>
#include <climits>

#include "pdlab/errors.hpp"

namespace pdlab {

namespace {

using ExpList = std::vector<std::pair<int, int>>;

int exp_of(const ExpList& v, int i) {
  auto it = std::lower_bound(v.begin(), v.end(), std::make_pair(i, INT_MIN));
  return (it != v.end() && it->first == i) ? it->second : 0;
}

void set_exp(ExpList& v, int i, int e) {
  auto it = std::lower_bound(v.begin(), v.end(), std::make_pair(i, INT_MIN));
  if (it != v.end() && it->first == i) {
    if (e == 0) v.erase(it);
    else it->second = e;
  } else if (e != 0) {
    v.insert(it, {i, e});
  }
}

ExpList merge_add(const ExpList& a, const ExpList& b) {
  ExpList r;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) r.push_back(a[i++]);
    else if (i == a.size() || b[j].first < a[i].first) r.push_back(b[j++]);
    else {
      r.push_back({a[i].first, a[i].second + b[j].second});
      ++i, ++j;
    }
  }
  return r;
}

// Negative when a sorts first: at the smallest index where they differ, the
// larger exponent comes first.
int compare_exps(const ExpList& a, const ExpList& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    const int ia = i < a.size() ? a[i].first : INT_MAX;
    const int ib = j < b.size() ? b[j].first : INT_MAX;
    const int idx = std::min(ia, ib);
    const int ea = ia == idx ? a[i].second : 0;
    const int eb = ib == idx ? b[j].second : 0;
    if (ea != eb) return ea > eb ? -1 : 1;
    if (ia == idx) ++i;
    if (ib == idx) ++j;
  }
  return 0;
}

std::string var_name(char base, int i) {
  return i >= 1 ? std::string(1, base) + std::to_string(i)
                : std::string(1, base) + "(" + std::to_string(i) + ")";
}

Coefficient ipow(long long base, int e) {
  Coefficient r = 1;
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}

Coefficient binomial(int n, int k) {
  Coefficient r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

int Monomial::degree() const {
  int d = 0;
  for (auto& [i, e] : x) d += e;
  for (auto& [j, e] : y) d += e;
  return d;
}

int Monomial::x_exp(int i) const { return exp_of(x, i); }
int Monomial::y_exp(int j) const { return exp_of(y, j); }

Monomial Monomial::operator*(const Monomial& o) const {
  return {beta + o.beta, merge_add(x, o.x), merge_add(y, o.y)};
}

bool TermOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.beta != b.beta) return a.beta < b.beta;
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  if (int c = compare_exps(a.x, b.x)) return c < 0;
  return compare_exps(a.y, b.y) < 0;
}

MultiPoly::MultiPoly(long long c) {
  if (c != 0) terms_.emplace(Monomial{}, Coefficient(c));
}

MultiPoly MultiPoly::from_monomial(Monomial m, Coefficient c) {
  MultiPoly p;
  p.add_term(m, c);
  return p;
}

MultiPoly MultiPoly::beta() { return from_monomial({1, {}, {}}); }
MultiPoly MultiPoly::x(int i) { return from_monomial({0, {{i, 1}}, {}}); }
MultiPoly MultiPoly::y(int j) { return from_monomial({0, {}, {{j, 1}}}); }

void MultiPoly::add_term(const Monomial& m, const Coefficient& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (auto& [ma, ca] : a.terms_)
    for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (auto& [m, c] : terms_) {
    if (!(m == it->first) || c != it->second) return false;
    ++it;
  }
  return true;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Coefficient mag = negative ? Coefficient(-c) : c;
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    first = false;

    std::vector<std::string> factors;
    if (m.beta == 1) factors.push_back("b");
    else if (m.beta != 0) factors.push_back("b^" + std::to_string(m.beta));
    for (auto& [i, e] : m.x) factors.push_back(var_name('x', i) + (e > 1 ? "^" + std::to_string(e) : ""));
    for (auto& [j, e] : m.y) factors.push_back(var_name('y', j) + (e > 1 ? "^" + std::to_string(e) : ""));

    std::string term = (mag != 1 || factors.empty()) ? mag.str() : "";
    for (auto& f : factors) term += (term.empty() ? "" : "*") + f;
    out += term;
  }
  return out;
}

MultiPoly pow(const MultiPoly& p, int e) {
  MultiPoly r = 1;
  for (int k = 0; k < e; ++k) r *= p;
  return r;
}

std::optional<int> homogeneous_degree(const MultiPoly& p) {
  std::optional<int> d;
  for (auto& [m, c] : p.terms()) {
    const int dm = m.degree() - m.beta;
    if (d && *d != dm) return std::nullopt;
    d = dm;
  }
  return d ? d : 0;
}

MultiPoly weight(const SuperPipeDream& P) {
  const ExponentRecord e = weight_exponents(P);
  Monomial m;
  m.beta = e.beta_exp;
  for (auto& [i, k] : e.x) m.x.push_back({i, k});
  for (auto& [j, k] : e.y) m.y.push_back({j, k});
  return MultiPoly::from_monomial(m);
}

MultiPoly weight(const PipeDream& P) { return weight(SuperPipeDream{P, {}}); }

namespace {

template <typename Stream>
MultiPoly sum_weights(Stream s, bool drop_beta) {
  MultiPoly total;
  while (auto D = s.next()) {
    MultiPoly w = weight(*D);
    if (drop_beta) {
      if (w.terms().begin()->first.beta != 0) continue;
    }
    total += w;
  }
  return total;
}

}  // namespace

MultiPoly schubert(const Permutation& w, const EnumCaps& caps) {
  return sum_weights(enum_pd_plus(w, true, caps), false);
}

MultiPoly grothendieck(const Permutation& w, const EnumCaps& caps) {
  return sum_weights(enum_pd_plus(w, false, caps), false);
}

MultiPoly double_schubert(const Permutation& w, const EnumCaps& caps) {
  return sum_weights(enum_spd_plus(w, true, caps), false);
}

MultiPoly double_grothendieck(const Permutation& w, const EnumCaps& caps) {
  return sum_weights(enum_spd_plus(w, false, caps), false);
}

MultiPoly stanley_truncation(const Permutation& w, int N, bool with_beta, const EnumCaps& caps) {
  MultiPoly p = sum_weights(enum_stable(w, N, !with_beta, caps), false);
  for (int i = 1; i < N; ++i)
    if (!(swap_x(p, i) == p))
      throw InternalError("stanley_truncation: result is not symmetric in x" + std::to_string(i) +
                          ", x" + std::to_string(i + 1));
  return p;
}

MultiPoly nabla_beta(const MultiPoly& p) {
  MultiPoly r;
  for (auto& [m, c] : p.terms()) {
    for (auto& [i, e] : m.x) {
      Monomial lowered = m;
      set_exp(lowered.x, i, e - 1);
      r.add_term(lowered, c * e);
      Monomial raised = m;
      ++raised.beta;
      r.add_term(raised, c * e);
    }
  }
  return r;
}

MultiPoly bergeron_sottile(const MultiPoly& p, int k) {
  MultiPoly r;
  for (auto& [m, c] : p.terms()) {
    if (m.x_exp(k) > 0) continue;
    Monomial out = m;
    for (auto& [i, e] : out.x)
      if (i > k) --i;
    r.add_term(out, c);
  }
  return r;
}

MultiPoly e_k_beta(int k, int m) {
  if (k < 0 || k > m) throw PreconditionError("e_k_beta: need 0 <= k <= m");
  MultiPoly direct;
  for (unsigned I = 0; I < (1u << m); ++I) {
    const int size_i = __builtin_popcount(I);
    if (size_i < k) continue;
    Monomial xi;
    xi.beta = size_i - k;
    for (int r = 0; r < m; ++r)
      if (I >> r & 1) xi.x.push_back({r + 1, 1});
    // J ranges over the k-subsets of I.
    for (unsigned J = I;; J = (J - 1) & I) {
      if (__builtin_popcount(J) == k) direct.add_term(xi, 1);
      if (J == 0) break;
    }
  }
  MultiPoly closed;
  for (unsigned I = 0; I < (1u << m); ++I) {
    const int r = __builtin_popcount(I);
    if (r < k) continue;
    Monomial xi;
    xi.beta = r - k;
    for (int t = 0; t < m; ++t)
      if (I >> t & 1) xi.x.push_back({t + 1, 1});
    closed.add_term(xi, binomial(r, k));
  }
  if (!(direct == closed)) throw InternalError("e_k_beta: closed form disagrees with the subset sum");
  return direct;
}

MultiPoly specialize(const MultiPoly& p, const Bindings& b) {
  MultiPoly r;
  for (auto& [m, c] : p.terms()) {
    Coefficient coeff = c;
    Monomial out;
    if (b.beta) coeff *= ipow(*b.beta, m.beta);
    else out.beta = m.beta;
    for (auto& [i, e] : m.x) {
      auto it = b.x.find(i);
      if (it != b.x.end()) coeff *= ipow(it->second, e);
      else if (b.all_x) coeff *= ipow(*b.all_x, e);
      else out.x.push_back({i, e});
    }
    for (auto& [j, e] : m.y) {
      auto it = b.y.find(j);
      if (it != b.y.end()) coeff *= ipow(it->second, e);
      else if (b.all_y) coeff *= ipow(*b.all_y, e);
      else out.y.push_back({j, e});
    }
    r.add_term(out, coeff);
  }
  return r;
}

MultiPoly evaluate_all_ones_x(const MultiPoly& p) {
  Bindings b;
  b.all_x = 1;
  return specialize(p, b);
}

MultiPoly swap_xy(const MultiPoly& p) {
  MultiPoly r;
  for (auto& [m, c] : p.terms()) r.add_term({m.beta, m.y, m.x}, c);
  return r;
}

MultiPoly swap_x(const MultiPoly& p, int i) {
  MultiPoly r;
  for (auto& [m, c] : p.terms()) {
    Monomial out = m;
    const int a = m.x_exp(i), b = m.x_exp(i + 1);
    set_exp(out.x, i, b);
    set_exp(out.x, i + 1, a);
    r.add_term(out, c);
  }
  return r;
}

MultiPoly divided_difference(const MultiPoly& p, int i) {
  MultiPoly r;
  for (auto& [m, c] : p.terms()) {
    const int a = m.x_exp(i), b = m.x_exp(i + 1);
    if (a == b) continue;
    const int lo = std::min(a, b), hi = std::max(a, b);
    const Coefficient sign = a > b ? c : Coefficient(-c);
    for (int t = 0; t < hi - lo; ++t) {
      Monomial out = m;
      set_exp(out.x, i, hi - 1 - t);
      set_exp(out.x, i + 1, lo + t);
      r.add_term(out, sign);
    }
  }
  return r;
}

namespace {

MultiPoly dd_schubert(const Permutation& w, int n, std::map<Permutation, MultiPoly>& memo) {
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  MultiPoly result;
  int ascent = 0;
  for (int i = 1; i < n && !ascent; ++i)
    if (w(i) < w(i + 1)) ascent = i;
  if (!ascent) {  // w = w0 in S_n
    Monomial top;
    for (int i = 1; i < n; ++i) top.x.push_back({i, n - i});
    result = MultiPoly::from_monomial(top);
  } else {
    result = divided_difference(dd_schubert(w.times_simple(ascent), n, memo), ascent);
  }
  memo.emplace(w, result);
  return result;
}

}  // namespace

MultiPoly divided_difference_schubert(const Permutation& w, int max_n) {
  if (w.size() > max_n)
    throw ResourceError("divided_difference_schubert: n = " + std::to_string(w.size()) +
                        " exceeds cap " + std::to_string(max_n));
  if (w.is_identity()) return 1;
  std::map<Permutation, MultiPoly> memo;
  return dd_schubert(w, w.size(), memo);
}

}  // namespace pdlab
