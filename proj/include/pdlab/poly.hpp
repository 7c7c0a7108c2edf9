#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdlab/diagram.hpp"
#include "pdlab/enumerate.hpp"
#include "pdlab/perm.hpp"

namespace pdlab {

using Coefficient = boost::multiprecision::cpp_int;

// beta^beta * prod x_i^e * prod y_j^f; exponent lists sorted by index, all > 0.
struct Monomial {
  int beta = 0;
  std::vector<std::pair<int, int>> x;
  std::vector<std::pair<int, int>> y;

  int degree() const;  // x and y degree, beta not counted
  int x_exp(int i) const;
  int y_exp(int j) const;
  Monomial operator*(const Monomial& o) const;
  bool operator==(const Monomial&) const = default;
};

// Canonical term order: beta exponent, then total degree, then x exponents
// lexicographically by index (larger exponent first), then y likewise.
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class MultiPoly {
 public:
  using Terms = std::map<Monomial, Coefficient, TermOrder>;

  MultiPoly() = default;
  MultiPoly(long long c);  // NOLINT: constants convert implicitly
  static MultiPoly from_monomial(Monomial m, Coefficient c = 1);
  static MultiPoly beta();
  static MultiPoly x(int i);
  static MultiPoly y(int j);

  void add_term(const Monomial& m, const Coefficient& c);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  bool operator==(const MultiPoly& o) const;

  // "x1 + x2 + b*x1*x2"
  std::string str() const;

 private:
  Terms terms_;
};

MultiPoly pow(const MultiPoly& p, int e);

// Degree with deg(beta) = -1; nullopt when p is not homogeneous.
std::optional<int> homogeneous_degree(const MultiPoly& p);

MultiPoly weight(const SuperPipeDream& P);
MultiPoly weight(const PipeDream& P);  // black crosses only

MultiPoly schubert(const Permutation& w, const EnumCaps& caps = {});
MultiPoly grothendieck(const Permutation& w, const EnumCaps& caps = {});
MultiPoly double_schubert(const Permutation& w, const EnumCaps& caps = {});
MultiPoly double_grothendieck(const Permutation& w, const EnumCaps& caps = {});
// F_w (with_beta = false) or G_w (with_beta = true) with x_{N+1} = ... = 0.
MultiPoly stanley_truncation(const Permutation& w, int N, bool with_beta, const EnumCaps& caps = {});

MultiPoly nabla_beta(const MultiPoly& p);
// x_k -> 0 and x_{i+1} -> x_i for i >= k.
MultiPoly bergeron_sottile(const MultiPoly& p, int k);
MultiPoly e_k_beta(int k, int m);

struct Bindings {
  std::optional<long long> beta;
  std::map<int, long long> x;
  std::map<int, long long> y;
  std::optional<long long> all_x;  // default for x variables not in `x`
  std::optional<long long> all_y;
};
MultiPoly specialize(const MultiPoly& p, const Bindings& b);
MultiPoly evaluate_all_ones_x(const MultiPoly& p);
MultiPoly swap_xy(const MultiPoly& p);
// Exchanges x_i and x_{i+1}.
MultiPoly swap_x(const MultiPoly& p, int i);

// Classical oracle: divided differences down from x1^{n-1} x2^{n-2} ... at w0.
MultiPoly divided_difference_schubert(const Permutation& w, int max_n = 6);
MultiPoly divided_difference(const MultiPoly& p, int i);

}  // namespace pdlab
