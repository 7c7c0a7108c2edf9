#include "pdlab/suite.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <tuple>

#include "pdlab/errors.hpp"
#include "pdlab/flow.hpp"
#include "pdlab/rectify.hpp"
#include "pdlab/tableau.hpp"

namespace pdlab {

namespace {

constexpr std::size_t kMaxStoredFailures = 50;

int ambient(const Permutation& w) { return std::max(w.size(), 1); }

MultiPoly beta_pow(int e) {
  if (e < 0) throw InternalError("negative beta exponent " + std::to_string(e));
  return pow(MultiPoly::beta(), e);
}

Json poly_mismatch(const MultiPoly& lhs, const MultiPoly& rhs) {
  return {{"kind", "polynomial"}, {"lhs", lhs.str()}, {"rhs", rhs.str()}};
}

void compare_polys(Report& r, const MultiPoly& lhs, const MultiPoly& rhs) {
  r.lhs = lhs.str();
  r.rhs = rhs.str();
  if (!(lhs == rhs)) r.fail(poly_mismatch(lhs, rhs));
}

Json diagram_case(const std::string& what, const SuperPipeDream& W) {
  return {{"kind", "diagram"}, {"check", what}, {"diagram", to_json(W)}};
}

Json positions_of(const std::vector<int>& a) { return a; }

std::vector<std::vector<int>> subsets_of(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i + 1);
    out.push_back(std::move(s));
  }
  return out;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly x_monomial(const std::vector<int>& I) {
  MultiPoly p = 1;
  for (int i : I) p *= MultiPoly::x(i);
  return p;
}

// (k, v) with s_k * v = w, k in [1, n-1] and v in S_n; S_{n+1} is scanned
// to confirm nothing escapes.
std::vector<std::pair<int, Permutation>> left_simple_factorizations(const Permutation& w) {
  const int n = ambient(w);
  std::vector<std::pair<int, Permutation>> out;
  for (int k = 1; k <= n; ++k)
    for (const Permutation& v : permutations_of(n + 1)) {
      if (v.length() > w.length()) continue;
      if (!(demazure_product(Permutation::simple(k), v) == w)) continue;
      if (k >= n || v.size() > n) throw InternalError("factorization of " + w.str() + " escapes S_n");
      out.push_back({k, v});
    }
  return out;
}

// (u, k) with u * s_k = w.
std::vector<std::pair<Permutation, int>> right_simple_factorizations(const Permutation& w) {
  const int n = ambient(w);
  std::vector<std::pair<Permutation, int>> out;
  for (const Permutation& u : permutations_of(n + 1))
    for (int k = 1; k <= n; ++k) {
      if (u.length() > w.length()) continue;
      if (!(demazure_product(u, Permutation::simple(k)) == w)) continue;
      if (k >= n || u.size() > n) throw InternalError("factorization of " + w.str() + " escapes S_n");
      out.push_back({u, k});
    }
  return out;
}

std::mutex g_cache_mutex;
std::map<std::tuple<int, int, Permutation>, MultiPoly> g_cache;

MultiPoly cached(int kind, int rows, const Permutation& w, const std::function<MultiPoly()>& make) {
  const auto key = std::make_tuple(kind, rows, w);
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    if (auto it = g_cache.find(key); it != g_cache.end()) return it->second;
  }
  MultiPoly p = make();
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  return g_cache.emplace(key, std::move(p)).first->second;
}

MultiPoly cached_stable(const Permutation& w, int N, bool with_beta, const EnumCaps& caps) {
  return cached(with_beta ? 5 : 4, N, w, [&] { return stanley_truncation(w, N, with_beta, caps); });
}

MultiPoly single(Variant variant, const Permutation& w, const EnumCaps& caps) {
  return cached_poly(variant == Variant::Schubert ? PolyKind::Schubert : PolyKind::Grothendieck, w, caps);
}

MultiPoly doubled(Variant variant, const Permutation& w, const EnumCaps& caps) {
  return cached_poly(variant == Variant::Schubert ? PolyKind::DoubleSchubert
                                                  : PolyKind::DoubleGrothendieck,
                     w, caps);
}

const char* variant_name(Variant v) { return v == Variant::Schubert ? "schubert" : "grothendieck"; }

Report make_report(std::string identity, Json parameters) {
  Report r;
  r.identity = std::move(identity);
  r.parameters = std::move(parameters);
  return r;
}

}  // namespace

bool Report::passed() const {
  if (!failures.empty()) return false;
  return std::all_of(children.begin(), children.end(), [](const Report& c) { return c.passed(); });
}

std::uint64_t Report::total_cases() const {
  std::uint64_t n = cases;
  for (auto& c : children) n += c.total_cases();
  return n;
}

std::uint64_t Report::failure_count() const {
  std::uint64_t n = failures.size();
  for (auto& c : children) n += c.failure_count();
  return n;
}

std::uint64_t Report::finding_count() const {
  std::uint64_t n = findings.size();
  for (auto& c : children) n += c.finding_count();
  return n;
}

void Report::fail(Json payload) {
  if (failures.size() < kMaxStoredFailures) failures.push_back(std::move(payload));
  else if (failures.size() == kMaxStoredFailures)
    failures.push_back({{"kind", "truncated"}, {"note", "further failures omitted"}});
}

Json Report::to_json() const {
  Json j;
  j["identity"] = identity;
  j["parameters"] = parameters;
  j["passed"] = passed();
  j["cases"] = total_cases();
  if (!lhs.empty() || !rhs.empty()) {
    j["lhs"] = lhs;
    j["rhs"] = rhs;
  }
  j["failures"] = failures;
  j["findings"] = findings;
  if (!children.empty()) {
    Json kids = Json::array();
    for (auto& c : children) kids.push_back(c.to_json());
    j["children"] = std::move(kids);
  }
  return j;
}

MultiPoly cached_poly(PolyKind kind, const Permutation& w, const EnumCaps& caps) {
  return cached(static_cast<int>(kind), 0, w, [&] {
    switch (kind) {
      case PolyKind::Schubert: return schubert(w, caps);
      case PolyKind::Grothendieck: return grothendieck(w, caps);
      case PolyKind::DoubleSchubert: return double_schubert(w, caps);
      case PolyKind::DoubleGrothendieck: return double_grothendieck(w, caps);
    }
    throw InternalError("unknown polynomial kind");
  });
}

std::vector<std::pair<Permutation, Permutation>> cauchy_factorizations(const Permutation& w,
                                                                        bool reduced) {
  const int n = ambient(w);
  const std::vector<Permutation> pool = permutations_of(n + 1);
  std::vector<std::pair<Permutation, Permutation>> out;
  for (const Permutation& u : pool) {
    if (u.length() > w.length()) continue;
    const Permutation ui = u.inverse();
    for (const Permutation& v : pool) {
      if (v.length() > w.length()) continue;
      if (!(demazure_product(ui, v) == w)) continue;
      if (u.size() > n || v.size() > n)
        throw InternalError("factorization of " + w.str() + " escapes S_n");
      if (reduced && u.length() + v.length() != w.length()) continue;
      out.push_back({u, v});
    }
  }
  return out;
}

Report check_cauchy(const Permutation& w, Variant variant, const EnumCaps& caps) {
  const bool reduced = variant == Variant::Schubert;
  Report r = make_report(reduced ? "cauchy" : "kcauchy", {{"w", w.str()}});
  const auto factors = cauchy_factorizations(w, reduced);

  MultiPoly rhs;
  for (auto& [u, v] : factors) {
    const int delta = u.length() + v.length() - w.length();
    rhs += beta_pow(delta) * single(variant, v, caps) * swap_xy(single(variant, u, caps));
  }
  compare_polys(r, doubled(variant, w, caps), rhs);

  const std::set<std::pair<Permutation, Permutation>> factor_set(factors.begin(), factors.end());
  std::set<std::pair<PipeDream, PipeDream>> image;
  auto stream = enum_spd_plus(w, reduced, caps);
  while (auto W = stream.next()) {
    ++r.cases;
    const Rectification R = rect(*W);
    const Permutation u = permutation(R.U), v = permutation(R.V);
    Json bad = diagram_case("rect", *W);
    bad["V"] = to_json(R.V);
    bad["U"] = to_json(R.U);
    if (!is_ordinary(R.V) || !is_ordinary(R.U)) bad["problem"] = "output not ordinary";
    else if (!factor_set.count({u, v})) bad["problem"] = "output outside the factorization codomain";
    else if (reduced && (!is_reduced(R.V) || !is_reduced(R.U))) bad["problem"] = "output not reduced";
    else if (!(weight(*W) == beta_pow(u.length() + v.length() - w.length()) * weight(R.V) *
                                 weight(adjoint(SuperPipeDream{R.U, {}}))))
      bad["problem"] = "weight law";
    else if (!(rect_inverse(R.V, R.U) == *W)) bad["problem"] = "rect_inverse does not invert";
    else if (!image.insert({R.V, R.U}).second) bad["problem"] = "not injective";
    if (bad.contains("problem")) r.fail(bad);
  }

  std::set<std::pair<PipeDream, PipeDream>> codomain;
  for (auto& [u, v] : factors) {
    const auto Vs = collect(enum_pd_plus(v, reduced, caps));
    const auto Us = collect(enum_pd_plus(u, reduced, caps));
    for (auto& V : Vs)
      for (auto& U : Us) codomain.insert({V, U});
  }
  if (image != codomain)
    r.fail({{"kind", "bijection"},
            {"image_size", image.size()},
            {"codomain_size", codomain.size()}});
  return r;
}

Report check_nabla(const Permutation& w, Variant variant, const EnumCaps& caps) {
  const bool reduced = variant == Variant::Schubert;
  Report r = make_report("nabla", {{"w", w.str()}, {"variant", variant_name(variant)}});
  MultiPoly lhs = nabla_beta(single(variant, w, caps));
  if (reduced) {
    Bindings b;
    b.beta = 0;
    lhs = specialize(lhs, b);
  }
  MultiPoly rhs;
  for (auto& [k, v] : left_simple_factorizations(w)) {
    ++r.cases;
    if (reduced) {
      if (v.length() == w.length() - 1) rhs += MultiPoly(k) * single(variant, v, caps);
    } else {
      rhs += beta_pow(v == w ? 1 : 0) * MultiPoly(k) * single(variant, v, caps);
    }
  }
  compare_polys(r, lhs, rhs);
  return r;
}

Report check_macdonald(const Permutation& w, const EnumCaps& caps) {
  Report r = make_report("macdonald", {{"w", w.str()}});
  Coefficient lhs = 0;
  const auto words = reduced_words(w, caps.max_reduced_words);
  for (const Word& a : words) {
    Coefficient prod = 1;
    for (int letter : a) prod *= letter;
    lhs += prod;
  }
  r.cases = words.size();
  Coefficient factorial = 1;
  for (int i = 2; i <= w.length(); ++i) factorial *= i;
  const MultiPoly at_ones = evaluate_all_ones_x(single(Variant::Schubert, w, caps));
  Coefficient value = 0;
  for (auto& [m, c] : at_ones.terms()) {
    if (m.beta != 0 || !m.x.empty() || !m.y.empty())
      throw InternalError("Schubert polynomial at x = 1 is not a constant");
    value = c;
  }
  const Coefficient rhs = factorial * value;
  r.lhs = lhs.str();
  r.rhs = rhs.str();
  r.parameters["reduced_words"] = words.size();
  if (lhs != rhs) r.fail({{"kind", "integer"}, {"lhs", r.lhs}, {"rhs", r.rhs}});
  return r;
}

Report check_pieri(const Permutation& w, int m, int k, Variant variant, const EnumCaps& caps) {
  const bool reduced = variant == Variant::Schubert;
  Report r = make_report("pieri", {{"w", w.str()}, {"m", m}, {"k", k}, {"variant", variant_name(variant)}});
  if (k < 0 || k > m) throw PreconditionError("pieri: need 0 <= k <= m");
  for (int d : w.descents())
    if (d > m) throw PreconditionError("pieri: descent " + std::to_string(d) + " exceeds m");

  const Permutation wm = ominus(w, m);
  const int np = wm.size();
  std::vector<Permutation> below;
  for (const Permutation& v : permutations_of(np + 1))
    if (bruhat_leq(v, wm)) below.push_back(v);

  // (a, v) with wm = perm(a) * v, a strictly increasing of length m - k.
  std::vector<std::pair<std::vector<int>, Permutation>> terms;
  for (auto& a : subsets_of(np)) {
    if (static_cast<int>(a.size()) != m - k) continue;
    const Permutation pa = from_word(a);
    for (const Permutation& v : below) {
      if (!(demazure_product(pa, v) == wm)) continue;
      if ((!a.empty() && a.back() >= np) || v.size() > np)
        throw InternalError("pieri factorization of " + wm.str() + " escapes S_n");
      if (reduced && v.length() + (m - k) != wm.length()) continue;
      terms.push_back({a, v});
    }
  }

  MultiPoly e = e_k_beta(k, m);
  if (reduced) {
    Bindings b;
    b.beta = 0;
    e = specialize(e, b);
  }
  MultiPoly rhs;
  for (auto& [a, v] : terms)
    rhs += (reduced ? MultiPoly(1) : beta_pow(v.length() - w.length() - k)) * single(variant, v, caps);
  compare_polys(r, e * single(variant, w, caps), rhs);

  // Insertion replay: (P, I, J) -> rect of the insertion diagram.
  auto row_one = [](const std::vector<int>& a) {
    PipeDream U;
    for (int c : a) U.insert({1, c});
    return U;
  };
  std::set<std::pair<PipeDream, PipeDream>> image, codomain;
  std::set<std::pair<std::vector<int>, Permutation>> term_set(terms.begin(), terms.end());
  const auto subsets = subsets_of(m);
  auto stream = enum_pd_plus(w, reduced, caps);
  while (auto P = stream.next()) {
    for (auto& I : subsets)
      for (auto& J : subsets) {
        if (static_cast<int>(J.size()) != k || !subset_of(J, I)) continue;
        if (reduced && I != J) continue;
        ++r.cases;
        const SuperPipeDream W = insertion_diagram(*P, I, J, m);
        const Rectification R = rect(W);
        Json bad = diagram_case("insert", W);
        bad["I"] = positions_of(I);
        bad["J"] = positions_of(J);
        std::vector<int> a;
        bool row_one_only = true;
        for (Position p : R.U) {
          if (p.row != 1) row_one_only = false;
          a.push_back(p.col);
        }
        const Permutation v = permutation(R.V);
        const MultiPoly expected = beta_pow(static_cast<int>(I.size()) - k) * x_monomial(I) *
                                   pow(MultiPoly::y(1), m - k) * weight(*P);
        if (!(permutation(W) == wm)) bad["problem"] = "insertion diagram has the wrong permutation";
        else if (!(weight(W) == expected)) bad["problem"] = "insertion diagram weight";
        else if (!row_one_only || !term_set.count({a, v})) bad["problem"] = "output outside the Pieri codomain";
        else if (reduced && !is_reduced(R.V)) bad["problem"] = "output not reduced";
        else if (!(weight(W) == beta_pow(static_cast<int>(a.size()) + v.length() - wm.length()) *
                                    weight(R.V) * weight(adjoint(SuperPipeDream{R.U, {}}))))
          bad["problem"] = "weight law";
        else if (!image.insert({R.V, R.U}).second) bad["problem"] = "not injective";
        if (bad.contains("problem")) r.fail(bad);
      }
  }
  for (auto& [a, v] : terms) {
    auto s = enum_pd_plus(v, reduced, caps);
    while (auto V = s.next()) codomain.insert({*V, row_one(a)});
  }
  if (image != codomain)
    r.fail({{"kind", "bijection"}, {"image_size", image.size()}, {"codomain_size", codomain.size()}});
  return r;
}

Report check_stanley(const Permutation& w, int N, Variant variant, const EnumCaps& caps) {
  const bool reduced = variant == Variant::Schubert;
  Report r = make_report("stanley", {{"w", w.str()}, {"N", N}, {"variant", variant_name(variant)}});
  const auto left = left_simple_factorizations(w);
  const auto right = right_simple_factorizations(w);

  MultiPoly lhs, rhs;
  for (auto& [k, v] : left) {
    if (reduced && v.length() != w.length() - 1) continue;
    lhs += (reduced ? MultiPoly(1) : beta_pow(v == w)) * cached_stable(v, N, !reduced, caps);
  }
  for (auto& [u, k] : right) {
    if (reduced && u.length() != w.length() - 1) continue;
    rhs += (reduced ? MultiPoly(1) : beta_pow(u == w)) * cached_stable(u, N, !reduced, caps);
  }
  compare_polys(r, lhs, rhs);

  // Domain tagged diagrams (k, D) on each side of the pairing.
  using Tagged = std::set<std::pair<int, PipeDream>>;
  Tagged left_side, right_side;
  for (auto& [k, v] : left) {
    if (reduced && v.length() != w.length() - 1) continue;
    auto s = enum_stable(v, N, reduced, caps);
    while (auto D = s.next()) left_side.insert({k, *D});
  }
  for (auto& [u, k] : right) {
    if (reduced && u.length() != w.length() - 1) continue;
    auto s = enum_stable(u, N, reduced, caps);
    while (auto D = s.next()) right_side.insert({k, *D});
  }

  // Orientation A runs rect^-1 then corect from the left side; B runs
  // corect^-1 then rect from the right side.
  auto run = [&](bool forward, std::vector<Json>& problems) {
    const Tagged& domain = forward ? left_side : right_side;
    const Tagged& target = forward ? right_side : left_side;
    Tagged image;
    for (auto& [k, D] : domain) {
      const PipeDream Pk{{1, k}};
      Rectification R;
      try {
        R = forward ? corect(rect_inverse(D, Pk)) : rect(corect_inverse(D, Pk));
      } catch (const std::exception& e) {
        problems.push_back({{"kind", "exception"}, {"k", k}, {"diagram", to_json(D)}, {"what", e.what()}});
        continue;
      }
      Json bad = {{"kind", "pairing"}, {"k", k}, {"diagram", to_json(D)}, {"V", to_json(R.V)}, {"U", to_json(R.U)}};
      if (R.U.size() != 1 || R.U.begin()->row != 1) bad["problem"] = "second factor is not a single first-row cross";
      else if (!is_stable(R.V)) bad["problem"] = "output not stable";
      else if (!(beta_pow(permutation(R.V) == w) * weight(R.V) == beta_pow(permutation(D) == w) * weight(D)))
        bad["problem"] = "weight not preserved";
      else if (!target.count({R.U.begin()->col, R.V})) bad["problem"] = "output outside the target side";
      else if (!image.insert({R.U.begin()->col, R.V}).second) bad["problem"] = "not injective";
      if (bad.contains("problem")) problems.push_back(bad);
    }
    if (problems.empty() && image != target)
      problems.push_back({{"kind", "bijection"}, {"image_size", image.size()}, {"target_size", target.size()}});
    r.cases += domain.size();
  };
  std::vector<Json> problems_a, problems_b;
  run(true, problems_a);
  if (problems_a.empty()) {
    r.parameters["orientation"] = "corect(rect_inverse(.))";
  } else {
    run(false, problems_b);
    if (problems_b.empty()) r.parameters["orientation"] = "rect(corect_inverse(.))";
    else
      for (auto& p : problems_a) r.fail(p);
  }
  return r;
}

Report check_rk_recurrence(const Permutation& w, Variant variant, const EnumCaps& caps) {
  const bool reduced = variant == Variant::Schubert;
  Report r = make_report("rk", {{"w", w.str()}, {"variant", variant_name(variant)}});
  std::vector<std::pair<Permutation, int>> right;
  for (auto& [u, k] : right_simple_factorizations(w))
    if (!reduced || u.length() == w.length() - 1) right.push_back({u, k});

  const MultiPoly lhs = doubled(variant, w, caps);
  MultiPoly rhs = bergeron_sottile(lhs, 1);
  for (auto& [u, k] : right)
    rhs += (reduced ? MultiPoly(1) : beta_pow(u == w)) * MultiPoly::x(k) *
           bergeron_sottile(doubled(variant, u, caps), k);
  compare_polys(r, lhs, rhs);

  auto no_black_in_row = [](const SuperPipeDream& Q, int row) {
    return std::none_of(Q.black.begin(), Q.black.end(), [row](Position p) { return p.row == row; });
  };
  std::set<std::pair<Permutation, int>> right_set(right.begin(), right.end());
  std::set<std::pair<int, SuperPipeDream>> image, codomain;
  auto stream = enum_spd_plus(w, reduced, caps);
  while (auto P = stream.next()) {
    ++r.cases;
    Json bad = diagram_case("rk", *P);
    const SuperPipeDream X1 = x_plus_geq(*P, 1);
    int tag = 0;
    SuperPipeDream Q;
    if (is_ordinary(X1)) {
      Q = X1;
      if (!no_black_in_row(Q, 1)) bad["problem"] = "X+ left a black checker in row 1";
      else if (!(bergeron_sottile(weight(Q), 1) == weight(*P))) bad["problem"] = "R_1 weight";
    } else {
      int top = 1;
      for (Position p : P->black) top = std::max(top, p.row);
      int k = 0;
      for (int c = top; c >= 1 && !k; --c)
        if (!is_ordinary(x_plus_geq(*P, c))) k = c;
      const SuperPipeDream Xk = x_plus_geq(*P, k);
      tag = k;
      Q = Xk;
      bad["k"] = k;
      if (!Q.black.contains({k + 1, 0})) {
        bad["problem"] = "no black checker at (k+1, 0)";
      } else {
        Q.black.erase({k + 1, 0});
        const Permutation u = permutation(Q);
        if (!is_ordinary(Q)) bad["problem"] = "remainder not ordinary";
        else if (!right_set.count({u, k})) bad["problem"] = "remainder outside the R_k codomain";
        else if (!no_black_in_row(Q, k)) bad["problem"] = "remainder has a black checker in row k";
        else if (!((reduced ? MultiPoly(1) : beta_pow(u == w)) * MultiPoly::x(k) *
                       bergeron_sottile(weight(Q), k) ==
                   weight(*P)))
          bad["problem"] = "R_k weight";
      }
    }
    if (!bad.contains("problem") && reduced && !is_reduced(Q)) bad["problem"] = "image not reduced";
    if (!bad.contains("problem") && !image.insert({tag, Q}).second) bad["problem"] = "not injective";
    if (bad.contains("problem")) {
      bad["image"] = to_json(Q);
      r.fail(bad);
    }
  }
  {
    auto s = enum_spd_plus(w, reduced, caps);
    while (auto Q = s.next())
      if (no_black_in_row(*Q, 1)) codomain.insert({0, *Q});
  }
  for (auto& [u, k] : right) {
    auto s = enum_spd_plus(u, reduced, caps);
    while (auto Q = s.next())
      if (no_black_in_row(*Q, k)) codomain.insert({k, *Q});
  }
  if (image != codomain)
    r.fail({{"kind", "bijection"}, {"image_size", image.size()}, {"codomain_size", codomain.size()}});
  return r;
}

namespace {

// Returns the first violated flow property, or "" when all hold.
std::string flow_violation(const SuperPipeDream& P) {
  const SuperPipeDream Y = y_plus(P);
  const SuperPipeDream X = x_plus(P);
  if (!(shift(Y, 1) == X)) return "sigma(Y+ P) != X+ P";
  if (!(x_plus(adjoint(P)) == adjoint(Y))) return "X+(P^dagger) != (Y+ P)^dagger";
  if (!(y_plus(adjoint(P)) == adjoint(X))) return "Y+(P^dagger) != (X+ P)^dagger";
  if (!(y_plus(shift(P, 1)) == shift(Y, 1))) return "Y+ does not commute with sigma";
  if (!(x_plus(shift(P, 1)) == shift(X, 1))) return "X+ does not commute with sigma";
  const Permutation w = permutation(P);
  if (!(permutation(Y) == w) || !(permutation(X) == w)) return "permutation not preserved";
  if (!(y_minus(Y) == P)) return "Y- does not invert Y+";
  if (!(x_minus(X) == P)) return "X- does not invert X+";
  return "";
}

}  // namespace

Report check_flow_symmetry(int max_n, std::size_t samples, std::uint64_t seed, const EnumCaps& caps) {
  Report r = make_report("symmetry", {{"max_n", max_n}, {"samples", samples}, {"seed", seed}});
  auto test = [&](const SuperPipeDream& P, const char* source) {
    ++r.cases;
    std::string problem;
    try {
      problem = flow_violation(P);
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    if (!problem.empty()) {
      Json bad = diagram_case(source, P);
      bad["problem"] = problem;
      r.fail(bad);
    }
  };
  for (const Permutation& w : permutations_of(max_n)) {
    auto s = enum_spd_plus(w, false, caps);
    while (auto P = s.next()) test(*P, "exhaustive");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-3, 8), count(0, 8), bits(1, 3);
  for (std::size_t t = 0; t < samples; ++t) {
    SuperPipeDream P;
    const int cells = count(rng);
    for (int c = 0; c < cells; ++c) {
      const Position p{coord(rng), coord(rng)};
      const int b = bits(rng);
      if (in_half_space(p)) set_checkers(P, p, b);
    }
    test(P, "random");
  }
  return r;
}

Report check_rect_props(const Permutation& w, const EnumCaps& caps) {
  Report r = make_report("rect", {{"w", w.str()}});
  std::uint64_t corect_extraordinary = 0;
  Json corect_example;
  auto stream = enum_spd_plus(w, false, caps);
  while (auto W = stream.next()) {
    ++r.cases;
    const Rectification R = rect(*W);
    const Rectification C = corect(*W);
    const Permutation u = permutation(R.U), v = permutation(R.V);
    const Permutation cu = permutation(C.U), cv = permutation(C.V);
    auto law = [&](const Rectification& X, const Permutation& a, const Permutation& b) {
      return weight(*W) == beta_pow(a.length() + b.length() - w.length()) * weight(X.V) *
                               weight(adjoint(SuperPipeDream{X.U, {}}));
    };
    Json bad = diagram_case("rect/corect", *W);
    if (!is_ordinary(R.V) || !is_ordinary(R.U)) bad["problem"] = "rect output not ordinary";
    else if (!(demazure_product(u.inverse(), v) == w)) bad["problem"] = "rect factorization";
    else if (!law(R, u, v)) bad["problem"] = "rect weight law";
    else if (is_reduced(*W) && (!is_reduced(R.V) || !is_reduced(R.U) || u.length() + v.length() != w.length()))
      bad["problem"] = "rect reducedness";
    else if (const Rectification S = rect(adjoint(*W)); !(S.V == R.U && S.U == R.V))
      bad["problem"] = "rect symmetry";
    else if (!(rect_inverse(R.V, R.U) == *W)) bad["problem"] = "rect_inverse";
    else if (!(demazure_product(cv, transpose(C.U).empty() ? Permutation() : permutation(transpose(C.U))) == w))
      bad["problem"] = "corect factorization";
    else if (!law(C, cu, cv)) bad["problem"] = "corect weight law";
    else if (is_reduced(*W) && (!is_reduced(C.V) || !is_reduced(C.U) || cu.length() + cv.length() != w.length()))
      bad["problem"] = "corect reducedness";
    else if (const Rectification S = corect(adjoint(*W)); !(S.V == C.U && S.U == C.V))
      bad["problem"] = "corect symmetry";
    else if (!(corect_inverse(C.V, C.U) == *W)) bad["problem"] = "corect_inverse";
    if (bad.contains("problem")) r.fail(bad);
    if (!is_ordinary(C.V) || !is_ordinary(C.U)) {
      if (!corect_extraordinary++) corect_example = {{"W", to_json(*W)}, {"V", to_json(C.V)}, {"U", to_json(C.U)}};
    }
  }
  // Converse: ordinary pairs come from ordinary diagrams.
  for (auto& [u, v] : cauchy_factorizations(w, false)) {
    const auto Vs = collect(enum_pd_plus(v, false, caps));
    const auto Us = collect(enum_pd_plus(u, false, caps));
    for (auto& V : Vs)
      for (auto& U : Us) {
        ++r.cases;
        const SuperPipeDream W = rect_inverse(V, U);
        if (!is_ordinary(W) || !(permutation(W) == w)) {
          Json bad = diagram_case("rect_inverse", W);
          bad["problem"] = "rect_inverse of an ordinary pair is not an ordinary diagram for w";
          r.fail(bad);
        }
      }
  }
  if (corect_extraordinary)
    r.findings.push_back({{"kind", "corect leaves PD+ x PD+"},
                          {"count", corect_extraordinary},
                          {"example", corect_example}});
  return r;
}

Report check_tab(const Partition& lambda, int m, const EnumCaps& caps) {
  const Permutation w = grass(lambda, m);
  Report r = make_report("tab", {{"lambda", lambda}, {"m", m}, {"w", w.str()}});
  std::set<RevTableau> image;
  auto stream = enum_pd_plus(w, true, caps);
  while (auto P = stream.next()) {
    ++r.cases;
    Json bad = {{"kind", "tab"}, {"diagram", to_json(*P)}};
    try {
      const RevTableau T = tab(*P, m);
      bad["tableau"] = to_json(T);
      bool in_range = true;
      for (auto& row : T.rows)
        for (int e : row) in_range = in_range && e >= 1 && e <= m;
      if (T.shape() != normalize_partition(lambda)) bad["problem"] = "wrong shape";
      else if (!in_range) bad["problem"] = "entry outside [m]";
      else if (!(tableau_weight(T) == weight(*P))) bad["problem"] = "weight not preserved";
      else if (!(tab_inverse(T, m) == *P)) bad["problem"] = "tab_inverse does not invert";
      else if (!image.insert(T).second) bad["problem"] = "not injective";
    } catch (const PreconditionError& e) {
      bad["problem"] = e.what();
    }
    if (bad.contains("problem")) r.fail(bad);
  }
  const auto all = rssyt(lambda, m);
  if (image != std::set<RevTableau>(all.begin(), all.end()))
    r.fail({{"kind", "bijection"}, {"image_size", image.size()}, {"rssyt_size", all.size()}});
  MultiPoly schur;
  for (auto& T : all) schur += tableau_weight(T);
  compare_polys(r, single(Variant::Schubert, w, caps), schur);
  return r;
}

Report check_insertion(const Partition& lambda, int m, const EnumCaps& caps) {
  const Permutation w = grass(lambda, m);
  Report r = make_report("insertion", {{"lambda", lambda}, {"m", m}, {"w", w.str()}});
  auto stream = enum_pd_plus(w, true, caps);
  while (auto P = stream.next()) {
    const RevTableau T = tab(*P, m);
    for (auto& I : subsets_of(m)) {
      ++r.cases;
      const PipeDream V = insert(*P, I, I, m);
      Json bad = {{"kind", "insertion"}, {"diagram", to_json(*P)}, {"I", I}, {"V", to_json(V)}};
      const Permutation v = permutation(V);
      const auto des = v.descents();
      if (!is_reduced(V)) bad["problem"] = "inserted diagram not reduced";
      else if (!des.empty() && des.back() > m) bad["problem"] = "descent beyond m";
      else if (const RevTableau lhs = tab(V, m), rhs = plactic_product(column_tableau(I), T); !(lhs == rhs)) {
        bad["problem"] = "tab(I -> P) != I * tab(P)";
        bad["lhs"] = to_json(lhs);
        bad["rhs"] = to_json(rhs);
      }
      if (bad.contains("problem")) r.fail(bad);
    }
  }
  return r;
}

Report check_rsk(int m, int n) {
  Report r = make_report("rsk", {{"m", m}, {"n", n}});
  std::set<std::pair<RevTableau, RevTableau>> image;
  auto stream = enum_binary_matrices(m, n);
  while (auto A = stream.next()) {
    ++r.cases;
    const auto pair = rsk_prime(*A);
    const RevTableau first = ins(*A), second = ins(a_dagger(*A));
    Json bad = {{"kind", "rsk"}, {"matrix", matrix_str(*A)}};
    const Partition shape = pair.first.shape();
    if (!(pair.first == first) || !(pair.second == second)) {
      bad["problem"] = "RSK'(A) != (ins(A), ins(A^dagger))";
      bad["rsk_prime"] = {to_json(pair.first), to_json(pair.second)};
      bad["ins"] = {to_json(first), to_json(second)};
    } else if (static_cast<int>(shape.size()) > m || (!shape.empty() && shape[0] > n)) {
      bad["problem"] = "shape outside the box";
    } else if (pair.second.shape() != lambda_dagger(shape, m, n)) {
      bad["problem"] = "second shape is not lambda dagger";
    } else if (!image.insert(pair).second) {
      bad["problem"] = "not injective";
    } else {
      // rect of the matrix diagram lands in PD0(Grass(shape, m)) x PD0(Grass(shape dagger, n)).
      const Rectification R = rect(mat_inverse(*A));
      if (!is_reduced(R.V) || !is_reduced(R.U) || !is_ordinary(R.V) || !is_ordinary(R.U) ||
          !(permutation(R.V) == grass(shape, m)) ||
          !(permutation(R.U) == grass(lambda_dagger(shape, m, n), n)))
        bad["problem"] = "rect of the matrix diagram misses PD0(Grass(lambda, m)) x PD0(Grass(lambda dagger, n))";
    }
    if (bad.contains("problem")) r.fail(bad);
  }
  return r;
}

Report conjecture_scan(int m, int n) {
  Report r = make_report("conjecture", {{"m", m}, {"n", n}});
  auto stream = enum_binary_matrices(m, n);
  while (auto A = stream.next()) {
    ++r.cases;
    const RevTableau R = rec(*A);
    const RevTableau lhs = overline(R, m, n), rhs = ins(a_dagger(*A));
    if (!(lhs == rhs))
      r.findings.push_back({{"kind", "counterexample"},
                            {"matrix", matrix_str(*A)},
                            {"rec", to_json(R)},
                            {"overline_rec", to_json(lhs)},
                            {"ins_dagger", to_json(rhs)}});
  }
  r.parameters["counterexamples"] = r.findings.size();
  return r;
}

Report check_oracle(const Permutation& w, const EnumCaps& caps) {
  Report r = make_report("oracle", {{"w", w.str()}});
  const MultiPoly S = single(Variant::Schubert, w, caps);
  const MultiPoly G = single(Variant::Grothendieck, w, caps);
  const MultiPoly Sxy = doubled(Variant::Schubert, w, caps);
  const MultiPoly Gxy = doubled(Variant::Grothendieck, w, caps);
  Bindings beta0, y0;
  beta0.beta = 0;
  y0.all_y = 0;
  auto check = [&](const char* what, const MultiPoly& a, const MultiPoly& b) {
    ++r.cases;
    if (!(a == b)) {
      Json bad = poly_mismatch(a, b);
      bad["check"] = what;
      r.fail(bad);
    }
  };
  check("schubert = divided differences", S, divided_difference_schubert(w));
  check("G at beta = 0", specialize(G, beta0), S);
  check("G(x;y) at y = 0", specialize(Gxy, y0), G);
  check("S(x;y) at y = 0", specialize(Sxy, y0), S);
  check("G(x;y) at beta = 0", specialize(Gxy, beta0), Sxy);
  check("G_{w^-1}(x;y) = G_w(y;x)", doubled(Variant::Grothendieck, w.inverse(), caps), swap_xy(Gxy));
  for (const MultiPoly* p : {&S, &G, &Sxy, &Gxy}) {
    ++r.cases;
    if (homogeneous_degree(*p) != std::optional<int>(w.length()))
      r.fail({{"kind", "homogeneity"}, {"poly", p->str()}});
  }
  r.lhs = S.str();
  return r;
}

std::vector<std::string> identity_names() {
  return {"cauchy", "kcauchy", "nabla", "macdonald", "pieri", "stanley", "rk",
          "symmetry", "rect", "tab", "insertion", "rsk", "conjecture", "oracle"};
}

Report run_identity(const std::string& name, const SuiteOptions& o) {
  std::vector<std::function<Report()>> tasks;
  const auto perms = permutations_of(o.max_n);
  const EnumCaps caps = o.caps;
  const Variant both[] = {Variant::Schubert, Variant::Grothendieck};

  if (name == "cauchy" || name == "kcauchy") {
    const Variant v = name == "cauchy" ? Variant::Schubert : Variant::Grothendieck;
    for (auto& w : perms) tasks.push_back([=] { return check_cauchy(w, v, caps); });
  } else if (name == "nabla") {
    for (auto& w : perms)
      for (Variant v : both) tasks.push_back([=] { return check_nabla(w, v, caps); });
  } else if (name == "macdonald") {
    for (auto& w : perms) tasks.push_back([=] { return check_macdonald(w, caps); });
  } else if (name == "pieri") {
    for (auto& lambda : partitions_in_box(o.pieri_m, o.pieri_cols))
      for (int k = 0; k <= o.pieri_m; ++k)
        for (Variant v : both)
          tasks.push_back([=] { return check_pieri(grass(lambda, o.pieri_m), o.pieri_m, k, v, caps); });
  } else if (name == "stanley") {
    for (auto& w : perms)
      for (Variant v : both) tasks.push_back([=] { return check_stanley(w, o.stanley_rows, v, caps); });
  } else if (name == "rk") {
    for (auto& w : perms)
      for (Variant v : both) tasks.push_back([=] { return check_rk_recurrence(w, v, caps); });
  } else if (name == "symmetry") {
    tasks.push_back([=] { return check_flow_symmetry(o.max_n, o.flow_samples, o.seed, caps); });
  } else if (name == "rect") {
    for (auto& w : perms) tasks.push_back([=] { return check_rect_props(w, caps); });
  } else if (name == "tab" || name == "insertion") {
    for (auto& lambda : partitions_in_box(o.tab_m, o.tab_m))
      tasks.push_back([=] {
        return name == "tab" ? check_tab(lambda, o.tab_m, caps) : check_insertion(lambda, o.tab_m, caps);
      });
  } else if (name == "rsk" || name == "conjecture") {
    for (int m = 1; m <= o.rsk_max_m; ++m)
      for (int n = 1; n <= o.rsk_max_n; ++n)
        tasks.push_back([=] { return name == "rsk" ? check_rsk(m, n) : conjecture_scan(m, n); });
  } else if (name == "oracle") {
    for (auto& w : perms) tasks.push_back([=] { return check_oracle(w, caps); });
  } else {
    throw PreconditionError("unknown identity '" + name + "'");
  }

  Report top = make_report(name, {{"max_n", o.max_n}, {"jobs", o.jobs}});
  std::vector<Report> results(tasks.size());
  auto guarded = [&](std::size_t i) {
    try {
      results[i] = tasks[i]();
    } catch (const ResourceError&) {
      throw;
    } catch (const std::exception& e) {
      results[i] = make_report(name, {{"task", i}});
      results[i].fail({{"kind", "exception"}, {"what", e.what()}});
    }
  };
  const std::size_t jobs = static_cast<std::size_t>(std::max(1, o.jobs));
  if (jobs == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) guarded(i);
  } else {
    std::vector<std::future<void>> workers;
    std::atomic<std::size_t> next{0};
    for (std::size_t t = 0; t < jobs; ++t)
      workers.push_back(std::async(std::launch::async, [&] {
        for (std::size_t i; (i = next++) < tasks.size();) guarded(i);
      }));
    for (auto& f : workers) f.get();
  }
  top.children = std::move(results);
  return top;
}

}  // namespace pdlab
