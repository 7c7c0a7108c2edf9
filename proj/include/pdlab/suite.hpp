#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pdlab/enumerate.hpp"
#include "pdlab/io.hpp"
#include "pdlab/perm.hpp"
#include "pdlab/poly.hpp"

namespace pdlab {

// Outcome of one identity check. Failures carry replayable payloads; findings
// are reported but never make a report fail.
struct Report {
  std::string identity;
  Json parameters = Json::object();
  std::uint64_t cases = 0;
  std::string lhs;
  std::string rhs;
  std::vector<Json> failures;
  std::vector<Json> findings;
  std::vector<Report> children;

  bool passed() const;
  std::uint64_t total_cases() const;
  std::uint64_t failure_count() const;
  std::uint64_t finding_count() const;
  void fail(Json payload);
  Json to_json() const;
};

enum class Variant { Schubert, Grothendieck };

enum class PolyKind { Schubert, Grothendieck, DoubleSchubert, DoubleGrothendieck };
// Thread-safe memo of generated polynomials.
MultiPoly cached_poly(PolyKind kind, const Permutation& w, const EnumCaps& caps = {});

// Pairs (u, v) of S_n with w = u^-1 * v (reduced: additionally l(u) + l(v) = l(w)),
// n the size of w. Asserts that S_{n+1} adds nothing.
std::vector<std::pair<Permutation, Permutation>> cauchy_factorizations(const Permutation& w,
                                                                        bool reduced);

Report check_cauchy(const Permutation& w, Variant variant, const EnumCaps& caps = {});
Report check_nabla(const Permutation& w, Variant variant, const EnumCaps& caps = {});
Report check_macdonald(const Permutation& w, const EnumCaps& caps = {});
Report check_pieri(const Permutation& w, int m, int k, Variant variant, const EnumCaps& caps = {});
Report check_stanley(const Permutation& w, int N, Variant variant, const EnumCaps& caps = {});
Report check_rk_recurrence(const Permutation& w, Variant variant, const EnumCaps& caps = {});
// Exhaustive over SPD+(w) for w in S_max_n, plus `samples` random diagrams
// with coordinates in [-3, 8].
Report check_flow_symmetry(int max_n, std::size_t samples, std::uint64_t seed,
                           const EnumCaps& caps = {});
Report check_rect_props(const Permutation& w, const EnumCaps& caps = {});
Report check_tab(const Partition& lambda, int m, const EnumCaps& caps = {});
Report check_insertion(const Partition& lambda, int m, const EnumCaps& caps = {});
Report check_rsk(int m, int n);
Report conjecture_scan(int m, int n);
Report check_oracle(const Permutation& w, const EnumCaps& caps = {});

struct SuiteOptions {
  int max_n = 4;
  int pieri_m = 2;
  int pieri_cols = 3;
  int stanley_rows = 4;
  int tab_m = 3;
  int rsk_max_m = 3;
  int rsk_max_n = 4;
  std::size_t flow_samples = 10'000;
  std::uint64_t seed = 20240601;
  int jobs = 1;
  EnumCaps caps;
};

// Identity names: cauchy kcauchy nabla macdonald pieri stanley rk symmetry
// rect tab insertion rsk conjecture oracle.
std::vector<std::string> identity_names();
Report run_identity(const std::string& name, const SuiteOptions& options);

}  // namespace pdlab
