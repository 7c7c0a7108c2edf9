// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "figure_checks.hpp"
#include "pdlab/perm.hpp"
#include "pdlab/suite.hpp"

using namespace pdlab;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

Outcome from_reports(const std::vector<Report>& reports) {
  Outcome o{true, ""};
  std::uint64_t cases = 0, failures = 0, findings = 0;
  for (const Report& r : reports) {
    o.ok = o.ok && r.passed();
    cases += r.total_cases();
    failures += r.failure_count();
    findings += r.finding_count();
  }
  o.detail = std::to_string(cases) + " cases, " + std::to_string(failures) + " failures";
  if (findings) o.detail += ", " + std::to_string(findings) + " findings";
  if (!o.ok)
    for (const Report& r : reports)
      for (const Report& c : r.children)
        if (!c.passed()) {
          o.detail += "; first failing: " + c.to_json().dump().substr(0, 400);
          return o;
        }
  return o;
}

Outcome identities(const std::vector<std::string>& names, const SuiteOptions& options) {
  std::vector<Report> reports;
  for (auto& n : names) reports.push_back(run_identity(n, options));
  return from_reports(reports);
}

}  // namespace

int main() {
  SuiteOptions options;  // S_4, m = 2 Pieri over a 2x3 box, N = 4, tableaux in a 3x3 box
  const Permutation w0_5 = Permutation::parse("54321");

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Cauchy identities with the rect bijection, S_4",
       [&] { return identities({"cauchy", "kcauchy"}, options); }},
      {"flow symmetry, SPD+(S_4) plus 10^4 random diagrams",
       [&] { return from_reports({check_flow_symmetry(4, 10'000, options.seed, options.caps)}); }},
      {"figure regressions",
       [] {
         const auto bad = pdtest::figure_mismatches();
         Outcome o{bad.empty(), bad.empty() ? "all fixtures match" : ""};
         for (auto& b : bad) o.detail += b + "; ";
         return o;
       }},
      {"Macdonald identity, S_4 and w0 in S_5",
       [&] {
         Outcome o = identities({"macdonald"}, options);
         const Report r = check_macdonald(w0_5, options.caps);
         const bool count = r.parameters["reduced_words"] == 768;
         o.ok = o.ok && r.passed() && count;
         o.detail += "; w0 in S_5: " + r.lhs + " = " + r.rhs + " over " +
                     r.parameters["reduced_words"].dump() + " reduced words";
         return o;
       }},
      {"beta-Pieri rule, Grass(lambda, 2), lambda in 2x3, k = 0..2, both variants",
       [&] { return identities({"pieri"}, options); }},
      {"Stanley identity truncated to 4 variables, S_4", [&] { return identities({"stanley"}, options); }},
      {"R_k recurrence, S_4, both variants", [&] { return identities({"rk"}, options); }},
      {"nabla identity, S_4", [&] { return identities({"nabla"}, options); }},
      {"tab bijection and Schur agreement, lambda in 3x3", [&] { return identities({"tab"}, options); }},
      {"insertion equals plactic product, m = 3", [&] { return identities({"insertion"}, options); }},
      {"RSK' over BM 3x3 and 3x4, conjecture scan",
       [&] {
         std::vector<Report> reports;
         // All m, n <= 3 also confirm that rect lands in the lambda dagger factor.
         for (int m = 1; m <= 3; ++m)
           for (int n = 1; n <= 3; ++n) reports.push_back(check_rsk(m, n));
         reports.push_back(check_rsk(3, 4));
         std::uint64_t counterexamples = 0;
         for (auto [m, n] : {std::pair{3, 3}, std::pair{3, 4}}) {
           const Report scan = conjecture_scan(m, n);
           counterexamples += scan.findings.size();
           for (auto& f : scan.findings) std::printf("  conjecture counterexample: %s\n", f.dump().c_str());
         }
         Outcome o = from_reports(reports);
         o.ok = o.ok && counterexamples == 0;
         o.detail += "; conjecture counterexamples: " + std::to_string(counterexamples);
         return o;
       }},
      {"oracle equivalence and specializations, S_4", [&] { return identities({"oracle"}, options); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2zu: %s  %s (%s, %.2f s)\n", i + 1, o.ok ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.ok;
  }
  return failed ? 1 : 0;
}
