#pragma once

#include <string>
#include <vector>

#include "pdlab/flow.hpp"
#include "pdlab/rectify.hpp"
#include "pdlab/tableau.hpp"
#include "support.hpp"

namespace pdtest {

// Every figure regression; returns one message per mismatch.
inline std::vector<std::string> figure_mismatches() {
  using namespace pdlab;
  std::vector<std::string> bad;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  };
  const Json& F = figures();

  {
    const Json& f = F["fig1"];
    const SuperPipeDream P = diagram(f["diagram"]);
    expect(word(P) == f["word"].get<Word>(), "fig1 word");
    expect(permutation(P).str() == f["permutation"], "fig1 permutation");
    expect(is_reduced(P) && !is_ordinary(P), "fig1 reduced, not ordinary");
  }
  {
    const Json& st = F["fig4"]["stages"];
    const SuperPipeDream P = diagram(st[0]["diagram"]);
    expect(permutation(P).str() == F["fig4"]["w"], "fig4 permutation");
    for (auto& s : st)
      expect(y_plus_geq(P, s["from"]) == diagram(s["diagram"]), "fig4 Y+>=" + s["from"].dump());
    expect(y_plus(P) == diagram(st.back()["diagram"]), "fig4 Y+");
  }
  {
    const Json& st = F["fig8"]["stages"];
    const SuperPipeDream P = diagram(st[0]["diagram"]);
    expect(P == diagram(F["fig4"]["stages"][0]["diagram"]), "fig8 starts from fig4's P");
    for (auto& s : st)
      expect(x_plus_geq(P, s["from"]) == diagram(s["diagram"]), "fig8 X+>=" + s["from"].dump());
    expect(shift(y_plus(P), 1) == x_plus(P), "fig4/fig8 sigma(Y+ P) = X+ P");
  }
  {
    const Json& f = F["fig5"];
    for (std::size_t b = 0; b < f["blocks"].size(); ++b) {
      const auto left = from_rows(f["blocks"][b]["left"], f["row0"], f["col0"]);
      const auto right = from_rows(f["blocks"][b]["right"], f["row0"], f["col0"]);
      expect(y_plus_j(left, f["j"]) == right, "fig5 block " + std::to_string(b + 1));
      expect(y_minus_j(right, f["j"].get<int>() + 1) == left, "fig5 block " + std::to_string(b + 1) + " inverse");
    }
  }
  {
    const Json& f = F["fig10"];
    const auto& steps = f["steps"];
    for (std::size_t s = 0; s + 1 < steps.size(); ++s) {
      const auto a = from_rows(steps[s], f["row0"], f["col0"]);
      const auto b = from_rows(steps[s + 1], f["row0"], f["col0"]);
      expect(y_prime_j(a, f["j"]) == b, "fig10 step " + std::to_string(s + 1));
    }
    const auto first = from_rows(steps[0], f["row0"], f["col0"]);
    const auto last = from_rows(steps.back(), f["row0"], f["col0"]);
    expect(y_plus_j(first, f["j"]) == last, "fig10 agrees with Y+_j");
  }
  {
    const Json& f = F["fig7"];
    const SuperPipeDream W = diagram(f["W"]);
    expect(permutation(W).str() == f["w"], "fig7 permutation");
    SuperPipeDream Y = W;
    for (int i = 0; i < 5; ++i) Y = y_plus(Y);
    expect(Y == diagram(f["Y5"]), "fig7 (Y+)^5 W");
    const Rectification R = rect(W);
    expect(R.steps == 5, "fig7 rect takes five steps");
    expect(R.V == black(f["V"]), "fig7 V");
    expect(transpose(R.U) == red(f["Udagger"]), "fig7 U");
    expect(permutation(R.V).str() == f["v"], "fig7 v");
    expect(permutation(transpose(R.U)).str() == f["u"], "fig7 u");
    expect(demazure_product(permutation(R.U).inverse(), permutation(R.V)).str() == f["w"], "fig7 w = u^-1 * v");
  }
  {
    const Json& f = F["fig9"];
    const SuperPipeDream W = diagram(f["W"]);
    expect(is_ordinary(W), "fig9 W ordinary");
    expect(y_minus(W) == diagram(f["Yminus"]), "fig9 Y- W");
    const Rectification C = corect(W);
    expect(C.V == black(f["V"]), "fig9 V");
    expect(transpose(C.U) == red(f["Udagger"]), "fig9 U");
    expect(!is_ordinary(C.V), "fig9 corect leaves PD+");
  }
  {
    const Json& f = F["fig12"];
    const PipeDream P = black(f["P"]);
    expect(permutation(P).str() == f["w"], "fig12 permutation");
    const SuperPipeDream W = insertion_diagram(P, f["I"], f["J"], f["m"]);
    expect(W == diagram(f["W"]), "fig12 insertion diagram");
    expect(permutation(W).str() == f["wm"], "fig12 w minus");
  }
  {
    const Json& f = F["fig13"];
    const PipeDream P = black(f["P"]);
    expect(permutation(P).str() == f["w"], "fig13 permutation");
    expect(grass(f["lambda"].get<Partition>(), f["m"]).str() == f["w"], "fig13 Grass");
    expect(tab(P, f["m"]).str() == f["tab"], "fig13 tab");
  }
  {
    const Json& f = F["fig14"];
    const int m = f["m"];
    const PipeDream P = black(F["fig13"]["P"]);
    const SuperPipeDream W = insertion_diagram(P, f["I"], f["I"], m);
    expect(W == diagram(f["W"]), "fig14 W");
    SuperPipeDream cur = diagram(f["W0"]);
    expect(y_plus(y_plus(y_plus(y_plus(cur)))) == W, "fig14 W = (Y+)^4 W0");
    for (std::size_t round = 0; round < f["tableaux"].size(); ++round) {
      expect(tab_colored(cur, m).str() == f["tableaux"][round], "fig14 tableau after round " + std::to_string(round));
      for (int j = f["sweep_from"]; j <= f["sweep_to"].get<int>(); ++j) {
        const ColoredRevTableau predicted = yprime_tableau_step(cur, j, m);
        cur = y_prime_j(cur, j);
        expect(predicted == tab_colored(cur, m), "fig14 local tableau rule at column " + std::to_string(j));
      }
    }
    const PipeDream V = insert(P, f["I"], f["I"], m);
    expect(tab(V, m).str() == f["tab"], "fig14 tab of the insertion");
    expect(plactic_product(column_tableau(f["I"]), tab(P, m)).str() == f["tab"], "fig14 plactic product");
  }
  {
    const Json& f = F["fig15"];
    const BinaryMatrix A = parse_matrix(f["A"]);
    expect(mat_inverse(A) == diagram(f["W"]), "fig15 matrix diagram");
    const Rectification R = rect(mat_inverse(A));
    expect(R.V == black(f["V"]), "fig15 V");
    expect(R.U == red(f["U"]), "fig15 U");
    const auto [T1, T2] = rsk_prime(A);
    expect(T1.str() == f["tab_V"] && T2.str() == f["tab_U"], "fig15 RSK' pair");
  }
  return bad;
}

}  // namespace pdtest
