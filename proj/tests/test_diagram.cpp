#include <doctest.h>

#include <random>

#include "figure_checks.hpp"
#include "pdlab/diagram.hpp"
#include "pdlab/enumerate.hpp"
#include "pdlab/poly.hpp"
#include "support.hpp"

using namespace pdlab;

TEST_CASE("figure regressions") {
  const auto bad = pdtest::figure_mismatches();
  for (auto& b : bad) INFO(b);
  CHECK(bad.empty());
  if (!bad.empty()) MESSAGE(bad.front());
}

TEST_CASE("word and permutation") {
  const PipeDream fig1{{0, 4}, {1, 1}, {1, 2}, {2, 1}, {4, 3}, {5, -1}};
  CHECK(word(fig1) == Word{3, 2, 1, 2, 6, 3});
  CHECK(permutation(fig1).str() == "4231576");
  CHECK(word(PipeDream{}).empty());
  CHECK(permutation(PipeDream{}).is_identity());
  CHECK(word(PipeDream{{1, 1}, {2, 1}}) == Word{1, 2});
  const SuperPipeDream both{{{1, 1}}, {{1, 1}}};
  CHECK(permutation(both).str() == "21");
  CHECK(word(both) == Word{1});
}

TEST_CASE("predicates") {
  const PipeDream fig1{{0, 4}, {1, 1}, {1, 2}, {2, 1}, {4, 3}, {5, -1}};
  CHECK(is_reduced(fig1));
  CHECK_FALSE(is_ordinary(fig1));
  CHECK(is_ordinary(PipeDream{}));
  CHECK(is_reduced(PipeDream{}));
  CHECK(is_stable(PipeDream{}));
  CHECK_FALSE(is_reduced(SuperPipeDream{{{1, 1}}, {{1, 1}}}));
  CHECK(is_stable(PipeDream{{1, 1}, {2, 0}}));
  CHECK_FALSE(is_stable(PipeDream{{0, 2}}));
  CHECK_FALSE(is_reduced(PipeDream{{1, 2}, {2, 1}}));
  CHECK(is_reduced(PipeDream{{1, 1}, {1, 2}, {2, 1}}));
}

TEST_CASE("involutions and shift") {
  CHECK(adjoint(SuperPipeDream{{{1, 2}}, {}}) == SuperPipeDream{{}, {{2, 1}}});
  CHECK(shift(SuperPipeDream{{{1, 1}}, {}}, 1) == SuperPipeDream{{{2, 0}}, {}});
  const SuperPipeDream fig4 = pdtest::diagram(pdtest::figures()["fig4"]["stages"][0]["diagram"]);
  CHECK(adjoint(adjoint(fig4)) == fig4);
}

TEST_CASE("property: involutions, shift and weights on random diagrams") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 2000; ++t) {
    const SuperPipeDream P = pdtest::random_diagram(rng);
    CHECK(transpose(transpose(P)) == P);
    CHECK(complement(complement(P)) == P);
    CHECK(adjoint(adjoint(P)) == P);
    CHECK(adjoint(P) == transpose(complement(P)));
    CHECK(adjoint(P) == complement(transpose(P)));
    CHECK(permutation(transpose(P)) == permutation(P).inverse());
    CHECK(permutation(complement(P)) == permutation(P));
    for (int k : {-2, -1, 1, 3}) {
      CHECK(word(shift(P, k)) == word(P));
      CHECK(shift(shift(P, k), -k) == P);
    }
    const ExponentRecord e = weight_exponents(P), f = weight_exponents(adjoint(P));
    CHECK(e.beta_exp == f.beta_exp);
    CHECK(e.x == f.y);
    CHECK(e.y == f.x);
    CHECK(e.beta_exp == P.black.size() + P.red.size() - permutation(P).length());
  }
}

TEST_CASE("weight of a super pipe dream") {
  const SuperPipeDream P{{{1, 1}, {2, 1}}, {{1, 2}}};
  const ExponentRecord e = weight_exponents(P);
  CHECK(e.x == std::map<int, int>{{1, 1}, {2, 1}});
  CHECK(e.y == std::map<int, int>{{2, 1}});
  CHECK(e.beta_exp == 3 - permutation(P).length());
}

TEST_CASE("property: ladder and chute moves preserve the permutation in a 4x4 window") {
  std::vector<Position> window;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) window.push_back({i, j});
  std::vector<Ladder> ladders;
  for (int k = 2; k <= 4; ++k)
    for (int top = 1; top + k - 1 <= 4; ++top)
      for (int col = 1; col <= 3; ++col) ladders.push_back({top, col, k});
  std::size_t moves = 0, bad = 0;
  for (unsigned mask = 0; mask < (1u << window.size()); ++mask) {
    PipeDream D;
    for (std::size_t b = 0; b < window.size(); ++b)
      if (mask >> b & 1) D.insert(window[b]);
    const Permutation w = permutation(D);
    const PipeDream Dt = transpose(D);
    for (const Ladder& L : ladders) {
      if (auto form = ladder_form(D, L))
        for (LadderForm target : {LadderForm::P, LadderForm::Q, LadderForm::R}) {
          if (target == *form) continue;
          ++moves;
          bad += !(permutation(ladder_move(D, L, target)) == w);
        }
      if (auto form = ladder_form(Dt, L))
        for (LadderForm target : {LadderForm::P, LadderForm::Q, LadderForm::R}) {
          if (target == *form) continue;
          ++moves;
          bad += !(permutation(chute_move(D, L, target)) == w);
        }
    }
  }
  CHECK(moves > 0);
  CHECK(bad == 0);
}

TEST_CASE("property: on reduced pipe dreams each pair of pipes crosses at most once") {
  for (int n = 1; n <= 5; ++n)
    for (const Permutation& w : permutations_of(n)) {
      auto s = enum_pd_plus(w, true);
      while (auto P = s.next()) {
        const auto labels = pipe_labels(*P);
        CHECK(labels.size() == static_cast<std::size_t>(P->size()));
        std::set<std::pair<int, int>> pairs;
        for (auto& [pos, c] : labels)
          CHECK(pairs.insert({std::min(c.h_pipe, c.v_pipe), std::max(c.h_pipe, c.v_pipe)}).second);
      }
    }
}

TEST_CASE("pipe labels name the pipes that cross") {
  // The single cross of s1 is where pipes 1 and 2 meet; pipe 1 arrives horizontally.
  const auto labels = pipe_labels(PipeDream{{1, 1}});
  REQUIRE(labels.size() == 1);
  const PipeCrossing c = labels.begin()->second;
  CHECK(std::set<int>{c.h_pipe, c.v_pipe} == std::set<int>{1, 2});
}

TEST_CASE("render") {
  const SuperPipeDream P{{{1, 1}, {2, 1}}, {{1, 1}, {1, 2}}};
  const std::string text = render(P);
  CHECK(text.rfind("rows=1..2 cols=1..2\n", 0) == 0);
  CHECK(text.find('*') != std::string::npos);
  CHECK(parse_render(text) == P);
  CHECK(render(SuperPipeDream{}).rfind("rows=1..1 cols=1..1", 0) == 0);
  CHECK(parse_render(render(SuperPipeDream{})) == SuperPipeDream{});
  const std::string outside = render(SuperPipeDream{{{0, 2}, {2, 1}}, {}});
  CHECK(outside.find('~') != std::string::npos);
  CHECK_FALSE(render(PipeDream{{1, 1}}, RenderStyle::Wiring).empty());
}

TEST_CASE("property: render round trip") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 500; ++t) {
    const SuperPipeDream P = pdtest::random_diagram(rng);
    CHECK(parse_render(render(P)) == P);
  }
}
