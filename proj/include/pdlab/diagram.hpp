#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pdlab/perm.hpp"

namespace pdlab {

// Ordered row-major: row ascending, then column ascending.
struct Position {
  int row = 0;
  int col = 0;
  auto operator<=>(const Position&) const = default;
};

inline int value_of(Position p) { return p.row + p.col - 1; }
// The half-space H = {(i,j) : i + j - 1 >= 1}.
inline bool in_half_space(Position p) { return value_of(p) >= 1; }

class PipeDream {
 public:
  PipeDream() = default;
  PipeDream(std::initializer_list<Position> cells);
  explicit PipeDream(const std::vector<Position>& cells);

  bool contains(Position p) const { return cells_.count(p) > 0; }
  void insert(Position p);
  void erase(Position p) { cells_.erase(p); }
  bool empty() const { return cells_.empty(); }
  int size() const { return static_cast<int>(cells_.size()); }
  auto begin() const { return cells_.begin(); }
  auto end() const { return cells_.end(); }
  const std::set<Position>& cells() const { return cells_; }

  auto operator<=>(const PipeDream&) const = default;

 private:
  std::set<Position> cells_;
};

// Checker pair (black, red); a position may hold both.
struct SuperPipeDream {
  PipeDream black;
  PipeDream red;
  auto operator<=>(const SuperPipeDream&) const = default;
};

enum Checker : int { kEmpty = 0, kBlack = 1, kRed = 2, kBoth = 3 };

int checkers_at(const SuperPipeDream& P, Position p);
void set_checkers(SuperPipeDream& P, Position p, int bits);

PipeDream underlying(const SuperPipeDream& P);

Word word(const PipeDream& P);
Word word(const SuperPipeDream& P);
Permutation permutation(const PipeDream& P);
Permutation permutation(const SuperPipeDream& P);

bool is_reduced(const PipeDream& P);
bool is_reduced(const SuperPipeDream& P);
bool is_ordinary(const PipeDream& P);
bool is_ordinary(const SuperPipeDream& P);
bool is_stable(const PipeDream& P);
bool is_stable(const SuperPipeDream& P);

PipeDream transpose(const PipeDream& P);
SuperPipeDream transpose(const SuperPipeDream& P);
SuperPipeDream complement(const SuperPipeDream& P);
// (P_y^t, P_x^t)
SuperPipeDream adjoint(const SuperPipeDream& P);
// sigma^k with sigma(i,j) = (i+1, j-1).
PipeDream shift(const PipeDream& P, int k);
SuperPipeDream shift(const SuperPipeDream& P, int k);

struct ExponentRecord {
  int beta_exp = 0;
  std::map<int, int> x;  // row -> number of black crosses
  std::map<int, int> y;  // column -> number of red crosses
  bool operator==(const ExponentRecord&) const = default;
};
ExponentRecord weight_exponents(const SuperPipeDream& P);
ExponentRecord weight_exponents(const PipeDream& P);  // all crosses black

// A k-by-2 ladder occupying rows top..top+k-1 and columns col, col+1.
// Forms (left/right columns, top row first):
//   P: top empty/empty, middle full/full, bottom cross/empty
//   Q: top empty/cross, middle full/full, bottom empty/empty
//   R: top empty/cross, middle full/full, bottom cross/empty
struct Ladder {
  int top = 0;
  int col = 0;
  int k = 2;
};
enum class LadderForm { P, Q, R };
std::optional<LadderForm> ladder_form(const PipeDream& D, const Ladder& L);
PipeDream ladder_move(const PipeDream& D, const Ladder& L, LadderForm target);
// Transpose of a ladder move: L describes the ladder of the transposed diagram.
PipeDream chute_move(const PipeDream& D, const Ladder& L, LadderForm target);

struct PipeCrossing {
  int h_pipe = 0;
  int v_pipe = 0;
  bool operator==(const PipeCrossing&) const = default;
};

// Sweeps the tiles of H within the box, rows bottom to top and columns left to
// right. Pipe k is the k-th pipe from the top in any column west of the box.
// `decide` is asked for each tile of H whether it holds a cross, given the
// pipes entering from the west and from the south. Returns the far-east level
// reached by each pipe label that leaves the box.
std::map<int, int> sweep_wiring(int row_lo, int row_hi, int col_lo, int col_hi,
                                const std::function<bool(Position, int, int)>& decide);

std::map<Position, PipeCrossing> pipe_labels(const PipeDream& P);
// Pipe label -> level far to the north-east, for every pipe crossing something.
std::map<int, int> pipe_exit_levels(const PipeDream& P);

enum class RenderStyle { Checkers, Wiring };
std::string render(const SuperPipeDream& P, RenderStyle style = RenderStyle::Checkers);
std::string render(const PipeDream& P, RenderStyle style = RenderStyle::Checkers);
SuperPipeDream parse_render(const std::string& text);

}  // namespace pdlab
