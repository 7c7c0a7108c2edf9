#include "pdlab/diagram.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

#include "pdlab/errors.hpp"

namespace pdlab {

namespace {

std::string pos_str(Position p) {
  return "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")";
}

}  // namespace

PipeDream::PipeDream(std::initializer_list<Position> cells) {
  for (Position p : cells) insert(p);
}

PipeDream::PipeDream(const std::vector<Position>& cells) {
  for (Position p : cells) insert(p);
}

void PipeDream::insert(Position p) {
  if (!in_half_space(p)) throw PreconditionError("position " + pos_str(p) + " is outside H");
  cells_.insert(p);
}

int checkers_at(const SuperPipeDream& P, Position p) {
  return (P.black.contains(p) ? kBlack : 0) | (P.red.contains(p) ? kRed : 0);
}

void set_checkers(SuperPipeDream& P, Position p, int bits) {
  if (bits & kBlack) P.black.insert(p);
  else P.black.erase(p);
  if (bits & kRed) P.red.insert(p);
  else P.red.erase(p);
}

PipeDream underlying(const SuperPipeDream& P) {
  PipeDream u = P.black;
  for (Position p : P.red) u.insert(p);
  return u;
}

Word word(const PipeDream& P) {
  std::vector<Position> cells(P.begin(), P.end());
  std::sort(cells.begin(), cells.end(), [](Position a, Position b) {
    return a.row != b.row ? a.row < b.row : a.col > b.col;
  });
  Word a;
  for (Position p : cells) a.push_back(value_of(p));
  return a;
}

Word word(const SuperPipeDream& P) { return word(underlying(P)); }
Permutation permutation(const PipeDream& P) { return from_word(word(P)); }
Permutation permutation(const SuperPipeDream& P) { return from_word(word(P)); }

bool is_reduced(const PipeDream& P) { return P.size() == permutation(P).length(); }
bool is_reduced(const SuperPipeDream& P) {
  return P.black.size() + P.red.size() == permutation(P).length();
}

bool is_ordinary(const PipeDream& P) {
  return std::all_of(P.begin(), P.end(), [](Position p) { return p.row >= 1 && p.col >= 1; });
}
bool is_ordinary(const SuperPipeDream& P) { return is_ordinary(P.black) && is_ordinary(P.red); }
bool is_stable(const PipeDream& P) {
  return std::all_of(P.begin(), P.end(), [](Position p) { return p.row >= 1; });
}
bool is_stable(const SuperPipeDream& P) { return is_stable(P.black) && is_stable(P.red); }

PipeDream transpose(const PipeDream& P) {
  PipeDream t;
  for (Position p : P) t.insert({p.col, p.row});
  return t;
}

SuperPipeDream transpose(const SuperPipeDream& P) {
  return {transpose(P.black), transpose(P.red)};
}

SuperPipeDream complement(const SuperPipeDream& P) { return {P.red, P.black}; }

SuperPipeDream adjoint(const SuperPipeDream& P) {
  return {transpose(P.red), transpose(P.black)};
}

PipeDream shift(const PipeDream& P, int k) {
  PipeDream s;
  for (Position p : P) s.insert({p.row + k, p.col - k});
  return s;
}

SuperPipeDream shift(const SuperPipeDream& P, int k) {
  return {shift(P.black, k), shift(P.red, k)};
}

ExponentRecord weight_exponents(const SuperPipeDream& P) {
  ExponentRecord e;
  e.beta_exp = P.black.size() + P.red.size() - permutation(P).length();
  for (Position p : P.black) ++e.x[p.row];
  for (Position p : P.red) ++e.y[p.col];
  return e;
}

ExponentRecord weight_exponents(const PipeDream& P) {
  return weight_exponents(SuperPipeDream{P, {}});
}

std::optional<LadderForm> ladder_form(const PipeDream& D, const Ladder& L) {
  if (L.k < 2) return std::nullopt;
  const int t = L.top, b = L.top + L.k - 1, c = L.col;
  if (value_of({t, c}) < 0) return std::nullopt;
  for (int r = t + 1; r <= b; ++r)
    if (!in_half_space({r, c})) return std::nullopt;
  if (D.contains({t, c})) return std::nullopt;
  for (int r = t + 1; r < b; ++r)
    if (!D.contains({r, c}) || !D.contains({r, c + 1})) return std::nullopt;
  if (D.contains({b, c + 1})) return std::nullopt;
  const bool tr = D.contains({t, c + 1});
  const bool bl = D.contains({b, c});
  if (!tr && bl) return LadderForm::P;
  if (tr && !bl) return LadderForm::Q;
  if (tr && bl) return LadderForm::R;
  return std::nullopt;
}

PipeDream ladder_move(const PipeDream& D, const Ladder& L, LadderForm target) {
  if (!ladder_form(D, L))
    throw PreconditionError("ladder_move: configuration does not match a ladder pattern");
  PipeDream out = D;
  const Position tr{L.top, L.col + 1}, bl{L.top + L.k - 1, L.col};
  out.erase(tr);
  out.erase(bl);
  if (target != LadderForm::Q) out.insert(bl);
  if (target != LadderForm::P) out.insert(tr);
  return out;
}

PipeDream chute_move(const PipeDream& D, const Ladder& L, LadderForm target) {
  return transpose(ladder_move(transpose(D), L, target));
}

std::map<int, int> sweep_wiring(int row_lo, int row_hi, int col_lo, int col_hi,
                                const std::function<bool(Position, int, int)>& decide) {
  constexpr int kNone = std::numeric_limits<int>::min();
  const int width = col_hi - col_lo + 1;
  std::map<int, int> exits;
  if (width <= 0 || row_hi < row_lo) return exits;
  // below[j]: pipe entering tile (r, j) from the south.
  std::vector<int> below(width);
  for (int j = col_lo; j <= col_hi; ++j) below[j - col_lo] = row_hi + j;
  std::vector<int> above(width, kNone);
  for (int r = row_hi; r >= row_lo; --r) {
    int east = kNone;
    for (int j = col_lo; j <= col_hi; ++j) {
      const int idx = j - col_lo;
      const int v = value_of({r, j});
      above[idx] = kNone;
      if (v < 0) continue;
      const int south = below[idx];
      if (v == 0) {  // boundary elbow: south to east
        east = south;
        continue;
      }
      const int west = (j == col_lo) ? r + col_lo - 1 : east;
      if (decide({r, j}, west, south)) {
        above[idx] = south;
        east = west;
      } else {
        above[idx] = west;
        east = south;
      }
    }
    if (east != kNone) exits[east] = r + col_hi;
    std::swap(below, above);
  }
  for (int j = col_lo; j <= col_hi; ++j)
    if (below[j - col_lo] != kNone) exits[below[j - col_lo]] = row_lo - 1 + j;
  return exits;
}

namespace {

struct Box {
  int row_lo, row_hi, col_lo, col_hi;
};

Box hull(const PipeDream& P) {
  Box b{std::numeric_limits<int>::max(), std::numeric_limits<int>::min(),
        std::numeric_limits<int>::max(), std::numeric_limits<int>::min()};
  for (Position p : P) {
    b.row_lo = std::min(b.row_lo, p.row);
    b.row_hi = std::max(b.row_hi, p.row);
    b.col_lo = std::min(b.col_lo, p.col);
    b.col_hi = std::max(b.col_hi, p.col);
  }
  return b;
}

}  // namespace

std::map<Position, PipeCrossing> pipe_labels(const PipeDream& P) {
  if (!is_reduced(P)) throw PreconditionError("pipe_labels: pipe dream is not reduced");
  std::map<Position, PipeCrossing> labels;
  if (P.empty()) return labels;
  const Box b = hull(P);
  sweep_wiring(b.row_lo, b.row_hi, b.col_lo, b.col_hi, [&](Position p, int h, int v) {
    if (!P.contains(p)) return false;
    labels[p] = {h, v};
    return true;
  });
  return labels;
}

std::map<int, int> pipe_exit_levels(const PipeDream& P) {
  if (P.empty()) return {};
  const Box b = hull(P);
  return sweep_wiring(b.row_lo, b.row_hi, b.col_lo, b.col_hi,
                      [&](Position p, int, int) { return P.contains(p); });
}

namespace {

Box render_box(const SuperPipeDream& P) {
  PipeDream u = underlying(P);
  if (u.empty()) return {1, 1, 1, 1};
  return hull(u);
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace

std::string render(const SuperPipeDream& P, RenderStyle style) {
  const Box b = render_box(P);
  std::size_t cw = 1, rw = 1;
  for (int c = b.col_lo; c <= b.col_hi; ++c) cw = std::max(cw, std::to_string(c).size());
  for (int r = b.row_lo; r <= b.row_hi; ++r) rw = std::max(rw, std::to_string(r).size());

  std::string out = "rows=" + std::to_string(b.row_lo) + ".." + std::to_string(b.row_hi) +
                    " cols=" + std::to_string(b.col_lo) + ".." + std::to_string(b.col_hi) + "\n";
  out += std::string(rw, ' ');
  for (int c = b.col_lo; c <= b.col_hi; ++c) out += pad_left(std::to_string(c), cw + 1);
  out += "\n";
  for (int r = b.row_lo; r <= b.row_hi; ++r) {
    out += pad_left(std::to_string(r), rw);
    for (int c = b.col_lo; c <= b.col_hi; ++c) {
      const Position p{r, c};
      const int bits = checkers_at(P, p);
      char ch;
      if (style == RenderStyle::Checkers) {
        static constexpr char kCheckerChars[] = {'.', 'x', 'o', '*'};
        ch = in_half_space(p) ? kCheckerChars[bits] : '~';
      } else {
        static constexpr char kWiringChars[] = {'/', '+', '#', '*'};
        const int v = value_of(p);
        ch = v > 0 ? kWiringChars[bits] : (v == 0 ? ',' : ' ');
      }
      out += pad_left(std::string(1, ch), cw + 1);
    }
    out += "\n";
  }
  return out;
}

std::string render(const PipeDream& P, RenderStyle style) {
  return render(SuperPipeDream{P, {}}, style);
}

SuperPipeDream parse_render(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string::npos) nl = text.size();
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  int row_lo, row_hi, col_lo, col_hi;
  if (lines.empty() ||
      std::sscanf(lines[0].c_str(), "rows=%d..%d cols=%d..%d", &row_lo, &row_hi, &col_lo,
                  &col_hi) != 4)
    throw PreconditionError("render text: missing 'rows=a..b cols=c..d' header");
  const int height = row_hi - row_lo + 1, width = col_hi - col_lo + 1;
  if (static_cast<int>(lines.size()) < height + 2)
    throw PreconditionError("render text: too few grid rows");
  SuperPipeDream P;
  for (int k = 0; k < height; ++k) {
    std::vector<std::string> tokens;
    std::string tok;
    for (char c : lines[k + 2]) {
      if (c == ' ') {
        if (!tok.empty()) tokens.push_back(tok), tok.clear();
      } else {
        tok.push_back(c);
      }
    }
    if (!tok.empty()) tokens.push_back(tok);
    if (static_cast<int>(tokens.size()) != width + 1 || std::stoi(tokens[0]) != row_lo + k)
      throw PreconditionError("render text: malformed grid row " + std::to_string(row_lo + k));
    for (int c = 0; c < width; ++c) {
      const Position p{row_lo + k, col_lo + c};
      const std::string& cell = tokens[c + 1];
      if (cell == "x") set_checkers(P, p, kBlack);
      else if (cell == "o") set_checkers(P, p, kRed);
      else if (cell == "*") set_checkers(P, p, kBoth);
      else if (cell != "." && cell != "~")
        throw PreconditionError("render text: unknown cell '" + cell + "'");
    }
  }
  return P;
}

}  // namespace pdlab
