#pragma once

#include <fstream>
#include <random>
#include <stdexcept>
#include <string>

#include "pdlab/diagram.hpp"
#include "pdlab/io.hpp"

#ifndef PDLAB_FIXTURE_DIR
#error "PDLAB_FIXTURE_DIR must be defined"
#endif

namespace pdtest {

using pdlab::Json;
using pdlab::SuperPipeDream;

inline const Json& figures() {
  static const Json data = [] {
    std::ifstream in(std::string(PDLAB_FIXTURE_DIR) + "/figures.json");
    if (!in) throw std::runtime_error("cannot open figures.json");
    return Json::parse(in);
  }();
  return data;
}

inline SuperPipeDream from_rows(const Json& rows, int row0, int col0) {
  SuperPipeDream P;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string line = rows[r].get<std::string>();
    for (std::size_t c = 0; c < line.size(); ++c) {
      const int code = line[c] - '0';
      if (code < 1 || code > 3) continue;
      pdlab::set_checkers(P, {row0 + static_cast<int>(r), col0 + static_cast<int>(c)}, code);
    }
  }
  return P;
}

// Grid object {"row0", "col0", "grid"} or an explicit {"black", "red"} object.
inline SuperPipeDream diagram(const Json& j) {
  if (j.contains("grid")) return from_rows(j.at("grid"), j.at("row0"), j.at("col0"));
  return pdlab::super_pipe_dream_from_json(j);
}

inline pdlab::PipeDream black(const Json& j) { return diagram(j).black; }
inline pdlab::PipeDream red(const Json& j) { return diagram(j).red; }

inline SuperPipeDream random_diagram(std::mt19937_64& rng, int lo = -3, int hi = 8, int max_cells = 8) {
  std::uniform_int_distribution<int> coord(lo, hi), count(0, max_cells), bits(1, 3);
  SuperPipeDream P;
  const int cells = count(rng);
  for (int c = 0; c < cells; ++c) {
    const pdlab::Position p{coord(rng), coord(rng)};
    if (pdlab::in_half_space(p)) pdlab::set_checkers(P, p, bits(rng));
  }
  return P;
}

}  // namespace pdtest
