#pragma once

#include <json.hpp>
#include <string>

#include "pdlab/diagram.hpp"
#include "pdlab/enumerate.hpp"
#include "pdlab/poly.hpp"
#include "pdlab/tableau.hpp"

namespace pdlab {

using Json = nlohmann::ordered_json;

// [[i,j], ...] in row-major order.
Json to_json(const PipeDream& P);
// {"black": [...], "red": [...]}
Json to_json(const SuperPipeDream& P);
// [{"coeff": "3", "beta": 1, "x": [[i,e],...], "y": [[j,f],...]}, ...] in term order.
Json to_json(const MultiPoly& p);
// [[row], [row], ...]
Json to_json(const RevTableau& T);
Json to_json(const BinaryMatrix& A);

PipeDream pipe_dream_from_json(const Json& j);
// Accepts {"black": ..., "red": ...} or a bare position list (all black).
SuperPipeDream super_pipe_dream_from_json(const Json& j);
MultiPoly poly_from_json(const Json& j);
RevTableau tableau_from_json(const Json& j);
BinaryMatrix matrix_from_json(const Json& j);

// Matrix text: rows of 0/1 digits separated by '/' or newlines, e.g. "110/011".
BinaryMatrix parse_matrix(const std::string& text);
std::string matrix_str(const BinaryMatrix& A);

}  // namespace pdlab
