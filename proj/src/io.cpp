#include "pdlab/io.hpp"

#include <algorithm>

#include "pdlab/errors.hpp"

namespace pdlab {

Json to_json(const PipeDream& P) {
  Json out = Json::array();
  for (Position p : P) out.push_back({p.row, p.col});
  return out;
}

Json to_json(const SuperPipeDream& P) { return {{"black", to_json(P.black)}, {"red", to_json(P.red)}}; }

Json to_json(const MultiPoly& p) {
  Json out = Json::array();
  for (auto& [m, c] : p.terms()) {
    Json x = Json::array(), y = Json::array();
    for (auto& [i, e] : m.x) x.push_back({i, e});
    for (auto& [j, e] : m.y) y.push_back({j, e});
    out.push_back({{"coeff", c.str()}, {"beta", m.beta}, {"x", x}, {"y", y}});
  }
  return out;
}

Json to_json(const RevTableau& T) {
  Json out = Json::array();
  for (auto& r : T.rows) out.push_back(r);
  return out;
}

Json to_json(const BinaryMatrix& A) { return A.to_rows(); }

PipeDream pipe_dream_from_json(const Json& j) {
  if (!j.is_array()) throw PreconditionError("diagram JSON: expected a list of [i,j] pairs");
  PipeDream P;
  for (auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw PreconditionError("diagram JSON: bad position " + e.dump());
    P.insert({e[0].get<int>(), e[1].get<int>()});
  }
  return P;
}

SuperPipeDream super_pipe_dream_from_json(const Json& j) {
  if (j.is_array()) return {pipe_dream_from_json(j), {}};
  if (!j.is_object()) throw PreconditionError("diagram JSON: expected an object or a list");
  SuperPipeDream P;
  if (j.contains("black")) P.black = pipe_dream_from_json(j.at("black"));
  if (j.contains("red")) P.red = pipe_dream_from_json(j.at("red"));
  return P;
}

MultiPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw PreconditionError("polynomial JSON: expected a term list");
  MultiPoly p;
  for (auto& t : j) {
    Monomial m;
    m.beta = t.value("beta", 0);
    for (auto& e : t.value("x", Json::array())) m.x.push_back({e[0].get<int>(), e[1].get<int>()});
    for (auto& e : t.value("y", Json::array())) m.y.push_back({e[0].get<int>(), e[1].get<int>()});
    std::sort(m.x.begin(), m.x.end());
    std::sort(m.y.begin(), m.y.end());
    const Json& c = t.at("coeff");
    p.add_term(m, c.is_string() ? Coefficient(c.get<std::string>()) : Coefficient(c.get<long long>()));
  }
  return p;
}

RevTableau tableau_from_json(const Json& j) {
  RevTableau T;
  for (auto& r : j) T.rows.push_back(r.get<std::vector<int>>());
  if (!T.is_valid()) throw PreconditionError("tableau JSON: not a rev-tableau");
  return T;
}

BinaryMatrix matrix_from_json(const Json& j) {
  return BinaryMatrix(j.get<std::vector<std::vector<int>>>());
}

BinaryMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<int>> rows(1);
  for (char ch : text) {
    if (ch == '0' || ch == '1') rows.back().push_back(ch - '0');
    else if (ch == '/' || ch == '\n' || ch == ';') {
      if (!rows.back().empty()) rows.emplace_back();
    } else if (ch != ' ' && ch != '\r' && ch != '\t') {
      throw PreconditionError(std::string("matrix text: unexpected character '") + ch + "'");
    }
  }
  if (rows.back().empty()) rows.pop_back();
  return BinaryMatrix(rows);
}

std::string matrix_str(const BinaryMatrix& A) {
  std::string out;
  for (int i = 1; i <= A.rows(); ++i) {
    if (i > 1) out += "/";
    for (int j = 1; j <= A.cols(); ++j) out += static_cast<char>('0' + A(i, j));
  }
  return out;
}

}  // namespace pdlab
