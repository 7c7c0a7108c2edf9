#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pdlab/diagram.hpp"
#include "pdlab/enumerate.hpp"
#include "pdlab/errors.hpp"
#include "pdlab/flow.hpp"
#include "pdlab/io.hpp"
#include "pdlab/perm.hpp"
#include "pdlab/poly.hpp"
#include "pdlab/rectify.hpp"
#include "pdlab/suite.hpp"
#include "pdlab/tableau.hpp"

namespace py = pybind11;
using namespace pdlab;

namespace {

using Cells = std::vector<std::pair<int, int>>;
using Rows = std::vector<std::vector<int>>;

Cells cells_of(const PipeDream& P) {
  Cells out;
  for (Position p : P) out.push_back({p.row, p.col});
  return out;
}

PipeDream pipe_dream_of(const Cells& cells) {
  PipeDream P;
  for (auto [i, j] : cells) P.insert({i, j});
  return P;
}

py::dict to_py(const SuperPipeDream& P) {
  py::dict d;
  d["black"] = cells_of(P.black);
  d["red"] = cells_of(P.red);
  return d;
}

// Accepts {"black": [...], "red": [...]} or a bare list of (i, j) cells.
SuperPipeDream from_py(const py::object& o) {
  if (py::isinstance<py::dict>(o)) {
    auto d = o.cast<py::dict>();
    SuperPipeDream P;
    if (d.contains("black")) P.black = pipe_dream_of(d["black"].cast<Cells>());
    if (d.contains("red")) P.red = pipe_dream_of(d["red"].cast<Cells>());
    return P;
  }
  return {pipe_dream_of(o.cast<Cells>()), {}};
}

py::dict rect_result(const Rectification& R, bool co) {
  py::dict d;
  d["V"] = cells_of(R.V);
  d["U"] = cells_of(R.U);
  d["v"] = permutation(R.V).str();
  d["u"] = (co ? permutation(transpose(R.U)) : permutation(R.U)).str();
  d["steps"] = R.steps;
  return d;
}

py::object json_to_py(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_pdlab, m) {
  m.doc() = "Pipe dreams, flows, rectification and identity checks";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  m.def("permutation", [](const py::object& d) { return permutation(from_py(d)).str(); },
        "Demazure permutation of a diagram, in one-line notation.");
  m.def("word", [](const py::object& d) { return word(from_py(d)); });
  m.def("length", [](const std::string& w) { return Permutation::parse(w).length(); });
  m.def("demazure_product", [](const std::string& u, const std::string& v) {
    return demazure_product(Permutation::parse(u), Permutation::parse(v)).str();
  });
  m.def("is_reduced", [](const py::object& d) { return is_reduced(from_py(d)); });
  m.def("is_ordinary", [](const py::object& d) { return is_ordinary(from_py(d)); });
  m.def("adjoint", [](const py::object& d) { return to_py(adjoint(from_py(d))); });
  m.def("shift", [](const py::object& d, int k) { return to_py(shift(from_py(d), k)); });
  m.def("render", [](const py::object& d) { return render(from_py(d)); });

  m.def(
      "enumerate",
      [](const std::string& w, const std::string& family, int row_bound) {
        const Permutation p = Permutation::parse(w);
        py::list out;
        if (family == "spd+" || family == "spd0+") {
          auto s = enum_spd_plus(p, family == "spd0+");
          while (auto P = s.next()) out.append(to_py(*P));
        } else if (family == "pd+" || family == "pd0+" || family == "stable") {
          auto s = family == "stable" ? enum_stable(p, row_bound, false) : enum_pd_plus(p, family == "pd0+");
          while (auto P = s.next()) out.append(to_py(SuperPipeDream{*P, {}}));
        } else {
          throw PreconditionError("unknown family '" + family + "'");
        }
        return out;
      },
      py::arg("w"), py::arg("family") = "pd+", py::arg("row_bound") = 0);

  m.def(
      "poly",
      [](const std::string& w, const std::string& kind, int trunc) {
        const Permutation p = Permutation::parse(w);
        if (kind == "S") return schubert(p).str();
        if (kind == "G") return grothendieck(p).str();
        if (kind == "Sxy") return double_schubert(p).str();
        if (kind == "Gxy") return double_grothendieck(p).str();
        if (kind == "F" || kind == "Gstable") return stanley_truncation(p, trunc, kind == "Gstable").str();
        throw PreconditionError("unknown polynomial kind '" + kind + "'");
      },
      py::arg("w"), py::arg("kind") = "S", py::arg("trunc") = 4);

  m.def("y_plus", [](const py::object& d) { return to_py(y_plus(from_py(d))); });
  m.def("y_minus", [](const py::object& d) { return to_py(y_minus(from_py(d))); });
  m.def("x_plus", [](const py::object& d) { return to_py(x_plus(from_py(d))); });
  m.def("x_minus", [](const py::object& d) { return to_py(x_minus(from_py(d))); });

  m.def("rect", [](const py::object& d) { return rect_result(rect(from_py(d)), false); });
  m.def("corect", [](const py::object& d) { return rect_result(corect(from_py(d)), true); });
  m.def("rect_inverse", [](const Cells& V, const Cells& U) {
    return to_py(rect_inverse(pipe_dream_of(V), pipe_dream_of(U)));
  });
  m.def("insert", [](const Cells& P, std::vector<int> I, std::vector<int> J, int mm) {
    std::sort(I.begin(), I.end());
    std::sort(J.begin(), J.end());
    return cells_of(insert(pipe_dream_of(P), I, J, mm));
  });

  m.def("tab", [](const Cells& P, int mm) { return tab(pipe_dream_of(P), mm).rows; });
  m.def("plactic_product", [](const Rows& a, const Rows& b) {
    return plactic_product(RevTableau{a}, RevTableau{b}).rows;
  });
  m.def("rsk_prime", [](const Rows& A) {
    auto [p, q] = rsk_prime(BinaryMatrix(A));
    return std::make_pair(p.rows, q.rows);
  });
  m.def("ins", [](const Rows& A) { return ins(BinaryMatrix(A)).rows; });
  m.def("a_dagger", [](const Rows& A) { return a_dagger(BinaryMatrix(A)).to_rows(); });

  m.def("identity_names", &identity_names);
  m.def(
      "verify",
      [](const std::string& identity, int max_n, int jobs) {
        SuiteOptions o;
        o.max_n = max_n;
        o.jobs = jobs;
        Report r;
        {
          py::gil_scoped_release release;
          r = run_identity(identity, o);
        }
        return json_to_py(r.to_json());
      },
      py::arg("identity"), py::arg("max_n") = 4, py::arg("jobs") = 1);
}
