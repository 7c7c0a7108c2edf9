#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

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

using namespace pdlab;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

// A file path, "-" or empty for stdin, otherwise the text itself.
std::string read_source(const std::string& source) {
  std::stringstream buf;
  if (source.empty() || source == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(source);
  if (in) {
    buf << in.rdbuf();
    return buf.str();
  }
  return source;
}

bool looks_like_json(const std::string& text) {
  const auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string::npos && (text[p] == '{' || text[p] == '[');
}

SuperPipeDream read_diagram(const std::string& source) {
  const std::string text = read_source(source);
  if (looks_like_json(text)) return super_pipe_dream_from_json(Json::parse(text));
  return parse_render(text);
}

PipeDream ordinary_part(const SuperPipeDream& P, const char* what) {
  if (!P.red.empty()) throw PreconditionError(std::string(what) + ": expected a black-only diagram");
  return P.black;
}

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(std::stoi(item));
  std::sort(out.begin(), out.end());
  return out;
}

Json rectification_json(const Rectification& R, bool co) {
  const Permutation u = co ? permutation(transpose(R.U)) : permutation(R.U);
  return {{"V", to_json(R.V)},
          {"U", to_json(R.U)},
          {"v", permutation(R.V).str()},
          {"u", u.str()},
          {"steps", R.steps}};
}

std::string tableau_block(const std::string& label, const RevTableau& T) {
  return label + ":\n" + (T.empty() ? std::string("(empty)\n") : T.str());
}

void print_report_summary(const Report& r) {
  std::cout << r.identity << ": " << (r.passed() ? "PASS" : "FAIL") << " cases=" << r.total_cases()
            << " failures=" << r.failure_count() << " findings=" << r.finding_count() << "\n";
  for (const Report& c : r.children) {
    if (c.passed() && c.findings.empty()) continue;
    std::cout << "  " << c.parameters.dump() << (c.passed() ? " findings" : " FAIL") << "\n";
    for (auto& f : c.failures) std::cout << "    failure " << f.dump() << "\n";
    for (auto& f : c.findings) std::cout << "    finding " << f.dump() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pdlab: pipe dreams, flows, rectification and identity verification"};
  app.require_subcommand(1);

  EnumCaps caps;
  if (const char* env = std::getenv("PDLAB_CAP_N")) caps.max_n_nonreduced = caps.max_n_reduced = std::atoi(env);
  std::uint64_t seed = SuiteOptions{}.seed;
  if (const char* env = std::getenv("PDLAB_SEED")) seed = std::strtoull(env, nullptr, 10);
  int cap_n = 0;
  app.add_option("--seed", seed, "seed for randomized checks (env PDLAB_SEED)");
  app.add_option("--cap-n", cap_n, "largest S_n enumerated, reduced and not (env PDLAB_CAP_N)");
  app.add_option("--cap-n-nonreduced", caps.max_n_nonreduced, "largest S_n for non-reduced enumeration");
  app.add_option("--cap-n-reduced", caps.max_n_reduced, "largest S_n for reduced enumeration");
  app.add_option("--cap-matrix-cells", caps.max_matrix_cells, "largest m*n for binary matrices");
  app.add_option("--cap-reduced-words", caps.max_reduced_words, "largest reduced-word list");

  // enum
  auto* en = app.add_subcommand("enum", "enumerate pipe dreams of a permutation");
  std::string perm_text, family = "pd+";
  int row_bound = 0;
  bool count_only = false;
  en->add_option("--perm", perm_text, "permutation, e.g. 1432")->required();
  en->add_option("--family", family, "pd+ | pd0+ | spd+ | spd0+ | stable")
      ->check(CLI::IsMember({"pd+", "pd0+", "spd+", "spd0+", "stable"}));
  en->add_option("--row-bound", row_bound, "row bound N for stable diagrams");
  en->add_flag("--count-only", count_only, "print the count only");

  // poly
  auto* po = app.add_subcommand("poly", "generate a polynomial");
  std::string kind = "S";
  int trunc = 4;
  bool poly_json = false;
  po->add_option("--perm", perm_text, "permutation")->required();
  po->add_option("--kind", kind, "S | G | Sxy | Gxy | F | Gstable")
      ->check(CLI::IsMember({"S", "G", "Sxy", "Gxy", "F", "Gstable"}));
  po->add_option("--trunc", trunc, "number of variables for F and Gstable");
  po->add_flag("--json", poly_json, "JSON term list");

  // flow
  auto* fl = app.add_subcommand("flow", "apply a flow operator to a diagram");
  std::string op, diagram_src;
  std::optional<int> col, row;
  bool geq = false, trace_on = false;
  fl->add_option("--op", op, "y+ | y- | x+ | x- | y'j")->required()->check(
      CLI::IsMember({"y+", "y-", "x+", "x-", "y'j"}));
  fl->add_option("--col", col, "column j (single-column operator)");
  fl->add_option("--row", row, "row i (single-row operator)");
  fl->add_flag("--geq", geq, "with --col/--row: flow every column >= j (row >= i)");
  fl->add_flag("--trace", trace_on, "print intermediate diagrams as JSON lines");
  fl->add_option("--diagram", diagram_src, "diagram JSON, file, or - for stdin");

  // rect / corect
  auto* re = app.add_subcommand("rect", "rectify a super pipe dream");
  auto* co = app.add_subcommand("corect", "corectify a super pipe dream");
  for (auto* sub : {re, co}) {
    sub->add_option("--diagram", diagram_src, "diagram JSON, file, or - for stdin");
    sub->add_flag("--trace", trace_on, "include intermediate diagrams");
  }

  // insert
  auto* in = app.add_subcommand("insert", "m-insertion of (I, J) into a pipe dream");
  int m = 0;
  std::string I_text, J_text;
  in->add_option("--m", m, "m")->required();
  in->add_option("--I", I_text, "comma separated I")->required();
  in->add_option("--J", J_text, "comma separated J, a subset of I")->required();
  in->add_option("--diagram", diagram_src, "pipe dream JSON, file, or - for stdin");

  // rsk
  auto* rs = app.add_subcommand("rsk", "dual RSK of a binary matrix");
  std::string matrix_src;
  bool classical = false, pipedream = false, both = false, rsk_json = false;
  rs->add_option("--matrix", matrix_src, "file or inline matrix, e.g. 110/011")->required();
  rs->add_flag("--classical", classical, "(ins(A), ins(A dagger))");
  rs->add_flag("--pipedream", pipedream, "rect of the matrix diagram");
  rs->add_flag("--both", both, "both, and check they agree (default)");
  rs->add_flag("--json", rsk_json, "JSON output");

  // conjecture-scan
  auto* cs = app.add_subcommand("conjecture-scan", "scan overline(rec(A)) = ins(A dagger)");
  int max_m = 3, max_n_cols = 4;
  bool scan_json = false;
  cs->add_option("--max-m", max_m, "largest m");
  cs->add_option("--max-n", max_n_cols, "largest n");
  cs->add_flag("--json", scan_json, "JSON report");

  // verify
  auto* ve = app.add_subcommand("verify", "run identity checks");
  std::string identity;
  SuiteOptions options;
  bool verify_json = false;
  std::vector<std::string> names = identity_names();
  names.push_back("all");
  ve->add_option("--identity", identity, "identity name or all")->required()->check(CLI::IsMember(names));
  ve->add_option("--max-n", options.max_n, "permutations of S_n, n <= max-n");
  ve->add_option("--jobs", options.jobs, "parallel workers");
  ve->add_option("--samples", options.flow_samples, "random diagrams for the symmetry check");
  ve->add_flag("--json", verify_json, "full JSON report");

  // render
  auto* rd = app.add_subcommand("render", "render a diagram as text or JSON");
  bool render_json = false, wiring = false;
  rd->add_option("--diagram", diagram_src, "diagram JSON or text, file, or - for stdin");
  rd->add_flag("--json", render_json, "emit JSON instead of text");
  rd->add_flag("--wiring", wiring, "draw pipes instead of checkers");

  if (argc <= 1) {
    std::cerr << app.help();
    return kExitUsage;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (cap_n > 0) caps.max_n_nonreduced = caps.max_n_reduced = cap_n;

  try {
    if (*en) {
      const Permutation w = Permutation::parse(perm_text);
      const bool reduced = family == "pd0+" || family == "spd0+";
      std::uint64_t count = 0;
      if (family == "spd+" || family == "spd0+") {
        auto s = enum_spd_plus(w, reduced, caps);
        while (auto P = s.next()) {
          ++count;
          if (!count_only) std::cout << to_json(*P).dump() << "\n";
        }
      } else {
        if (family == "stable" && row_bound < 1) throw PreconditionError("stable family needs --row-bound N >= 1");
        auto s = family == "stable" ? enum_stable(w, row_bound, false, caps) : enum_pd_plus(w, reduced, caps);
        while (auto P = s.next()) {
          ++count;
          if (!count_only) std::cout << to_json(*P).dump() << "\n";
        }
      }
      if (count_only) std::cout << count << "\n";
      return 0;
    }

    if (*po) {
      const Permutation w = Permutation::parse(perm_text);
      MultiPoly p;
      if (kind == "S") p = schubert(w, caps);
      else if (kind == "G") p = grothendieck(w, caps);
      else if (kind == "Sxy") p = double_schubert(w, caps);
      else if (kind == "Gxy") p = double_grothendieck(w, caps);
      else p = stanley_truncation(w, trunc, kind == "Gstable", caps);
      std::cout << (poly_json ? to_json(p).dump() : p.str()) << "\n";
      return 0;
    }

    if (*fl) {
      const SuperPipeDream P = read_diagram(diagram_src);
      FlowTrace trace;
      FlowTrace* t = trace_on ? &trace : nullptr;
      SuperPipeDream Q;
      if (op == "y'j") {
        if (!col) throw PreconditionError("y'j needs --col j");
        Q = y_prime_j(P, *col);
      } else if (op[0] == 'y') {
        if (row) throw PreconditionError("y operators take --col");
        const bool plus = op == "y+";
        if (!col) Q = plus ? y_plus(P, t) : y_minus(P, t);
        else if (geq) Q = plus ? y_plus_geq(P, *col, t) : y_minus_geq(P, *col, t);
        else Q = plus ? y_plus_j(P, *col) : y_minus_j(P, *col);
      } else {
        if (col) throw PreconditionError("x operators take --row");
        const bool plus = op == "x+";
        if (!row) Q = plus ? x_plus(P, t) : x_minus(P, t);
        else if (geq) Q = plus ? x_plus_geq(P, *row, t) : x_minus_geq(P, *row, t);
        else Q = plus ? x_plus_i(P, *row) : x_minus_i(P, *row);
      }
      for (auto& [label, D] : trace.steps)
        std::cout << Json{{"step", label}, {"diagram", to_json(D)}}.dump() << "\n";
      std::cout << to_json(Q).dump() << "\n";
      return 0;
    }

    if (*re || *co) {
      const SuperPipeDream W = read_diagram(diagram_src);
      FlowTrace trace;
      const Rectification R = *re ? rect(W, trace_on ? &trace : nullptr) : corect(W, trace_on ? &trace : nullptr);
      Json out = rectification_json(R, bool(*co));
      out["w"] = permutation(W).str();
      if (trace_on) {
        Json steps = Json::array();
        for (auto& [label, D] : trace.steps) steps.push_back({{"step", label}, {"diagram", to_json(D)}});
        out["trace"] = std::move(steps);
      }
      std::cout << out.dump() << "\n";
      return 0;
    }

    if (*in) {
      const PipeDream P = ordinary_part(read_diagram(diagram_src), "insert");
      const auto I = parse_index_list(I_text), J = parse_index_list(J_text);
      const SuperPipeDream W = insertion_diagram(P, I, J, m);
      const Rectification R = rect(W);
      Json out = rectification_json(R, false);
      out["W"] = to_json(W);
      std::cout << out.dump() << "\n";
      return 0;
    }

    if (*rs) {
      const std::string text = read_source(matrix_src);
      const BinaryMatrix A = looks_like_json(text) ? matrix_from_json(Json::parse(text)) : parse_matrix(text);
      if (!classical && !pipedream) both = true;
      const bool show_classical = classical || both, show_pd = pipedream || both;
      const RevTableau c1 = ins(A), c2 = ins(a_dagger(A));
      std::pair<RevTableau, RevTableau> pd;
      if (show_pd) pd = rsk_prime(A);
      const bool agree = !both || (pd.first == c1 && pd.second == c2);
      if (rsk_json) {
        Json out = {{"matrix", matrix_str(A)}};
        if (show_classical) out["classical"] = {to_json(c1), to_json(c2)};
        if (show_pd) out["pipedream"] = {to_json(pd.first), to_json(pd.second)};
        if (both) out["agree"] = agree;
        std::cout << out.dump() << "\n";
      } else {
        if (show_classical) std::cout << tableau_block("ins(A)", c1) << tableau_block("ins(A^dagger)", c2);
        if (show_pd) std::cout << tableau_block("tab(V)", pd.first) << tableau_block("tab(U)", pd.second);
        if (both) std::cout << "agree: " << (agree ? "yes" : "no") << "\n";
      }
      return agree ? 0 : kExitFailure;
    }

    if (*cs) {
      Report top;
      top.identity = "conjecture";
      top.parameters = {{"max_m", max_m}, {"max_n", max_n_cols}};
      for (int a = 1; a <= max_m; ++a)
        for (int b = 1; b <= max_n_cols; ++b) top.children.push_back(conjecture_scan(a, b));
      if (scan_json) {
        std::cout << top.to_json().dump(2) << "\n";
      } else {
        for (auto& c : top.children)
          std::cout << "m=" << c.parameters["m"] << " n=" << c.parameters["n"] << " matrices=" << c.cases
                    << " counterexamples=" << c.findings.size() << "\n";
        for (auto& c : top.children)
          for (auto& f : c.findings) std::cout << "counterexample " << f.dump() << "\n";
      }
      return 0;
    }

    if (*ve) {
      options.seed = seed;
      options.caps = caps;
      std::vector<std::string> run = identity == "all" ? identity_names() : std::vector<std::string>{identity};
      bool ok = true;
      Json all = Json::array();
      for (auto& name : run) {
        const Report r = run_identity(name, options);
        ok = ok && r.passed();
        if (verify_json) all.push_back(r.to_json());
        else print_report_summary(r);
      }
      if (verify_json) std::cout << (run.size() == 1 ? all[0] : all).dump(2) << "\n";
      return ok ? 0 : kExitFailure;
    }

    if (*rd) {
      const SuperPipeDream P = read_diagram(diagram_src);
      if (render_json) std::cout << to_json(P).dump() << "\n";
      else std::cout << render(P, wiring ? RenderStyle::Wiring : RenderStyle::Checkers);
      return 0;
    }
  } catch (const ResourceError& e) {
    std::cerr << "pdlab: " << e.what() << "\n";
    return kExitCap;
  } catch (const PreconditionError& e) {
    std::cerr << "pdlab: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "pdlab: bad JSON: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "pdlab: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
