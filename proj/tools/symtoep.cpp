// symtoep: matrices, verification suites and gamma-set checks from the
// command line. Exit codes: 0 ok, 1 verification failure, 2 input error,
// 3 domain error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symtoep/compactness.hpp"
#include "symtoep/dual.hpp"
#include "symtoep/error.hpp"
#include "symtoep/gamma.hpp"
#include "symtoep/hardy.hpp"
#include "symtoep/io.hpp"

using namespace symtoep;

namespace {

enum Exit { kOk = 0, kFail = 1, kInput = 2, kDomain = 3 };

struct RunConfig {
  std::string command;
  int d = 2;
  int max_top = 8;
  std::optional<int> min_bottom;
  std::vector<std::string> symbols;
  std::string op;
  std::string kind = "toeplitz";
  int j = 1;
  int index = 1;
  std::string suite;
  double tol = 1e-9;
  int grid = 16;
  int degree = 3;
  std::optional<int> bound;
  std::string tops = "4,8,16";
  std::uint64_t seed = 42;
  int iterations = 3000;
  std::string out;
  std::string format = "json";
  std::string action;
  std::string point;
  std::string tuple;
};

Json config_json(const RunConfig& c, const std::vector<Symbol>& syms) {
  Json j{{"command", c.command}, {"d", c.d}, {"maxTop", c.max_top}};
  if (c.min_bottom) j["minBottom"] = *c.min_bottom;
  if (!c.suite.empty()) j["suite"] = c.suite;
  if (c.command == "matrix") j["kind"] = c.kind;
  if (!c.action.empty()) j["action"] = c.action;
  if (!c.op.empty()) j["operator"] = c.op;
  if (!c.point.empty()) j["point"] = c.point;
  if (!c.tuple.empty()) j["tuple"] = c.tuple;
  Json s = Json::array();
  for (const auto& phi : syms) s.push_back(symbol_to_json(phi));
  if (!s.empty()) j["symbols"] = s;
  j["j"] = c.j;
  j["tol"] = c.tol;
  j["seed"] = c.seed;
  j["iterations"] = c.iterations;
  j["grid"] = c.grid;
  j["format"] = c.format;
  return j;
}

void emit(const RunConfig& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw ParseError("cannot write '" + c.out + "'");
  f << text;
}

std::vector<int> int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("expected a comma-separated integer list, got '" + text + "'");
    }
  }
  return out;
}

// "x" or "x:y" per coordinate, comma separated.
std::vector<Complex> complex_list(const std::string& text) {
  std::vector<Complex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      auto colon = item.find(':');
      std::size_t used = 0;
      double re = std::stod(item.substr(0, colon), &used);
      double im = 0.0;
      if (colon != std::string::npos) im = std::stod(item.substr(colon + 1));
      else if (used != item.size()) throw std::invalid_argument(item);
      out.emplace_back(re, im);
    } catch (const std::exception&) {
      throw ParseError("bad point coordinate '" + item + "'");
    }
  }
  return out;
}

// shiftY<j>, identity, zero, rank1:<entries>
Operator parse_operator(const std::string& text, int d) {
  if (text == "identity") return Operator::identity(d);
  if (text == "zero") return Operator::finite_rank(d, {}, Space::Analytic);
  if (text.rfind("shiftY", 0) == 0) {
    auto js = int_list(text.substr(6));
    if (js.size() != 1) throw ParseError("expected shiftY<j>");
    return Operator::shift_y(d, js[0]);
  }
  if (text.rfind("rank1:", 0) == 0) {
    auto entries = int_list(text.substr(6));
    if (static_cast<int>(entries.size()) != d) throw DimensionError("rank1 index has the wrong length");
    for (std::size_t k = 1; k < entries.size(); ++k)
      if (entries[k - 1] <= entries[k]) throw ParseError("rank1 index must be strictly decreasing");
    Partition p(entries);
    return Operator::finite_rank(d, {{p, p, Scalar(1)}}, p.is_analytic() ? Space::Analytic : Space::NonAnalytic);
  }
  throw ParseError("unknown operator '" + text + "' (shiftY<j>, identity, zero, rank1:a,b,...)");
}

int finish(const RunConfig& c, const Report& r, const std::vector<Symbol>& syms, Json extra = Json::object()) {
  Json j = report_to_json(r, config_json(c, syms));
  for (auto& [k, v] : extra.items()) j[k] = v;
  emit(c, j.dump(2) + "\n");
  if (r.verdict) return kOk;
  for (const auto& chk : r.checks)
    if (!chk.passed) std::cerr << "failed: " << chk.name << " (residual " << chk.residual << ")\n";
  for (const auto& w : r.witnesses)
    std::cerr << "witness " << w.label << ": q=" << to_string(w.row) << " p=" << to_string(w.col)
              << " value=" << to_string(w.value) << "\n";
  return kFail;
}

int cmd_matrix(RunConfig& c, const std::vector<Symbol>& syms) {
  const int min_bottom = c.min_bottom.value_or(c.kind == "hankel" || c.kind == "dual" ? -c.max_top : 0);
  Window all = Window::enumerate(c.d, c.max_top, min_bottom);
  Operator op;
  Window rows, cols;
  auto need_symbol = [&]() -> const Symbol& {
    if (syms.size() != 1) throw ParseError("--kind " + c.kind + " needs exactly one --symbol");
    return syms.front();
  };
  if (c.kind == "toeplitz") {
    op = Operator::toeplitz(need_symbol());
    rows = cols = all.restricted(Space::Analytic);
  } else if (c.kind == "laurent") {
    op = Operator::laurent(need_symbol());
    rows = cols = all;
  } else if (c.kind == "hankel") {
    op = Operator::hankel(need_symbol());
    rows = all.restricted(Space::NonAnalytic);
    cols = all.restricted(Space::Analytic);
  } else if (c.kind == "dual") {
    op = Operator::dual_toeplitz(need_symbol());
    rows = cols = all.restricted(Space::NonAnalytic);
  } else if (c.kind == "shiftY") {
    op = Operator::shift_y(c.d, c.j);
    rows = cols = all.restricted(Space::Analytic);
  } else {
    throw ParseError("unknown --kind '" + c.kind + "'");
  }
  MatrixWindow m = assemble(op, rows, cols);
  if (c.format == "csv") {
    emit(c, matrix_to_csv(m));
  } else {
    Json j{{"config", config_json(c, syms)}, {"matrix", matrix_to_json(m)}};
    emit(c, j.dump(2) + "\n");
  }
  return kOk;
}

Operator subject(const RunConfig& c, const std::vector<Symbol>& syms, bool dual) {
  if (!c.op.empty()) return parse_operator(c.op, c.d);
  if (syms.size() != 1) throw ParseError("suite " + c.suite + " needs --operator or one --symbol");
  return dual ? Operator::dual_toeplitz(syms.front()) : Operator::toeplitz(syms.front());
}

const Symbol& one_symbol(const RunConfig& c, const std::vector<Symbol>& syms) {
  if (syms.size() != 1) throw ParseError("suite " + c.suite + " needs exactly one --symbol");
  return syms.front();
}

void add_residuals(Report& r, const std::string& prefix, const std::vector<MatrixWindow>& res) {
  for (std::size_t i = 0; i < res.size(); ++i)
    r.add(exact_zero_check(r, prefix + "[" + std::to_string(i + 1) + "]", res[i]));
}

int cmd_verify(RunConfig& c, const std::vector<Symbol>& syms) {
  const NormOptions opts{c.iterations, c.seed};
  const std::string& s = c.suite;
  Report r;
  r.check = s;
  Json extra = Json::object();
  auto analytic_window = [&] {
    if (c.min_bottom && *c.min_bottom != 0) throw DomainError("suite " + s + " needs an analytic window (minBottom 0)");
    return Window::enumerate(c.d, c.max_top, 0);
  };
  if (s == "brown-halmos") {
    add_residuals(r, "residual", bh_residuals(subject(c, syms, false), analytic_window()));
  } else if (s == "analytic") {
    r = classify_analytic(one_symbol(c, syms), analytic_window());
  } else if (s == "product") {
    if (syms.size() != 2) throw ParseError("suite product needs two --symbol values");
    r.add(exact_zero_check(r, "defect", product_defect(syms[0], syms[1], analytic_window())));
  } else if (s == "dual-bh") {
    add_residuals(r, "residual",
                  dual_bh_residuals(subject(c, syms, true), dual_window(c.d, c.max_top, c.min_bottom.value_or(-c.max_top))));
  } else if (s == "block") {
    const Symbol& phi = one_symbol(c, syms);
    int m = std::max(phi.height(), 1);
    r = block_decomposition_check(phi, Window::enumerate(c.d, c.max_top, c.min_bottom.value_or(-(m + 2))));
  } else if (s == "eta") {
    auto e = eta(subject(c, syms, false), c.j, analytic_window(), opts);
    r.norms.push_back(e.block_norm);
    r.values["blockNorm"] = e.block_norm;
    r.add(exact_zero_check(r, "blocks_zero", e.block_matrix));
    extra = Json{{"j", e.j}, {"blockNorm", e.block_norm}};
  } else if (s == "decay") {
    auto dec = commutator_decay(subject(c, syms, false), c.index, c.j, analytic_window(), opts);
    r.norms = dec.norms;
    r.add(exact_zero_check(r, "bh_residual", dec.bh_residual));
    r.add(tol_check("decay", dec.norms.back(), c.tol, "n = " + std::to_string(c.j)));
  } else if (s == "asymptotic") {
    const Symbol phi = syms.empty() ? Symbol::zero(c.d) : one_symbol(c, syms);
    Operator k = c.op.empty() ? parse_operator("zero", c.d) : parse_operator(c.op, c.d);
    r = asymptotic_classify(phi, k, c.j, analytic_window(), opts, c.tol);
  } else if (s == "minimal-extension") {
    r = minimal_extension_verify(one_symbol(c, syms), Window::enumerate(c.d, c.max_top, c.min_bottom.value_or(-c.max_top)));
  } else if (s == "lift") {
    std::vector<Window> ws;
    for (int top : int_list(c.tops)) ws.push_back(Window::enumerate(c.d, top, c.min_bottom.value_or(0)));
    r = lift_verify(one_symbol(c, syms), ws, opts, c.grid);
  } else if (s == "recover") {
    Operator t = subject(c, syms, false);
    int bound = c.bound.value_or(syms.empty() ? 1 : syms.front().height());
    Symbol rec = recover_symbol(t, bound);
    extra = Json{{"recovered", symbol_to_json(rec)}};
    if (!syms.empty() && c.op.empty())
      r.add(CheckResult{"round_trip", rec == syms.front(), true, rec == syms.front() ? 0.0 : 1.0, 0.0, ""});
  } else {
    throw ParseError("unknown --suite '" + s + "'");
  }
  r.check = s;
  return finish(c, r, syms, extra);
}

int cmd_gamma(RunConfig& c) {
  const std::string& a = c.action;
  Report r;
  r.check = "gamma-" + a;
  Json extra = Json::object();
  auto load_tuple = [&] {
    if (c.tuple.empty()) throw ParseError("gamma " + a + " needs --tuple");
    return tuple_from_json(load_json(c.tuple));
  };
  if (a == "member") {
    auto pt = complex_list(c.point);
    if (static_cast<int>(pt.size()) != c.d) throw DimensionError("--point must have d coordinates");
    auto g = point_in_gamma(pt, c.tol);
    auto b = point_in_bgamma(pt, c.tol);
    Json roots = Json::array();
    for (auto z : g.roots) roots.push_back({z.real(), z.imag()});
    extra = Json{{"inGamma", g.in_set}, {"gammaMargin", g.margin}, {"inBoundary", b.in_set},
                 {"boundaryMargin", b.margin}, {"roots", roots}};
  } else if (a == "synth") {
    GammaTuple in = load_tuple();
    GammaTuple t = synth_gamma_unitary(in.mats, c.tol);
    extra = Json{{"tuple", tuple_to_json(t)}};
  } else if (a == "check-unitary") {
    r = check_gamma_unitary(load_tuple(), c.tol, c.seed);
  } else if (a == "check-isometry") {
    r = check_gamma_isometry(load_tuple(), c.tol, c.degree, c.grid);
  } else if (a == "solve-toeplitz") {
    auto basis = s_toeplitz_solve(load_tuple(), c.tol);
    Json bj = Json::array();
    for (const auto& m : basis) bj.push_back(matrix_to_json(m));
    r.values["dimension"] = static_cast<double>(basis.size());
    extra = Json{{"dimension", basis.size()}, {"basis", bj}};
  } else {
    throw ParseError("unknown gamma action '" + a + "'");
  }
  r.check = "gamma-" + a;
  return finish(c, r, {}, extra);
}

void common_flags(CLI::App* app, RunConfig& c) {
  app->add_option("--d", c.d, "dimension")->check(CLI::Range(2, 16));
  app->add_option("--maxtop", c.max_top, "largest first entry in the window");
  app->add_option("--minbottom", c.min_bottom, "smallest last entry in the window");
  app->add_option("--symbol", c.symbols, "symbol JSON file or inline JSON (repeatable)");
  app->add_option("--operator", c.op, "shiftY<j>, identity, zero or rank1:a,b,...");
  app->add_option("--j", c.j, "shift index, eta power, or n/j maximum");
  app->add_option("--tol", c.tol, "tolerance for floating-point checks");
  app->add_option("--grid", c.grid, "sampling grid size");
  app->add_option("--seed", c.seed, "random seed");
  app->add_option("--iterations", c.iterations, "power-iteration steps")->check(CLI::PositiveNumber);
  app->add_option("--out", c.out, "output path (stdout if omitted)");
  app->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toeplitz operators on the symmetrized polydisk: exact matrices and checks"};
  app.require_subcommand(1);
  RunConfig c;

  auto* matrix = app.add_subcommand("matrix", "export an operator matrix on a window");
  common_flags(matrix, c);
  matrix->add_option("--kind", c.kind, "toeplitz, laurent, hankel, dual or shiftY")
      ->check(CLI::IsMember({"toeplitz", "laurent", "hankel", "dual", "shiftY"}));

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  common_flags(verify, c);
  verify->add_option("--suite", c.suite, "verification suite")
      ->required()
      ->check(CLI::IsMember({"brown-halmos", "analytic", "product", "dual-bh", "block", "eta", "decay", "asymptotic",
                             "minimal-extension", "lift", "recover"}));
  verify->add_option("--index", c.index, "coordinate index i for the decay suite");
  verify->add_option("--bound", c.bound, "degree bound for symbol recovery");
  verify->add_option("--tops", c.tops, "comma-separated maxTop values for the lift suite");

  auto* gamma = app.add_subcommand("gamma", "membership and gamma-tuple checks");
  common_flags(gamma, c);
  gamma->add_option("action", c.action, "member, synth, check-unitary, check-isometry or solve-toeplitz")
      ->required()
      ->check(CLI::IsMember({"member", "synth", "check-unitary", "check-isometry", "solve-toeplitz"}));
  gamma->add_option("--point", c.point, "comma-separated coordinates, x or x:y for complex");
  gamma->add_option("--tuple", c.tuple, "tuple JSON file or inline JSON");
  gamma->add_option("--degree", c.degree, "monomial degree for the isometry battery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    std::vector<Symbol> syms;
    for (const auto& s : c.symbols) syms.push_back(load_symbol(s));
    auto* sub = app.get_subcommands().front();
    c.command = sub->get_name();
    if (!syms.empty()) {
      bool d_given = sub->count("--d") > 0;
      if (!d_given) c.d = syms.front().d();
      for (const auto& phi : syms)
        if (phi.d() != c.d) throw DimensionError("symbol dimension differs from --d");
    }
    if (c.command == "matrix") return cmd_matrix(c, syms);
    if (c.command == "verify") return cmd_verify(c, syms);
    return cmd_gamma(c);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const Error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomain;
  }
}
