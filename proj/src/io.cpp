#include "symtoep/io.hpp"

#include <fstream>
#include <sstream>

#include "symtoep/error.hpp"

namespace symtoep {

namespace {

Tuple int_array(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an integer array");
  Tuple t;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError(std::string(what) + ": expected integers");
    t.push_back(x.get<int>());
  }
  return t;
}

mpq_class rational_field(const Json& j, const char* key) {
  if (!j.contains(key)) return 0;
  const auto& v = j.at(key);
  if (v.is_string()) return Scalar::parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return mpq_class(v.get<long>());
  throw ParseError(std::string("field '") + key + "' must be a rational string");
}

int int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw ParseError(std::string("missing integer field '") + key + "'");
  return j.at(key).get<int>();
}

std::string label(const MatrixWindow& m, std::size_t i, bool is_row) {
  const Window& w = is_row ? m.rows : m.cols;
  int blocks = is_row ? m.row_blocks : m.col_blocks;
  const Partition& p = w.members()[i % w.size()];
  std::string s = Json(p.entries()).dump();
  if (blocks > 1) s = std::to_string(i / w.size()) + ":" + s;
  return s;
}

}  // namespace

Symbol symbol_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("symbol: expected an object");
  const int d = int_field(j, "d");
  if (d < 1) throw ParseError("symbol: d must be positive");
  Symbol phi(d);
  if (!j.contains("terms")) return phi;
  if (!j.at("terms").is_array()) throw ParseError("symbol: terms must be an array");
  for (const auto& term : j.at("terms")) {
    if (!term.is_object() || !term.contains("m")) throw ParseError("symbol: each term needs 'm'");
    Tuple m = int_array(term.at("m"), "symbol term m");
    if (static_cast<int>(m.size()) != d) throw ParseError("symbol: term length differs from d");
    for (std::size_t k = 1; k < m.size(); ++k)
      if (m[k - 1] < m[k]) throw ParseError("symbol: m = " + to_string(m) + " is not weakly decreasing");
    phi.accumulate(OrbitRep(m), Scalar(rational_field(term, "re"), rational_field(term, "im")));
  }
  return phi;
}

Json symbol_to_json(const Symbol& phi) {
  Json terms = Json::array();
  for (const auto& [m, c] : phi.terms())
    terms.push_back({{"m", m.entries()}, {"re", to_string(c.re())}, {"im", to_string(c.im())}});
  return {{"d", phi.d()}, {"terms", terms}};
}

Json load_json(const std::string& path_or_json) {
  auto first = path_or_json.find_first_not_of(" \t\r\n");
  try {
    if (first != std::string::npos && (path_or_json[first] == '{' || path_or_json[first] == '['))
      return Json::parse(path_or_json);
    std::ifstream in(path_or_json);
    if (!in) throw ParseError("cannot open '" + path_or_json + "'");
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Symbol load_symbol(const std::string& path_or_json) {
  try {
    return symbol_from_json(load_json(path_or_json));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid symbol: ") + e.what());
  }
}

Json partition_to_json(const Partition& p) { return p.entries(); }

Partition partition_from_json(const Json& j) {
  Tuple t = int_array(j, "partition");
  for (std::size_t k = 1; k < t.size(); ++k)
    if (t[k - 1] <= t[k]) throw ParseError("partition " + to_string(t) + " is not strictly decreasing");
  if (t.empty()) throw ParseError("empty partition");
  return Partition(t);
}

Json window_to_json(const Window& w) {
  return {{"d", w.d()}, {"maxTop", w.max_top()}, {"minBottom", w.min_bottom()}};
}

Window window_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("window: expected an object");
  return Window::enumerate(int_field(j, "d"), int_field(j, "maxTop"), int_field(j, "minBottom"));
}

std::string matrix_to_csv(const MatrixWindow& m) {
  std::ostringstream out;
  out << "row;col;re;im\n";
  for (const auto& [ij, v] : m.entries)
    out << label(m, ij.first, true) << ';' << label(m, ij.second, false) << ';' << to_string(v.re()) << ';'
        << to_string(v.im()) << '\n';
  return out.str();
}

Json matrix_to_json(const MatrixWindow& m) {
  Json rows = Json::array(), cols = Json::array(), entries = Json::array();
  for (const auto& p : m.rows.members()) rows.push_back(p.entries());
  for (const auto& p : m.cols.members()) cols.push_back(p.entries());
  for (const auto& [ij, v] : m.entries)
    entries.push_back({{"row", ij.first},
                       {"col", ij.second},
                       {"re", to_string(v.re())},
                       {"im", to_string(v.im())}});
  return {{"rows", rows},           {"cols", cols},   {"rowBlocks", m.row_blocks},
          {"colBlocks", m.col_blocks}, {"exact", m.exact}, {"entries", entries}};
}

Json witness_to_json(const Witness& w) {
  return {{"label", w.label},
          {"q", w.row.entries()},
          {"p", w.col.entries()},
          {"re", to_string(w.value.re())},
          {"im", to_string(w.value.im())}};
}

Json report_to_json(const Report& r, const Json& config) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj{{"name", c.name}, {"passed", c.passed}, {"exact", c.exact}, {"residual", c.residual}};
    if (!c.exact) {
      cj["tol"] = c.tol;
      cj["margin"] = c.residual - c.tol;
    }
    if (!c.note.empty()) cj["note"] = c.note;
    checks.push_back(cj);
  }
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(witness_to_json(w));
  Json values = Json::object();
  for (const auto& [k, v] : r.values) values[k] = v;
  Json info = Json::object();
  for (const auto& [k, v] : r.info) info[k] = v;
  return {{"check", r.check}, {"verdict", r.verdict ? "pass" : "fail"},
          {"witnesses", witnesses}, {"norms", r.norms},
          {"checks", checks},   {"values", values},
          {"info", info},       {"config", config}};
}

Eigen::MatrixXcd matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("matrix: expected an array of rows");
  const auto n_rows = static_cast<Eigen::Index>(j.size());
  const auto n_cols = n_rows == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(j.at(0).size());
  Eigen::MatrixXcd m(n_rows, n_cols);
  for (Eigen::Index r = 0; r < n_rows; ++r) {
    const auto& row = j.at(static_cast<std::size_t>(r));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n_cols)
      throw ParseError("matrix: rows must be arrays of equal length");
    for (Eigen::Index c = 0; c < n_cols; ++c) {
      const auto& e = row.at(static_cast<std::size_t>(c));
      if (!e.is_array() || e.size() != 2 || !e.at(0).is_number() || !e.at(1).is_number())
        throw ParseError("matrix: entries must be [re, im] pairs");
      m(r, c) = {e.at(0).get<double>(), e.at(1).get<double>()};
    }
  }
  return m;
}

Json matrix_to_json(const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

GammaTuple tuple_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("matrices")) throw ParseError("tuple: expected {\"d\", \"matrices\"}");
  GammaTuple t;
  t.d = int_field(j, "d");
  for (const auto& m : j.at("matrices")) t.mats.push_back(matrix_from_json(m));
  if (j.contains("commTol")) t.comm_tol = j.at("commTol").get<double>();
  try {
    validate(t);
  } catch (const DimensionError& e) {
    throw ParseError(std::string("tuple: ") + e.what());
  }
  return t;
}

Json tuple_to_json(const GammaTuple& t) {
  Json mats = Json::array();
  for (const auto& m : t.mats) mats.push_back(matrix_to_json(m));
  return {{"d", t.d}, {"commTol", t.comm_tol}, {"matrices", mats}};
}

}  // namespace symtoep
