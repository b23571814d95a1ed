#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "symtoep/gamma.hpp"
#include "symtoep/matrix_window.hpp"
#include "symtoep/report.hpp"
#include "symtoep/symbol.hpp"

namespace symtoep {

using Json = nlohmann::ordered_json;

/// {"d": 2, "terms": [{"m": [1,0], "re": "1", "im": "0"}, ...]}. Every m must
/// be weakly decreasing of length d; ParseError otherwise.
Symbol symbol_from_json(const Json& j);
Json symbol_to_json(const Symbol& phi);

/// Reads a symbol from inline JSON text (starting with '{') or a file path.
Symbol load_symbol(const std::string& path_or_json);

Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);
Json window_to_json(const Window& w);
/// {"d", "maxTop", "minBottom"}
Window window_from_json(const Json& j);

/// Header "row;col;re;im", one line per nonzero entry in (row, col) order.
/// Partitions are written as "[2,0]", prefixed by "b:" in block matrices.
std::string matrix_to_csv(const MatrixWindow& m);
Json matrix_to_json(const MatrixWindow& m);

Json witness_to_json(const Witness& w);
Json report_to_json(const Report& r, const Json& config = Json::object());

/// Row-major array of rows of [re, im] pairs.
Eigen::MatrixXcd matrix_from_json(const Json& j);
Json matrix_to_json(const Eigen::MatrixXcd& m);
/// {"d": 2, "matrices": [...]}
GammaTuple tuple_from_json(const Json& j);
Json tuple_to_json(const GammaTuple& t);

/// Parses a file, or the text itself when it starts with '{' or '['.
Json load_json(const std::string& path_or_json);

}  // namespace symtoep
