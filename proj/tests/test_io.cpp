#include <doctest.h>

#include "symtoep/error.hpp"
#include "symtoep/io.hpp"

using namespace symtoep;

TEST_CASE("symbol JSON round trip") {
  Symbol phi = Symbol::elementary(2, 1) + Scalar(mpq_class(1, 3), mpq_class(-2)) * conjugate(Symbol::elementary(2, 2));
  Json j = symbol_to_json(phi);
  CHECK(symbol_from_json(j) == phi);
  CHECK(load_symbol(j.dump()) == phi);
  Symbol s1 = load_symbol(R"({"d":2,"terms":[{"m":[1,0],"re":"1","im":"0"}]})");
  CHECK(s1 == Symbol::elementary(2, 1));
}

TEST_CASE("symbol JSON rejects bad input") {
  CHECK_THROWS_AS(load_symbol(R"({"d":2,"terms":[{"m":[0,1],"re":"1"}]})"), ParseError);
  CHECK_THROWS_AS(load_symbol(R"({"d":2,"terms":[{"m":[1,0,0],"re":"1"}]})"), ParseError);
  CHECK_THROWS_AS(load_symbol(R"({"d":2,"terms":[{"m":[1,0],"re":"x"}]})"), ParseError);
  CHECK_THROWS_AS(load_symbol(R"({"terms":[]})"), ParseError);
  CHECK_THROWS_AS(load_symbol("{not json"), ParseError);
  CHECK_THROWS_AS(load_symbol("/nonexistent/file.json"), ParseError);
}

TEST_CASE("partition and window JSON") {
  CHECK(partition_to_json(Partition{2, 0}).dump() == "[2,0]");
  CHECK(partition_from_json(Json::parse("[3,1,-2]")) == Partition{3, 1, -2});
  CHECK_THROWS_AS(partition_from_json(Json::parse("[1,1]")), ParseError);
  Window w = window_from_json(Json::parse(R"({"d":2,"maxTop":2,"minBottom":0})"));
  CHECK(w.size() == 3);
  CHECK(window_to_json(w).dump() == R"({"d":2,"maxTop":2,"minBottom":0})");
}

TEST_CASE("matrix export") {
  Window w = Window::enumerate(2, 2, 0);
  MatrixWindow m = assemble(Operator::toeplitz(Symbol::elementary(2, 1)), w);
  CHECK(matrix_to_csv(m) == "row;col;re;im\n[2,0];[1,0];1;0\n[2,1];[2,0];1;0\n");
  Json j = matrix_to_json(m);
  CHECK(j["entries"].size() == 2);
  CHECK(j["exact"] == true);
  MatrixWindow empty = assemble(Operator::identity(3), Window::enumerate(3, 1, 0));
  CHECK(matrix_to_csv(empty) == "row;col;re;im\n");
}

TEST_CASE("report JSON") {
  Report r;
  r.check = "demo";
  r.add(tol_check("small", 0.5, 1.0));
  Json j = report_to_json(r, Json{{"seed", 42}});
  CHECK(j["verdict"] == "pass");
  CHECK(j["config"]["seed"] == 42);
  CHECK(j["checks"][0]["margin"] == -0.5);
}

TEST_CASE("gamma tuple JSON") {
  Json j = Json::parse(R"({"d":2,"matrices":[[[[0,0]]],[[[-1,0]]]]})");
  GammaTuple t = tuple_from_json(j);
  CHECK(t.n() == 1);
  CHECK(t.last()(0, 0) == std::complex<double>(-1, 0));
  CHECK(tuple_from_json(tuple_to_json(t)).mats[1] == t.mats[1]);
  CHECK_THROWS_AS(tuple_from_json(Json::parse(R"({"d":3,"matrices":[[[[0,0]]]]})")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([[[0,0],[1]]])")), ParseError);
}
