#include <doctest.h>

#include <string>

#include "maxplus/errors.hpp"
#include "maxplus/problem_file.hpp"
#include "support.hpp"

using namespace maxplus;
using namespace maxplus::testing;

namespace {

std::string data_file(const std::string& name) { return std::string(MAXPLUS_DATA_DIR) + "/" + name; }

std::string parse_error_message(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("shipped problem files build the worked systems") {
  const PtegSystem drift = instantiate(load_problem(data_file("drift.json")));
  const PtegSystem ref = drift_system();
  CHECK(drift.a() == ref.a());
  CHECK(drift.l() == ref.l());
  CHECK(drift.c() == ref.c());
  CHECK(drift.rtilde() == ref.rtilde());

  const ProblemFile rail = load_problem(data_file("railway.json"));
  CHECK(rail.params.at("ell") == "-14");
  CHECK(instantiate(rail).l() == railway(-14).l());
  CHECK(instantiate(rail).a() == railway_a());
  CHECK(instantiate(rail, {{"ell", "-13.999"}}).l()(3, 3) == q("-13.999"));
}

TEST_CASE("serialization round-trips") {
  const ProblemFile rail = load_problem(data_file("railway.json"));
  CHECK(parse_problem(serialize_problem(rail)) == rail);
  CHECK(serialize_problem(parse_problem(serialize_problem(rail))) == serialize_problem(rail));

  const ProblemFile ints = parse_problem(R"({"n": 1, "A": [[3]], "C": [["1/3"]]})");
  CHECK(ints.matrices.at("A")[0][0] == "3");
  CHECK(ints.matrices.at("L")[0][0] == "-inf");
  CHECK(parse_problem(serialize_problem(ints)) == ints);
}

TEST_CASE("malformed documents report where they broke") {
  const std::string msg = parse_error_message("{\n  \"n\": 2,\n  \"A\": [[\"0\", ]]\n}");
  CHECK(msg.find("line 3") != std::string::npos);
  CHECK(msg.find("column") != std::string::npos);

  CHECK_FALSE(parse_error_message("[1, 2]").empty());
  CHECK_FALSE(parse_error_message(R"({"n": 0})").empty());
  CHECK_FALSE(parse_error_message(R"({"n": -2})").empty());
  CHECK_FALSE(parse_error_message(R"({"n": 1, "B": [["0"]]})").empty());
  CHECK_FALSE(parse_error_message(R"({"n": 2, "A": [["0"]]})").empty());
  CHECK_FALSE(parse_error_message(R"({"n": 1, "A": [[1.5]]})").empty());
  CHECK_FALSE(parse_error_message(R"({"n": 1, "params": {"1x": "0"}})").empty());
}

TEST_CASE("instantiation errors") {
  const ProblemFile unbound = parse_problem(R"({"n": 1, "L": [["ell"]]})");
  try {
    instantiate(unbound);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("L[1][1]") != std::string::npos);
  }
  CHECK(instantiate(unbound, {{"ell", "-2"}}).l() == Matrix{{-2}});

  CHECK_THROWS_AS(instantiate(parse_problem(R"({"n": 1, "A": [["+inf"]]})")), InvalidInput);
  CHECK_THROWS_AS(instantiate(parse_problem(R"({"n": 1, "A": [["inf"]]})")), InvalidInput);
  CHECK_THROWS_AS(instantiate(parse_problem(R"({"n": 1, "A": [["1/0"]]})")), ParseError);
  CHECK_THROWS_AS(instantiate(parse_problem(R"({"n": 1, "A": [["x"]]})"), {{"x", "oops"}}), ParseError);
  CHECK_THROWS_AS(load_problem(data_file("missing.json")), ParseError);
}
