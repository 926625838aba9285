#include <doctest.h>

#include <json.hpp>

#include "unitreg/problem_io.hpp"
#include "unitreg/scan.hpp"

using namespace unitreg;
using nlohmann::json;

TEST_SUITE("cli") {

TEST_CASE("parse_problem_text: transform") {
  const auto problem = parse_problem_text(
      "# comment\n"
      "kind = transform\n"
      "n = 4\n"
      "Y = 0, 1\n"
      "f = 0 0 2 2\n");
  const auto& pair = std::get<InvariantSetPair>(problem);
  CHECK(pair.n() == 4);
  CHECK(pair.y() == std::vector<int>{0, 1});
  CHECK(pair.f() == Transformation({0, 0, 2, 2}));
}

TEST_CASE("parse_problem_text: linear, whitespace-insensitive") {
  const auto problem = parse_problem_text(
      "kind=linear\n"
      "p=2\n"
      "n=2\n"
      "W =   1   0\n"
      "f = 0 0 ;1 0   # trailing comment\n");
  const auto& pair = std::get<InvariantSubspacePair>(problem);
  CHECK(pair.p() == 2);
  CHECK(pair.n() == 2);
  CHECK(pair.w() == Subspace::span(FFMatrix(2, 1, 2, {1, 0})));
  CHECK(pair.f() == FFMatrix(2, 2, 2, {0, 0, 1, 0}));
}

TEST_CASE("parse_problem_text: empty W is the zero subspace") {
  const auto problem = parse_problem_text(
      "kind = linear\np = 3\nn = 2\nW =\nf = 1 0; 0 1\n");
  const auto& pair = std::get<InvariantSubspacePair>(problem);
  CHECK(pair.w() == Subspace::zero(3, 2));
}

TEST_CASE("parse_problem_text: entries are reduced mod p") {
  const auto problem = parse_problem_text(
      "kind = linear\np = 3\nn = 1\nW =\nf = -1\n");
  const auto& pair = std::get<InvariantSubspacePair>(problem);
  CHECK(pair.f().at(0, 0) == 2);
}

TEST_CASE("parse errors carry distinct types") {
  CHECK_THROWS_AS(parse_problem_text("kind = transform\nn = 2\nY = 0\n"),
                  ParseError);  // f missing
  CHECK_THROWS_AS(parse_problem_text("kind = ring\n"), ParseError);
  CHECK_THROWS_AS(parse_problem_text("kind = transform\nn = x\nY = 0\nf = 0\n"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_problem_text("kind = transform\nn = 2\nY = 0\nf = 0 0\nY = 1\n"),
      ParseError);  // duplicate key
  CHECK_THROWS_AS(parse_problem_text("kind = transform\nn = 2\nbogus = 1\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_problem_text("kind = linear\np = 4\nn = 1\nW =\nf = 0\n"),
                  ParseError);  // p not prime
  CHECK_THROWS_AS(parse_problem_text("kind = linear\np = 2\nn = 2\nW = 1 0\nf = 0 1; 0 0\n"),
                  InvarianceViolated);
  CHECK_THROWS_AS(parse_problem_text("kind = transform\nn = 3\nY = 0, 1\nf = 2 1 2\n"),
                  InvarianceViolated);
}

TEST_CASE("reports: fields, witness products, oracle agreement") {
  const auto problem = parse_problem_text(
      "kind = transform\nn = 4\nY = 0, 1\nf = 0 0 2 2\n");
  ReportOptions options;
  options.with_oracle = true;
  options.with_witness = true;
  const auto report = build_report(problem, options);

  CHECK(report.unit_regular());
  REQUIRE(report.transform_witness.has_value());
  CHECK(report.transform_witness->verified);
  CHECK(report.transform_witness->fgf == Transformation({0, 0, 2, 2}));
  REQUIRE(report.oracle_found.has_value());
  CHECK(*report.oracle_found);
  CHECK(report.agreement.has_value());
  CHECK(*report.agreement);

  const auto j = json::parse(render_json(report));
  CHECK(j["kind"] == "transform");
  CHECK(j["decision"]["unit_regular"] == true);
  CHECK(j["decision"]["cond_ii"] == true);
  CHECK(j["balance"]["collapse"] == 2);
  CHECK(j["witness"]["verified"] == true);
  CHECK(j["oracle"]["agreement"] == true);
  CHECK(j["problem"]["y"] == json::array({0, 1}));
}

TEST_CASE("reports: linear negative case") {
  const auto problem = parse_problem_text(
      "kind = linear\np = 2\nn = 2\nW = 1 0\nf = 0 0; 1 0\n");
  ReportOptions options;
  options.with_oracle = true;
  const auto report = build_report(problem, options);
  CHECK_FALSE(report.unit_regular());
  CHECK(report.balance.semi_balanced);
  CHECK(report.agreement.has_value());
  CHECK(*report.agreement);

  const auto j = json::parse(render_json(report));
  CHECK(j["decision"]["unit_regular"] == false);
  CHECK(j["decision"]["cond_i"] == false);
  CHECK(j["decision"]["dims"]["w_meet_range"] == 1);
  CHECK(j["balance"]["semi_balanced"] == true);
  CHECK(j["oracle"]["found"] == false);
}

TEST_CASE("rendering is deterministic") {
  const auto problem = parse_problem_text(
      "kind = linear\np = 2\nn = 2\nW = 1 0\nf = 1 0; 0 0\n");
  ReportOptions options;
  options.with_oracle = true;
  options.with_witness = true;
  const auto a = build_report(problem, options);
  const auto b = build_report(problem, options);
  CHECK(render_json(a) == render_json(b));
  CHECK(render_text(a) == render_text(b));
}

TEST_CASE("scan summaries stay clean on small families") {
  const auto transform = scan_transform(3);
  CHECK(transform.ok());
  CHECK(transform.universes == 11);  // 1 + 3 + 7 nonempty subsets
  CHECK(transform.total == 99);      // 1 + 8 + 90 invariant maps

  const auto linear = scan_linear(2, 2);
  CHECK(linear.ok());
  CHECK(linear.universes == 7);
  CHECK(linear.total == 60);

  CHECK_THROWS_AS(scan_transform(9), BoundExceeded);
}

}  // TEST_SUITE
