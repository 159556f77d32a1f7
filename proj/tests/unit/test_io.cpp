#include <doctest.h>

#include "qcycle/error.hpp"
#include "qcycle/extension.hpp"
#include "qcycle/fixtures.hpp"
#include "qcycle/io.hpp"
#include "qcycle/report.hpp"

using namespace qcs;

TEST_CASE("text round trip") {
  for (const char* name : {"nonsimple6", "simple9", "D1", "trivial:1"}) {
    CAPTURE(name);
    auto X = fixture(name).set;
    CHECK(parse_qcycle_set(serialize(X)) == X);
    CHECK(parse_qcycle_set(serialize(X, Format::json)) == X);
    CHECK(serialize(parse_qcycle_set(serialize(X))) == serialize(X));
  }
  auto s = j4_solution();
  CHECK(parse_solution(serialize(s)) == s);
  CHECK(parse_solution(serialize(s, Format::json)) == s);
}

TEST_CASE("entries are 1-based in files") {
  auto X = parse_qcycle_set("# two points\nn 2\ndot\n2 1\n2 1\ncolon\n2 1 2 1\n");
  CHECK(X.dot(0, 0) == 1);
  CHECK(X.dot(0, 1) == 0);
  CHECK(serialize(X) == "n 2\ndot\n2 1\n2 1\ncolon\n2 1\n2 1\n");
  auto Y = parse_qcycle_set(R"({"n": 2, "dot": [[2, 1], [2, 1]], "colon": [[2, 1], [2, 1]]})");
  CHECK(X == Y);
}

TEST_CASE("several documents") {
  auto text = serialize(std::vector<QCycleSet>{cyclic_set(2), trivial_set(3)});
  auto docs = parse_documents(text);
  REQUIRE(docs.size() == 2);
  CHECK(to_qcycle_set(docs[1]) == trivial_set(3));
  auto json = serialize(std::vector<QCycleSet>{cyclic_set(2), trivial_set(3)}, Format::json);
  CHECK(parse_documents(json).size() == 2);
  CHECK_THROWS_AS(parse_document(text), ParseError);
}

TEST_CASE("schema errors") {
  CHECK_THROWS_AS(parse_document("n 2\ndot\n1 2\n1 2\nrho\n1 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"n":1,"dot":[[1]],"lambda":[[1]]})"), ParseError);
  CHECK_THROWS_AS(parse_document("n 2\ndot\n1 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_document("n 2\ndot\n1 2\n1 3\ncolon\n1 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_document("n 2\ndot\n1 2\n1\ncolon\n1 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_document("n 2\nshape\n1 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_document(R"({"n":2,"dot":[[1,2]],)"), ParseError);
  CHECK_THROWS_AS(parse_document(""), ParseError);
  CHECK_THROWS_AS(parse_document("n 0\n"), ParseError);
}

TEST_CASE("documents of the wrong kind") {
  auto solution_text = serialize(j4_solution());
  CHECK_THROWS_AS(parse_qcycle_set(solution_text), PreconditionError);
  CHECK_THROWS_AS(parse_solution(serialize(cyclic_set(3))), PreconditionError);
}

TEST_CASE("non-bijective dot row parses but is not a q-cycle set") {
  auto doc = parse_document("n 2\ndot\n1 1\n1 2\ncolon\n1 2\n1 2\n");
  CHECK_THROWS_AS(to_qcycle_set(doc), InvalidStructure);
  auto report = verify_report(doc);
  CHECK(report["valid"] == false);
  CHECK(report["malformed"].size() == 1);
}

TEST_CASE("dynamical pair round trip") {
  for (const char* name : {"D1", "D2", "D3", "SF"}) {
    CAPTURE(name);
    auto data = paper_extension(name, std::string(name) == "D3" ? 3 : 1);
    auto text = serialize(data.pair);
    CHECK(parse_pair(text) == data.pair);
  }
}

TEST_CASE("dynamical pair errors") {
  CHECK_THROWS_AS(parse_pair("2\n"), ParseError);
  CHECK_THROWS_AS(parse_pair("1 2\n1 1 1 : 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_pair("1 2\n1 1 1 : 1 2\n1 1 1 : 1 2\n1 1 1 : 1 2\n1 1 2 : 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_pair("1 2\n1 1 1 : 1 1\n1 1 2 : 1 2\n1 1 1 : 1 2\n1 1 2 : 1 2\n"),
                  InvalidStructure);
  CHECK_THROWS_AS(parse_pair("1 2\n1 1 1 1 2\n1 1 2 : 1 2\n1 1 1 : 1 2\n1 1 2 : 1 2\n"), ParseError);
  // Any line order within a table; alpha' may be non-bijective.
  auto P = parse_pair("1 2\n1 1 2 : 1 2\n1 1 1 : 2 1\n1 1 1 : 1 1\n1 1 2 : 2 2\n");
  CHECK(P.alpha(0, 0, 0, 0) == 1);
  CHECK_FALSE(P.alpha_prime_bijective());
}

TEST_CASE("analysis report") {
  auto r = analysis_report(fixture("simple4").set);
  CHECK(r["simple"] == true);
  CHECK(r["indecomposable"] == true);
  CHECK(r["primitive"] == false);
  CHECK(r["primitive_level"] == "infinite");
  CHECK(r["block_systems"].dump() == "[[[1,4],[2,3]]]");
  auto p = analysis_report(fixture("primitive4").set);
  CHECK(p["primitive"] == true);
  CHECK(p["primitive_level"] == 1);
  auto n = analysis_report(fixture("nonsimple6").set);
  CHECK(n["non_simplicity_witness"].dump() == "[[1,6],[2,5],[3,4]]");
  CHECK(n["primitive_level_chain"].size() == 2);
  auto t = analysis_report(trivial_set(3));
  CHECK(t["primitive_level"] == "undefined");
  CHECK(t["multipermutation_level"] == 1);
  CHECK(analysis_report(fixture("D1").set).dump() == analysis_report(fixture("D1").set).dump());
  auto s = analysis_report(j4_solution());
  CHECK(s["involutive"] == true);
  CHECK(s["q_cycle_set"]["simple"] == true);
}

TEST_CASE("text rendering") {
  auto text = render_text(analysis_report(fixture("simple4").set));
  CHECK(text.find("primitive_level: infinite") != std::string::npos);
  CHECK(text.find("{{1,4},{2,3}}") != std::string::npos);
}
