#include <doctest.h>

#include "finepoly/io.hpp"
#include "finepoly/report.hpp"
#include "support.hpp"

using namespace finepoly;
using testing::rational_list;

namespace {

std::size_t parse_error_line(std::string_view text) {
  try {
    parse_input(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("vertex documents") {
    InputDocument d = parse_input("V 2 3\n0 0\n3 0\n0 3\n");
    CHECK(d.format == 'V');
    CHECK(to_polytope(d) == testing::standard_simplex(2, 3));
    Polytope pt = to_polytope(parse_input("V 2 1\n1/2 1/3\n"));
    CHECK(pt.vertices() == rational_list({{"1/2", "1/3"}}));
  }

  TEST_CASE("halfspace documents") {
    Polytope seg = to_polytope(parse_input("H 1 2\n1 0\n-1 -1\n"));
    CHECK(seg == testing::lattice_polytope({{0}, {1}}));
    // rows are (a, b) meaning <a, x> >= b; fractional normals are scaled
    Polytope sq = to_polytope(parse_input("H 2 4\n1/2 0 0\n0 1 0\n-1 0 -1\n0 -1 -1\n"));
    CHECK(sq == testing::unit_cube(2));
    CHECK_THROWS_AS(to_polytope(parse_input("H 1 1\n1 0\n")), UnboundedError);
    CHECK_THROWS_AS(to_polytope(parse_input("H 1 2\n1 1\n-1 0\n")), EmptyPolyhedronError);
  }

  TEST_CASE("comments and names") {
    InputDocument d = parse_input("# name: tri\n# a comment\nV 2 3\n0 0\n\n1 0\n0 1\n");
    CHECK(d.name == "tri");
    CHECK(d.rows.size() == 3);
  }

  TEST_CASE("errors carry line numbers") {
    CHECK(parse_error_line("X 2 3\n") == 1);
    CHECK(parse_error_line("V 2 2\n0 0\n1\n") == 3);
    CHECK(parse_error_line("V 2 2\n0 0\n1 x\n") == 3);
    CHECK(parse_error_line("# c\nV 2 2\n0 0\n1 1\n2 2\n") == 5);
    CHECK(parse_error_line("V 2 3\n0 0\n1 1\n") != 0);
    CHECK(parse_error_line("") != 0);
    try {
      parse_input("V 2 2\n0 0\n1 1/0\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).rfind("line 3: ", 0) == 0);
    }
  }

  TEST_CASE("format_vertices round trip") {
    Polytope p = testing::rational_triangle();
    std::string text = format_vertices(p.vertices(), "tri");
    InputDocument d = parse_input(text);
    CHECK(d.name == "tri");
    CHECK(to_polytope(d) == p);
  }
}

TEST_SUITE("report") {
  TEST_CASE("JSON keeps exact strings") {
    AnalysisReport r = analyze(testing::parallelepiped(), "par", {false});
    Json j = report_to_json(r);
    CHECK(j["fine_interior"]["vertices"] == Json::parse(R"([["1/2","1/2","1/2"]])"));
    CHECK(j["fine_interior"]["dim"] == 0);
    CHECK(j["kodaira"] == 0);
    CHECK(j["lambda_closed_interval"].is_null());

    AnalysisReport cube = analyze(testing::unit_cube(3), "cube");
    Json c = report_to_json(cube);
    CHECK(c["kodaira"] == "-inf");
    CHECK(c["lambda0"] == "2");
    CHECK(c["fine_interior"]["dim"] == -1);
    CHECK(c["canonical_hull"].is_null());
  }

  TEST_CASE("JSON round trip") {
    for (const auto& ex : testing::worked_examples(false)) {
      AnalysisReport r = analyze(ex.p, ex.name, {false});
      Json j = report_to_json(r);
      CHECK(report_from_json(j) == r);
      CHECK(report_from_json(Json::parse(j.dump())) == r);
      CHECK(report_to_json(report_from_json(j)).dump() == j.dump());
    }
    AnalysisReport cube = analyze(testing::unit_cube(3), "cube");
    CHECK(report_from_json(report_to_json(cube)) == cube);
  }

  TEST_CASE("schema violations") {
    AnalysisReport r = analyze(testing::diamond(), "d", {false});
    Json j = report_to_json(r);
    Json bad = j;
    bad.erase("kodaira");
    CHECK_THROWS_AS(report_from_json(bad), InputError);
    bad = j;
    bad["lambda0"] = 3;
    CHECK_THROWS_AS(report_from_json(bad), InputError);
    CHECK_THROWS_AS(report_from_json(Json::array()), InputError);
  }

  TEST_CASE("text table") {
    std::string t = report_to_text(analyze(testing::elliptic_simplex(), "ell", {false}));
    CHECK(t.find("kodaira") != std::string::npos);
    CHECK(t.find("4/3") != std::string::npos);
  }
}
