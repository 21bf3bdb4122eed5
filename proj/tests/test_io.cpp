#include "doctest.h"
#include "nested2/io.hpp"

using namespace nested2;

TEST_CASE("matrix format round trip") {
  const std::string text = "3 5\n11100\n01110\n00111\n";
  const BinaryMatrix a = parse_matrix(text);
  CHECK(a.rows() == 3);
  CHECK(a.cols() == 5);
  CHECK(serialize_matrix(a) == text);
}

TEST_CASE("matrix parser rejects malformed input") {
  SUBCASE("zero dimensions") {
    CHECK_THROWS_AS(parse_matrix("0 3\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("2 0\n\n\n"), ParseError);
  }
  SUBCASE("ragged rows") {
    CHECK_THROWS_AS(parse_matrix("2 3\n110\n11\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("2 3\n110\n1111\n"), ParseError);
  }
  SUBCASE("foreign characters report their position") {
    try {
      parse_matrix("2 3\n110\n1x0\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(e.col() == 2);
    }
  }
  SUBCASE("missing trailing newline") {
    CHECK_THROWS_AS(parse_matrix("1 3\n110"), ParseError);
  }
  SUBCASE("trailing content") {
    CHECK_THROWS_AS(parse_matrix("1 3\n110\n\n"), ParseError);
  }
  SUBCASE("whitespace in rows") {
    CHECK_THROWS_AS(parse_matrix("1 3\n1 0\n"), ParseError);
  }
}

TEST_CASE("graph format round trip") {
  const std::string text = "4 3\n1 2\n1 3\n2 4\n";
  const Graph g = parse_graph(text);
  CHECK(g.vertices() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 3));
  CHECK_FALSE(g.adjacent(2, 3));
  CHECK(serialize_graph(g) == text);
}

TEST_CASE("graph parser rejects malformed input") {
  SUBCASE("self loop or reversed edge") {
    CHECK_THROWS_AS(parse_graph("3 1\n2 2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("3 1\n3 1\n"), ParseError);
  }
  SUBCASE("duplicates and misordered edges") {
    CHECK_THROWS_AS(parse_graph("3 2\n1 2\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("3 2\n1 3\n1 2\n"), ParseError);
  }
  SUBCASE("endpoint out of range") {
    CHECK_THROWS_AS(parse_graph("3 1\n1 4\n"), ParseError);
  }
  SUBCASE("zero vertices") {
    CHECK_THROWS_AS(parse_graph("0 0\n"), ParseError);
  }
  SUBCASE("isolated vertices are fine") {
    CHECK(parse_graph("3 0\n").vertices() == 3);
  }
}
