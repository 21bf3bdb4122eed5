#include <stdexcept>
#include "doctest.h"
#include "nested2/generators.hpp"
#include "nested2/oracle.hpp"

using namespace nested2;

TEST_CASE("oracle_c1p") {
  CHECK(oracle_c1p(gen_f0()));
  CHECK_FALSE(oracle_c1p(BinaryMatrix::from_rows({"110", "011", "101"})));
  CHECK(oracle_c1p(BinaryMatrix::from_rows({"1", "0"})));
  CHECK_THROWS_AS(oracle_c1p(BinaryMatrix(1, 9)), std::invalid_argument);
}

TEST_CASE("oracle_two_nested") {
  CHECK_FALSE(oracle_two_nested(gen_f2(5)));
  CHECK(oracle_two_nested(BinaryMatrix::from_rows({"1100", "0110"})));
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    CHECK(oracle_two_nested(gen_random_two_nested(5, 6, seed)));
  CHECK_THROWS_AS(oracle_two_nested(BinaryMatrix(13, 3)), std::invalid_argument);
}

TEST_CASE("oracle_nested") {
  CHECK_FALSE(oracle_nested(gen_g0()));
  CHECK(oracle_nested(BinaryMatrix::from_rows({"111", "010"})));
  CHECK_FALSE(oracle_nested(gen_f0()));
}

TEST_CASE("oracle_contains_configuration") {
  SUBCASE("G0 inside F0 via rows 1,2") {
    const auto m = oracle_contains_configuration(gen_f0(), gen_g0());
    REQUIRE(m.has_value());
    CHECK(submatrix(gen_f0(), m->rows, m->cols) == gen_g0());
  }
  SUBCASE("a matrix contains itself") {
    const auto m = oracle_contains_configuration(gen_f0(), gen_f0());
    REQUIRE(m.has_value());
  }
  SUBCASE("all-ones is not inside the identity") {
    const auto id2 = BinaryMatrix::from_rows({"10", "01"});
    CHECK_FALSE(
        oracle_contains_configuration(id2, BinaryMatrix::from_rows({"11", "11"})));
  }
  SUBCASE("guards") {
    CHECK_THROWS_AS(oracle_contains_configuration(BinaryMatrix(10, 3), BinaryMatrix(10, 3)),
                    std::invalid_argument);
  }
}

TEST_CASE("oracle_all_split_partitions") {
  SUBCASE("C4 has none") {
    Graph c4(4);
    c4.add_edge(0, 1);
    c4.add_edge(1, 2);
    c4.add_edge(2, 3);
    c4.add_edge(0, 3);
    CHECK(oracle_all_split_partitions(c4).empty());
  }
  SUBCASE("K2 has three") {
    Graph k2(2);
    k2.add_edge(0, 1);
    CHECK(oracle_all_split_partitions(k2).size() == 3);
  }
  SUBCASE("a single vertex has two") {
    CHECK(oracle_all_split_partitions(Graph(1)).size() == 2);
  }
  SUBCASE("guard") {
    CHECK_THROWS_AS(oracle_all_split_partitions(Graph(11)), std::invalid_argument);
  }
}
