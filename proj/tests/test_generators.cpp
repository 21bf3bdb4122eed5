#include <stdexcept>
#include "doctest.h"
#include "nested2/generators.hpp"
#include "nested2/io.hpp"
#include "nested2/oracle.hpp"
#include "nested2/recognition.hpp"

using namespace nested2;

TEST_CASE("fixed family entries") {
  CHECK(gen_f0() == BinaryMatrix::from_rows({"11100", "01110", "00111"}));
  CHECK(gen_g0() == BinaryMatrix::from_rows({"110", "011"}));
  CHECK(gen_f1(5) ==
        BinaryMatrix::from_rows({"0111", "1110", "0011", "0110", "1100"}));
  CHECK(gen_f2(5) ==
        BinaryMatrix::from_rows({"01110", "11000", "01100", "00110", "00011"}));
}

TEST_CASE("family dimensions and parameter validation") {
  for (int k : {5, 7, 9, 11}) {
    CHECK(gen_f1(k).rows() == k);
    CHECK(gen_f1(k).cols() == k - 1);
    CHECK(gen_f2(k).rows() == k);
    CHECK(gen_f2(k).cols() == k);
  }
  CHECK_THROWS_AS(gen_f1(4), std::invalid_argument);
  CHECK_THROWS_AS(gen_f2(4), std::invalid_argument);
  CHECK_THROWS_AS(gen_f1(3), std::invalid_argument);
}

TEST_CASE("F family crossing graphs are chordless odd cycles") {
  for (int k : {5, 7, 9}) {
    for (const BinaryMatrix& a : {gen_f1(k), gen_f2(k)}) {
      CHECK(has_consecutive_rows(a));
      const CrossingGraph h = build_crossing_graph(a);
      CHECK(h.edge_count() == k);
      std::vector<int> cycle(k);
      for (int i = 0; i < k; ++i) cycle[i] = i;
      CHECK(is_induced_cycle(h, cycle));
    }
  }
}

TEST_CASE("G0 is contained in every generated obstruction") {
  CHECK(oracle_contains_configuration(gen_f0(), gen_g0()).has_value());
  const auto check_contains = [](const BinaryMatrix& a) {
    CHECK(oracle_contains_configuration(a, gen_g0()).has_value());
  };
  for (int k = 1; k <= 3; ++k) {
    check_contains(gen_tucker(TuckerFamily::m_i, k));
    check_contains(gen_tucker(TuckerFamily::m_ii, k));
    check_contains(gen_tucker(TuckerFamily::m_iii, k));
  }
  check_contains(gen_tucker(TuckerFamily::m_iv));
  check_contains(gen_tucker(TuckerFamily::m_v));
}

TEST_CASE("gen_tucker validates its instances") {
  SUBCASE("small instances are non-C1P and deletion-minimal per the oracle") {
    for (int k = 1; k <= 2; ++k) {
      for (TuckerFamily f : {TuckerFamily::m_i, TuckerFamily::m_ii, TuckerFamily::m_iii}) {
        const BinaryMatrix a = gen_tucker(f, k);
        REQUIRE_FALSE(oracle_c1p(a));
        std::vector<int> rows(a.rows()), cols(a.cols());
        for (int i = 0; i < a.rows(); ++i) rows[i] = i;
        for (int j = 0; j < a.cols(); ++j) cols[j] = j;
        for (int i = 0; i < a.rows(); ++i) {
          std::vector<int> rs = rows;
          rs.erase(rs.begin() + i);
          CHECK(oracle_c1p(submatrix(a, rs, cols)));
        }
        for (int j = 0; j < a.cols(); ++j) {
          std::vector<int> cs = cols;
          cs.erase(cs.begin() + j);
          CHECK(oracle_c1p(submatrix(a, rows, cs)));
        }
      }
    }
  }
  SUBCASE("M_I(1) is the cyclic 3x3") {
    const BinaryMatrix a = gen_tucker(TuckerFamily::m_i, 1);
    CHECK(a == BinaryMatrix::from_rows({"110", "011", "101"}));
  }
  SUBCASE("bad parameters are usage errors") {
    CHECK_THROWS_AS(gen_tucker(TuckerFamily::m_i, 0), std::invalid_argument);
    CHECK_THROWS_AS(gen_tucker(TuckerFamily::m_iv, 2), std::invalid_argument);
  }
  SUBCASE("larger parameters still validate") {
    CHECK(gen_tucker(TuckerFamily::m_i, 9).rows() == 11);
    CHECK(gen_tucker(TuckerFamily::m_iii, 8).cols() == 11);
  }
}

TEST_CASE("random generators") {
  SUBCASE("p=0 and p=1 extremes") {
    const BinaryMatrix z = gen_random_matrix(3, 4, 0.0, 9);
    const BinaryMatrix o = gen_random_matrix(3, 4, 1.0, 9);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) {
        CHECK_FALSE(z.at(i, j));
        CHECK(o.at(i, j));
      }
  }
  SUBCASE("seeded determinism, bit for bit") {
    CHECK(serialize_matrix(gen_random_matrix(6, 7, 0.5, 123)) ==
          serialize_matrix(gen_random_matrix(6, 7, 0.5, 123)));
    CHECK(serialize_matrix(gen_random_two_nested(6, 7, 123)) ==
          serialize_matrix(gen_random_two_nested(6, 7, 123)));
    CHECK(serialize_graph(gen_random_split_graph(9, 123)) ==
          serialize_graph(gen_random_split_graph(9, 123)));
  }
  SUBCASE("gen_random_two_nested outputs are accepted") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const BinaryMatrix a = gen_random_two_nested(1 + seed % 7, 1 + (seed * 3) % 7, seed);
      CHECK(has_consecutive_rows(a));
      CHECK(std::holds_alternative<TwoNestedAccept>(is_two_nested(a)));
    }
  }
  SUBCASE("gen_random_split_graph outputs are split") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const Graph g = gen_random_split_graph(1 + seed % 9, seed);
      CHECK(std::holds_alternative<SplitGraph>(find_split_partition(g)));
    }
  }
}

TEST_CASE("row deletion from any forbidden family gives a 2-nested matrix") {
  for (int k : {5, 7}) {
    for (const BinaryMatrix& a : {gen_f0(), gen_f1(k), gen_f2(k)}) {
      for (int drop = 0; drop < a.rows(); ++drop) {
        std::vector<int> rows;
        for (int i = 0; i < a.rows(); ++i)
          if (i != drop) rows.push_back(i);
        std::vector<int> cols(a.cols());
        for (int j = 0; j < a.cols(); ++j) cols[j] = j;
        CHECK(std::holds_alternative<TwoNestedAccept>(
            is_two_nested(submatrix(a, rows, cols))));
      }
    }
  }
}
