#include <stdexcept>
#include <random>

#include "doctest.h"
#include "nested2/c1p.hpp"
#include "nested2/generators.hpp"
#include "nested2/oracle.hpp"

using namespace nested2;

namespace {

const BinaryMatrix kCyclic3 = BinaryMatrix::from_rows({"110", "011", "101"});

std::vector<int> iota_vec(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

TEST_CASE("test_c1p accepts C1P matrices with a checked ordering") {
  SUBCASE("F0 stays contiguous") {
    const C1PResult r = test_c1p(gen_f0());
    REQUIRE(c1p_accepted(r));
    CHECK(has_consecutive_rows(permute_columns(gen_f0(), std::get<std::vector<int>>(r))));
  }
  SUBCASE("a single row is always C1P") {
    const auto a = BinaryMatrix::from_rows({"101"});
    const C1PResult r = test_c1p(a);
    REQUIRE(c1p_accepted(r));
    CHECK(has_consecutive_rows(permute_columns(a, std::get<std::vector<int>>(r))));
  }
  SUBCASE("deterministic ordering") {
    const BinaryMatrix a = gen_random_two_nested(6, 7, 11);
    const C1PResult r1 = test_c1p(a);
    const C1PResult r2 = test_c1p(a);
    REQUIRE(c1p_accepted(r1));
    CHECK(std::get<std::vector<int>>(r1) == std::get<std::vector<int>>(r2));
  }
}

TEST_CASE("the 3x3 cyclic matrix is the smallest obstruction") {
  // Independent ground truth first: all 3! column orders fail.
  REQUIRE_FALSE(oracle_c1p(kCyclic3));

  const C1PResult r = test_c1p(kCyclic3);
  REQUIRE_FALSE(c1p_accepted(r));
  const TuckerWitness& w = std::get<TuckerWitness>(r);
  CHECK(w.rows == iota_vec(3));
  CHECK(w.cols == iota_vec(3));
  CHECK(w.label.family == TuckerFamily::m_i);
  CHECK(w.label.k == 1);
}

TEST_CASE("minimal_non_c1p_submatrix") {
  SUBCASE("whole matrix when already minimal") {
    // Brute force confirms every proper submatrix has the C1P.
    for (int i = 0; i < 3; ++i) {
      std::vector<int> rows;
      for (int r = 0; r < 3; ++r)
        if (r != i) rows.push_back(r);
      CHECK(oracle_c1p(submatrix(kCyclic3, rows, iota_vec(3))));
      CHECK(oracle_c1p(submatrix(kCyclic3, iota_vec(3), rows)));
    }
    const TuckerWitness w = minimal_non_c1p_submatrix(kCyclic3);
    CHECK(w.rows == iota_vec(3));
    CHECK(w.cols == iota_vec(3));
  }
  SUBCASE("padding rows and columns are deleted") {
    const auto padded =
        BinaryMatrix::from_rows({"1100", "0110", "1010", "0000"});
    REQUIRE_FALSE(oracle_c1p(padded));
    const TuckerWitness w = minimal_non_c1p_submatrix(padded);
    CHECK(w.rows == iota_vec(3));          // the all-zero row is gone
    CHECK(w.cols == std::vector<int>{0, 1, 2});  // the all-zero column is gone
  }
  SUBCASE("calling it on a C1P matrix is a contract violation") {
    CHECK_THROWS_AS(minimal_non_c1p_submatrix(gen_f1(5)), std::invalid_argument);
  }
}

TEST_CASE("classify_tucker") {
  SUBCASE("smallest cyclic matrix is M_I(1)") {
    const TuckerWitness w{iota_vec(3), iota_vec(3), {}};
    const TuckerLabel label = classify_tucker(kCyclic3, w);
    CHECK(label.family == TuckerFamily::m_i);
    CHECK(label.k == 1);
  }
  SUBCASE("a shuffled M_IV classifies as M_IV") {
    const BinaryMatrix m4 = gen_tucker(TuckerFamily::m_iv);
    const BinaryMatrix shuffled =
        submatrix(m4, {2, 0, 3, 1}, {5, 3, 0, 1, 4, 2});
    const TuckerWitness w{iota_vec(4), iota_vec(6), {}};
    CHECK(classify_tucker(shuffled, w).family == TuckerFamily::m_iv);
  }
  SUBCASE("each family instance classifies as itself") {
    for (int k = 1; k <= 3; ++k) {
      for (TuckerFamily f :
           {TuckerFamily::m_i, TuckerFamily::m_ii, TuckerFamily::m_iii}) {
        const BinaryMatrix a = gen_tucker(f, k);
        const TuckerWitness w{iota_vec(a.rows()), iota_vec(a.cols()), {}};
        const TuckerLabel label = classify_tucker(a, w);
        CHECK(label.family == f);
        CHECK(label.k == k);
      }
    }
    const BinaryMatrix m5 = gen_tucker(TuckerFamily::m_v);
    const TuckerWitness w{iota_vec(4), iota_vec(5), {}};
    CHECK(classify_tucker(m5, w).family == TuckerFamily::m_v);
  }
  SUBCASE("a C1P selection is rejected as a witness") {
    const TuckerWitness w{{0, 1}, iota_vec(3), {}};
    CHECK_THROWS_AS(classify_tucker(kCyclic3, w), std::invalid_argument);
  }
}

TEST_CASE("test_c1p agrees with the oracle on random matrices") {
  std::mt19937_64 rng(555);
  for (int iter = 0; iter < 400; ++iter) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const int m = 1 + static_cast<int>(rng() % 6);
    const BinaryMatrix a = gen_random_matrix(n, m, 0.5, rng());
    CHECK(c1p_accepted(test_c1p(a)) == oracle_c1p(a));
  }
}

TEST_CASE("witness invariants hold on random non-C1P matrices") {
  std::mt19937_64 rng(77);
  int found = 0;
  for (int iter = 0; iter < 300 && found < 40; ++iter) {
    const BinaryMatrix a = gen_random_matrix(4 + static_cast<int>(rng() % 3),
                                             5 + static_cast<int>(rng() % 3), 0.5, rng());
    const C1PResult r = test_c1p(a);
    if (c1p_accepted(r)) continue;
    ++found;
    const TuckerWitness& w = std::get<TuckerWitness>(r);
    const BinaryMatrix sub = submatrix(a, w.rows, w.cols);
    CHECK_FALSE(oracle_c1p(sub));
    for (size_t i = 0; i < w.rows.size(); ++i) {
      std::vector<int> rs = w.rows;
      rs.erase(rs.begin() + i);
      if (!rs.empty()) CHECK(oracle_c1p(submatrix(a, rs, w.cols)));
    }
    for (size_t j = 0; j < w.cols.size(); ++j) {
      std::vector<int> cs = w.cols;
      cs.erase(cs.begin() + j);
      if (!cs.empty()) CHECK(oracle_c1p(submatrix(a, w.rows, cs)));
    }
  }
  CHECK(found > 0);
}

TEST_CASE("monotonicity: submatrices of C1P matrices are C1P") {
  std::mt19937_64 rng(31337);
  for (int iter = 0; iter < 100; ++iter) {
    const BinaryMatrix a = gen_random_two_nested(5 + static_cast<int>(rng() % 3),
                                                 5 + static_cast<int>(rng() % 3), rng());
    REQUIRE(c1p_accepted(test_c1p(a)));
    std::vector<int> rows, cols;
    for (int i = 0; i < a.rows(); ++i)
      if (rng() % 2) rows.push_back(i);
    for (int j = 0; j < a.cols(); ++j)
      if (rng() % 2) cols.push_back(j);
    if (rows.empty() || cols.empty()) continue;
    CHECK(c1p_accepted(test_c1p(submatrix(a, rows, cols))));
  }
}
