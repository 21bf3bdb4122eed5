#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "nested2/generators.hpp"
#include "nested2/matrix.hpp"

using namespace nested2;

TEST_CASE("row_interval reads the leftmost and rightmost one") {
  const auto a = BinaryMatrix::from_rows({"11100", "00000", "01110"});
  SUBCASE("nonzero row") {
    const RowInterval iv = row_interval(a, 0);
    CHECK(iv.present);
    CHECK(iv.first == 0);
    CHECK(iv.last == 2);
  }
  SUBCASE("all-zero row is not present") {
    CHECK_FALSE(row_interval(a, 1).present);
  }
  SUBCASE("first row of F0") {
    const RowInterval iv = row_interval(gen_f0(), 0);
    CHECK(iv.first == 0);
    CHECK(iv.last == 2);
  }
  SUBCASE("out of range row is a usage error") {
    CHECK_THROWS_AS(row_interval(a, 3), std::invalid_argument);
    CHECK_THROWS_AS(row_interval(a, -1), std::invalid_argument);
  }
}

TEST_CASE("relate_rows classifies support relations") {
  SUBCASE("crossing") {
    const auto a = BinaryMatrix::from_rows({"110", "011"});
    CHECK(relate_rows(a, 0, 1) == RowRelation::crossing);
  }
  SUBCASE("containment") {
    const auto a = BinaryMatrix::from_rows({"010", "111"});
    CHECK(relate_rows(a, 0, 1) == RowRelation::first_in_second);
    CHECK(relate_rows(a, 1, 0) == RowRelation::second_in_first);
  }
  SUBCASE("disjoint") {
    const auto a = BinaryMatrix::from_rows({"11000", "00011"});
    CHECK(relate_rows(a, 0, 1) == RowRelation::disjoint);
  }
  SUBCASE("equal supports") {
    const auto a = BinaryMatrix::from_rows({"0110", "0110"});
    CHECK(relate_rows(a, 0, 1) == RowRelation::equal);
  }
  SUBCASE("all-zero rows are contained, never crossing") {
    const auto a = BinaryMatrix::from_rows({"000", "101", "000"});
    CHECK(relate_rows(a, 0, 1) == RowRelation::first_in_second);
    CHECK(relate_rows(a, 1, 2) == RowRelation::second_in_first);
    CHECK(relate_rows(a, 0, 2) == RowRelation::equal);
  }
  SUBCASE("same row index is a usage error") {
    const auto a = BinaryMatrix::from_rows({"10", "01"});
    CHECK_THROWS_AS(relate_rows(a, 1, 1), std::invalid_argument);
  }
}

TEST_CASE("permute_columns") {
  const auto a = BinaryMatrix::from_rows({"110"});
  SUBCASE("identity keeps the matrix") {
    CHECK(permute_columns(a, {0, 1, 2}) == a);
  }
  SUBCASE("reversal") {
    CHECK(permute_columns(a, {2, 1, 0}) == BinaryMatrix::from_rows({"011"}));
  }
  SUBCASE("non-bijective pi is a usage error") {
    CHECK_THROWS_AS(permute_columns(a, {0, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(permute_columns(a, {0, 1}), std::invalid_argument);
  }
}

TEST_CASE("has_consecutive_rows") {
  CHECK(has_consecutive_rows(gen_f0()));
  CHECK_FALSE(has_consecutive_rows(BinaryMatrix::from_rows({"101"})));
  CHECK(has_consecutive_rows(BinaryMatrix::from_rows({"00"})));
}

TEST_CASE("pairwise relation properties under random inputs") {
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 300; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const int m = 1 + static_cast<int>(rng() % 6);
    const BinaryMatrix a = gen_random_matrix(n, m, 0.45, rng());

    // Symmetry up to swapping the containment directions.
    for (int i = 0; i < n; ++i) {
      for (int k = i + 1; k < n; ++k) {
        const RowRelation r = relate_rows(a, i, k);
        const RowRelation s = relate_rows(a, k, i);
        if (r == RowRelation::first_in_second) CHECK(s == RowRelation::second_in_first);
        else if (r == RowRelation::second_in_first) CHECK(s == RowRelation::first_in_second);
        else CHECK(r == s);

        // Crossing iff shared column plus a private column on each side.
        bool shared = false, only_i = false, only_k = false;
        for (int j = 0; j < m; ++j) {
          shared |= a.at(i, j) && a.at(k, j);
          only_i |= a.at(i, j) && !a.at(k, j);
          only_k |= !a.at(i, j) && a.at(k, j);
        }
        CHECK((r == RowRelation::crossing) == (shared && only_i && only_k));
      }
    }

    // Relations are invariant under any column permutation.
    std::vector<int> pi(m);
    for (int j = 0; j < m; ++j) pi[j] = j;
    std::shuffle(pi.begin(), pi.end(), rng);
    const BinaryMatrix b = permute_columns(a, pi);
    for (int i = 0; i < n; ++i)
      for (int k = i + 1; k < n; ++k)
        CHECK(relate_rows(a, i, k) == relate_rows(b, i, k));

    // Intervals still point at ones after permutation.
    for (int i = 0; i < n; ++i) {
      const RowInterval iv = row_interval(b, i);
      if (iv.present) {
        CHECK(b.at(i, iv.first));
        CHECK(b.at(i, iv.last));
      }
    }

    // Round trip through the inverse permutation.
    CHECK(permute_columns(b, inverse_permutation(pi)) == a);
  }
}

TEST_CASE("find_configuration locates patterns up to permutations") {
  SUBCASE("G0 inside F0") {
    const auto match = find_configuration(gen_f0(), gen_g0());
    REQUIRE(match.has_value());
    CHECK(submatrix(gen_f0(), match->rows, match->cols) == gen_g0());
  }
  SUBCASE("identity on itself") {
    const auto a = BinaryMatrix::from_rows({"10", "01"});
    REQUIRE(find_configuration(a, a).has_value());
  }
  SUBCASE("all-ones pattern absent from the identity") {
    const auto a = BinaryMatrix::from_rows({"10", "01"});
    const auto ones = BinaryMatrix::from_rows({"11", "11"});
    CHECK_FALSE(find_configuration(a, ones).has_value());
  }
}
