#include "nested2/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nested2 {

namespace {

void guard(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("oracle guard exceeded: ") + what);
}

}  // namespace

bool oracle_c1p(const BinaryMatrix& a) {
  guard(a.cols() <= kOracleMaxCols, "oracle_c1p needs n_cols <= 8");
  std::vector<int> perm(a.cols());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < a.rows() && ok; ++i) {
      int first = -1, last = -1, count = 0;
      for (int j = 0; j < a.cols(); ++j) {
        if (a.at(i, perm[j])) {
          if (first < 0) first = j;
          last = j;
          ++count;
        }
      }
      if (count > 0 && last - first + 1 != count) ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

namespace {

bool class_crossing_free(const BinaryMatrix& a, const std::vector<int>& rows) {
  for (size_t x = 0; x < rows.size(); ++x)
    for (size_t y = x + 1; y < rows.size(); ++y)
      if (relate_rows(a, rows[x], rows[y]) == RowRelation::crossing) return false;
  return true;
}

}  // namespace

bool oracle_two_nested(const BinaryMatrix& a) {
  guard(a.rows() <= kOracleMaxRows, "oracle_two_nested needs n_rows <= 12");
  guard(a.cols() <= kOracleMaxCols, "oracle_two_nested needs n_cols <= 8");
  if (!oracle_c1p(a)) return false;
  const int n = a.rows();
  // Crossing-freeness does not depend on the column order, so the classes
  // need no separate ordering search. Row 0 pinned to the first class.
  for (std::uint64_t mask = 0; mask < (1ull << (n - 1)); ++mask) {
    std::vector<int> part1{0}, part2;
    for (int i = 1; i < n; ++i)
      ((mask >> (i - 1)) & 1 ? part2 : part1).push_back(i);
    if (class_crossing_free(a, part1) && class_crossing_free(a, part2)) return true;
  }
  return false;
}

bool oracle_nested(const BinaryMatrix& a) {
  guard(a.cols() <= kOracleMaxCols, "oracle_nested needs n_cols <= 8");
  if (!oracle_c1p(a)) return false;
  std::vector<int> all(a.rows());
  std::iota(all.begin(), all.end(), 0);
  return class_crossing_free(a, all);
}

std::optional<ConfigMatch> oracle_contains_configuration(const BinaryMatrix& a,
                                                         const BinaryMatrix& m) {
  guard(m.rows() <= kOracleMaxConfigRows, "oracle_contains_configuration needs |rows(M)| <= 9");
  guard(m.rows() <= a.rows() && m.cols() <= a.cols(),
        "oracle_contains_configuration needs dims(M) <= dims(A)");
  return find_configuration(a, m);
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> oracle_all_split_partitions(
    const Graph& g) {
  guard(g.vertices() <= kOracleMaxGraph, "oracle_all_split_partitions needs n <= 10");
  const int n = g.vertices();
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    std::vector<int> clique, indep;
    for (int v = 0; v < n; ++v) ((mask >> v) & 1 ? clique : indep).push_back(v);
    if (is_clique(g, clique) && is_independent_set(g, indep))
      out.emplace_back(clique, indep);
  }
  return out;
}

}  // namespace nested2
