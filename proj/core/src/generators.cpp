#include "nested2/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include "nested2/oracle.hpp"

namespace nested2 {

namespace {

void require_odd_k(int k) {
  if (k < 5 || k % 2 == 0)
    throw std::invalid_argument("family parameter must be odd and at least 5, got " +
                                std::to_string(k));
}

// Deterministic cross-platform randomness: mt19937_64 has a fixed output
// sequence; we map raw bits ourselves instead of going through
// distributions, whose streams differ between standard libraries.
double rand_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int rand_below(std::mt19937_64& rng, int n) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

}  // namespace

BinaryMatrix gen_f0() {
  return BinaryMatrix::from_rows({"11100", "01110", "00111"});
}

BinaryMatrix gen_f1(int k) {
  require_odd_k(k);
  BinaryMatrix a(k, k - 1);
  for (int j = 2; j <= k - 1; ++j) a.set(0, j - 1, true);  // row 1: columns 2..k-1
  for (int j = 1; j <= k - 2; ++j) a.set(1, j - 1, true);  // row 2: columns 1..k-2
  for (int i = 3; i <= k; ++i) {                           // staircase, descending
    a.set(i - 1, k - i + 1 - 1, true);
    a.set(i - 1, k - i + 2 - 1, true);
  }
  return a;
}

BinaryMatrix gen_f2(int k) {
  require_odd_k(k);
  BinaryMatrix a(k, k);
  for (int j = 2; j <= k - 1; ++j) a.set(0, j - 1, true);  // row 1: columns 2..k-1
  for (int i = 2; i <= k; ++i) {                           // staircase, ascending
    a.set(i - 1, i - 2, true);
    a.set(i - 1, i - 1, true);
  }
  return a;
}

BinaryMatrix gen_g0() {
  return BinaryMatrix::from_rows({"110", "011"});
}

namespace {

BinaryMatrix tucker_entries(TuckerFamily family, int k) {
  auto path_rows = [](BinaryMatrix& a, int count) {
    for (int i = 0; i < count; ++i) {
      a.set(i, i, true);
      a.set(i, i + 1, true);
    }
  };
  switch (family) {
    case TuckerFamily::m_i: {
      if (k < 1) throw std::invalid_argument("M_I requires k >= 1");
      BinaryMatrix a(k + 2, k + 2);
      path_rows(a, k + 1);
      a.set(k + 1, 0, true);
      a.set(k + 1, k + 1, true);
      return a;
    }
    case TuckerFamily::m_ii: {
      if (k < 1) throw std::invalid_argument("M_II requires k >= 1");
      BinaryMatrix a(k + 3, k + 3);
      path_rows(a, k + 1);
      for (int j = 1; j <= k + 1; ++j) a.set(k + 1, j - 1, true);
      a.set(k + 1, k + 2, true);
      for (int j = 2; j <= k + 2; ++j) a.set(k + 2, j - 1, true);
      a.set(k + 2, k + 2, true);
      return a;
    }
    case TuckerFamily::m_iii: {
      if (k < 1) throw std::invalid_argument("M_III requires k >= 1");
      BinaryMatrix a(k + 2, k + 3);
      path_rows(a, k + 1);
      for (int j = 2; j <= k + 1; ++j) a.set(k + 1, j - 1, true);
      a.set(k + 1, k + 2, true);
      return a;
    }
    case TuckerFamily::m_iv: {
      if (k != 0) throw std::invalid_argument("M_IV takes no parameter");
      return BinaryMatrix::from_rows({"110000", "001100", "000011", "101010"});
    }
    case TuckerFamily::m_v: {
      if (k != 0) throw std::invalid_argument("M_V takes no parameter");
      return BinaryMatrix::from_rows({"11000", "00110", "11110", "10101"});
    }
    default:
      throw std::invalid_argument("gen_tucker: unknown family");
  }
}

bool deletion_minimal_non_c1p(const BinaryMatrix& a) {
  // has_c1p (not test_c1p): witness extraction would classify, which
  // regenerates the family under validation and never terminates.
  auto c1p = [](const BinaryMatrix& x) {
    if (x.cols() <= kOracleMaxCols) return oracle_c1p(x);
    return has_c1p(x);
  };
  if (c1p(a)) return false;
  std::vector<int> all_rows(a.rows()), all_cols(a.cols());
  for (int i = 0; i < a.rows(); ++i) all_rows[i] = i;
  for (int j = 0; j < a.cols(); ++j) all_cols[j] = j;
  for (int i = 0; i < a.rows(); ++i) {
    std::vector<int> rs;
    for (int r : all_rows)
      if (r != i) rs.push_back(r);
    if (!c1p(submatrix(a, rs, all_cols))) return false;
  }
  for (int j = 0; j < a.cols(); ++j) {
    std::vector<int> cs;
    for (int c : all_cols)
      if (c != j) cs.push_back(c);
    if (!c1p(submatrix(a, all_rows, cs))) return false;
  }
  return true;
}

}  // namespace

BinaryMatrix gen_tucker(TuckerFamily family, int k) {
  BinaryMatrix a = tucker_entries(family, k);
  // The entries come from the literature, not this codebase's own results;
  // gate every instance on the definitional properties.
  if (!deletion_minimal_non_c1p(a))
    throw std::logic_error("gen_tucker: generated " + tucker_family_name(family) +
                           " instance failed validation (non-C1P + deletion-minimal)");
  return a;
}

BinaryMatrix gen_random_matrix(int n, int m, double p, std::uint64_t seed) {
  if (n < 1 || m < 1) throw std::invalid_argument("gen_random_matrix: need n, m >= 1");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("gen_random_matrix: p outside [0, 1]");
  std::mt19937_64 rng(seed);
  BinaryMatrix a(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      if (rand_unit(rng) < p) a.set(i, j, true);
  return a;
}

BinaryMatrix gen_random_two_nested(int n, int m, std::uint64_t seed) {
  if (n < 1 || m < 1) throw std::invalid_argument("gen_random_two_nested: need n, m >= 1");
  std::mt19937_64 rng(seed);
  BinaryMatrix a(n, m);
  // Two laminar interval families under the identity column order. Each row
  // draws an interval and is redrawn while it crosses its class; a single
  // column never crosses anything, so the fallback always terminates.
  std::vector<std::vector<std::pair<int, int>>> classes(2);
  auto crosses = [](std::pair<int, int> x, std::pair<int, int> y) {
    const bool meet = x.first <= y.second && y.first <= x.second;
    if (!meet) return false;
    const bool x_in_y = y.first <= x.first && x.second <= y.second;
    const bool y_in_x = x.first <= y.first && y.second <= x.second;
    return !x_in_y && !y_in_x;
  };
  for (int i = 0; i < n; ++i) {
    const int cls = rand_below(rng, 2);
    std::pair<int, int> iv;
    bool placed = false;
    for (int attempt = 0; attempt < 64 && !placed; ++attempt) {
      int a1 = rand_below(rng, m), a2 = rand_below(rng, m);
      iv = {std::min(a1, a2), std::max(a1, a2)};
      placed = true;
      for (auto other : classes[cls])
        if (crosses(iv, other)) {
          placed = false;
          break;
        }
    }
    if (!placed) {
      int c = rand_below(rng, m);
      iv = {c, c};
    }
    classes[cls].push_back(iv);
    for (int j = iv.first; j <= iv.second; ++j) a.set(i, j, true);
  }
  return a;
}

Graph gen_random_split_graph(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_random_split_graph: need n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<int> clique, indep;
  for (int v = 0; v < n; ++v)
    (rand_below(rng, 2) == 0 ? clique : indep).push_back(v);
  Graph g(n);
  for (size_t i = 0; i < clique.size(); ++i)
    for (size_t j = i + 1; j < clique.size(); ++j) g.add_edge(clique[i], clique[j]);
  for (int s : indep)
    for (int v : clique)
      if (rand_below(rng, 2) == 0) g.add_edge(s, v);
  return g;
}

Graph gen_threshold_graph(const std::vector<bool>& creation) {
  Graph g(static_cast<int>(creation.size()) + 1);
  for (size_t i = 0; i < creation.size(); ++i) {
    const int v = static_cast<int>(i) + 1;
    if (creation[i])
      for (int u = 0; u < v; ++u) g.add_edge(u, v);
  }
  return g;
}

}  // namespace nested2
