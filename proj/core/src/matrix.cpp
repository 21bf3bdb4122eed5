#include "nested2/matrix.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace nested2 {

BinaryMatrix::BinaryMatrix(int n_rows, int n_cols) : rows_(n_rows), cols_(n_cols) {
  if (n_rows < 1 || n_cols < 1)
    throw std::invalid_argument("BinaryMatrix: dimensions must be at least 1x1");
  bits_.assign(static_cast<size_t>(n_rows) * n_cols, 0);
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::string>& rows) {
  if (rows.empty()) throw std::invalid_argument("from_rows: no rows");
  const int m = static_cast<int>(rows.front().size());
  BinaryMatrix a(static_cast<int>(rows.size()), m);
  for (int i = 0; i < a.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != m)
      throw std::invalid_argument("from_rows: ragged row " + std::to_string(i + 1));
    for (int j = 0; j < m; ++j) {
      const char c = rows[i][j];
      if (c != '0' && c != '1')
        throw std::invalid_argument("from_rows: invalid character");
      a.set(i, j, c == '1');
    }
  }
  return a;
}

std::vector<int> BinaryMatrix::row_support(int r) const {
  std::vector<int> s;
  for (int j = 0; j < cols_; ++j)
    if (at(r, j)) s.push_back(j);
  return s;
}

std::string BinaryMatrix::row_string(int r) const {
  std::string s(static_cast<size_t>(cols_), '0');
  for (int j = 0; j < cols_; ++j)
    if (at(r, j)) s[j] = '1';
  return s;
}

RowInterval row_interval(const BinaryMatrix& a, int row) {
  if (row < 0 || row >= a.rows())
    throw std::invalid_argument("row_interval: row index out of range");
  RowInterval iv;
  iv.row = row;
  for (int j = 0; j < a.cols(); ++j) {
    if (a.at(row, j)) {
      if (!iv.present) {
        iv.present = true;
        iv.first = j;
      }
      iv.last = j;
    }
  }
  return iv;
}

RowRelation relate_rows(const BinaryMatrix& a, int i, int k) {
  if (i == k) throw std::invalid_argument("relate_rows: row indices must differ");
  if (i < 0 || i >= a.rows() || k < 0 || k >= a.rows())
    throw std::invalid_argument("relate_rows: row index out of range");
  bool i_only = false, k_only = false, both = false;
  for (int j = 0; j < a.cols(); ++j) {
    const bool bi = a.at(i, j), bk = a.at(k, j);
    if (bi && bk)
      both = true;
    else if (bi)
      i_only = true;
    else if (bk)
      k_only = true;
  }
  if (!i_only && !k_only) return RowRelation::equal;
  if (!i_only) return RowRelation::first_in_second;
  if (!k_only) return RowRelation::second_in_first;
  if (!both) return RowRelation::disjoint;
  return RowRelation::crossing;
}

bool rows_cross(const BinaryMatrix& a, int i, int k) {
  return relate_rows(a, i, k) == RowRelation::crossing;
}

bool is_permutation(const std::vector<int>& pi, int n) {
  if (static_cast<int>(pi.size()) != n) return false;
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : pi) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

std::vector<int> inverse_permutation(const std::vector<int>& pi) {
  std::vector<int> inv(pi.size());
  for (int j = 0; j < static_cast<int>(pi.size()); ++j) inv[pi[j]] = j;
  return inv;
}

BinaryMatrix permute_columns(const BinaryMatrix& a, const std::vector<int>& pi) {
  if (!is_permutation(pi, a.cols()))
    throw std::invalid_argument("permute_columns: not a permutation of the columns");
  BinaryMatrix b(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.at(i, pi[j])) b.set(i, j, true);
  return b;
}

bool has_consecutive_rows(const BinaryMatrix& a) {
  for (int i = 0; i < a.rows(); ++i) {
    const RowInterval iv = row_interval(a, i);
    if (!iv.present) continue;
    for (int j = iv.first; j <= iv.last; ++j)
      if (!a.at(i, j)) return false;
  }
  return true;
}

BinaryMatrix submatrix(const BinaryMatrix& a, const std::vector<int>& rows,
                       const std::vector<int>& cols) {
  if (rows.empty() || cols.empty())
    throw std::invalid_argument("submatrix: empty selection");
  BinaryMatrix b(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] < 0 || rows[i] >= a.rows())
      throw std::invalid_argument("submatrix: row index out of range");
    for (size_t j = 0; j < cols.size(); ++j) {
      if (cols[j] < 0 || cols[j] >= a.cols())
        throw std::invalid_argument("submatrix: column index out of range");
      if (a.at(rows[i], cols[j])) b.set(static_cast<int>(i), static_cast<int>(j), true);
    }
  }
  return b;
}

namespace {

// Kuhn-style augmenting path over pattern-column -> haystack-column
// candidate sets.
bool augment(int pcol, const std::vector<std::vector<int>>& cand,
             std::vector<int>& match_of_hay, std::vector<char>& visited) {
  for (int hc : cand[pcol]) {
    if (visited[hc]) continue;
    visited[hc] = 1;
    if (match_of_hay[hc] < 0 || augment(match_of_hay[hc], cand, match_of_hay, visited)) {
      match_of_hay[hc] = pcol;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> match_configuration_columns(const BinaryMatrix& hay,
                                                            const BinaryMatrix& pat,
                                                            const std::vector<int>& row_map) {
  const int pc = pat.cols(), hc = hay.cols();
  std::vector<std::vector<int>> cand(static_cast<size_t>(pc));
  for (int j = 0; j < pc; ++j) {
    for (int c = 0; c < hc; ++c) {
      bool ok = true;
      for (int i = 0; i < pat.rows() && ok; ++i)
        if (hay.at(row_map[i], c) != pat.at(i, j)) ok = false;
      if (ok) cand[j].push_back(c);
    }
    if (cand[j].empty()) return std::nullopt;
  }
  auto feasible = [&](const std::vector<std::vector<int>>& sets) {
    std::vector<int> match_of_hay(static_cast<size_t>(hc), -1);
    for (int j = 0; j < pc; ++j) {
      std::vector<char> visited(static_cast<size_t>(hc), 0);
      if (!augment(j, sets, match_of_hay, visited)) return false;
    }
    return true;
  };
  if (!feasible(cand)) return std::nullopt;
  // Fix columns one by one, smallest candidate first.
  std::vector<int> chosen(static_cast<size_t>(pc), -1);
  std::vector<char> used(static_cast<size_t>(hc), 0);
  for (int j = 0; j < pc; ++j) {
    bool fixed = false;
    for (int c : cand[j]) {
      if (used[c]) continue;
      auto trial = cand;
      for (int t = 0; t <= j; ++t) trial[t] = {t < j ? chosen[t] : c};
      if (feasible(trial)) {
        chosen[j] = c;
        used[c] = 1;
        fixed = true;
        break;
      }
    }
    if (!fixed) return std::nullopt;
  }
  return chosen;
}

namespace {

bool search_rows(const BinaryMatrix& hay, const BinaryMatrix& pat, size_t depth,
                 std::vector<int>& row_map, std::vector<char>& used,
                 std::optional<ConfigMatch>& out) {
  if (depth == static_cast<size_t>(pat.rows())) {
    auto cols = match_configuration_columns(hay, pat, row_map);
    if (!cols) return false;
    out = ConfigMatch{row_map, *cols};
    return true;
  }
  for (int r = 0; r < hay.rows(); ++r) {
    if (used[r]) continue;
    row_map[depth] = r;
    used[r] = 1;
    // Prune: each pattern column must still have some compatible column.
    bool viable = true;
    for (int j = 0; j < pat.cols() && viable; ++j) {
      bool any = false;
      for (int c = 0; c < hay.cols() && !any; ++c) {
        bool ok = true;
        for (size_t i = 0; i <= depth && ok; ++i)
          if (hay.at(row_map[i], c) != pat.at(static_cast<int>(i), j)) ok = false;
        any = ok;
      }
      viable = any;
    }
    if (viable && search_rows(hay, pat, depth + 1, row_map, used, out)) return true;
    used[r] = 0;
  }
  return false;
}

}  // namespace

std::optional<ConfigMatch> find_configuration(const BinaryMatrix& haystack,
                                              const BinaryMatrix& pattern) {
  if (pattern.rows() > haystack.rows() || pattern.cols() > haystack.cols())
    return std::nullopt;
  std::vector<int> row_map(static_cast<size_t>(pattern.rows()), -1);
  std::vector<char> used(static_cast<size_t>(haystack.rows()), 0);
  std::optional<ConfigMatch> out;
  search_rows(haystack, pattern, 0, row_map, used, out);
  return out;
}

}  // namespace nested2
