#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nested2 {

/// Dense (0,1)-matrix. Rows and columns are 0-based internally; all
/// serialized formats and certificates use 1-based indices.
class BinaryMatrix {
 public:
  BinaryMatrix(int n_rows, int n_cols);

  /// Builds from row strings like {"1100", "0110"}. Throws on ragged rows,
  /// characters outside {0,1}, or empty dimensions.
  static BinaryMatrix from_rows(const std::vector<std::string>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool at(int r, int c) const { return bits_[static_cast<size_t>(r) * cols_ + c] != 0; }
  void set(int r, int c, bool v) { bits_[static_cast<size_t>(r) * cols_ + c] = v ? 1 : 0; }

  /// Columns carrying a 1 in row r, ascending.
  std::vector<int> row_support(int r) const;

  std::string row_string(int r) const;

  bool operator==(const BinaryMatrix& other) const = default;

 private:
  int rows_;
  int cols_;
  std::vector<std::uint8_t> bits_;
};

/// Support-set relation of an ordered row pair. Equal supports count as
/// nested (mutual containment); an all-zero row is contained in every row,
/// so it is never crossing.
enum class RowRelation { disjoint, first_in_second, second_in_first, equal, crossing };

/// Leftmost/rightmost 1 of a row; present is false for an all-zero row,
/// in which case first/last are meaningless.
struct RowInterval {
  int row = 0;
  bool present = false;
  int first = -1;
  int last = -1;
};

RowInterval row_interval(const BinaryMatrix& a, int row);

RowRelation relate_rows(const BinaryMatrix& a, int i, int k);

bool rows_cross(const BinaryMatrix& a, int i, int k);

/// Column j of the result is column pi[j] of the input; pi must be a
/// permutation of 0..cols-1.
BinaryMatrix permute_columns(const BinaryMatrix& a, const std::vector<int>& pi);

/// True iff every nonzero row has its 1s in one contiguous block under the
/// current column order.
bool has_consecutive_rows(const BinaryMatrix& a);

/// Selects the given rows and columns, in the listed order.
BinaryMatrix submatrix(const BinaryMatrix& a, const std::vector<int>& rows,
                       const std::vector<int>& cols);

bool is_permutation(const std::vector<int>& pi, int n);

std::vector<int> inverse_permutation(const std::vector<int>& pi);

/// Row and column injections realizing `pattern` inside `haystack` up to row
/// and column permutations (a configuration). rows[i]/cols[j] give the
/// haystack indices for pattern position (i, j).
struct ConfigMatch {
  std::vector<int> rows;
  std::vector<int> cols;
};

/// Backtracking search for a configuration match; nullopt when `pattern`
/// does not occur in `haystack`. Unbounded; callers wanting guards use
/// oracle_contains_configuration.
std::optional<ConfigMatch> find_configuration(const BinaryMatrix& haystack,
                                              const BinaryMatrix& pattern);

/// Columns completing a configuration match whose row injection is already
/// fixed: distinct haystack columns, one per pattern column, such that
/// haystack[row_map[i]][cols[j]] == pattern[i][j]. Lexicographically least
/// assignment in pattern-column order; nullopt when none exists.
std::optional<std::vector<int>> match_configuration_columns(const BinaryMatrix& haystack,
                                                            const BinaryMatrix& pattern,
                                                            const std::vector<int>& row_map);

}  // namespace nested2
