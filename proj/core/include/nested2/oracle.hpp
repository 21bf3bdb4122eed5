#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nested2/graphs.hpp"
#include "nested2/matrix.hpp"

namespace nested2 {

// Deliberately naive ground truth with hard size guards. Used by tests and
// verification paths only, never by the recognizers.

inline constexpr int kOracleMaxCols = 8;
inline constexpr int kOracleMaxRows = 12;
inline constexpr int kOracleMaxConfigRows = 9;
inline constexpr int kOracleMaxGraph = 10;

/// All column orders; true iff some order makes every row contiguous.
bool oracle_c1p(const BinaryMatrix& a);

/// C1P and some row bipartition with both classes crossing-free.
bool oracle_two_nested(const BinaryMatrix& a);

/// C1P and no crossing pair.
bool oracle_nested(const BinaryMatrix& a);

/// Backtracking search for `m` inside `a` up to row and column
/// permutations.
std::optional<ConfigMatch> oracle_contains_configuration(const BinaryMatrix& a,
                                                         const BinaryMatrix& m);

/// Every (K, S) split partition, by exhaustive subset check; K sorted
/// ascending, pairs ordered by K.
std::vector<std::pair<std::vector<int>, std::vector<int>>> oracle_all_split_partitions(
    const Graph& g);

}  // namespace nested2
