#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "nested2/matrix.hpp"
#include "nested2/recognition.hpp"

namespace nested2 {

/// Simple undirected graph; vertices 0-based internally.
class Graph {
 public:
  explicit Graph(int n);

  int vertices() const { return n_; }
  int edge_count() const { return edge_count_; }

  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return adj_[static_cast<size_t>(u) * n_ + v] != 0; }
  int degree(int v) const;

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  int n_;
  int edge_count_ = 0;
  std::vector<std::uint8_t> adj_;
};

/// Split partition plus the row/column orderings used to lay out A(S,K):
/// s_order lists S (one matrix row per entry), k_order lists K (one column
/// per entry).
struct SplitGraph {
  Graph graph;
  std::vector<int> k_order;
  std::vector<int> s_order;
};

/// Obstruction to being a split graph: an induced 2K2, C4 or C5.
struct NotSplitWitness {
  enum class Kind { two_k2, c4, c5 };
  Kind kind;
  std::vector<int> vertices;
};

/// Induced path a-b-c-d plus an apex adjacent to all four.
struct GemWitness {
  int a, b, c, d, apex;
};

using SplitResult = std::variant<SplitGraph, NotSplitWitness>;

/// Degree-sequence split recognition; K = the high-degree side. The
/// witness on failure is the lexicographically first induced 2K2/C4/C5.
SplitResult find_split_partition(const Graph& g);

/// |S| x |K| matrix with A(i,j) = 1 iff s_order[i] is adjacent to
/// k_order[j]. Rejects an empty S.
BinaryMatrix adjacency_matrix_sk(const SplitGraph& sg);

/// All split partitions lie within one vertex swap of a fixed one, so this
/// candidate set is complete.
std::vector<SplitGraph> split_partition_candidates(const Graph& g);

struct NestedGraphAccept {
  SplitGraph sg;
  std::vector<int> ordering;  // column permutation of k_order
};

using NestedGraphResult = std::variant<NestedGraphAccept, GemWitness, NotSplitWitness>;

NestedGraphResult is_nested_graph(const Graph& g);

struct TwoNestedGraphAccept {
  SplitGraph sg;
  std::vector<int> ordering;
  RowBipartition bipartition;  // indices into s_order
};

struct TwoNestedGraphReject {
  SplitGraph sg;
  std::variant<TuckerWitness, TwoNestedConfigReject> matrix_cert;
};

using TwoNestedGraphResult =
    std::variant<TwoNestedGraphAccept, TwoNestedGraphReject, NotSplitWitness>;

TwoNestedGraphResult is_two_nested_graph(const Graph& g);

/// Exhaustive search over 5-vertex subsets; lexicographically first witness.
std::optional<GemWitness> find_induced_gem(const Graph& g);

bool is_clique(const Graph& g, const std::vector<int>& vs);
bool is_independent_set(const Graph& g, const std::vector<int>& vs);

}  // namespace nested2
