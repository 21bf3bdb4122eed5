#pragma once

#include <variant>
#include <vector>

#include "nested2/c1p.hpp"
#include "nested2/matrix.hpp"

namespace nested2 {

/// Auxiliary graph H(A): one vertex per row, edges between crossing rows.
class CrossingGraph {
 public:
  explicit CrossingGraph(int n);

  int vertices() const { return n_; }
  bool adjacent(int i, int k) const { return adj_[static_cast<size_t>(i) * n_ + k] != 0; }
  void add_edge(int i, int k);
  const std::vector<int>& neighbors(int i) const { return nbr_[i]; }
  int edge_count() const { return edges_; }

 private:
  int n_;
  int edges_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<int>> nbr_;
};

CrossingGraph build_crossing_graph(const BinaryMatrix& a);

/// Two row classes, each free of crossing pairs (laminar).
struct RowBipartition {
  std::vector<int> part1;
  std::vector<int> part2;
};

using OddCycle = std::vector<int>;  // vertex sequence, closed implicitly

/// Proper 2-coloring when bipartite, else a shortest odd cycle (shortest
/// odd cycles are chordless, hence induced).
std::variant<RowBipartition, OddCycle> two_color(const CrossingGraph& h);

/// Crossing pair certificate: the 2x3 submatrix on rows (row_a, row_b) and
/// columns (col_a, col_shared, col_b), read in that order, is {110, 011}.
struct G0Witness {
  int row_a, row_b;
  int col_a, col_shared, col_b;
};

struct NestedAccept {
  std::vector<int> ordering;
};

using NestedResult = std::variant<NestedAccept, G0Witness>;

NestedResult is_nested(const BinaryMatrix& a);

enum class ConfigFamily { f0, f1, f2 };

std::string config_family_name(ConfigFamily f);

/// Forbidden-configuration certificate: the submatrix of the C1P-ordered
/// matrix read in (row_order, col_order) equals the generated family matrix
/// entry for entry; cycle is the inducing chordless odd cycle in H.
struct ConfigWitness {
  ConfigFamily family;
  int k;                        // 3 for F0, odd >= 5 otherwise
  std::vector<int> row_order;   // row indices of A
  std::vector<int> col_order;   // column indices of the ordered matrix
  OddCycle cycle;               // row indices of A
  std::vector<int> ordering;    // the C1P column ordering that was applied
};

struct TwoNestedAccept {
  std::vector<int> ordering;
  RowBipartition bipartition;
};

struct TwoNestedConfigReject {
  OddCycle cycle;
  ConfigWitness witness;
};

using TwoNestedResult = std::variant<TwoNestedAccept, TuckerWitness, TwoNestedConfigReject>;

TwoNestedResult is_two_nested(const BinaryMatrix& a);

/// Builds the F0/F1(k)/F2(k) witness from an induced odd cycle of the
/// crossing graph of a C1P-ordered matrix. Tries the 2k cycle labelings; a
/// chordless odd cycle always yields one, so failure to verify throws
/// std::logic_error (it signals a bug, never an input condition).
ConfigWitness extract_f_configuration(const BinaryMatrix& ordered, const OddCycle& cycle);

/// True iff `cycle` is a chordless cycle of H with distinct vertices.
bool is_induced_cycle(const CrossingGraph& h, const OddCycle& cycle);

}  // namespace nested2
