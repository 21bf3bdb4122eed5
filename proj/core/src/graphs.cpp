#include "nested2/graphs.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace nested2 {

Graph::Graph(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("Graph: need at least one vertex");
  adj_.assign(static_cast<size_t>(n) * n, 0);
}

void Graph::add_edge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("Graph::add_edge: bad edge");
  if (adjacent(u, v)) return;
  adj_[static_cast<size_t>(u) * n_ + v] = 1;
  adj_[static_cast<size_t>(v) * n_ + u] = 1;
  ++edge_count_;
}

int Graph::degree(int v) const {
  int d = 0;
  for (int u = 0; u < n_; ++u)
    if (adjacent(v, u)) ++d;
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

bool is_clique(const Graph& g, const std::vector<int>& vs) {
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

bool is_independent_set(const Graph& g, const std::vector<int>& vs) {
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) return false;
  return true;
}

namespace {

// Lexicographically first induced 2K2, C4 or C5; such a subgraph exists in
// every non-split graph.
NotSplitWitness not_split_witness(const Graph& g) {
  const int n = g.vertices();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          const int vs[4] = {a, b, c, d};
          int deg[4] = {0, 0, 0, 0};
          int edges = 0;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (g.adjacent(vs[i], vs[j])) {
                ++deg[i];
                ++deg[j];
                ++edges;
              }
          if (edges == 2 && deg[0] == 1 && deg[1] == 1 && deg[2] == 1 && deg[3] == 1)
            return NotSplitWitness{NotSplitWitness::Kind::two_k2, {a, b, c, d}};
          if (edges == 4 && deg[0] == 2 && deg[1] == 2 && deg[2] == 2 && deg[3] == 2)
            return NotSplitWitness{NotSplitWitness::Kind::c4, {a, b, c, d}};
        }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          for (int e = d + 1; e < n; ++e) {
            const int vs[5] = {a, b, c, d, e};
            int deg[5] = {0, 0, 0, 0, 0};
            int edges = 0;
            for (int i = 0; i < 5; ++i)
              for (int j = i + 1; j < 5; ++j)
                if (g.adjacent(vs[i], vs[j])) {
                  ++deg[i];
                  ++deg[j];
                  ++edges;
                }
            // Five vertices, all of degree 2: the only simple realization is C5.
            if (edges == 5 && deg[0] == 2 && deg[1] == 2 && deg[2] == 2 && deg[3] == 2 &&
                deg[4] == 2)
              return NotSplitWitness{NotSplitWitness::Kind::c5, {a, b, c, d, e}};
          }
  throw std::logic_error("not_split_witness: no 2K2/C4/C5 in a non-split graph");
}

}  // namespace

SplitResult find_split_partition(const Graph& g) {
  const int n = g.vertices();
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return g.degree(x) > g.degree(y); });

  // Hammer-Simeone: with degrees d_1 >= ... >= d_n and
  // m = max{i : d_i >= i-1}, the graph is split iff
  // sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i, and then the m highest-degree
  // vertices form a clique with the rest independent.
  int m = 0;
  for (int i = 1; i <= n; ++i)
    if (g.degree(order[i - 1]) >= i - 1) m = i;
  long lhs = 0, rhs = static_cast<long>(m) * (m - 1);
  for (int i = 0; i < n; ++i)
    (i < m ? lhs : rhs) += g.degree(order[i]);
  if (lhs != rhs) return not_split_witness(g);

  SplitGraph sg{g, {}, {}};
  sg.k_order.assign(order.begin(), order.begin() + m);
  sg.s_order.assign(order.begin() + m, order.end());
  std::sort(sg.k_order.begin(), sg.k_order.end());
  std::sort(sg.s_order.begin(), sg.s_order.end());
  if (!is_clique(g, sg.k_order) || !is_independent_set(g, sg.s_order))
    throw std::logic_error("find_split_partition: degree-sequence partition invalid");
  return sg;
}

BinaryMatrix adjacency_matrix_sk(const SplitGraph& sg) {
  if (sg.s_order.empty())
    throw std::invalid_argument("adjacency_matrix_sk: empty independent side");
  if (sg.k_order.empty())
    throw std::invalid_argument("adjacency_matrix_sk: empty clique side");
  BinaryMatrix a(static_cast<int>(sg.s_order.size()), static_cast<int>(sg.k_order.size()));
  for (size_t i = 0; i < sg.s_order.size(); ++i)
    for (size_t j = 0; j < sg.k_order.size(); ++j)
      if (sg.graph.adjacent(sg.s_order[i], sg.k_order[j]))
        a.set(static_cast<int>(i), static_cast<int>(j), true);
  return a;
}

std::vector<SplitGraph> split_partition_candidates(const Graph& g) {
  auto sp = find_split_partition(g);
  std::vector<SplitGraph> out;
  if (!std::holds_alternative<SplitGraph>(sp)) return out;
  const SplitGraph& base = std::get<SplitGraph>(sp);

  // Any split partition differs from the base one by at most one vertex in
  // each direction (a clique inside an independent set has size <= 1).
  std::set<std::vector<int>> seen;
  auto consider = [&](std::vector<int> clique) {
    std::sort(clique.begin(), clique.end());
    if (seen.count(clique)) return;
    std::vector<int> indep;
    std::vector<char> in_clique(static_cast<size_t>(g.vertices()), 0);
    for (int v : clique) in_clique[v] = 1;
    for (int v = 0; v < g.vertices(); ++v)
      if (!in_clique[v]) indep.push_back(v);
    if (!is_clique(g, clique) || !is_independent_set(g, indep)) return;
    seen.insert(clique);
    out.push_back(SplitGraph{g, clique, indep});
  };

  consider(base.k_order);
  for (size_t drop = 0; drop <= base.k_order.size(); ++drop) {
    std::vector<int> reduced = base.k_order;
    if (drop < base.k_order.size()) reduced.erase(reduced.begin() + drop);
    consider(reduced);
    for (int s : base.s_order) {
      std::vector<int> extended = reduced;
      extended.push_back(s);
      consider(extended);
    }
  }
  return out;
}

namespace {

GemWitness gem_from_crossing(const SplitGraph& sg, const G0Witness& w) {
  return GemWitness{sg.s_order[w.row_a], sg.k_order[w.col_a], sg.k_order[w.col_b],
                    sg.s_order[w.row_b], sg.k_order[w.col_shared]};
}

std::vector<int> identity_perm(size_t n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

NestedGraphResult is_nested_graph(const Graph& g) {
  auto sp = find_split_partition(g);
  if (std::holds_alternative<NotSplitWitness>(sp)) return std::get<NotSplitWitness>(sp);

  const auto candidates = split_partition_candidates(g);
  for (const SplitGraph& cand : candidates) {
    if (cand.s_order.empty())
      return NestedGraphAccept{cand, identity_perm(cand.k_order.size())};
    if (cand.k_order.empty()) continue;  // edgeless; a nonempty-K sibling exists
    const BinaryMatrix a = adjacency_matrix_sk(cand);
    NestedResult r = is_nested(a);
    if (std::holds_alternative<NestedAccept>(r))
      return NestedGraphAccept{cand, std::get<NestedAccept>(r).ordering};
  }

  // Every partition has a crossing pair; any one of them grounds a gem.
  const SplitGraph& base = candidates.front();
  NestedResult r = is_nested(adjacency_matrix_sk(base));
  return gem_from_crossing(base, std::get<G0Witness>(r));
}

TwoNestedGraphResult is_two_nested_graph(const Graph& g) {
  auto sp = find_split_partition(g);
  if (std::holds_alternative<NotSplitWitness>(sp)) return std::get<NotSplitWitness>(sp);

  const auto candidates = split_partition_candidates(g);
  for (const SplitGraph& cand : candidates) {
    if (cand.s_order.empty())
      return TwoNestedGraphAccept{cand, identity_perm(cand.k_order.size()), {}};
    if (cand.k_order.empty()) continue;
    const BinaryMatrix a = adjacency_matrix_sk(cand);
    TwoNestedResult r = is_two_nested(a);
    if (std::holds_alternative<TwoNestedAccept>(r)) {
      auto& acc = std::get<TwoNestedAccept>(r);
      return TwoNestedGraphAccept{cand, acc.ordering, acc.bipartition};
    }
  }

  const SplitGraph& base = candidates.front();
  TwoNestedResult r = is_two_nested(adjacency_matrix_sk(base));
  if (std::holds_alternative<TuckerWitness>(r))
    return TwoNestedGraphReject{base, std::get<TuckerWitness>(r)};
  return TwoNestedGraphReject{base, std::get<TwoNestedConfigReject>(r)};
}

std::optional<GemWitness> find_induced_gem(const Graph& g) {
  const int n = g.vertices();
  if (n < 5) return std::nullopt;
  std::vector<int> vs(5);
  for (vs[0] = 0; vs[0] < n; ++vs[0])
    for (vs[1] = vs[0] + 1; vs[1] < n; ++vs[1])
      for (vs[2] = vs[1] + 1; vs[2] < n; ++vs[2])
        for (vs[3] = vs[2] + 1; vs[3] < n; ++vs[3])
          for (vs[4] = vs[3] + 1; vs[4] < n; ++vs[4])
            for (int apex_pos = 0; apex_pos < 5; ++apex_pos) {
              const int apex = vs[apex_pos];
              std::vector<int> rest;
              for (int i = 0; i < 5; ++i)
                if (i != apex_pos) rest.push_back(vs[i]);
              bool dominated = true;
              for (int v : rest)
                if (!g.adjacent(apex, v)) dominated = false;
              if (!dominated) continue;
              // Induced P4 on the rest: three edges, degree multiset {1,1,2,2}.
              int deg[4] = {0, 0, 0, 0};
              int edges = 0;
              for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                  if (g.adjacent(rest[i], rest[j])) {
                    ++deg[i];
                    ++deg[j];
                    ++edges;
                  }
              if (edges != 3) continue;
              std::vector<int> ends, mids;
              for (int i = 0; i < 4; ++i)
                (deg[i] == 1 ? ends : mids).push_back(rest[i]);
              if (ends.size() != 2 || mids.size() != 2) continue;
              const int a = std::min(ends[0], ends[1]);
              const int d = std::max(ends[0], ends[1]);
              const int b = g.adjacent(a, mids[0]) ? mids[0] : mids[1];
              const int c = b == mids[0] ? mids[1] : mids[0];
              if (!g.adjacent(a, b) || !g.adjacent(b, c) || !g.adjacent(c, d)) continue;
              return GemWitness{a, b, c, d, apex};
            }
  return std::nullopt;
}

}  // namespace nested2
