#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nested2/c1p.hpp"
#include "nested2/graphs.hpp"
#include "nested2/matrix.hpp"

namespace nested2 {

/// The 3x5 matrix {11100, 01110, 00111}.
BinaryMatrix gen_f0();

/// k x (k-1), odd k >= 5: row 1 covers columns 2..k-1, row 2 covers
/// 1..k-2, row i >= 3 covers (k-i+1, k-i+2).
BinaryMatrix gen_f1(int k);

/// k x k, odd k >= 5: row 1 covers columns 2..k-1, row i >= 2 covers
/// (i-1, i).
BinaryMatrix gen_f2(int k);

/// The 2x3 crossing pattern {110, 011}.
BinaryMatrix gen_g0();

/// The requested Tucker matrix. Every generated instance is validated on
/// construction (non-C1P and deletion-minimal); validation failure throws
/// std::logic_error. Parameterized families take k >= 1; M_IV and M_V
/// reject a parameter.
BinaryMatrix gen_tucker(TuckerFamily family, int k = 0);

/// Seeded Bernoulli(p) matrix; identical bytes for identical arguments on
/// every platform (mt19937_64 with explicit bit mapping).
BinaryMatrix gen_random_matrix(int n, int m, double p, std::uint64_t seed);

/// Rows drawn as column intervals split into two laminar interval
/// families; 2-nested by construction under the identity order.
BinaryMatrix gen_random_two_nested(int n, int m, std::uint64_t seed);

/// Random clique/independent split plus random S-to-K edges; always a
/// split graph.
Graph gen_random_split_graph(int n, std::uint64_t seed);

/// Threshold-graph builder: creation[i] adds vertex i+1 as isolated (false)
/// or universal (true); vertex 0 starts alone.
Graph gen_threshold_graph(const std::vector<bool>& creation);

}  // namespace nested2
