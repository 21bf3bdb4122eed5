#pragma once

#include <string>
#include <variant>
#include <vector>

#include "nested2/matrix.hpp"

namespace nested2 {

enum class TuckerFamily { m_i, m_ii, m_iii, m_iv, m_v, unclassified };

struct TuckerLabel {
  TuckerFamily family = TuckerFamily::unclassified;
  int k = 0;  // parameter, 0 when not parameterized or unclassified

  bool operator==(const TuckerLabel&) const = default;
};

std::string tucker_family_name(TuckerFamily f);

/// Row/column index sets (ascending) of a deletion-minimal non-C1P
/// submatrix: the selected submatrix has no C1P, and removing any single
/// row or column of the selection restores C1P.
struct TuckerWitness {
  std::vector<int> rows;
  std::vector<int> cols;
  TuckerLabel label;
};

/// Either a column ordering making every row contiguous, or a Tucker
/// witness showing there is none.
using C1PResult = std::variant<std::vector<int>, TuckerWitness>;

bool c1p_accepted(const C1PResult& r);

/// PQ-tree decision procedure; deterministic (the same input always yields
/// the same ordering or witness).
C1PResult test_c1p(const BinaryMatrix& a);

/// Decision only, no witness extraction or classification.
bool has_c1p(const BinaryMatrix& a);

/// Greedy deletion (rows ascending, then columns ascending, repeated to a
/// fixed point). Precondition: a is not C1P.
TuckerWitness minimal_non_c1p_submatrix(const BinaryMatrix& a);

/// Matches the witness submatrix against the generated Tucker families up
/// to row and column permutations; unclassified when none fits. Throws if
/// the witness violates its invariants.
TuckerLabel classify_tucker(const BinaryMatrix& a, const TuckerWitness& w);

}  // namespace nested2
