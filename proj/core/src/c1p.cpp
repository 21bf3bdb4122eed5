#include "nested2/c1p.hpp"

#include <numeric>
#include <stdexcept>

#include "nested2/generators.hpp"
#include "pqtree.hpp"

namespace nested2 {

std::string tucker_family_name(TuckerFamily f) {
  switch (f) {
    case TuckerFamily::m_i: return "MI";
    case TuckerFamily::m_ii: return "MII";
    case TuckerFamily::m_iii: return "MIII";
    case TuckerFamily::m_iv: return "MIV";
    case TuckerFamily::m_v: return "MV";
    default: return "tucker";
  }
}

bool c1p_accepted(const C1PResult& r) {
  return std::holds_alternative<std::vector<int>>(r);
}

namespace {

// Decision-only path shared by test_c1p, witness extraction and witness
// validation; no witness machinery so the mutual recursion bottoms out.
std::optional<std::vector<int>> c1p_ordering(const BinaryMatrix& a) {
  detail::PQTree tree(a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    const std::vector<int> support = a.row_support(i);
    if (support.size() >= 2 && !tree.reduce(support)) return std::nullopt;
  }
  std::vector<int> ordering = tree.frontier();
  if (!has_consecutive_rows(permute_columns(a, ordering)))
    throw std::logic_error("test_c1p: ordering failed contiguity verification");
  return ordering;
}

bool decides_c1p(const BinaryMatrix& a) { return c1p_ordering(a).has_value(); }

}  // namespace

TuckerWitness minimal_non_c1p_submatrix(const BinaryMatrix& a) {
  if (decides_c1p(a))
    throw std::invalid_argument("minimal_non_c1p_submatrix: matrix has the C1P");
  std::vector<int> rows(a.rows()), cols(a.cols());
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);

  // Greedy deletion to a fixed point, rows ascending then columns ascending.
  bool changed = true;
  while (changed) {
    changed = false;
    size_t i = 0;
    while (i < rows.size()) {
      if (rows.size() > 1) {
        std::vector<int> trial = rows;
        trial.erase(trial.begin() + i);
        if (!decides_c1p(submatrix(a, trial, cols))) {
          rows = std::move(trial);
          changed = true;
          continue;
        }
      }
      ++i;
    }
    size_t j = 0;
    while (j < cols.size()) {
      if (cols.size() > 1) {
        std::vector<int> trial = cols;
        trial.erase(trial.begin() + j);
        if (!decides_c1p(submatrix(a, rows, trial))) {
          cols = std::move(trial);
          changed = true;
          continue;
        }
      }
      ++j;
    }
  }

  TuckerWitness w{rows, cols, {}};
  w.label = classify_tucker(a, w);
  return w;
}

C1PResult test_c1p(const BinaryMatrix& a) {
  if (auto ordering = c1p_ordering(a)) return *ordering;
  return minimal_non_c1p_submatrix(a);
}

bool has_c1p(const BinaryMatrix& a) { return decides_c1p(a); }

namespace {

bool distinct_in_range(const std::vector<int>& xs, int bound) {
  std::vector<char> seen(static_cast<size_t>(bound), 0);
  for (int x : xs) {
    if (x < 0 || x >= bound || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

bool equals_configuration(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return find_configuration(a, b).has_value();
}

}  // namespace

TuckerLabel classify_tucker(const BinaryMatrix& a, const TuckerWitness& w) {
  if (w.rows.empty() || w.cols.empty() || !distinct_in_range(w.rows, a.rows()) ||
      !distinct_in_range(w.cols, a.cols()))
    throw std::invalid_argument("classify_tucker: malformed witness index sets");
  const BinaryMatrix sub = submatrix(a, w.rows, w.cols);
  if (decides_c1p(sub))
    throw std::invalid_argument("classify_tucker: witness submatrix has the C1P");
  const int n = sub.rows(), m = sub.cols();
  for (size_t i = 0; i < w.rows.size(); ++i) {
    std::vector<int> rs = w.rows;
    rs.erase(rs.begin() + i);
    if (!rs.empty() && !decides_c1p(submatrix(a, rs, w.cols)))
      throw std::invalid_argument("classify_tucker: witness is not row-deletion minimal");
  }
  for (size_t j = 0; j < w.cols.size(); ++j) {
    std::vector<int> cs = w.cols;
    cs.erase(cs.begin() + j);
    if (!cs.empty() && !decides_c1p(submatrix(a, w.rows, cs)))
      throw std::invalid_argument("classify_tucker: witness is not column-deletion minimal");
  }

  // Dimensions bound the only possible parameter of each family.
  if (n == m && n >= 3 && equals_configuration(sub, gen_tucker(TuckerFamily::m_i, n - 2)))
    return {TuckerFamily::m_i, n - 2};
  if (n == m && n >= 4 && equals_configuration(sub, gen_tucker(TuckerFamily::m_ii, n - 3)))
    return {TuckerFamily::m_ii, n - 3};
  if (m == n + 1 && n >= 3 &&
      equals_configuration(sub, gen_tucker(TuckerFamily::m_iii, n - 2)))
    return {TuckerFamily::m_iii, n - 2};
  if (n == 4 && m == 6 && equals_configuration(sub, gen_tucker(TuckerFamily::m_iv)))
    return {TuckerFamily::m_iv, 0};
  if (n == 4 && m == 5 && equals_configuration(sub, gen_tucker(TuckerFamily::m_v)))
    return {TuckerFamily::m_v, 0};
  return {TuckerFamily::unclassified, 0};
}

}  // namespace nested2
