#include "nested2/certificate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "nested2/c1p.hpp"
#include "nested2/generators.hpp"

namespace nested2 {

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string digest_string(const std::string& bytes) {
  static const char* hex = "0123456789abcdef";
  const std::uint64_t h = fnv1a64(bytes);
  std::string out = "fnv1a64:";
  for (int shift = 60; shift >= 0; shift -= 4) out += hex[(h >> shift) & 0xf];
  return out;
}

namespace {

std::vector<int> to_external(const std::vector<int>& xs) {
  std::vector<int> out(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) out[i] = xs[i] + 1;
  return out;
}

std::vector<int> to_internal(const std::vector<int>& xs) {
  std::vector<int> out(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) out[i] = xs[i] - 1;
  return out;
}

void emit(std::string& out, const char* key, const std::optional<std::vector<int>>& xs) {
  if (!xs) return;
  out += key;
  for (int v : *xs) {
    out += ' ';
    out += std::to_string(v);
  }
  out += '\n';
}

}  // namespace

std::string serialize_certificate(const CertificateDocument& doc) {
  std::string out;
  out += "verdict " + doc.verdict + "\n";
  out += "class " + doc.cls + "\n";
  if (doc.family) out += "family " + *doc.family + "\n";
  if (doc.k) out += "k " + std::to_string(*doc.k) + "\n";
  emit(out, "rows", doc.rows);
  emit(out, "cols", doc.cols);
  emit(out, "cycle", doc.cycle);
  emit(out, "ordering", doc.ordering);
  emit(out, "part1", doc.part1);
  emit(out, "part2", doc.part2);
  emit(out, "sorder", doc.sorder);
  emit(out, "korder", doc.korder);
  out += "digest " + doc.digest + "\n";
  return out;
}

CertificateDocument parse_certificate(const std::string& text) {
  CertificateDocument doc;
  size_t pos = 0;
  int line_no = 0;
  bool saw_verdict = false, saw_class = false, saw_digest = false;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string::npos)
      throw std::invalid_argument("certificate: missing final newline");
    std::string line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    const size_t sp = line.find(' ');
    const std::string key = line.substr(0, sp == std::string::npos ? line.size() : sp);
    const std::string rest = sp == std::string::npos ? "" : line.substr(sp + 1);
    auto as_list = [&]() {
      std::vector<int> xs;
      size_t p = 0;
      while (p < rest.size()) {
        size_t q = rest.find(' ', p);
        if (q == std::string::npos) q = rest.size();
        if (q == p) throw std::invalid_argument("certificate: empty list entry");
        xs.push_back(std::stoi(rest.substr(p, q - p)));
        p = q + 1;
      }
      return xs;
    };
    if (key == "verdict") {
      doc.verdict = rest;
      saw_verdict = true;
    } else if (key == "class") {
      doc.cls = rest;
      saw_class = true;
    } else if (key == "family") {
      doc.family = rest;
    } else if (key == "k") {
      doc.k = std::stoi(rest);
    } else if (key == "rows") {
      doc.rows = as_list();
    } else if (key == "cols") {
      doc.cols = as_list();
    } else if (key == "cycle") {
      doc.cycle = as_list();
    } else if (key == "ordering") {
      doc.ordering = as_list();
    } else if (key == "part1") {
      doc.part1 = as_list();
    } else if (key == "part2") {
      doc.part2 = as_list();
    } else if (key == "sorder") {
      doc.sorder = as_list();
    } else if (key == "korder") {
      doc.korder = as_list();
    } else if (key == "digest") {
      doc.digest = rest;
      saw_digest = true;
    } else {
      throw std::invalid_argument("certificate line " + std::to_string(line_no) +
                                  ": unknown key '" + key + "'");
    }
  }
  if (!saw_verdict || !saw_class || !saw_digest)
    throw std::invalid_argument("certificate: verdict, class and digest are required");
  if (doc.verdict != "accept" && doc.verdict != "reject")
    throw std::invalid_argument("certificate: verdict must be accept or reject");
  return doc;
}

namespace {

CertificateDocument tucker_doc(const std::string& cls, const TuckerWitness& w,
                               const std::string& digest) {
  CertificateDocument doc;
  doc.verdict = "reject";
  doc.cls = cls;
  doc.family = tucker_family_name(w.label.family);
  if (w.label.family == TuckerFamily::m_i || w.label.family == TuckerFamily::m_ii ||
      w.label.family == TuckerFamily::m_iii)
    doc.k = w.label.k;
  doc.rows = to_external(w.rows);
  doc.cols = to_external(w.cols);
  doc.digest = digest;
  return doc;
}

void fill_config(CertificateDocument& doc, const ConfigWitness& w) {
  doc.family = config_family_name(w.family);
  doc.k = w.k;
  doc.rows = to_external(w.row_order);
  doc.cols = to_external(w.col_order);
  doc.cycle = to_external(w.cycle);
  doc.ordering = to_external(w.ordering);
}

}  // namespace

CertificateDocument certificate_for_c1p(const C1PResult& r, const std::string& digest) {
  if (c1p_accepted(r)) {
    CertificateDocument doc;
    doc.verdict = "accept";
    doc.cls = "c1p";
    doc.ordering = to_external(std::get<std::vector<int>>(r));
    doc.digest = digest;
    return doc;
  }
  return tucker_doc("c1p", std::get<TuckerWitness>(r), digest);
}

CertificateDocument certificate_for_nested(const NestedResult& r, const std::string& digest) {
  CertificateDocument doc;
  doc.cls = "nested";
  doc.digest = digest;
  if (std::holds_alternative<NestedAccept>(r)) {
    doc.verdict = "accept";
    doc.ordering = to_external(std::get<NestedAccept>(r).ordering);
  } else {
    const G0Witness& w = std::get<G0Witness>(r);
    doc.verdict = "reject";
    doc.family = "G0";
    doc.rows = std::vector<int>{w.row_a + 1, w.row_b + 1};
    doc.cols = std::vector<int>{w.col_a + 1, w.col_shared + 1, w.col_b + 1};
  }
  return doc;
}

CertificateDocument certificate_for_two_nested(const TwoNestedResult& r,
                                               const std::string& digest) {
  if (std::holds_alternative<TuckerWitness>(r))
    return tucker_doc("2nested", std::get<TuckerWitness>(r), digest);
  CertificateDocument doc;
  doc.cls = "2nested";
  doc.digest = digest;
  if (std::holds_alternative<TwoNestedAccept>(r)) {
    const auto& acc = std::get<TwoNestedAccept>(r);
    doc.verdict = "accept";
    doc.ordering = to_external(acc.ordering);
    doc.part1 = to_external(acc.bipartition.part1);
    doc.part2 = to_external(acc.bipartition.part2);
  } else {
    doc.verdict = "reject";
    fill_config(doc, std::get<TwoNestedConfigReject>(r).witness);
  }
  return doc;
}

namespace {

CertificateDocument not_split_doc(const std::string& cls, const NotSplitWitness& w,
                                  const std::string& digest) {
  CertificateDocument doc;
  doc.verdict = "reject";
  doc.cls = cls;
  switch (w.kind) {
    case NotSplitWitness::Kind::two_k2: doc.family = "2K2"; break;
    case NotSplitWitness::Kind::c4: doc.family = "C4"; break;
    default: doc.family = "C5"; break;
  }
  doc.rows = to_external(w.vertices);
  doc.digest = digest;
  return doc;
}

}  // namespace

CertificateDocument certificate_for_nested_graph(const NestedGraphResult& r,
                                                 const std::string& digest) {
  if (std::holds_alternative<NotSplitWitness>(r))
    return not_split_doc("nested-graph", std::get<NotSplitWitness>(r), digest);
  CertificateDocument doc;
  doc.cls = "nested-graph";
  doc.digest = digest;
  if (std::holds_alternative<NestedGraphAccept>(r)) {
    const auto& acc = std::get<NestedGraphAccept>(r);
    doc.verdict = "accept";
    doc.sorder = to_external(acc.sg.s_order);
    doc.korder = to_external(acc.sg.k_order);
    doc.ordering = to_external(acc.ordering);
  } else {
    const GemWitness& w = std::get<GemWitness>(r);
    doc.verdict = "reject";
    doc.family = "gem";
    doc.rows = std::vector<int>{w.a + 1, w.b + 1, w.c + 1, w.d + 1, w.apex + 1};
  }
  return doc;
}

CertificateDocument certificate_for_two_nested_graph(const TwoNestedGraphResult& r,
                                                     const std::string& digest) {
  if (std::holds_alternative<NotSplitWitness>(r))
    return not_split_doc("2nested-graph", std::get<NotSplitWitness>(r), digest);
  CertificateDocument doc;
  doc.cls = "2nested-graph";
  doc.digest = digest;
  if (std::holds_alternative<TwoNestedGraphAccept>(r)) {
    const auto& acc = std::get<TwoNestedGraphAccept>(r);
    doc.verdict = "accept";
    doc.sorder = to_external(acc.sg.s_order);
    doc.korder = to_external(acc.sg.k_order);
    doc.ordering = to_external(acc.ordering);
    doc.part1 = to_external(acc.bipartition.part1);
    doc.part2 = to_external(acc.bipartition.part2);
    return doc;
  }
  const auto& rej = std::get<TwoNestedGraphReject>(r);
  doc.verdict = "reject";
  doc.sorder = to_external(rej.sg.s_order);
  doc.korder = to_external(rej.sg.k_order);
  if (std::holds_alternative<TuckerWitness>(rej.matrix_cert)) {
    const TuckerWitness& w = std::get<TuckerWitness>(rej.matrix_cert);
    doc.family = tucker_family_name(w.label.family);
    if (w.label.family == TuckerFamily::m_i || w.label.family == TuckerFamily::m_ii ||
        w.label.family == TuckerFamily::m_iii)
      doc.k = w.label.k;
    doc.rows = to_external(w.rows);
    doc.cols = to_external(w.cols);
  } else {
    fill_config(doc, std::get<TwoNestedConfigReject>(rej.matrix_cert).witness);
  }
  return doc;
}

// ---------------------------------------------------------------------------
// Verification

namespace {

bool distinct_in_range(const std::vector<int>& xs, int bound) {
  std::vector<char> seen(static_cast<size_t>(bound), 0);
  for (int x : xs) {
    if (x < 0 || x >= bound || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

bool crossing_free(const BinaryMatrix& a, const std::vector<int>& rows) {
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = i + 1; j < rows.size(); ++j)
      if (relate_rows(a, rows[i], rows[j]) == RowRelation::crossing) return false;
  return true;
}

bool exact_partition(const std::vector<int>& p1, const std::vector<int>& p2, int n) {
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int x : p1) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = 1;
  }
  for (int x : p2) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = 1;
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

bool verify_ordering_contiguous(const BinaryMatrix& a, const std::vector<int>& ordering) {
  return is_permutation(ordering, a.cols()) &&
         has_consecutive_rows(permute_columns(a, ordering));
}

bool verify_tucker_payload(const BinaryMatrix& a, const std::vector<int>& rows,
                           const std::vector<int>& cols) {
  if (rows.empty() || cols.empty() || !distinct_in_range(rows, a.rows()) ||
      !distinct_in_range(cols, a.cols()))
    return false;
  const BinaryMatrix sub = submatrix(a, rows, cols);
  auto c1p = [](const BinaryMatrix& x) { return has_c1p(x); };
  if (c1p(sub)) return false;
  for (size_t i = 0; i < rows.size(); ++i) {
    std::vector<int> rs = rows;
    rs.erase(rs.begin() + i);
    if (!rs.empty() && !c1p(submatrix(a, rs, cols))) return false;
  }
  for (size_t j = 0; j < cols.size(); ++j) {
    std::vector<int> cs = cols;
    cs.erase(cs.begin() + j);
    if (!cs.empty() && !c1p(submatrix(a, rows, cs))) return false;
  }
  return true;
}

bool verify_config_payload(const BinaryMatrix& a, const CertificateDocument& doc) {
  if (!doc.rows || !doc.cols || !doc.cycle || !doc.ordering || !doc.family) return false;
  const std::vector<int> row_order = to_internal(*doc.rows);
  const std::vector<int> col_order = to_internal(*doc.cols);
  const std::vector<int> cycle = to_internal(*doc.cycle);
  const std::vector<int> ordering = to_internal(*doc.ordering);

  if (!verify_ordering_contiguous(a, ordering)) return false;
  const BinaryMatrix ordered = permute_columns(a, ordering);

  const int len = static_cast<int>(cycle.size());
  if (len < 3 || len % 2 == 0) return false;
  const CrossingGraph h = build_crossing_graph(ordered);
  if (!is_induced_cycle(h, cycle)) return false;

  BinaryMatrix target(1, 1);
  if (*doc.family == "F0") {
    if (len != 3) return false;
    target = gen_f0();
  } else if (*doc.family == "F1") {
    if (!doc.k || *doc.k != len || len < 5) return false;
    target = gen_f1(len);
  } else if (*doc.family == "F2") {
    if (!doc.k || *doc.k != len || len < 5) return false;
    target = gen_f2(len);
  } else {
    return false;
  }

  if (static_cast<int>(row_order.size()) != target.rows() ||
      static_cast<int>(col_order.size()) != target.cols())
    return false;
  if (!distinct_in_range(row_order, ordered.rows()) ||
      !distinct_in_range(col_order, ordered.cols()))
    return false;
  std::vector<int> sorted_cycle = cycle, sorted_rows = row_order;
  std::sort(sorted_cycle.begin(), sorted_cycle.end());
  std::sort(sorted_rows.begin(), sorted_rows.end());
  if (sorted_cycle != sorted_rows) return false;
  return submatrix(ordered, row_order, col_order) == target;
}

bool verify_matrix_accept(const BinaryMatrix& a, const CertificateDocument& doc) {
  if (!doc.ordering) throw std::invalid_argument("certificate: accept needs an ordering");
  const std::vector<int> ordering = to_internal(*doc.ordering);
  if (!verify_ordering_contiguous(a, ordering)) return false;
  if (doc.cls == "c1p") return true;
  std::vector<int> all(static_cast<size_t>(a.rows()));
  std::iota(all.begin(), all.end(), 0);
  if (doc.cls == "nested") return crossing_free(a, all);
  // 2nested
  if (!doc.part1 || !doc.part2)
    throw std::invalid_argument("certificate: 2nested accept needs part1 and part2");
  const std::vector<int> p1 = to_internal(*doc.part1);
  const std::vector<int> p2 = to_internal(*doc.part2);
  return exact_partition(p1, p2, a.rows()) && crossing_free(a, p1) && crossing_free(a, p2);
}

bool verify_matrix_reject(const BinaryMatrix& a, const CertificateDocument& doc) {
  if (doc.cls == "nested") {
    if (!doc.rows || !doc.cols || doc.rows->size() != 2 || doc.cols->size() != 3)
      throw std::invalid_argument("certificate: nested reject needs rows(2) and cols(3)");
    const std::vector<int> rows = to_internal(*doc.rows);
    const std::vector<int> cols = to_internal(*doc.cols);
    if (!distinct_in_range(rows, a.rows()) || !distinct_in_range(cols, a.cols()))
      return false;
    return a.at(rows[0], cols[0]) && a.at(rows[0], cols[1]) && !a.at(rows[0], cols[2]) &&
           !a.at(rows[1], cols[0]) && a.at(rows[1], cols[1]) && a.at(rows[1], cols[2]);
  }
  const bool config = doc.family && (*doc.family == "F0" || *doc.family == "F1" ||
                                     *doc.family == "F2");
  if (doc.cls == "2nested" && config) return verify_config_payload(a, doc);
  if (!doc.rows || !doc.cols)
    throw std::invalid_argument("certificate: Tucker reject needs rows and cols");
  return verify_tucker_payload(a, to_internal(*doc.rows), to_internal(*doc.cols));
}

bool verify_graph_certificate(const Graph& g, const CertificateDocument& doc) {
  if (doc.verdict == "reject" && doc.family &&
      (*doc.family == "2K2" || *doc.family == "C4" || *doc.family == "C5")) {
    if (!doc.rows) throw std::invalid_argument("certificate: not-split reject needs rows");
    const std::vector<int> vs = to_internal(*doc.rows);
    if (!distinct_in_range(vs, g.vertices())) return false;
    int expect_n = *doc.family == "C5" ? 5 : 4;
    if (static_cast<int>(vs.size()) != expect_n) return false;
    int edges = 0;
    std::vector<int> deg(vs.size(), 0);
    for (size_t i = 0; i < vs.size(); ++i)
      for (size_t j = i + 1; j < vs.size(); ++j)
        if (g.adjacent(vs[i], vs[j])) {
          ++edges;
          ++deg[i];
          ++deg[j];
        }
    if (*doc.family == "2K2")
      return edges == 2 && std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1; });
    if (*doc.family == "C4")
      return edges == 4 && std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
    return edges == 5 && std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
  }

  if (doc.verdict == "reject" && doc.cls == "nested-graph") {
    if (!doc.family || *doc.family != "gem" || !doc.rows || doc.rows->size() != 5)
      throw std::invalid_argument("certificate: nested-graph reject needs a gem payload");
    const std::vector<int> vs = to_internal(*doc.rows);
    if (!distinct_in_range(vs, g.vertices())) return false;
    const int a = vs[0], b = vs[1], c = vs[2], d = vs[3], apex = vs[4];
    return g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) && !g.adjacent(a, c) &&
           !g.adjacent(a, d) && !g.adjacent(b, d) && g.adjacent(apex, a) &&
           g.adjacent(apex, b) && g.adjacent(apex, c) && g.adjacent(apex, d);
  }

  // Remaining shapes carry the split partition.
  if (!doc.sorder || !doc.korder)
    throw std::invalid_argument("certificate: graph certificate needs sorder and korder");
  const std::vector<int> s_order = to_internal(*doc.sorder);
  const std::vector<int> k_order = to_internal(*doc.korder);
  std::vector<int> all = s_order;
  all.insert(all.end(), k_order.begin(), k_order.end());
  if (!distinct_in_range(all, g.vertices()) ||
      static_cast<int>(all.size()) != g.vertices())
    return false;
  if (!is_clique(g, k_order) || !is_independent_set(g, s_order)) return false;

  if (s_order.empty()) return doc.verdict == "accept";
  if (k_order.empty()) return false;
  const SplitGraph sg{g, k_order, s_order};
  const BinaryMatrix a = adjacency_matrix_sk(sg);

  CertificateDocument inner = doc;
  inner.cls = doc.cls == "nested-graph" ? "nested" : "2nested";
  inner.sorder.reset();
  inner.korder.reset();
  if (doc.verdict == "accept") return verify_matrix_accept(a, inner);
  return verify_matrix_reject(a, inner);
}

}  // namespace

bool verify_certificate(const RecognizerInput& input, const CertificateDocument& doc) {
  if (doc.verdict != "accept" && doc.verdict != "reject")
    throw std::invalid_argument("certificate: bad verdict");
  const bool graph_cls = doc.cls == "nested-graph" || doc.cls == "2nested-graph";
  const bool matrix_cls = doc.cls == "c1p" || doc.cls == "nested" || doc.cls == "2nested";
  if (!graph_cls && !matrix_cls)
    throw std::invalid_argument("certificate: unknown class '" + doc.cls + "'");
  if (graph_cls != std::holds_alternative<Graph>(input))
    throw std::invalid_argument("certificate: class does not match the input kind");

  if (matrix_cls) {
    const BinaryMatrix& a = std::get<BinaryMatrix>(input);
    if (doc.verdict == "accept") return verify_matrix_accept(a, doc);
    return verify_matrix_reject(a, doc);
  }
  return verify_graph_certificate(std::get<Graph>(input), doc);
}

}  // namespace nested2
