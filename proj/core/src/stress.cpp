#include "nested2/stress.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "nested2/certificate.hpp"
#include "nested2/generators.hpp"
#include "nested2/io.hpp"
#include "nested2/oracle.hpp"

namespace nested2 {

long StressReport::total_mismatches() const {
  long t = 0;
  for (const auto& [_, s] : by_kind) t += s.mismatches;
  return t;
}

long StressReport::total_cert_failures() const {
  long t = 0;
  for (const auto& [_, s] : by_kind) t += s.cert_failures;
  return t;
}

namespace {

constexpr double kDensities[] = {0.15, 0.3, 0.5, 0.7, 0.85};

struct Runner {
  StressReport& report;
  std::string instance_text;  // serialized current instance

  void fail(const std::string& kind, const std::string& what, bool cert) {
    auto& s = report.by_kind[kind];
    (cert ? s.cert_failures : s.mismatches) += 1;
    if (!report.first_failure_description) {
      report.first_failure_description = kind + ": " + what;
      report.first_failure_instance = instance_text;
    }
  }

  void check_roundtrip_cert(const std::string& kind, const CertificateDocument& doc,
                            const RecognizerInput& input) {
    const std::string text = serialize_certificate(doc);
    CertificateDocument reparsed;
    try {
      reparsed = parse_certificate(text);
    } catch (const std::exception& e) {
      fail(kind, std::string("certificate failed to reparse: ") + e.what(), true);
      return;
    }
    if (serialize_certificate(reparsed) != text) {
      fail(kind, "certificate round-trip not byte-identical", true);
      return;
    }
    bool ok = false;
    try {
      ok = verify_certificate(input, reparsed);
    } catch (const std::exception& e) {
      fail(kind, std::string("verify_certificate threw: ") + e.what(), true);
      return;
    }
    if (!ok) fail(kind, "verify_certificate rejected an emitted certificate", true);
  }

  void count_verdict(const std::string& kind, bool accepted) {
    auto& s = report.by_kind[kind];
    s.instances += 1;
    (accepted ? s.accepts : s.rejects) += 1;
  }

  void run_matrix(const BinaryMatrix& a, bool must_be_two_nested) {
    instance_text = serialize_matrix(a);
    const std::string digest = digest_string(instance_text);
    const RecognizerInput input = a;

    // Format fidelity.
    report.by_kind["format"].instances += 1;
    if (serialize_matrix(parse_matrix(instance_text)) != instance_text)
      fail("format", "matrix round-trip not byte-identical", true);

    // C1P against the exhaustive oracle.
    const C1PResult c1p = test_c1p(a);
    const bool c1p_ok = c1p_accepted(c1p);
    count_verdict("c1p", c1p_ok);
    if (c1p_ok != oracle_c1p(a)) fail("c1p", "test_c1p disagrees with oracle_c1p", false);
    check_roundtrip_cert("c1p", certificate_for_c1p(c1p, digest), input);
    if (!c1p_ok) {
      const TuckerWitness& w = std::get<TuckerWitness>(c1p);
      const BinaryMatrix sub = submatrix(a, w.rows, w.cols);
      if (oracle_c1p(sub)) fail("c1p", "Tucker witness submatrix has the C1P", true);
    }

    // Nested recognition: accept, no-crossing-pair, and the oracle must agree.
    const NestedResult nested = is_nested(a);
    const bool nested_ok = std::holds_alternative<NestedAccept>(nested);
    bool any_crossing = false;
    for (int i = 0; i < a.rows() && !any_crossing; ++i)
      for (int k = i + 1; k < a.rows() && !any_crossing; ++k)
        any_crossing = relate_rows(a, i, k) == RowRelation::crossing;
    count_verdict("nested", nested_ok);
    if (nested_ok != !any_crossing) fail("nested", "is_nested vs crossing-pair check", false);
    if (nested_ok != oracle_nested(a)) fail("nested", "is_nested vs oracle_nested", false);
    check_roundtrip_cert("nested", certificate_for_nested(nested, digest), input);

    // 2-nested recognition against the bipartition-enumerating oracle.
    const TwoNestedResult two = is_two_nested(a);
    const bool two_ok = std::holds_alternative<TwoNestedAccept>(two);
    count_verdict("2nested", two_ok);
    if (two_ok != oracle_two_nested(a))
      fail("2nested", "is_two_nested vs oracle_two_nested", false);
    if (must_be_two_nested && !two_ok)
      fail("2nested", "constructed 2-nested instance rejected", false);
    check_roundtrip_cert("2nested", certificate_for_two_nested(two, digest), input);
    if (std::holds_alternative<TwoNestedConfigReject>(two)) {
      const auto& rej = std::get<TwoNestedConfigReject>(two);
      const BinaryMatrix ordered = permute_columns(a, rej.witness.ordering);
      const BinaryMatrix target = rej.witness.family == ConfigFamily::f0 ? gen_f0()
                                  : rej.witness.family == ConfigFamily::f1
                                      ? gen_f1(rej.witness.k)
                                      : gen_f2(rej.witness.k);
      if (target.rows() <= kOracleMaxConfigRows) {
        if (!oracle_contains_configuration(ordered, target))
          fail("2nested", "ConfigWitness family not confirmed by the configuration oracle",
               true);
      } else if (submatrix(ordered, rej.witness.row_order, rej.witness.col_order) !=
                 target) {
        fail("2nested", "ConfigWitness entries do not match the generated family", true);
      }
    }

    // Crossing-pair entry property on the C1P-ordered matrix.
    if (c1p_ok) {
      const BinaryMatrix ordered = permute_columns(a, std::get<std::vector<int>>(c1p));
      report.by_kind["entryprop"].instances += 1;
      for (int i = 0; i < ordered.rows(); ++i) {
        for (int j = 0; j < ordered.rows(); ++j) {
          if (i == j || relate_rows(ordered, i, j) != RowRelation::crossing) continue;
          const RowInterval ri = row_interval(ordered, i);
          const RowInterval rj = row_interval(ordered, j);
          if (ri.first >= rj.first) continue;
          if (!(ordered.at(i, ri.last) && ordered.at(j, ri.last) &&
                ri.last + 1 < ordered.cols() && !ordered.at(i, ri.last + 1) &&
                ordered.at(j, ri.last + 1))) {
            fail("entryprop", "crossing-pair entry property violated", false);
          }
        }
      }
    }
  }

  void run_graph(const Graph& g) {
    instance_text = serialize_graph(g);
    const std::string digest = digest_string(instance_text);
    const RecognizerInput input = g;

    report.by_kind["format"].instances += 1;
    if (serialize_graph(parse_graph(instance_text)) != instance_text)
      fail("format", "graph round-trip not byte-identical", true);

    if (!std::holds_alternative<SplitGraph>(find_split_partition(g)))
      fail("nested-graph", "generated split graph not recognized as split", false);

    // Oracle route: some split partition (empty-K ones are interchangeable
    // with a singleton-K partition on edgeless graphs, so they are skipped).
    bool oracle_nested_graph = false, oracle_two_nested_graph = false;
    for (const auto& [clique, indep] : oracle_all_split_partitions(g)) {
      if (indep.empty()) {
        oracle_nested_graph = oracle_two_nested_graph = true;
        break;
      }
      if (clique.empty()) continue;
      const SplitGraph sg{g, clique, indep};
      const BinaryMatrix a = adjacency_matrix_sk(sg);
      if (oracle_nested(a)) oracle_nested_graph = true;
      if (oracle_two_nested(a)) oracle_two_nested_graph = true;
      if (oracle_nested_graph && oracle_two_nested_graph) break;
    }

    const NestedGraphResult ng = is_nested_graph(g);
    const bool ng_ok = std::holds_alternative<NestedGraphAccept>(ng);
    count_verdict("nested-graph", ng_ok);
    if (ng_ok != oracle_nested_graph)
      fail("nested-graph", "is_nested_graph vs oracle partition search", false);
    if (ng_ok != !find_induced_gem(g).has_value())
      fail("nested-graph", "is_nested_graph vs gem-freeness", false);
    check_roundtrip_cert("nested-graph", certificate_for_nested_graph(ng, digest), input);

    const TwoNestedGraphResult tg = is_two_nested_graph(g);
    const bool tg_ok = std::holds_alternative<TwoNestedGraphAccept>(tg);
    count_verdict("2nested-graph", tg_ok);
    if (tg_ok != oracle_two_nested_graph)
      fail("2nested-graph", "is_two_nested_graph vs oracle partition search", false);
    check_roundtrip_cert("2nested-graph", certificate_for_two_nested_graph(tg, digest),
                         input);
  }
};

}  // namespace

StressReport run_stress(const StressConfig& cfg) {
  if (cfg.count < 0) throw std::invalid_argument("stress: count must be nonnegative");
  if (cfg.max_rows < 1 || cfg.max_rows > kOracleMaxRows)
    throw std::invalid_argument("stress: max rows outside oracle guard (1..12)");
  if (cfg.max_cols < 1 || cfg.max_cols > kOracleMaxCols)
    throw std::invalid_argument("stress: max cols outside oracle guard (1..8)");

  StressReport report;
  Runner runner{report, {}};
  const int graph_cap = std::min(cfg.max_rows, 8);
  for (long i = 0; i < cfg.count; ++i) {
    const std::uint64_t inst_seed =
        cfg.seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(i + 1);
    std::mt19937_64 rng(inst_seed);
    const int shape = static_cast<int>(i % 5);
    if (shape <= 2) {
      const int n = 1 + static_cast<int>(rng() % cfg.max_rows);
      const int m = 1 + static_cast<int>(rng() % cfg.max_cols);
      const double p = kDensities[(i / 5) % 5];
      runner.run_matrix(gen_random_matrix(n, m, p, rng()), false);
    } else if (shape == 3) {
      const int n = 1 + static_cast<int>(rng() % cfg.max_rows);
      const int m = 1 + static_cast<int>(rng() % cfg.max_cols);
      runner.run_matrix(gen_random_two_nested(n, m, rng()), true);
    } else {
      const int n = 1 + static_cast<int>(rng() % graph_cap);
      runner.run_graph(gen_random_split_graph(n, rng()));
    }
  }
  return report;
}

}  // namespace nested2
