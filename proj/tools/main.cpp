// Command-line surface: recognize / gen / verify / stress.
//
// Exit codes: 0 accept (or pass), 1 reject (or fail), 2 usage, parse or
// contract error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nested2/c1p.hpp"
#include "nested2/certificate.hpp"
#include "nested2/generators.hpp"
#include "nested2/io.hpp"
#include "nested2/oracle.hpp"
#include "nested2/stress.hpp"

namespace {

constexpr int kAccept = 0;
constexpr int kReject = 1;
constexpr int kError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << bytes;
}

struct RecognizeArgs {
  std::string kind;
  std::string input;
  std::string cert;
};

int run_recognize(const RecognizeArgs& args) {
  const std::string bytes = read_file(args.input);
  const std::string digest = nested2::digest_string(bytes);
  const bool graph_kind = args.kind == "nested-graph" || args.kind == "2nested-graph";

  nested2::CertificateDocument doc;
  bool accepted = false;
  std::string summary;

  if (graph_kind) {
    const nested2::Graph g = nested2::parse_graph(bytes);
    if (args.kind == "nested-graph") {
      auto r = nested2::is_nested_graph(g);
      doc = nested2::certificate_for_nested_graph(r, digest);
      accepted = std::holds_alternative<nested2::NestedGraphAccept>(r);
    } else {
      auto r = nested2::is_two_nested_graph(g);
      doc = nested2::certificate_for_two_nested_graph(r, digest);
      accepted = std::holds_alternative<nested2::TwoNestedGraphAccept>(r);
    }
  } else {
    const nested2::BinaryMatrix a = nested2::parse_matrix(bytes);
    if (args.kind == "c1p") {
      auto r = nested2::test_c1p(a);
      doc = nested2::certificate_for_c1p(r, digest);
      accepted = nested2::c1p_accepted(r);
    } else if (args.kind == "nested") {
      auto r = nested2::is_nested(a);
      doc = nested2::certificate_for_nested(r, digest);
      accepted = std::holds_alternative<nested2::NestedAccept>(r);
    } else {
      auto r = nested2::is_two_nested(a);
      doc = nested2::certificate_for_two_nested(r, digest);
      accepted = std::holds_alternative<nested2::TwoNestedAccept>(r);
    }
  }

  summary = std::string(accepted ? "accept" : "reject") + " " + args.kind + " " + args.input;
  if (!accepted && doc.family) summary += " (witness: " + *doc.family + ")";
  std::cout << summary << "\n";
  if (!args.cert.empty()) write_file(args.cert, nested2::serialize_certificate(doc));
  return accepted ? kAccept : kReject;
}

struct GenArgs {
  std::string family;
  int k = 0;
  int n = 4;
  int m = 4;
  double p = 0.5;
  std::uint64_t seed = 1;
  std::string out;
};

int run_gen(const GenArgs& args) {
  std::string bytes;
  if (args.family == "G0") {
    bytes = nested2::serialize_matrix(nested2::gen_g0());
  } else if (args.family == "F0") {
    bytes = nested2::serialize_matrix(nested2::gen_f0());
  } else if (args.family == "F1") {
    bytes = nested2::serialize_matrix(nested2::gen_f1(args.k));
  } else if (args.family == "F2") {
    bytes = nested2::serialize_matrix(nested2::gen_f2(args.k));
  } else if (args.family == "MI" || args.family == "MII" || args.family == "MIII") {
    const auto fam = args.family == "MI"    ? nested2::TuckerFamily::m_i
                     : args.family == "MII" ? nested2::TuckerFamily::m_ii
                                            : nested2::TuckerFamily::m_iii;
    bytes = nested2::serialize_matrix(nested2::gen_tucker(fam, args.k == 0 ? 1 : args.k));
  } else if (args.family == "MIV") {
    bytes = nested2::serialize_matrix(nested2::gen_tucker(nested2::TuckerFamily::m_iv));
  } else if (args.family == "MV") {
    bytes = nested2::serialize_matrix(nested2::gen_tucker(nested2::TuckerFamily::m_v));
  } else if (args.family == "random") {
    bytes = nested2::serialize_matrix(
        nested2::gen_random_matrix(args.n, args.m, args.p, args.seed));
  } else if (args.family == "random2nested") {
    bytes =
        nested2::serialize_matrix(nested2::gen_random_two_nested(args.n, args.m, args.seed));
  } else if (args.family == "randomsplit") {
    bytes = nested2::serialize_graph(nested2::gen_random_split_graph(args.n, args.seed));
  } else {
    std::cerr << "unknown family: " << args.family << "\n";
    return kError;
  }
  write_file(args.out, bytes);
  std::cout << "gen " << args.family;
  if (args.k != 0) std::cout << " k=" << args.k;
  if (args.family == "random")
    std::cout << " n=" << args.n << " m=" << args.m << " p=" << args.p;
  else if (args.family == "random2nested")
    std::cout << " n=" << args.n << " m=" << args.m;
  else if (args.family == "randomsplit")
    std::cout << " n=" << args.n;
  if (args.family.rfind("random", 0) == 0) std::cout << " seed=" << args.seed;
  std::cout << " -> " << args.out << "\n";
  return kAccept;
}

struct VerifyArgs {
  std::string input;
  std::string cert;
};

int run_verify(const VerifyArgs& args) {
  const std::string bytes = read_file(args.input);
  const nested2::CertificateDocument doc =
      nested2::parse_certificate(read_file(args.cert));
  const std::string digest = nested2::digest_string(bytes);
  if (doc.digest != digest) {
    std::cerr << "digest mismatch: certificate was issued for a different input ("
              << doc.digest << " vs " << digest << ")\n";
    return kError;
  }
  const bool graph_cls = doc.cls == "nested-graph" || doc.cls == "2nested-graph";
  const nested2::RecognizerInput input =
      graph_cls ? nested2::RecognizerInput(nested2::parse_graph(bytes))
                : nested2::RecognizerInput(nested2::parse_matrix(bytes));
  const bool ok = nested2::verify_certificate(input, doc);
  std::cout << (ok ? "valid" : "invalid") << " certificate (" << doc.cls << ", "
            << doc.verdict << ")\n";
  return ok ? kAccept : kReject;
}

struct StressArgs {
  long count = 1000;
  int max_rows = 6;
  int max_cols = 6;
  std::uint64_t seed = 1;
  std::string fail_out = "stress_counterexample.txt";
};

int run_stress_cmd(const StressArgs& args) {
  nested2::StressConfig cfg;
  cfg.count = args.count;
  cfg.max_rows = args.max_rows;
  cfg.max_cols = args.max_cols;
  cfg.seed = args.seed;
  const nested2::StressReport report = nested2::run_stress(cfg);

  std::cout << "kind            instances   accepts   rejects  mismatch  certfail\n";
  for (const auto& [kind, s] : report.by_kind) {
    std::printf("%-15s %9ld %9ld %9ld %9ld %9ld\n", kind.c_str(), s.instances, s.accepts,
                s.rejects, s.mismatches, s.cert_failures);
  }
  std::cout << "total mismatches: " << report.total_mismatches()
            << ", certificate failures: " << report.total_cert_failures() << "\n";
  if (!report.ok()) {
    if (report.first_failure_instance) {
      write_file(args.fail_out, *report.first_failure_instance);
      std::cerr << "first failure: " << *report.first_failure_description
                << " (instance written to " << args.fail_out << ")\n";
    }
    return kReject;
  }
  return kAccept;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"recognition and certification for nested / 2-nested matrices and split graphs"};
  app.require_subcommand(1);

  RecognizeArgs rec;
  auto* recognize = app.add_subcommand("recognize", "decide class membership, emit a certificate");
  recognize
      ->add_option("--kind", rec.kind, "nested|2nested|c1p|nested-graph|2nested-graph")
      ->required()
      ->check(CLI::IsMember({"nested", "2nested", "c1p", "nested-graph", "2nested-graph"}));
  recognize->add_option("--input", rec.input, "matrix or graph file")->required();
  recognize->add_option("--cert", rec.cert, "write the certificate here");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate named families and random instances");
  gen_cmd
      ->add_option("--family", gen.family,
                   "G0|F0|F1|F2|MI|MII|MIII|MIV|MV|random|random2nested|randomsplit")
      ->required();
  gen_cmd->add_option("--k", gen.k, "family parameter");
  gen_cmd->add_option("--n", gen.n, "rows / vertices");
  gen_cmd->add_option("--m", gen.m, "columns");
  gen_cmd->add_option("--p", gen.p, "density");
  gen_cmd->add_option("--seed", gen.seed, "random seed");
  gen_cmd->add_option("--out", gen.out, "output file")->required();

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "revalidate a certificate against its input");
  verify->add_option("--input", ver.input, "matrix or graph file")->required();
  verify->add_option("--cert", ver.cert, "certificate file")->required();

  StressArgs stress;
  auto* stress_cmd =
      app.add_subcommand("stress", "randomized recognizer-vs-oracle comparison run");
  stress_cmd->add_option("--count", stress.count, "number of instances");
  stress_cmd->add_option("--max-rows", stress.max_rows, "row bound (<= 12)");
  stress_cmd->add_option("--max-cols", stress.max_cols, "column bound (<= 8)");
  stress_cmd->add_option("--seed", stress.seed, "random seed");
  stress_cmd->add_option("--fail-out", stress.fail_out, "counterexample file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kError;
  }

  try {
    if (recognize->parsed()) return run_recognize(rec);
    if (gen_cmd->parsed()) return run_gen(gen);
    if (verify->parsed()) return run_verify(ver);
    return run_stress_cmd(stress);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}
