#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nested2/graphs.hpp"
#include "nested2/matrix.hpp"
#include "nested2/recognition.hpp"

namespace nested2 {

/// FNV-1a 64-bit over raw bytes, rendered "fnv1a64:<16 hex digits>"; binds
/// certificates to their input file.
std::uint64_t fnv1a64(const std::string& bytes);
std::string digest_string(const std::string& bytes);

/// Line-oriented key-value certificate. All index lists are 1-based here,
/// exactly as serialized; builders translate from the library's 0-based
/// values. Round-trips byte-identically through serialize/parse.
struct CertificateDocument {
  std::string verdict;  // accept | reject
  std::string cls;      // c1p | nested | 2nested | nested-graph | 2nested-graph
  std::optional<std::string> family;
  std::optional<int> k;
  std::optional<std::vector<int>> rows;
  std::optional<std::vector<int>> cols;
  std::optional<std::vector<int>> cycle;
  std::optional<std::vector<int>> ordering;
  std::optional<std::vector<int>> part1;
  std::optional<std::vector<int>> part2;
  std::optional<std::vector<int>> sorder;
  std::optional<std::vector<int>> korder;
  std::string digest;

  bool operator==(const CertificateDocument&) const = default;
};

std::string serialize_certificate(const CertificateDocument& doc);

/// Throws ParseError (via io) or std::invalid_argument on malformed text.
CertificateDocument parse_certificate(const std::string& text);

CertificateDocument certificate_for_c1p(const C1PResult& r, const std::string& digest);
CertificateDocument certificate_for_nested(const NestedResult& r, const std::string& digest);
CertificateDocument certificate_for_two_nested(const TwoNestedResult& r,
                                               const std::string& digest);
CertificateDocument certificate_for_nested_graph(const NestedGraphResult& r,
                                                 const std::string& digest);
CertificateDocument certificate_for_two_nested_graph(const TwoNestedGraphResult& r,
                                                     const std::string& digest);

using RecognizerInput = std::variant<BinaryMatrix, Graph>;

/// Pure revalidation of a certificate against the input it claims to
/// describe; independent of how the certificate was produced. Returns false
/// for semantically invalid (e.g. tampered) certificates; throws
/// std::invalid_argument when the document is structurally malformed for
/// its class/verdict. The digest binding is the caller's concern.
bool verify_certificate(const RecognizerInput& input, const CertificateDocument& doc);

}  // namespace nested2
