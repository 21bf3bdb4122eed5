#pragma once

#include <stdexcept>
#include <string>

#include "nested2/graphs.hpp"
#include "nested2/matrix.hpp"

namespace nested2 {

/// Parse failure with 1-based position; col 0 means the whole line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) +
                           (col > 0 ? ", column " + std::to_string(col) : "") + ": " +
                           message),
        line_(line),
        col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

/// Matrix text format: "n m\n" then n lines of exactly m characters from
/// {0,1}, each newline-terminated, nothing else. Rejects n=0 or m=0,
/// ragged rows, and foreign characters.
BinaryMatrix parse_matrix(const std::string& text);
std::string serialize_matrix(const BinaryMatrix& a);

/// Graph text format: "n e\n" then e lines "u v\n" with 1 <= u < v <= n in
/// strictly increasing lexicographic order, no duplicates.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

}  // namespace nested2
