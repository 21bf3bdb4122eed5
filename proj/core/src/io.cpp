#include "nested2/io.hpp"

#include <charconv>

namespace nested2 {

namespace {

// Cursor over the raw text tracking 1-based line/column for errors.
class Cursor {
 public:
  explicit Cursor(const std::string& text) : text_(text) {}

  bool eof() const { return pos_ >= text_.size(); }
  int line() const { return line_; }
  int col() const { return col_; }

  char peek() const { return text_[pos_]; }

  char take() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  // Nonnegative decimal integer; at least one digit.
  int take_uint(const char* what) {
    if (eof() || peek() < '0' || peek() > '9')
      throw ParseError(line_, col_, std::string("expected ") + what);
    long v = 0;
    while (!eof() && peek() >= '0' && peek() <= '9') {
      v = v * 10 + (take() - '0');
      if (v > 1'000'000) throw ParseError(line_, col_, std::string(what) + " too large");
    }
    return static_cast<int>(v);
  }

  void expect(char c, const char* what) {
    if (eof() || peek() != c) throw ParseError(line_, col_, std::string("expected ") + what);
    take();
  }

  void expect_end() {
    if (!eof()) throw ParseError(line_, col_, "unexpected trailing content");
  }

 private:
  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

BinaryMatrix parse_matrix(const std::string& text) {
  Cursor cur(text);
  const int n = cur.take_uint("row count");
  cur.expect(' ', "single space between dimensions");
  const int m = cur.take_uint("column count");
  cur.expect('\n', "newline after header");
  if (n == 0) throw ParseError(1, 1, "row count must be positive");
  if (m == 0) throw ParseError(1, 1, "column count must be positive");

  BinaryMatrix a(n, m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      if (cur.eof() || cur.peek() == '\n')
        throw ParseError(cur.line(), cur.col(), "row shorter than declared width");
      const char c = cur.take();
      if (c != '0' && c != '1')
        throw ParseError(cur.line(), cur.col() - 1,
                         std::string("invalid character '") + c + "' in matrix row");
      if (c == '1') a.set(i, j, true);
    }
    if (cur.eof() || cur.peek() != '\n')
      throw ParseError(cur.line(), cur.col(), "row longer than declared width or missing newline");
    cur.take();
  }
  cur.expect_end();
  return a;
}

std::string serialize_matrix(const BinaryMatrix& a) {
  std::string out = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
  for (int i = 0; i < a.rows(); ++i) {
    out += a.row_string(i);
    out += '\n';
  }
  return out;
}

Graph parse_graph(const std::string& text) {
  Cursor cur(text);
  const int n = cur.take_uint("vertex count");
  cur.expect(' ', "single space between counts");
  const int e = cur.take_uint("edge count");
  cur.expect('\n', "newline after header");
  if (n == 0) throw ParseError(1, 1, "vertex count must be positive");

  Graph g(n);
  int prev_u = 0, prev_v = 0;
  for (int i = 0; i < e; ++i) {
    const int line = cur.line();
    const int u = cur.take_uint("edge endpoint");
    cur.expect(' ', "single space between endpoints");
    const int v = cur.take_uint("edge endpoint");
    cur.expect('\n', "newline after edge");
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError(line, 0, "edge endpoint out of range");
    if (u >= v) throw ParseError(line, 0, "edge must satisfy u < v");
    if (i > 0 && (u < prev_u || (u == prev_u && v <= prev_v)))
      throw ParseError(line, 0, "edges must be strictly increasing, no duplicates");
    g.add_edge(u - 1, v - 1);
    prev_u = u;
    prev_v = v;
  }
  cur.expect_end();
  return g;
}

std::string serialize_graph(const Graph& g) {
  std::string out = std::to_string(g.vertices()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u + 1);
    out += ' ';
    out += std::to_string(v + 1);
    out += '\n';
  }
  return out;
}

}  // namespace nested2
