#include "scd/io.hpp"

#include <fstream>
#include <sstream>

namespace scd {

namespace {

// Strips comments; returns false when the stream is exhausted.
bool next_meaningful_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    size_t a = line.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t\r\n");
    line = line.substr(a, b - a + 1);
    return true;
  }
  return false;
}

[[noreturn]] void bad_line(int lineno, const std::string& what) {
  throw input_error("line " + std::to_string(lineno) + ": " + what);
}

} // namespace

Digraph read_digraph(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_meaningful_line(in, line, lineno))
    throw input_error("empty digraph file");
  std::istringstream hdr(line);
  long long n = -1, m = -1;
  if (!(hdr >> n >> m) || n < 0 || m < 0)
    bad_line(lineno, "expected header 'n m'");
  std::string extra;
  if (hdr >> extra) bad_line(lineno, "trailing tokens after 'n m'");
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(size_t(m));
  for (long long k = 0; k < m; ++k) {
    if (!next_meaningful_line(in, line, lineno))
      throw input_error("unexpected end of file: expected " + std::to_string(m) +
                        " arcs, got " + std::to_string(k));
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u >> v)) bad_line(lineno, "expected arc 'u v'");
    if (ls >> extra) bad_line(lineno, "trailing tokens after arc");
    if (u < 0 || u >= n || v < 0 || v >= n)
      bad_line(lineno, "arc (" + std::to_string(u) + "," + std::to_string(v) +
                           ") out of range for n=" + std::to_string(n));
    arcs.emplace_back(int(u), int(v));
  }
  return Digraph::build(int(n), arcs);
}

Digraph read_digraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  return read_digraph(in);
}

void write_digraph(std::ostream& out, const Digraph& d) {
  out << d.n() << ' ' << d.arc_count() << '\n';
  for (int u = 0; u < d.n(); ++u)
    for (int v = d.out_row(u).first(); v != -1; v = d.out_row(u).next(v))
      out << u << ' ' << v << '\n';
}

void write_digraph_file(const std::string& path, const Digraph& d) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot write " + path);
  write_digraph(out, d);
}

std::vector<std::string> read_matrix_lines(std::istream& in) {
  std::vector<std::string> rows;
  std::string line;
  int lineno = 0;
  while (next_meaningful_line(in, line, lineno)) {
    for (char c : line)
      if (c != '0' && c != '1')
        bad_line(lineno, std::string("matrix rows must contain only 0/1, got '") + c + "'");
    if (!rows.empty() && rows.back().size() != line.size())
      bad_line(lineno, "matrix rows have differing lengths");
    rows.push_back(line);
  }
  if (rows.empty()) throw input_error("empty matrix file");
  return rows;
}

Digraph digraph_from_matrix_lines(const std::vector<std::string>& lines) {
  int n = int(lines.size());
  if (!lines.empty() && int(lines[0].size()) != n)
    throw input_error("matrix is not square: " + std::to_string(n) + " rows of width " +
                      std::to_string(lines[0].size()));
  Digraph d(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (lines[i][j] == '1') d.add_arc(i, j);
  return d;
}

void write_matrix(std::ostream& out, const Digraph& d) {
  for (int i = 0; i < d.n(); ++i) {
    std::string row(d.n(), '0');
    for (int j = 0; j < d.n(); ++j)
      if (d.arc(i, j)) row[j] = '1';
    out << row << '\n';
  }
}

FileFormat detect_format(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_meaningful_line(in, line, lineno))
    throw input_error("empty input file");
  // A lone 0/1 token of length > 1 can only be a matrix row; "n m" headers
  // always have two tokens.
  std::istringstream ls(line);
  std::string tok1, tok2;
  ls >> tok1;
  bool second = bool(ls >> tok2);
  bool binary = tok1.find_first_not_of("01") == std::string::npos;
  if (!second && binary) return FileFormat::Matrix;
  return FileFormat::DigraphEdgeList;
}

Digraph read_any_digraph_file(const std::string& path) {
  std::ifstream probe(path);
  if (!probe) throw input_error("cannot open " + path);
  FileFormat f = detect_format(probe);
  std::ifstream in(path);
  if (f == FileFormat::Matrix) return digraph_from_matrix_lines(read_matrix_lines(in));
  return read_digraph(in);
}

} // namespace scd
