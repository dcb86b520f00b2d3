#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "scd/digraph.hpp"

namespace scd {

struct ZeroOneMatrix;  // matrix.hpp

// Digraph text format: first meaningful line "n m", then m lines "u v"
// (0-based arc u->v; "v v" is a loop). '#' starts a comment, blank lines
// are ignored. Symmetric digraphs carry both arcs explicitly.
Digraph read_digraph(std::istream& in);
Digraph read_digraph_file(const std::string& path);
void write_digraph(std::ostream& out, const Digraph& d);
void write_digraph_file(const std::string& path, const Digraph& d);

// Matrix format: one line of '0'/'1' characters per row; all rows the same
// length. Same comment/blank conventions.
std::vector<std::string> read_matrix_lines(std::istream& in);
Digraph digraph_from_matrix_lines(const std::vector<std::string>& lines);
void write_matrix(std::ostream& out, const Digraph& d);

enum class FileFormat { DigraphEdgeList, Matrix };

/// Sniff which format a file uses from its first meaningful line.
FileFormat detect_format(std::istream& in);

/// Read either format as a digraph (matrix must be square).
Digraph read_any_digraph_file(const std::string& path);

} // namespace scd
