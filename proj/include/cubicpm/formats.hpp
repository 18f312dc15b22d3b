#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cubicpm/multigraph.hpp"

namespace cubicpm {

/// Malformed input. `line` is 1-based; `byte` is the 0-based offset within
/// that line, or -1 when the error concerns the whole record.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, long line, long byte = -1);

  long line() const { return line_; }
  long byte() const { return byte_; }

 private:
  long line_;
  long byte_;
};

enum class GraphFormat { edge_list, graph6, sparse6 };

/// "edge_list", "graph6" or "sparse6"; throws std::invalid_argument.
GraphFormat parse_format_name(std::string_view name);
const char* to_string(GraphFormat f);

/// By extension: .g6 -> graph6, .s6 -> sparse6, anything else edge_list.
GraphFormat format_for_path(const std::string& path);

/// Native format: "n m" followed by m lines "u v", blocks concatenated.
/// Blank lines and lines starting with '#' are skipped.
std::vector<MultiGraph> read_edge_lists(std::istream& in);
void write_edge_list(std::ostream& out, const MultiGraph& g);

/// One graph per line; an optional ">>graph6<<" header is accepted.
/// graph6 describes simple graphs only.
MultiGraph parse_graph6(std::string_view text, long line = 1);
std::string to_graph6(const MultiGraph& g);  // throws GraphError on parallel edges

/// sparse6 (leading ':'), with multi-edges. Loops are rejected.
MultiGraph parse_sparse6(std::string_view text, long line = 1);
std::string to_sparse6(const MultiGraph& g);

std::vector<MultiGraph> read_graphs(std::istream& in, GraphFormat format);
std::vector<MultiGraph> read_graph_file(const std::string& path, GraphFormat format);
void write_graph(std::ostream& out, const MultiGraph& g, GraphFormat format);

}  // namespace cubicpm
