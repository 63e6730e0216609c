#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "genpos/graph.hpp"

namespace genpos {

/// graph6: order in 1 or 4 header bytes, then the upper triangle in column
/// order packed six bits per byte, each byte offset by 63. An optional
/// ">>graph6<<" prefix and trailing line break are accepted.
/// Throws MalformedHeader (empty/short/out-of-range bytes) and TrailingBits
/// (extra bytes or nonzero padding).
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

/// "n <count>" on the first line, then one 0-based "u v" pair per edge.
/// Blank lines and lines starting with '#' are skipped; repeated edges
/// collapse. Throws BadToken, VertexOutOfRange, SelfLoop.
Graph parse_edgelist(std::string_view text);
std::string emit_edgelist(const Graph& g);

enum class GraphFormat { Graph6, EdgeList };

/// graph6: one graph per non-empty line. Edge list: graphs separated by
/// their "n" header lines.
std::vector<Graph> read_graphs(std::istream& in, GraphFormat format);
std::string emit(const Graph& g, GraphFormat format);

}  // namespace genpos
