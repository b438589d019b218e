#ifndef GRAPHPOW_IO_HPP
#define GRAPHPOW_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "graphpow/graph.hpp"

namespace graphpow {

/**
 * Edge-list text format (bit-exact):
 *   first non-comment line "n m", then exactly m lines "u v" with
 *   0 <= u < v < n, ascii decimal, single-space separated, newline
 *   terminated. Lines starting with '#' are ignored. The writer emits
 *   edges sorted lexicographically.
 * Parse errors name the offending line.
 */
Graph parse_edge_list(std::istream& in);
Graph read_edge_list(const std::string& path);
std::string edge_list_string(const Graph& g);
void write_edge_list(const Graph& g, const std::string& path);

/**
 * graph6: one graph per line. Size header N(n) (63+n for n <= 62, the
 * extended 3- and 6-byte forms above), then the upper-triangle adjacency
 * bits in column order, packed 6 per byte, each byte offset by 63.
 * The encoder emits canonical zero padding; the decoder tolerates nonzero
 * padding bits. Rejects bytes outside [63, 126] and truncated or
 * overlong bit vectors.
 */
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view line);
std::vector<Graph> read_graph6(const std::string& path);  // empty file -> empty stream
void write_graph6(const Graph& g, const std::string& path);
void write_graph6(const std::vector<Graph>& gs, const std::string& path);

}  // namespace graphpow

#endif
