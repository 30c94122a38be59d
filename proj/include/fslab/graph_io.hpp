#pragma once

#include <string>

#include "fslab/fs.hpp"
#include "fslab/graph.hpp"
#include "fslab/perm.hpp"

namespace fslab {

// Multi-line text format: first line `n`, then one `u v` pair per line,
// 0-indexed, whitespace-separated.
std::string to_edge_text(const Graph& g);
Graph parse_edge_text(const std::string& text);

// Compact one-line format `n:<hex>`: the upper-triangle adjacency bits in
// row-major pair order (0,1), (0,2), ..., (0,n-1), (1,2), ..., packed
// MSB-first into lowercase hex nibbles with zero padding.
std::string to_compact(const Graph& g);
Graph parse_compact(const std::string& line);

// Accepts either format (compact if the line contains a ':').
Graph parse_graph(const std::string& text);

// One-line image sequence "s(0) s(1) ... s(n-1)".
std::string to_text(const Bijection& b);
Bijection parse_bijection(const std::string& line);

// ComponentReport as JSON: count, sizes sorted ascending, and, when
// present, perComponentKappa / componentLabels reordered consistently with
// the sizes array ((size, kappa, label, id) sort).
std::string component_report_json(const ComponentReport& report);

}  // namespace fslab
