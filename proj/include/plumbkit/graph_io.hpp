#pragma once

#include "plumbkit/graph.hpp"

#include <string>

namespace plumbkit {

// Graph documents are line oriented:
//
//   # comment (also allowed after a record)
//   vertex <id> <weight>
//   edge <id> <id>
//
// Ids use [A-Za-z0-9_.:-]. Every edge must name vertices declared on an
// earlier line.

/// Throws ParseError with the offending line and field.
PlumbingGraph parse_graph(const std::string& text);

/// `first_line` offsets reported line numbers when the document is embedded
/// in a larger file.
PlumbingGraph parse_graph(const std::string& text, std::size_t first_line);

/// Vertices in id order, then edges in order. parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const PlumbingGraph& g);

/// Undirected DOT graph with weights as node labels, nodes in id order.
std::string to_dot(const PlumbingGraph& g);

bool valid_vertex_id(const std::string& id);

}  // namespace plumbkit
