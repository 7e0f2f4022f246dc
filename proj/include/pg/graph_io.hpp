#pragma once

#include <string>

#include "pg/graph.hpp"

namespace pg {

// Line-oriented graph text format:
//   SIGNATURE
//   <name> : <port>(, <port>)*
//   NODES
//   <id> : <name> ( <port>=<state> )*
//   EDGES
//   <id>.<port> -- <id>.<port>
//   POSITION            (optional; default empty)
//   <id>(, <id>)*
// '#' starts a comment. parse(print(g)) == g for every valid graph.
LocatedGraph parse_graph(const std::string& text);
std::string print_graph(const LocatedGraph& lg);

}  // namespace pg
