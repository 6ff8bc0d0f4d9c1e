#ifndef GRAFT_EDGE_LIST_HPP
#define GRAFT_EDGE_LIST_HPP

#include <string>

#include "graft/graph.hpp"

namespace graft {

// Line-oriented edge-list format. `#` starts a comment line, the first
// non-comment line is `n <N>`, every further non-comment line is one
// `<u> <v>` edge. The parser accepts u > v and normalizes; blank lines are
// skipped.
Graph parse_edge_list(const std::string& text);

// Canonical form: header, then edges sorted lexicographically with u < v.
// Byte-deterministic; parse(serialize(g)) == g.
std::string serialize_edge_list(const Graph& g);

}  // namespace graft

#endif
