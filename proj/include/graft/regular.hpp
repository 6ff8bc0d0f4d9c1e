#ifndef GRAFT_REGULAR_HPP
#define GRAFT_REGULAR_HPP

#include "graft/graph.hpp"

namespace graft {

enum class RegularMode {
    ExactlyRegular,
    NearlyRegular,  // one vertex of degree k-1, all others degree k
};

struct RegularSpec {
    int n;
    int k;
    RegularMode mode = RegularMode::ExactlyRegular;
};

// Complete graph on {1..m}.
Graph complete_graph(int m);

// One growth step for even k: extends a connected k-regular graph on {1..n}
// to one on {1..n+1} by rewiring k/2 vertex-disjoint edges of a k-edge path
// through the new vertex.
Graph grow_even(const Graph& g, int k);

// One growth step for odd k: extends a connected k-regular graph on {1..n}
// to one on {1..n+2}, splitting a (k+1)-vertex path between the two new
// vertices and joining them.
Graph grow_odd_pair(const Graph& g, int k);

// Attaches vertex n to a connected k-regular graph on {1..n-1} (k odd),
// producing a connected graph where vertex n has degree k-1 and all others
// keep degree k.
Graph attach_nearly(const Graph& g, int k);

// Iterative construction from K_{k+1}. Deterministic for a fixed spec.
Graph generate(const RegularSpec& spec);

}  // namespace graft

#endif
