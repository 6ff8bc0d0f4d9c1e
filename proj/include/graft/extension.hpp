#ifndef GRAFT_EXTENSION_HPP
#define GRAFT_EXTENSION_HPP

#include <iosfwd>

#include "graft/graph.hpp"
#include "graft/subgraph.hpp"

namespace graft {

// A degree-preserving extension request: attach r new vertices, each of
// degree k, to a graph on {1..n}. The construction requires r*k even.
struct ExtensionProblem {
    Graph g;
    int r;
    int k;

    ExtensionProblem(Graph g, int r, int k);
};

// A validated extension H of some base graph G on {1..n}: H lives on
// {1..n+r}, preserves the degree of every base vertex, and gives each new
// vertex degree k. The cost decomposition is relative to E_1(H), the edges
// of H touching a base vertex.
struct Extension {
    Graph h;
    int base_n = 0;
    std::vector<Edge> cross_edges;  // one endpoint <= base_n, one above
    std::vector<Edge> e1;           // edges of h with an endpoint <= base_n
    std::vector<Edge> removed;      // E(G) \ E_1(H)
    std::vector<Edge> added;        // E_1(H) \ E(G)
};

// Checks vertex count and the full degree contract; fills in the cost
// decomposition on success.
Extension validate_extension(const Graph& g, const Graph& h, int r, int k);

// |E(G) \ E_1(H)| + |E_1(H) \ E(G)|, recomputed from scratch.
int edit_cost(const Graph& g, const Extension& ext);

// G unioned with a k-regular graph on the r new vertices. Zero cost, no
// cross edges. Requires k <= r-1.
Extension trivial_extension(const ExtensionProblem& problem);

// Assignment of the 2t endpoint slots of a witness subgraph to new
// vertices: slot j carries the j-th entry of the endpoint vector (each
// witness vertex listed deg_W(v) times, ascending, copies consecutive) and
// is wired to new vertex n + 1 + ((j-1) mod r). Round-robin keeps the
// copies of one vertex on distinct new vertices and gives every new vertex
// exactly k-r+1 cross edges.
struct ConnectionPlan {
    std::vector<int> endpoint_slots;       // z_1..z_{2t}
    std::vector<int> new_vertex_for_slot;  // parallel to endpoint_slots
};

ConnectionPlan build_connection_plan(const DegreeBoundedSubgraph& w, int r, int k, int n);

// The 3t-cost construction: remove the t witness edges, add the clique on
// the new vertices, then wire the 2t freed endpoint slots per the
// connection plan. Requires k >= r and a valid (r,t)-subgraph of
// problem.g with t = r(k-r+1)/2. Pass `trace` to dump the intermediate
// stage.
Extension optimal_extension(const ExtensionProblem& problem, const DegreeBoundedSubgraph& w,
                            std::ostream* trace = nullptr);

}  // namespace graft

#endif
