#ifndef GRAFT_SUBGRAPH_HPP
#define GRAFT_SUBGRAPH_HPP

#include <optional>

#include "graft/graph.hpp"

namespace graft {

// q-edge subgraph of a host graph in which every vertex is incident to at
// most `degree_cap` of the member edges. The vertex set is implied by the
// edge endpoints.
struct DegreeBoundedSubgraph {
    std::vector<Edge> edges;
    int degree_cap = 0;
};

// Independent validator for both defining conditions: membership in the
// host and the per-vertex incidence cap. Duplicate member edges also fail.
bool is_degree_bounded_subgraph(const Graph& host, const DegreeBoundedSubgraph& w);

// Edge count up to which the search is exhaustive branch-and-bound.
inline constexpr int kSubgraphExhaustiveEdgeLimit = 24;

struct MaxEdgesResult {
    int count = 0;
    std::vector<Edge> witness;  // lexicographically sorted
    bool exact = false;
};

// Maximum number of edges of any subgraph of g with per-vertex degree <= p.
// Exact (branch-and-bound over edges with degree-cap and capacity pruning)
// when |E(g)| <= kSubgraphExhaustiveEdgeLimit, otherwise a greedy lower
// bound flagged inexact.
MaxEdgesResult max_degree_bounded_edges(const Graph& g, int p);

struct RtSubgraphResult {
    std::optional<DegreeBoundedSubgraph> witness;
    bool exact = false;

    bool found() const { return witness.has_value(); }
};

// An (r,t)-subgraph of g when max_degree_bounded_edges(g,r) reaches t
// (trimmed to the lexicographically smallest t witness edges), otherwise
// NotFound carrying the exactness flag.
RtSubgraphResult find_rt_subgraph(const Graph& g, int r, int t);

}  // namespace graft

#endif
