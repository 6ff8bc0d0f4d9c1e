#ifndef GRAFT_GRAPH_HPP
#define GRAFT_GRAPH_HPP

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "graft/errors.hpp"

namespace graft {

// Undirected edge, stored normalized with u < v. Lexicographic order.
struct Edge {
    int u;
    int v;

    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b)
            throw InvalidGraph("self-loop (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }

    friend auto operator<=>(const Edge&, const Edge&) = default;
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 1..n. Immutable after construction.
// Adjacency is kept as sorted neighbor lists; a hashed key set gives O(1)
// edge membership.
class Graph {
public:
    Graph() : n_(0) {}
    explicit Graph(int n);
    Graph(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    const std::vector<int>& neighbors(int v) const;
    // Lexicographically sorted (u < v within each edge).
    const std::vector<Edge>& edges() const { return edges_; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_;
    std::vector<std::vector<int>> adj_;  // adj_[v] for v in 1..n, sorted ascending
    std::vector<Edge> edges_;            // sorted
    std::unordered_set<std::uint64_t> keys_;

    void check_vertex(int v) const;
};

// Per-vertex degrees of a graph; entry for vertex i is of(i).
class DegreeSequence {
public:
    explicit DegreeSequence(std::vector<int> degrees);

    int of(int v) const;
    int vertex_count() const { return static_cast<int>(deg_.size()); }
    long long sum() const;
    const std::vector<int>& values() const { return deg_; }

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

private:
    std::vector<int> deg_;  // deg_[i-1] = degree of vertex i
};

// Sequence of distinct vertices; consecutive pairs are the path edges.
class Path {
public:
    explicit Path(std::vector<int> vertices);

    const std::vector<int>& vertices() const { return vertices_; }
    int edge_count() const { return static_cast<int>(vertices_.size()) - 1; }
    std::vector<Edge> edges() const;

private:
    std::vector<int> vertices_;
};

// Pairwise vertex-disjoint edges.
class Matching {
public:
    explicit Matching(std::vector<Edge> edges);

    const std::vector<Edge>& edges() const { return edges_; }
    int size() const { return static_cast<int>(edges_.size()); }

    friend bool operator==(const Matching&, const Matching&) = default;

private:
    std::vector<Edge> edges_;  // sorted
};

DegreeSequence degree_sequence(const Graph& g);

bool is_connected(const Graph& g);

// True iff every consecutive pair of p is an edge of g.
bool is_path_of(const Path& p, const Graph& g);

// Greedy endpoint extension: returns a path with at least delta edges, where
// delta is the minimum degree of the component containing the lowest-index
// non-isolated vertex. Start/extension choices always take the lowest
// admissible vertex; the result is oriented so its first vertex is the
// smaller endpoint.
Path find_min_degree_path(const Graph& g);

// The 1st, 3rd, 5th, ... edges of p, `count` of them. Pairwise vertex-disjoint.
std::vector<Edge> alternate_disjoint_edges(const Path& p, int count);

struct MatchingSearch {
    bool found = false;
    bool exact = false;  // exhaustive search; a negative answer is a proof
    std::vector<Matching> matchings;
};

// Edge count up to which find_disjoint_matchings enumerates exhaustively.
inline constexpr int kMatchingExhaustiveEdgeLimit = 16;

// Searches for `count` pairwise edge-disjoint matchings, each of exactly
// `size` edges (vertices may repeat across matchings). Exhaustive with
// pruning up to kMatchingExhaustiveEdgeLimit edges, greedy above.
MatchingSearch find_disjoint_matchings(const Graph& g, int count, int size);

}  // namespace graft

#endif
