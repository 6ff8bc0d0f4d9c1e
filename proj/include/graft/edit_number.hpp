#ifndef GRAFT_EDIT_NUMBER_HPP
#define GRAFT_EDIT_NUMBER_HPP

#include <optional>
#include <variant>

#include "graft/extension.hpp"
#include "graft/graph.hpp"

namespace graft {

// Largest total vertex count (n+r) the exhaustive oracle accepts by
// default; 8 is the documented opt-in maximum.
inline constexpr int kOracleVertexLimit = 7;
inline constexpr int kOracleVertexLimitMin = 3;
inline constexpr int kOracleVertexLimitMax = 8;

// 0 when k <= r-1, otherwise 3t with t = r(k-r+1)/2.
int lower_bound(int r, int k);

// 2|E(G)| + rk/2: the cost of discarding every base edge and rebuilding,
// meaningful only when an extension exists at all.
int upper_bound_generic(const Graph& g, int r, int k);

struct OracleResult {
    std::optional<int> value;  // nullopt = no extension exists
    std::optional<Graph> best;

    bool infinite() const { return !value.has_value(); }
};

// Direct evaluation of the edit-number definition: enumerates every graph
// on {1..n+r} with the required degree sequence and minimizes the cost.
// Independent of the witness-based machinery.
OracleResult exact_oracle(const Graph& g, int r, int k, int vertex_limit = kOracleVertexLimit);

struct EditNumberResult {
    struct Finite {
        int value;
    };
    struct Infinite {};
    struct Interval {
        int lo;
        std::optional<int> hi;  // nullopt: no finite upper bound is known
    };
    enum class Method {
        Theorem1Case1,
        Theorem1Case2Equality,
        Oracle,
        BoundOnly,
    };

    std::variant<Finite, Infinite, Interval> value;
    std::optional<Extension> witness;  // present for every finite value
    Method method = Method::BoundOnly;

    const Finite* finite() const { return std::get_if<Finite>(&value); }
    bool infinite() const { return std::holds_alternative<Infinite>(value); }
    const Interval* interval() const { return std::get_if<Interval>(&value); }
};

// Computes or bounds the edit number. k <= r-1 resolves to 0 with a trivial
// witness; otherwise a witness subgraph resolves to 3t with the constructed
// extension; an exact miss proves the value exceeds 3t and falls back to
// the oracle when allowed and in range, or to an interval.
EditNumberResult edit_number(const Graph& g, int r, int k, bool allow_oracle = false,
                             int oracle_limit = kOracleVertexLimit);

// First sufficient optimal-extendability condition that holds (1..5), or
// nullopt. Checked in the order (2),(5),(1),(3),(4): constant-time and
// degree-scan conditions before matching searches. Only meaningful for
// k >= r; smaller k always returns nullopt.
std::optional<int> check_corollary(const Graph& g, int r, int k);

}  // namespace graft

#endif
