#pragma once

#include <optional>
#include <vector>

#include "fairdist/graph.hpp"
#include "fairdist/rational.hpp"

namespace fairdist {

struct WeightedMatchingResult {
    std::vector<int> edges;  // sorted canonical edge indices into g.edges()
    Rational weight;         // sum of the selected edge weights
    bool is_perfect = false;
};

// Matching of maximum total weight (the empty matching, weight 0, is always a
// candidate). Exact optimum. Below the exhaustive-search threshold (10
// vertices) ties are broken by lexicographic order of the edge-index set; the
// primal-dual path used above the threshold is deterministic and self-checks
// its optimality certificate on every call.
WeightedMatchingResult max_weight_matching(const Graph& g,
                                           const std::vector<Rational>& w);

// Perfect matching of maximum total weight, or std::nullopt when the graph
// has no perfect matching. Implemented by a uniform per-edge bonus exceeding
// the total absolute weight, which makes maximum weight prefer maximum
// cardinality first.
std::optional<WeightedMatchingResult> max_weight_perfect_matching(
    const Graph& g, const std::vector<Rational>& w);

namespace detail {

// Number of vertices below which max_weight_matching enumerates all matchings.
inline constexpr int kExhaustiveMatchingThreshold = 10;

WeightedMatchingResult max_weight_matching_exhaustive(const Graph& g,
                                                      const std::vector<Rational>& w);
WeightedMatchingResult max_weight_matching_blossom(const Graph& g,
                                                   const std::vector<Rational>& w);

}  // namespace detail

}  // namespace fairdist
