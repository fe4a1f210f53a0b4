#pragma once

#include <vector>

#include "fairdist/graph.hpp"
#include "fairdist/rational.hpp"

namespace fairdist {

// Independent set maximizing the total vertex weight (the empty set, weight 0,
// is always a candidate). Exact branch-and-bound search; ties are broken by
// lexicographic order of the returned vertex set. Throws ModelError ("size
// limit") when the graph exceeds the exact-search bound of 40 vertices.
std::vector<int> max_weight_independent_set(const Graph& g,
                                            const std::vector<Rational>& w);

inline constexpr int kIndependentSetSizeLimit = 40;

}  // namespace fairdist
