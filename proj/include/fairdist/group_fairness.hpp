#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fairdist/graph.hpp"
#include "fairdist/matching.hpp"
#include "fairdist/pricing.hpp"
#include "fairdist/rational.hpp"
#include "fairdist/set_system.hpp"

namespace fairdist {

// Relative cap between two groups: |m ∩ G_i| <= ratio * |m ∩ G_j|.
struct RelativeBound {
    int i = 0;
    int j = 0;
    Rational ratio;
};

// Ex-post group constraints over the ground elements of a set system:
// pairwise-disjoint groups, inclusive per-group count bounds, and optional
// relative caps. Element ids index the ground set of the problem at hand
// (vertex ids for vertex-ground problems, edge indices for matching-edges).
struct GroupConstraints {
    std::vector<std::string> names;              // one per group
    std::vector<std::vector<int>> groups;        // sorted element ids
    std::vector<std::pair<int, int>> absolute;   // inclusive (lo, hi) per group
    std::vector<RelativeBound> relative;

    bool empty() const { return groups.empty(); }
};

// Validates structure (disjoint groups, ids within [0, ground_size), names
// matching the group count when present, 0 <= lo <= hi, nonnegative ratios,
// distinct in-range group indices in relative caps) and clamps each upper
// bound to its group size. Missing names/absolute bounds are filled with
// defaults ("g<i>", (0, |G_i|)). Throws ParseError on violations. A lower
// bound above the group size survives the clamp and simply makes the
// requirement range empty; an inverted pair is rejected only when the
// inversion is not explained by that clamp, so normalizing twice is a no-op.
GroupConstraints normalize_constraints(GroupConstraints c, std::size_t ground_size);

// Exact test of a member (sorted element ids) against normalized constraints.
bool satisfies(const std::vector<int>& member, const GroupConstraints& c);

// Keeps exactly the members of s satisfying c. The result's validity is
// relaxed: the empty member may disappear and elements may become uncovered;
// both are recorded in the returned system's flags rather than rejected.
// Throws ModelError ("empty restricted family") when no member survives.
ExplicitSetSystem restrict_explicit(const ExplicitSetSystem& s, const GroupConstraints& c);

// Maximum-weight matching m of g whose covered set meets every color class in
// exactly r[i] vertices; the weight of m is the sum of w over covered
// vertices. Requires a total coloring (every vertex assigned a class) and
// 0 <= r[i] <= |class i|. Returns nullopt when no matching meets r exactly.
std::optional<WeightedMatchingResult> exact_budgeted_matching(
    const Graph& g, const VertexColoring& colors, const std::vector<int>& r,
    const std::vector<Rational>& w);

// All requirement vectors (r_0..r_{k-1}) with lo_i <= r_i <= min(hi_i,
// sizes[i]) that satisfy every relative cap, in lexicographic order. Throws
// ModelError ("too many groups") when k exceeds 6.
std::vector<std::vector<int>> feasible_requirement_vectors(
    const GroupConstraints& c, const std::vector<int>& sizes);

// Coloring of n vertices induced by the groups: class i for group i, plus one
// trailing class collecting the uncolored vertices when any exist.
VertexColoring coloring_from_groups(const GroupConstraints& c, int n);

// Maximum-weight matching of g (weights on covered vertices) over the
// restricted family { m : V(m) satisfies c }: maximizes across every feasible
// requirement vector, extended by every possible count for the uncolored
// class. Ties keep the lexicographically smallest requirement vector. Small
// graphs are solved by exhaustive scan with a canonical lexicographic
// tie-break on the edge set. Returns nullopt when the restricted family is
// empty.
std::optional<WeightedMatchingResult> group_fair_optimum(
    const Graph& g, const GroupConstraints& c, const std::vector<Rational>& w);

// Pricing over the restricted matchings-for-vertices family: a covered set
// minimizing the alpha-sum over { V(m) : m matching of g, V(m) satisfies c },
// or nullopt when that family is empty. Without constraints this agrees with
// price_matching_vertices.
std::optional<std::vector<int>> group_fair_pricing(
    const Graph& g, const GroupConstraints& c, const std::vector<Rational>& alpha);

// Pricing oracle for matchings-for-vertices under c.
std::unique_ptr<PricingOracle> make_group_fair_oracle(const Graph& g, GroupConstraints c);

}  // namespace fairdist
