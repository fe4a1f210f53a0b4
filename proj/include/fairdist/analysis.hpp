#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fairdist/graph.hpp"
#include "fairdist/rational.hpp"

namespace fairdist {

// Matching-theoretic quantities underlying the closed-form fairness bounds.
// Invariants: matching_number <= fractional_matching_number <= |V|/2, and
// has_fractional_perfect_matching holds exactly when the fractional matching
// number equals |V|/2.
struct GraphInvariants {
    int matching_number = 0;                    // nu(G)
    Rational fractional_matching_number;        // nu_f(G), half-integral
    bool has_perfect_matching = false;          // 2 nu(G) == |V|
    bool has_fractional_perfect_matching = false;  // nu_f(G) == |V|/2
    int max_degree = 0;
    int min_degree = 0;
};

// Cheap a-priori bounds on the fairness optima of a graph with >= 1 edge.
// All values lie in [0, 1] and the edge bounds satisfy lower <= upper.
struct BoundsReport {
    // Sandwich for the matchings-for-edges optimum: (1/(max_degree + 1),
    // 1/max_degree); both measures coincide there.
    std::pair<Rational, Rational> edge_fairness_bounds;
    // Lower bound on the Rawlsian matchings-for-vertices optimum: 2/3 for
    // regular graphs, 1/(max_degree - min_degree + 1) otherwise. Tight on
    // regular graphs and on stars with at least three vertices.
    Rational rawlsian_vertex_lower;
    // Whether the uniform matchings-for-vertices optimum is positive.
    bool pu_positive = false;
    // 2/3 when pu_positive (the uniform optimum is never strictly between 0
    // and 2/3), else 0.
    Rational pu_dichotomy_lower;
};

// Outcome of the reduced dual test for a zero uniform optimum on
// matchings-for-vertices. When is_zero holds, certificate carries one value
// per vertex with alpha_u + alpha_v >= 0 on every edge and sum(alpha) < 0.
struct ReducedDualZeroResult {
    bool is_zero = false;
    std::optional<std::vector<Rational>> certificate;
};

// Matching number via maximum-cardinality matching, fractional matching
// number as half the matching number of the bipartite double cover (it is
// half-integral, so this is exact), degree extremes, and the derived flags.
// Requires at least one vertex.
GraphInvariants compute_invariants(const Graph& g);

// Whether the uniform matchings-for-vertices optimum is positive, i.e.
// whether g has a fractional perfect matching.
bool pu_positive_matching_vertices(const Graph& g);

// Decides whether the uniform matchings-for-vertices optimum is zero by
// solving the |E|+1-constraint dual feasibility system exactly (normalized
// to sum(alpha) = -1); a feasible point is returned as the certificate.
ReducedDualZeroResult reduced_dual_zero_test(const Graph& g);

// The closed-form bounds above. Throws ModelError("no edges") on an edgeless
// graph, where 1/max_degree is undefined.
BoundsReport bounds_report(const Graph& g);

// True iff nu(G) >= |E|/max_degree (exact rational comparison); necessary
// for the matchings-for-edges optimum to reach the 1/max_degree upper bound.
// Throws ModelError("no edges") on an edgeless graph.
bool check_matching_size_condition(const Graph& g);

// Whether g has a Q-factor: a spanning subgraph whose components are single
// edges or odd cycles. Equivalent to having a fractional perfect matching;
// computed through the double cover and, on graphs with at most 10 vertices,
// cross-checked against the explicit search below.
bool q_factor_exists(const Graph& g);

namespace detail {

// Exhaustive Q-factor search by exact cover over vertex masks; intended for
// graphs with at most 10 vertices.
bool q_factor_by_search(const Graph& g);

}  // namespace detail

}  // namespace fairdist
