#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fairdist/graph.hpp"
#include "fairdist/rational.hpp"

namespace fairdist {

enum class ProblemKind {
    MatchingEdges,
    MatchingVertices,
    IndependentSet,
    VertexCover,
    Clique,
};

std::string to_string(ProblemKind kind);
ProblemKind problem_kind_from_string(const std::string& name);

// Ground set (A) plus an explicitly enumerated family (M) of subsets of A.
// Members are sorted index lists into `ground`; the family is deduplicated and
// lexicographically sorted, so the empty member, when present, is family[0].
struct ExplicitSetSystem {
    std::vector<std::string> ground;
    std::vector<std::vector<int>> family;
    // Informational flags, maintained by the producers of a system. Full
    // enumeration guarantees has_empty_member and no uncovered elements;
    // restricted systems may lose both, which is flagged here instead of
    // being rejected.
    bool has_empty_member = false;
    std::vector<int> uncovered_elements;
};

// Recomputes has_empty_member / uncovered_elements from ground and family.
void refresh_system_flags(ExplicitSetSystem& s);

struct HypergraphInvariants {
    // std::nullopt means the partitioning LP is infeasible ("infinite").
    std::optional<Rational> fractional_partitioning;
    Rational fractional_covering;
};

// Labels of the ground elements of (g, kind): vertex labels for vertex-ground
// problems, "{u,v}" endpoint-label pairs for MatchingEdges. Throws ModelError
// ("empty ground set") when A is empty.
std::vector<std::string> ground_labels(const Graph& g, ProblemKind kind);

// Enumerates the full family for the given problem kind. Throws
// CapExceededError once the family would exceed `cap` members, and ModelError
// when a ground element lies in no member ("element uncoverable") or the
// ground set is empty.
ExplicitSetSystem enumerate_family(const Graph& g, ProblemKind kind,
                                   std::size_t cap = 100000);

// True iff the family contains the empty set and is downward closed.
bool is_independence_system(const ExplicitSetSystem& s);

// Exact optima of the fractional partitioning LP (every element covered with
// total weight exactly 1; infeasible -> "infinite") and the fractional
// covering LP (weight at least 1).
HypergraphInvariants hypergraph_invariants(const ExplicitSetSystem& s);

}  // namespace fairdist
