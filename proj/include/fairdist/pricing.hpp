#pragma once

#include <memory>
#include <vector>

#include "fairdist/graph.hpp"
#include "fairdist/rational.hpp"
#include "fairdist/set_system.hpp"

namespace fairdist {

// Separation step of the column-generation dual: given per-element prices
// alpha, return a family member minimizing the alpha-sum over its elements.
// Members are sorted element-index lists (edge indices for MatchingEdges,
// vertex ids otherwise).
class PricingOracle {
  public:
    virtual ~PricingOracle() = default;
    virtual ProblemKind kind() const = 0;
    virtual std::vector<int> price(const std::vector<Rational>& alpha) const = 0;
};

// Oracle for MatchingEdges, MatchingVertices, or IndependentSet. VertexCover
// and Clique have no direct oracle (the solver reaches them through the
// complement transforms) and raise std::invalid_argument.
std::unique_ptr<PricingOracle> make_pricing_oracle(const Graph& g, ProblemKind kind);

// Matching minimizing the alpha-sum over its edges (max-weight matching on
// weights -alpha). Always nonpositive value since the empty matching counts.
std::vector<int> price_matching_edges(const Graph& g,
                                      const std::vector<Rational>& alpha);

// Covered vertex set V(m) of a matching m minimizing the alpha-sum over V(m)
// (max-weight matching on edge weights -(alpha_u + alpha_v)).
std::vector<int> price_matching_vertices(const Graph& g,
                                         const std::vector<Rational>& alpha);

}  // namespace fairdist
