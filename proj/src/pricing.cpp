#include "fairdist/pricing.hpp"

#include <algorithm>
#include <stdexcept>

#include "fairdist/independent_set.hpp"
#include "fairdist/matching.hpp"

namespace fairdist {

namespace {

void validate_alpha(std::size_t want, const std::vector<Rational>& alpha) {
    if (alpha.size() != want)
        throw std::invalid_argument("price count does not match ground-set size");
}

// Below the exhaustive threshold the returned member itself must be the
// lexicographically least minimizer; for vertex sets that is not implied by
// the edge-set order of max_weight_matching, so walk matchings directly.
std::vector<int> exhaustive_price_vertices(const Graph& g,
                                           const std::vector<Rational>& alpha) {
    std::vector<int> best;  // vertex set
    Rational best_value = 0;
    std::vector<int> current;
    Rational current_value = 0;
    std::vector<char> covered(g.vertex_count(), 0);
    auto visit = [&] {
        std::vector<int> verts = current;
        std::sort(verts.begin(), verts.end());
        if (current_value < best_value ||
            (current_value == best_value && verts < best))
            best = std::move(verts), best_value = current_value;
    };
    auto walk = [&](auto&& self, int start) -> void {
        visit();
        for (int k = start; k < g.edge_count(); ++k) {
            auto [u, v] = g.edges()[k];
            if (covered[u] || covered[v]) continue;
            covered[u] = covered[v] = 1;
            current.push_back(u);
            current.push_back(v);
            current_value += alpha[u] + alpha[v];
            self(self, k + 1);
            current_value -= alpha[u] + alpha[v];
            current.pop_back();
            current.pop_back();
            covered[u] = covered[v] = 0;
        }
    };
    walk(walk, 0);
    return best;
}

class MatchingEdgesOracle final : public PricingOracle {
  public:
    explicit MatchingEdgesOracle(const Graph& g) : g_(g) {}
    ProblemKind kind() const override { return ProblemKind::MatchingEdges; }
    std::vector<int> price(const std::vector<Rational>& alpha) const override {
        return price_matching_edges(g_, alpha);
    }

  private:
    Graph g_;
};

class MatchingVerticesOracle final : public PricingOracle {
  public:
    explicit MatchingVerticesOracle(const Graph& g) : g_(g) {}
    ProblemKind kind() const override { return ProblemKind::MatchingVertices; }
    std::vector<int> price(const std::vector<Rational>& alpha) const override {
        return price_matching_vertices(g_, alpha);
    }

  private:
    Graph g_;
};

class IndependentSetOracle final : public PricingOracle {
  public:
    explicit IndependentSetOracle(const Graph& g) : g_(g) {}
    ProblemKind kind() const override { return ProblemKind::IndependentSet; }
    std::vector<int> price(const std::vector<Rational>& alpha) const override {
        validate_alpha(g_.vertex_count(), alpha);
        std::vector<Rational> w(alpha.size());
        for (std::size_t v = 0; v < alpha.size(); ++v) {
            Rational neg = -alpha[v];
            w[v] = neg;
        }
        return max_weight_independent_set(g_, w);
    }

  private:
    Graph g_;
};

}  // namespace

std::vector<int> price_matching_edges(const Graph& g,
                                      const std::vector<Rational>& alpha) {
    validate_alpha(g.edges().size(), alpha);
    std::vector<Rational> w(alpha.size());
    for (std::size_t k = 0; k < alpha.size(); ++k) {
        Rational neg = -alpha[k];
        w[k] = neg;
    }
    return max_weight_matching(g, w).edges;
}

std::vector<int> price_matching_vertices(const Graph& g,
                                         const std::vector<Rational>& alpha) {
    validate_alpha(static_cast<std::size_t>(g.vertex_count()), alpha);
    if (g.vertex_count() < detail::kExhaustiveMatchingThreshold)
        return exhaustive_price_vertices(g, alpha);
    std::vector<Rational> w(g.edges().size());
    for (int k = 0; k < g.edge_count(); ++k) {
        auto [u, v] = g.edges()[k];
        Rational neg = -(alpha[u] + alpha[v]);
        w[k] = neg;
    }
    WeightedMatchingResult r = max_weight_matching(g, w);
    std::vector<int> verts;
    verts.reserve(2 * r.edges.size());
    for (int k : r.edges) {
        verts.push_back(g.edges()[k].first);
        verts.push_back(g.edges()[k].second);
    }
    std::sort(verts.begin(), verts.end());
    return verts;
}

std::unique_ptr<PricingOracle> make_pricing_oracle(const Graph& g,
                                                   ProblemKind kind) {
    switch (kind) {
        case ProblemKind::MatchingEdges:
            return std::make_unique<MatchingEdgesOracle>(g);
        case ProblemKind::MatchingVertices:
            return std::make_unique<MatchingVerticesOracle>(g);
        case ProblemKind::IndependentSet:
            return std::make_unique<IndependentSetOracle>(g);
        case ProblemKind::VertexCover:
        case ProblemKind::Clique:
            throw std::invalid_argument(
                "no direct pricing oracle for " + to_string(kind) +
                "; solve it through the complement transform");
    }
    throw std::logic_error("unreachable");
}

}  // namespace fairdist
