#include "fairdist/independent_set.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

#include "fairdist/errors.hpp"

namespace fairdist {

namespace {

struct Search {
    int n;
    const std::vector<Rational>& w;
    std::vector<std::uint64_t> adj;
    std::vector<Rational> positive_suffix;  // sum of positive weights from id v on
    std::vector<int> best;
    Rational best_weight = 0;
    std::vector<int> current;
    Rational current_weight = 0;

    // Visits candidate sets in lexicographic order (vertex ids ascending,
    // include-branch before exclude-branch) and keeps the first strict
    // improvement, so the final answer is the lexicographically least
    // optimum. A branch whose optimistic bound does not strictly beat the
    // incumbent can only contain equal-weight sets that would be found later
    // in lexicographic order, so pruning it keeps that guarantee.
    void run(int v, std::uint64_t allowed) {
        if (current_weight > best_weight) {
            best_weight = current_weight;
            best = current;
        }
        if (v >= n) return;
        Rational bound = current_weight + positive_suffix[v];
        if (bound <= best_weight) return;
        std::uint64_t rest = allowed >> v;
        if (rest == 0) return;
        int next = v + __builtin_ctzll(rest);
        // Include `next`.
        current.push_back(next);
        current_weight += w[next];
        run(next + 1, allowed & ~adj[next]);
        current_weight -= w[next];
        current.pop_back();
        // Exclude `next`.
        run(next + 1, allowed);
    }
};

}  // namespace

std::vector<int> max_weight_independent_set(const Graph& g,
                                            const std::vector<Rational>& w) {
    const int n = g.vertex_count();
    if (static_cast<int>(w.size()) != n)
        throw std::invalid_argument("weight count does not match vertex count");
    if (n > kIndependentSetSizeLimit)
        throw ModelError("size limit: " + std::to_string(n) +
                         " vertices exceeds the exact-search bound of " +
                         std::to_string(kIndependentSetSizeLimit));
    Search s{n, w, {}, {}, {}, Rational(0), {}, Rational(0)};
    s.adj.assign(n, 0);
    for (auto [u, v] : g.edges()) {
        s.adj[u] |= std::uint64_t(1) << v;
        s.adj[v] |= std::uint64_t(1) << u;
    }
    s.positive_suffix.assign(n + 1, Rational(0));
    for (int v = n - 1; v >= 0; --v) {
        s.positive_suffix[v] = s.positive_suffix[v + 1];
        if (w[v] > 0) s.positive_suffix[v] += w[v];
    }
    std::uint64_t all = n == 64 ? ~std::uint64_t(0)
                                : ((std::uint64_t(1) << n) - 1);
    s.run(0, all);
    return s.best;
}

}  // namespace fairdist
