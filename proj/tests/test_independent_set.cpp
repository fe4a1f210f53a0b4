#include <doctest.h>

#include <random>
#include <vector>

#include "fairdist/errors.hpp"
#include "fairdist/independent_set.hpp"
#include "graph_builders.hpp"

using namespace fairdist;
using namespace testutil;

namespace {

// Reference: filter all subsets, keep maximum weight, lexicographically least.
std::vector<int> brute_mwis(const Graph& g, const std::vector<Rational>& w) {
    const int n = g.vertex_count();
    std::vector<int> best;
    Rational best_weight = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (auto [u, v] : g.edges())
            if ((mask >> u & 1) && (mask >> v & 1)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        std::vector<int> members;
        Rational weight = 0;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) {
                members.push_back(v);
                weight += w[v];
            }
        if (weight > best_weight || (weight == best_weight && members < best)) {
            best_weight = weight;
            best = members;
        }
    }
    return best;
}

}  // namespace

TEST_SUITE("independent_set") {

TEST_CASE("nonpositive weights give the empty set") {
    Graph g = cycle(5);
    CHECK(max_weight_independent_set(g, std::vector<Rational>(5, Rational(-1))).empty());
    CHECK(max_weight_independent_set(g, std::vector<Rational>(5, Rational(0))).empty());
}

TEST_CASE("C5 unit weights") {
    auto r = max_weight_independent_set(cycle(5), std::vector<Rational>(5, Rational(1)));
    CHECK(r == std::vector<int>{0, 2});  // lexicographically least of the 5 pairs
}

TEST_CASE("star weighs center against leaves") {
    Graph g = star(4);
    std::vector<Rational> w{Rational(10), Rational(1), Rational(1), Rational(1), Rational(1)};
    CHECK(max_weight_independent_set(g, w) == std::vector<int>{0});
    w[0] = 3;  // now the four leaves win
    CHECK(max_weight_independent_set(g, w) == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("zero-weight vertices extend the lex-least optimum") {
    Graph g = edgeless(2);
    CHECK(max_weight_independent_set(g, {Rational(0), Rational(5)}) ==
          std::vector<int>{0, 1});
}

TEST_CASE("size limit") {
    Graph big(41, {});
    CHECK_THROWS_AS(
        max_weight_independent_set(big, std::vector<Rational>(41, Rational(1))),
        ModelError);
    try {
        max_weight_independent_set(big, std::vector<Rational>(41, Rational(1)));
    } catch (const ModelError& e) {
        CHECK(std::string(e.what()).find("size limit") == 0);
    }
    Graph ok(40, {});
    CHECK(max_weight_independent_set(ok, std::vector<Rational>(40, Rational(1))).size() ==
          40);
}

TEST_CASE("weight count mismatch") {
    CHECK_THROWS_AS(max_weight_independent_set(cycle(4), {Rational(1)}),
                    std::invalid_argument);
}

TEST_CASE("cycle of 20 unit weights") {
    auto r = max_weight_independent_set(cycle(20), std::vector<Rational>(20, Rational(1)));
    std::vector<int> want;
    for (int v = 0; v < 20; v += 2) want.push_back(v);
    CHECK(r == want);
}

TEST_CASE("matches brute force with canonical ties") {
    std::mt19937_64 rng(20240819);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + int(rng() % 7);
        Graph g = random_graph(n, rng, 4);
        std::vector<Rational> w;
        for (int v = 0; v < n; ++v)
            w.push_back(Rational(long(rng() % 9) - 4, 1 + long(rng() % 2)));
        CHECK(max_weight_independent_set(g, w) == brute_mwis(g, w));
    }
}

}  // TEST_SUITE
