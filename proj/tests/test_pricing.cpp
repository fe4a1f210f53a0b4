#include <doctest.h>

#include <random>
#include <vector>

#include "fairdist/pricing.hpp"
#include "fairdist/set_system.hpp"
#include "graph_builders.hpp"

using namespace fairdist;
using namespace testutil;

namespace {

Rational member_value(const std::vector<int>& member,
                      const std::vector<Rational>& alpha) {
    Rational v = 0;
    for (int a : member) v += alpha[a];
    return v;
}

// Reference: scan the fully enumerated family for the minimizing member,
// breaking ties toward the lexicographically least member.
std::vector<int> brute_price(const ExplicitSetSystem& s,
                             const std::vector<Rational>& alpha) {
    std::vector<int> best;
    Rational best_value = 0;
    bool first = true;
    for (const auto& m : s.family) {
        Rational v = member_value(m, alpha);
        if (first || v < best_value || (v == best_value && m < best)) {
            best = m;
            best_value = v;
            first = false;
        }
    }
    return best;
}

std::vector<Rational> random_alpha(int count, std::mt19937_64& rng) {
    std::vector<Rational> alpha;
    for (int i = 0; i < count; ++i)
        alpha.push_back(Rational(long(rng() % 13) - 6, 1 + long(rng() % 3)));
    return alpha;
}

}  // namespace

TEST_SUITE("pricing") {

TEST_CASE("nonnegative prices give the empty member") {
    Graph g = complete(4);
    std::vector<Rational> alpha(g.edge_count(), Rational(1, 3));
    CHECK(price_matching_edges(g, alpha).empty());
    CHECK(price_matching_vertices(g, std::vector<Rational>(4, Rational(0))).empty());
}

TEST_CASE("triangle with uniform negative prices picks one edge") {
    Graph g = complete(3);
    auto m = price_matching_edges(g, std::vector<Rational>(3, Rational(-1)));
    CHECK(m == std::vector<int>{0});  // lexicographically least single edge
}

TEST_CASE("P4 takes the heavy middle edge") {
    Graph g = path(4);  // edges {0,1},{1,2},{2,3}
    auto m = price_matching_edges(g, {Rational(-1), Rational(-5), Rational(-1)});
    CHECK(m == std::vector<int>{1});
}

TEST_CASE("vertex pricing on the path") {
    Graph g = path(3);
    CHECK(price_matching_vertices(g, {Rational(-1), Rational(3), Rational(-1)}).empty());
    auto m = price_matching_vertices(g, {Rational(-1), Rational(-1), Rational(-3)});
    CHECK(m == std::vector<int>{1, 2});
    CHECK(member_value(m, {Rational(-1), Rational(-1), Rational(-3)}) == -4);
}

TEST_CASE("oracle factory") {
    Graph g = cycle(5);
    auto me = make_pricing_oracle(g, ProblemKind::MatchingEdges);
    CHECK(me->kind() == ProblemKind::MatchingEdges);
    std::vector<Rational> alpha(5, Rational(-1));
    CHECK(me->price(alpha) == price_matching_edges(g, alpha));
    auto mv = make_pricing_oracle(g, ProblemKind::MatchingVertices);
    CHECK(mv->price(alpha) == price_matching_vertices(g, alpha));
    auto is = make_pricing_oracle(g, ProblemKind::IndependentSet);
    CHECK(is->price(alpha) == std::vector<int>{0, 2});
    CHECK_THROWS_AS(make_pricing_oracle(g, ProblemKind::VertexCover),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_pricing_oracle(g, ProblemKind::Clique),
                    std::invalid_argument);
}

TEST_CASE("pricing matches the enumerated family exactly") {
    std::mt19937_64 rng(626);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + int(rng() % 5);  // n <= 6: exhaustive, canonical path
        Graph g = random_graph(n, rng, 5);
        for (ProblemKind kind : {ProblemKind::MatchingEdges,
                                 ProblemKind::MatchingVertices,
                                 ProblemKind::IndependentSet}) {
            if (kind == ProblemKind::MatchingEdges && g.edge_count() == 0) continue;
            bool uncoverable = false;
            if (kind == ProblemKind::MatchingVertices)
                for (int v = 0; v < n; ++v)
                    if (g.degree(v) == 0) uncoverable = true;
            if (uncoverable) continue;
            ExplicitSetSystem s = enumerate_family(g, kind);
            auto oracle = make_pricing_oracle(g, kind);
            std::vector<Rational> alpha =
                random_alpha(static_cast<int>(s.ground.size()), rng);
            std::vector<int> got = oracle->price(alpha);
            std::vector<int> want = brute_price(s, alpha);
            CHECK(got == want);
            CHECK(member_value(got, alpha) <= 0);
        }
    }
}

TEST_CASE("pricing value is optimal on blossom-path graphs") {
    std::mt19937_64 rng(627);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = random_graph(11, rng, 3);
        if (g.edge_count() == 0) continue;
        ExplicitSetSystem s = enumerate_family(g, ProblemKind::MatchingEdges);
        std::vector<Rational> alpha =
            random_alpha(static_cast<int>(s.ground.size()), rng);
        std::vector<int> got = price_matching_edges(g, alpha);
        CHECK(member_value(got, alpha) ==
              member_value(brute_price(s, alpha), alpha));

        bool uncoverable = false;
        for (int v = 0; v < 11; ++v)
            if (g.degree(v) == 0) uncoverable = true;
        if (uncoverable) continue;
        ExplicitSetSystem sv = enumerate_family(g, ProblemKind::MatchingVertices);
        std::vector<Rational> av = random_alpha(11, rng);
        CHECK(member_value(price_matching_vertices(g, av), av) ==
              member_value(brute_price(sv, av), av));
    }
}

}  // TEST_SUITE
