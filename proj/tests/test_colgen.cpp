#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fairdist/colgen.hpp"
#include "fairdist/errors.hpp"
#include "fairdist/group_fairness.hpp"
#include "fairdist/pricing.hpp"
#include "fairdist/set_system.hpp"
#include "graph_builders.hpp"

using namespace fairdist;
using namespace testutil;

namespace {

Rational member_sum(const std::vector<int>& member, const std::vector<Rational>& alpha) {
    Rational v = 0;
    for (int a : member) v += alpha[a];
    return v;
}

// Full invariant battery for a result against the complete family it was
// solved over: distribution validity, coverage recomputation, the measure's
// coverage pattern, and dual feasibility of the certificate across every
// member.
void check_result(const FairnessResult& res, const ExplicitSetSystem& s,
                  FairnessMeasure measure) {
    CHECK(res.measure == measure);
    REQUIRE(res.coverage.size() == s.ground.size());
    std::set<std::vector<int>> family(s.family.begin(), s.family.end());

    Rational total = 0;
    std::vector<Rational> coverage(s.ground.size(), Rational(0));
    const DistributionEntry* prev = nullptr;
    for (const auto& entry : res.distribution.support) {
        CHECK(entry.probability > 0);
        CHECK(family.count(entry.member) == 1);
        if (prev) CHECK(prev->member < entry.member);
        prev = &entry;
        total += entry.probability;
        for (int a : entry.member) coverage[a] += entry.probability;
    }
    CHECK(total == 1);
    for (std::size_t a = 0; a < coverage.size(); ++a) CHECK(coverage[a] == res.coverage[a]);

    if (measure == FairnessMeasure::Uniform) {
        for (const Rational& c : res.coverage) CHECK(c == res.value);
    } else {
        Rational lowest = res.coverage.front();
        for (const Rational& c : res.coverage) lowest = std::min(lowest, c);
        CHECK(lowest == res.value);
    }

    REQUIRE(res.certificate.alpha.size() == s.ground.size());
    Rational alpha_sum = 0;
    for (const Rational& a : res.certificate.alpha) alpha_sum += a;
    CHECK(alpha_sum == -1);
    CHECK(res.certificate.beta == res.value);
    if (measure == FairnessMeasure::Rawlsian)
        for (const Rational& a : res.certificate.alpha) CHECK(a <= 0);
    for (const auto& m : s.family) {
        Rational reduced = member_sum(m, res.certificate.alpha) + res.certificate.beta;
        CHECK(reduced >= 0);
    }
}

ExplicitSetSystem manual_system(std::vector<std::string> ground,
                                std::vector<std::vector<int>> family) {
    ExplicitSetSystem s;
    s.ground = std::move(ground);
    s.family = std::move(family);
    refresh_system_flags(s);
    return s;
}

// Deliberately broken oracle used to exercise the validation paths.
class BrokenOracle final : public PricingOracle {
  public:
    BrokenOracle(ProblemKind kind, std::vector<int> reply)
        : kind_(kind), reply_(std::move(reply)) {}
    ProblemKind kind() const override { return kind_; }
    std::vector<int> price(const std::vector<Rational>&) const override { return reply_; }

  private:
    ProblemKind kind_;
    std::vector<int> reply_;
};

constexpr FairnessMeasure kMeasures[] = {FairnessMeasure::Uniform,
                                         FairnessMeasure::Rawlsian};

GroupConstraints single_group(std::vector<int> members, int lo, int hi) {
    GroupConstraints c;
    c.groups.push_back(std::move(members));
    c.absolute.emplace_back(lo, hi);
    return c;
}

// Outcome fingerprint used to compare two solve paths that may throw.
std::string outcome_of(const std::function<FairnessResult()>& run) {
    try {
        FairnessResult res = run();
        return "value " + format_rational(res.value);
    } catch (const InfeasibleError&) {
        return "infeasible";
    } catch (const ModelError& e) {
        return std::string("model: ") + e.what();
    }
}

}  // namespace

TEST_SUITE("colgen") {

TEST_CASE("measure and method names round-trip") {
    CHECK(to_string(FairnessMeasure::Uniform) == "uniform");
    CHECK(to_string(FairnessMeasure::Rawlsian) == "rawlsian");
    CHECK(fairness_measure_from_string("uniform") == FairnessMeasure::Uniform);
    CHECK(fairness_measure_from_string("rawlsian") == FairnessMeasure::Rawlsian);
    CHECK_THROWS_AS(fairness_measure_from_string("median"), ParseError);
    CHECK(solve_method_from_string("auto") == SolveMethod::Auto);
    CHECK(solve_method_from_string("exact") == SolveMethod::Exact);
    CHECK(solve_method_from_string("colgen") == SolveMethod::Colgen);
    CHECK_THROWS_AS(solve_method_from_string("fast"), ParseError);
}

TEST_CASE("triangle matchings-for-edges reaches one third") {
    ExplicitSetSystem s = enumerate_family(complete(3), ProblemKind::MatchingEdges);
    FairnessResult res = solve_explicit(s, FairnessMeasure::Uniform);
    CHECK(res.value == Rational(1, 3));
    REQUIRE(res.distribution.support.size() == 3);
    for (const auto& entry : res.distribution.support) {
        CHECK(entry.member.size() == 1);
        CHECK(entry.probability == Rational(1, 3));
    }
    check_result(res, s, FairnessMeasure::Uniform);
    CHECK(res.columns_generated == 0);
}

TEST_CASE("path vertex fairness: zero uniformly, one half Rawlsian") {
    Graph g = path(3);
    ExplicitSetSystem s = enumerate_family(g, ProblemKind::MatchingVertices);

    FairnessResult uniform = solve_explicit(s, FairnessMeasure::Uniform);
    CHECK(uniform.value == 0);
    REQUIRE(uniform.distribution.support.size() == 1);
    CHECK(uniform.distribution.support[0].member.empty());
    CHECK(uniform.distribution.support[0].probability == 1);
    check_result(uniform, s, FairnessMeasure::Uniform);

    FairnessResult rawlsian = solve_explicit(s, FairnessMeasure::Rawlsian);
    CHECK(rawlsian.value == Rational(1, 2));
    REQUIRE(rawlsian.distribution.support.size() == 2);
    CHECK((rawlsian.distribution.support[0].member == std::vector<int>{0, 1}));
    CHECK(rawlsian.distribution.support[0].probability == Rational(1, 2));
    CHECK((rawlsian.distribution.support[1].member == std::vector<int>{1, 2}));
    CHECK(rawlsian.distribution.support[1].probability == Rational(1, 2));
    check_result(rawlsian, s, FairnessMeasure::Rawlsian);

    // The strict Rawlsian-over-uniform gap instance.
    CHECK(uniform.value < rawlsian.value);
}

TEST_CASE("restricted family without the empty member can be uniformly infeasible") {
    ExplicitSetSystem s = manual_system({"a", "b", "c"}, {{0, 1}, {0, 2}});
    CHECK_THROWS_AS(solve_explicit(s, FairnessMeasure::Uniform), InfeasibleError);
    FairnessResult rawlsian = solve_explicit(s, FairnessMeasure::Rawlsian);
    CHECK(rawlsian.value == Rational(1, 2));
    check_result(rawlsian, s, FairnessMeasure::Rawlsian);
}

TEST_CASE("column generation on the spec instances") {
    SUBCASE("five-cycle vertex fairness") {
        Graph g = cycle(5);
        auto oracle = make_pricing_oracle(g, ProblemKind::MatchingVertices);
        FairnessResult res =
            solve_colgen(g, ProblemKind::MatchingVertices, FairnessMeasure::Uniform, *oracle);
        CHECK(res.value == Rational(4, 5));
        check_result(res, enumerate_family(g, ProblemKind::MatchingVertices),
                     FairnessMeasure::Uniform);
        CHECK(res.columns_generated > 0);
    }
    SUBCASE("single edge covers both endpoints always") {
        Graph g(2, {{0, 1}});
        auto oracle = make_pricing_oracle(g, ProblemKind::MatchingVertices);
        for (FairnessMeasure measure : kMeasures) {
            FairnessResult res =
                solve_colgen(g, ProblemKind::MatchingVertices, measure, *oracle);
            CHECK(res.value == 1);
            REQUIRE(res.distribution.support.size() == 1);
            CHECK((res.distribution.support[0].member == std::vector<int>{0, 1}));
        }
    }
    SUBCASE("five-cycle independent sets") {
        Graph g = cycle(5);
        auto oracle = make_pricing_oracle(g, ProblemKind::IndependentSet);
        FairnessResult res =
            solve_colgen(g, ProblemKind::IndependentSet, FairnessMeasure::Uniform, *oracle);
        CHECK(res.value == Rational(2, 5));
        check_result(res, enumerate_family(g, ProblemKind::IndependentSet),
                     FairnessMeasure::Uniform);
    }
}

TEST_CASE("column generation rejects unsupported configurations") {
    Graph g = complete(3);
    auto oracle = make_pricing_oracle(g, ProblemKind::MatchingEdges);
    CHECK_THROWS_AS(solve_colgen(g, ProblemKind::VertexCover, FairnessMeasure::Uniform, *oracle),
                    std::invalid_argument);
    CHECK_THROWS_AS(solve_colgen(g, ProblemKind::MatchingVertices, FairnessMeasure::Uniform,
                                 *oracle),
                    std::invalid_argument);
    GroupConstraints c = single_group({0}, 0, 1);
    CHECK_THROWS_AS(solve_colgen(g, ProblemKind::MatchingEdges, FairnessMeasure::Uniform,
                                 *oracle, &c),
                    std::invalid_argument);
}

TEST_CASE("broken oracles are reported") {
    Graph g(2, {{0, 1}});
    SUBCASE("a non-member reply names an oracle violation") {
        BrokenOracle oracle(ProblemKind::IndependentSet, {0, 1});
        try {
            solve_colgen(g, ProblemKind::IndependentSet, FairnessMeasure::Uniform, oracle);
            FAIL("expected a logic error");
        } catch (const std::logic_error& e) {
            CHECK(std::string(e.what()).find("oracle violation") != std::string::npos);
        }
    }
    SUBCASE("an out-of-range id names an oracle violation") {
        BrokenOracle oracle(ProblemKind::IndependentSet, {7});
        try {
            solve_colgen(g, ProblemKind::IndependentSet, FairnessMeasure::Uniform, oracle);
            FAIL("expected a logic error");
        } catch (const std::logic_error& e) {
            CHECK(std::string(e.what()).find("oracle violation") != std::string::npos);
        }
    }
}

TEST_CASE("initial columns follow the greedy recipe") {
    SUBCASE("triangle edges: the empty member plus every singleton") {
        auto cols = initial_columns(complete(3), ProblemKind::MatchingEdges);
        CHECK((cols == std::vector<std::vector<int>>{{}, {0}, {1}, {2}}));
    }
    SUBCASE("path vertices: both edges as covered pairs") {
        auto cols = initial_columns(path(3), ProblemKind::MatchingVertices);
        CHECK((cols == std::vector<std::vector<int>>{{}, {0, 1}, {1, 2}}));
    }
    SUBCASE("independent sets: the empty member plus singletons") {
        auto cols = initial_columns(cycle(4), ProblemKind::IndependentSet);
        CHECK((cols == std::vector<std::vector<int>>{{}, {0}, {1}, {2}, {3}}));
    }
    SUBCASE("an isolated vertex is uncoverable") {
        Graph g(3, {{0, 1}}, {"a", "b", "c"});
        CHECK_THROWS_WITH_AS(initial_columns(g, ProblemKind::MatchingVertices),
                             "element uncoverable: c", ModelError);
    }
    SUBCASE("constraints route the probes through the group-fair optimizer") {
        Graph g = cycle(4);
        GroupConstraints c = single_group({0}, 1, 1);
        auto cols = initial_columns(g, ProblemKind::MatchingVertices, &c);
        REQUIRE_FALSE(cols.empty());
        GroupConstraints norm = normalize_constraints(c, 4);
        for (const auto& m : cols) {
            CHECK_FALSE(m.empty());  // the empty member violates the lower bound
            CHECK(satisfies(m, norm));
        }
        // Every vertex appears in some probe result.
        std::vector<char> covered(4, 0);
        for (const auto& m : cols)
            for (int v : m) covered[v] = 1;
        CHECK(std::count(covered.begin(), covered.end(), 1) == 4);
    }
    SUBCASE("an empty restricted family is reported") {
        Graph g = path(3);
        GroupConstraints c;
        c.groups = {{0}, {1}, {2}};
        c.absolute = {{1, 1}, {0, 0}, {1, 1}};
        CHECK_THROWS_WITH_AS(initial_columns(g, ProblemKind::MatchingVertices, &c),
                             "empty restricted family", ModelError);
    }
}

TEST_CASE("terminal infeasibility under constraints is certified") {
    // Matchings of the path a-b-c that cover b are {a,b} and {b,c}; forcing b
    // into every member makes uniform coverage impossible (a and c would each
    // need probability 1), while the Rawlsian optimum is 1/2.
    Graph g = path(3);
    GroupConstraints c = single_group({1}, 1, 1);
    auto oracle = make_group_fair_oracle(g, c);
    CHECK_THROWS_AS(solve_colgen(g, ProblemKind::MatchingVertices, FairnessMeasure::Uniform,
                                 *oracle, &c),
                    InfeasibleError);
    FairnessResult rawlsian = solve_colgen(g, ProblemKind::MatchingVertices,
                                           FairnessMeasure::Rawlsian, *oracle, &c);
    CHECK(rawlsian.value == Rational(1, 2));
}

TEST_CASE("an infeasible restricted master recovers through certificate pricing") {
    // K_4 restricted to members covering exactly two vertices, i.e. single
    // edges. The greedy probes all touch vertex 0, and no distribution over
    // those three columns balances coverage, so the first master is
    // infeasible; pricing against its certificate pulls in an edge avoiding
    // vertex 0 and the final value is 1/2.
    Graph g = complete(4);
    GroupConstraints c = single_group({0, 1, 2, 3}, 2, 2);
    auto cols = initial_columns(g, ProblemKind::MatchingVertices, &c);
    for (const auto& m : cols) {
        REQUIRE(m.size() == 2);
        CHECK(m[0] == 0);  // every probe contains vertex 0
    }
    auto oracle = make_group_fair_oracle(g, c);
    FairnessResult res = solve_colgen(g, ProblemKind::MatchingVertices,
                                      FairnessMeasure::Uniform, *oracle, &c);
    CHECK(res.value == Rational(1, 2));
    CHECK(res.columns_generated > 0);
    ExplicitSetSystem full = enumerate_family(g, ProblemKind::MatchingVertices);
    ExplicitSetSystem restricted = restrict_explicit(full, c);
    check_result(res, restricted, FairnessMeasure::Uniform);
    FairnessResult explicit_res = solve_explicit(restricted, FairnessMeasure::Uniform);
    CHECK(explicit_res.value == res.value);
}

TEST_CASE("reversal transform flips value, members, and coverage") {
    SUBCASE("five-cycle cover fairness is three fifths") {
        Graph g = cycle(5);
        ExplicitSetSystem s = enumerate_family(g, ProblemKind::IndependentSet);
        FairnessResult base = solve_explicit(s, FairnessMeasure::Uniform);
        REQUIRE(base.value == Rational(2, 5));
        FairnessResult cover = transform_reversed(base, 5);
        CHECK(cover.value == Rational(3, 5));
        Rational total = 0;
        for (const auto& entry : cover.distribution.support) {
            CHECK(entry.member.size() == 3);  // complements of the 2-element sets
            total += entry.probability;
        }
        CHECK(total == 1);
        for (const Rational& cvg : cover.coverage) CHECK(cvg == Rational(3, 5));
    }
    SUBCASE("edgeless graphs need no cover at all") {
        Graph g(3, {});
        ExplicitSetSystem s = enumerate_family(g, ProblemKind::IndependentSet);
        FairnessResult base = solve_explicit(s, FairnessMeasure::Uniform);
        REQUIRE(base.value == 1);
        FairnessResult cover = transform_reversed(base, 3);
        CHECK(cover.value == 0);
        REQUIRE(cover.distribution.support.size() == 1);
        CHECK(cover.distribution.support[0].member.empty());
    }
    SUBCASE("triangle cover fairness is two thirds") {
        ExplicitSetSystem s = enumerate_family(complete(3), ProblemKind::IndependentSet);
        FairnessResult base = solve_explicit(s, FairnessMeasure::Uniform);
        REQUIRE(base.value == Rational(1, 3));
        CHECK(transform_reversed(base, 3).value == Rational(2, 3));
    }
}

TEST_CASE("sampling is exact and reproducible") {
    SUBCASE("a point mass always returns its member") {
        Distribution d;
        d.support.push_back({{0, 1}, Rational(1)});
        auto draws = sample(d, 99, 25);
        REQUIRE(draws.size() == 25);
        for (const auto& m : draws) CHECK((m == std::vector<int>{0, 1}));
    }
    SUBCASE("a fair coin lands near one half") {
        Distribution d;
        d.support.push_back({{0}, Rational(1, 2)});
        d.support.push_back({{1}, Rational(1, 2)});
        auto draws = sample(d, 20240819, 10000);
        REQUIRE(draws.size() == 10000);
        int heads = 0;
        for (const auto& m : draws)
            if (m == std::vector<int>{0}) ++heads;
        CHECK(heads >= 4800);
        CHECK(heads <= 5200);
        CHECK(sample(d, 20240819, 10000) == draws);  // same seed, same stream
    }
    SUBCASE("weights with distinct denominators stay exact") {
        Distribution d;
        d.support.push_back({{0}, Rational(1, 2)});
        d.support.push_back({{1}, Rational(1, 3)});
        d.support.push_back({{2}, Rational(1, 6)});
        auto draws = sample(d, 7, 12000);
        int counts[3] = {0, 0, 0};
        for (const auto& m : draws) ++counts[m[0]];
        CHECK(counts[0] + counts[1] + counts[2] == 12000);
        CHECK(counts[0] >= 5700);  // 6000 expected
        CHECK(counts[0] <= 6300);
        CHECK(counts[1] >= 3700);  // 4000 expected
        CHECK(counts[1] <= 4300);
        CHECK(counts[2] >= 1700);  // 2000 expected
        CHECK(counts[2] <= 2300);
    }
    SUBCASE("invalid distributions are rejected") {
        Distribution half;
        half.support.push_back({{0}, Rational(1, 2)});
        CHECK_THROWS_AS(sample(half, 1, 1), ParseError);
        Distribution negative;
        negative.support.push_back({{0}, Rational(3, 2)});
        negative.support.push_back({{1}, Rational(-1, 2)});
        CHECK_THROWS_AS(sample(negative, 1, 1), ParseError);
    }
}

TEST_CASE("column generation matches the explicit solve") {
    std::mt19937_64 rng(900);
    std::vector<Graph> graphs;
    for (int trial = 0; trial < 34; ++trial)
        graphs.push_back(random_graph(2 + static_cast<int>(rng() % 6), rng, 4));
    graphs.push_back(cycle(8));
    graphs.push_back(path(8));
    graphs.push_back(complete_bipartite(3, 3));
    graphs.push_back(star(5));

    const ProblemKind kinds[] = {ProblemKind::MatchingEdges,
                                 ProblemKind::MatchingVertices,
                                 ProblemKind::IndependentSet};
    int compared = 0;
    for (const Graph& g : graphs) {
        for (ProblemKind kind : kinds) {
            ExplicitSetSystem s;
            try {
                s = enumerate_family(g, kind);
            } catch (const ModelError&) {
                continue;  // empty ground or uncoverable element
            }
            std::map<FairnessMeasure, Rational> values;
            for (FairnessMeasure measure : kMeasures) {
                FairnessResult exact = solve_explicit(s, measure);
                check_result(exact, s, measure);
                auto oracle = make_pricing_oracle(g, kind);
                FairnessResult generated = solve_colgen(g, kind, measure, *oracle);
                CHECK(generated.value == exact.value);
                check_result(generated, s, measure);
                // Determinism of the whole pipeline.
                FairnessResult again = solve_colgen(g, kind, measure, *oracle);
                CHECK(again.value == generated.value);
                CHECK(again.columns_generated == generated.columns_generated);
                REQUIRE(again.distribution.support.size() ==
                        generated.distribution.support.size());
                for (std::size_t i = 0; i < again.distribution.support.size(); ++i) {
                    CHECK(again.distribution.support[i].member ==
                          generated.distribution.support[i].member);
                    CHECK(again.distribution.support[i].probability ==
                          generated.distribution.support[i].probability);
                }
                values[measure] = exact.value;
                ++compared;
            }
            // Uniform never beats Rawlsian; independence systems collapse the gap.
            CHECK(values[FairnessMeasure::Uniform] <= values[FairnessMeasure::Rawlsian]);
            if (kind != ProblemKind::MatchingVertices)
                CHECK(values[FairnessMeasure::Uniform] == values[FairnessMeasure::Rawlsian]);
            // Hypergraph duality ties the optimum to the weighting invariants.
            HypergraphInvariants inv = hypergraph_invariants(s);
            if (inv.fractional_partitioning.has_value()) {
                CHECK(values[FairnessMeasure::Uniform] ==
                      Rational(1) / *inv.fractional_partitioning);
                CHECK(values[FairnessMeasure::Uniform] != 0);
            } else {
                CHECK(values[FairnessMeasure::Uniform] == 0);
            }
            CHECK(values[FairnessMeasure::Rawlsian] ==
                  Rational(1) / inv.fractional_covering);
        }
    }
    CHECK(compared > 120);
}

TEST_CASE("constrained column generation matches the restricted explicit solve") {
    std::mt19937_64 rng(901);
    int agreements = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 5);
        Graph g = random_graph(n, rng, 4);
        GroupConstraints c;
        const int k = 1 + static_cast<int>(rng() % 2);
        c.groups.assign(k, {});
        for (int v = 0; v < n; ++v) {
            const int slot = static_cast<int>(rng() % (k + 1));
            if (slot < k) c.groups[slot].push_back(v);
        }
        for (int i = 0; i < k; ++i) {
            int lo = static_cast<int>(rng() % 3);
            c.absolute.emplace_back(lo, lo + static_cast<int>(rng() % 3));
        }
        for (FairnessMeasure measure : kMeasures) {
            ComputeOptions exact_opts;
            exact_opts.method = SolveMethod::Exact;
            ComputeOptions colgen_opts;
            colgen_opts.method = SolveMethod::Colgen;
            std::string lhs = outcome_of([&] {
                return compute_fairness(g, ProblemKind::MatchingVertices, measure, &c,
                                        colgen_opts);
            });
            std::string rhs = outcome_of([&] {
                return compute_fairness(g, ProblemKind::MatchingVertices, measure, &c,
                                        exact_opts);
            });
            CHECK(lhs == rhs);
            ++agreements;
        }
    }
    CHECK(agreements == 80);
}

TEST_CASE("the compute facade routes reductions and constraints") {
    SUBCASE("vertex cover equals one minus the independent-set value") {
        std::mt19937_64 rng(902);
        for (int trial = 0; trial < 12; ++trial) {
            Graph g = random_graph(3 + static_cast<int>(rng() % 5), rng, 4);
            for (FairnessMeasure measure : kMeasures) {
                ComputeOptions exact_opts;
                exact_opts.method = SolveMethod::Exact;
                ComputeOptions colgen_opts;
                colgen_opts.method = SolveMethod::Colgen;
                FairnessResult vc =
                    compute_fairness(g, ProblemKind::VertexCover, measure, nullptr, exact_opts);
                FairnessResult is =
                    compute_fairness(g, ProblemKind::IndependentSet, measure, nullptr, exact_opts);
                Rational flipped = Rational(1) - is.value;
                CHECK(vc.value == flipped);
                FairnessResult vc_colgen =
                    compute_fairness(g, ProblemKind::VertexCover, measure, nullptr, colgen_opts);
                CHECK(vc_colgen.value == vc.value);
            }
        }
    }
    SUBCASE("clique fairness solves the complement graph") {
        std::mt19937_64 rng(903);
        for (int trial = 0; trial < 12; ++trial) {
            Graph g = random_graph(3 + static_cast<int>(rng() % 5), rng, 4);
            for (FairnessMeasure measure : kMeasures) {
                ComputeOptions opts;
                opts.method = SolveMethod::Exact;
                FairnessResult clique =
                    compute_fairness(g, ProblemKind::Clique, measure, nullptr, opts);
                FairnessResult is = compute_fairness(complement(g), ProblemKind::IndependentSet,
                                                     measure, nullptr, opts);
                CHECK(clique.value == is.value);
            }
        }
    }
    SUBCASE("auto picks column generation for matchings and respects the size gate") {
        Graph g = cycle(5);
        FairnessResult res =
            compute_fairness(g, ProblemKind::MatchingVertices, FairnessMeasure::Uniform);
        CHECK(res.value == Rational(4, 5));
        CHECK(res.columns_generated > 0);  // auto went through the pricing loop
        FairnessResult is =
            compute_fairness(g, ProblemKind::IndependentSet, FairnessMeasure::Uniform);
        CHECK(is.value == Rational(2, 5));
        CHECK(is.columns_generated == 0);  // 5 <= 20 vertices: explicit enumeration
    }
    SUBCASE("constraints are matching-only and edge constraints need enumeration") {
        Graph g = complete(3);
        GroupConstraints c = single_group({0}, 0, 1);
        CHECK_THROWS_AS(compute_fairness(g, ProblemKind::IndependentSet,
                                         FairnessMeasure::Uniform, &c),
                        ModelError);
        ComputeOptions colgen_opts;
        colgen_opts.method = SolveMethod::Colgen;
        CHECK_THROWS_AS(compute_fairness(g, ProblemKind::MatchingEdges,
                                         FairnessMeasure::Uniform, &c, colgen_opts),
                        ModelError);
        // Auto falls back to enumeration and matches the explicit restriction.
        FairnessResult auto_res =
            compute_fairness(g, ProblemKind::MatchingEdges, FairnessMeasure::Uniform, &c);
        ExplicitSetSystem restricted =
            restrict_explicit(enumerate_family(g, ProblemKind::MatchingEdges), c);
        FairnessResult explicit_res = solve_explicit(restricted, FairnessMeasure::Uniform);
        CHECK(auto_res.value == explicit_res.value);
    }
}

}  // TEST_SUITE
