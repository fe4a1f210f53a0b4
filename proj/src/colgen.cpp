#include "fairdist/colgen.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "fairdist/errors.hpp"
#include "fairdist/lp.hpp"
#include "fairdist/matching.hpp"

namespace fairdist {

std::string to_string(FairnessMeasure m) {
    switch (m) {
        case FairnessMeasure::Uniform: return "uniform";
        case FairnessMeasure::Rawlsian: return "rawlsian";
    }
    throw std::logic_error("unreachable");
}

FairnessMeasure fairness_measure_from_string(const std::string& name) {
    if (name == "uniform") return FairnessMeasure::Uniform;
    if (name == "rawlsian") return FairnessMeasure::Rawlsian;
    throw ParseError("unknown fairness measure: " + name);
}

SolveMethod solve_method_from_string(const std::string& name) {
    if (name == "auto") return SolveMethod::Auto;
    if (name == "exact") return SolveMethod::Exact;
    if (name == "colgen") return SolveMethod::Colgen;
    throw ParseError("unknown method: " + name);
}

namespace {

// Master LP over the given columns: maximize p subject to
//   sum_{m : a in m} x_m - p  {=, >=}  0   for every ground element a,
//   sum_m x_m = 1,  x >= 0,  p free.
// The coverage-row duals are the element prices alpha, the normalization dual
// is beta, and dual feasibility of a member m reads sum_{a in m} alpha_a +
// beta >= 0.
LinearProgram build_master(const std::vector<std::vector<int>>& columns,
                           std::size_t ground_size, FairnessMeasure measure) {
    LinearProgram lp;
    lp.sense = Sense::Maximize;
    for (std::size_t j = 0; j < columns.size(); ++j) lp.add_variable(Rational(0));
    const int p = lp.add_variable(Rational(1), std::nullopt, std::nullopt);
    const Relation rel =
        measure == FairnessMeasure::Uniform ? Relation::Eq : Relation::Ge;
    for (std::size_t a = 0; a < ground_size; ++a) {
        std::vector<Rational> row(columns.size() + 1, Rational(0));
        for (std::size_t j = 0; j < columns.size(); ++j)
            if (std::binary_search(columns[j].begin(), columns[j].end(),
                                   static_cast<int>(a)))
                row[j] = 1;
        row[p] = -1;
        lp.add_row(std::move(row), rel, Rational(0));
    }
    std::vector<Rational> norm(columns.size() + 1, Rational(1));
    norm[p] = 0;
    lp.add_row(std::move(norm), Relation::Eq, Rational(1));
    return lp;
}

FairnessResult result_from_master(const LinearProgram& lp, const LpSolution& sol,
                                  const std::vector<std::vector<int>>& columns,
                                  std::size_t ground_size, FairnessMeasure measure,
                                  int generated) {
    if (!verify_certificate(lp, sol))
        throw std::logic_error("master solution failed certificate verification");
    FairnessResult res;
    res.measure = measure;
    res.value = sol.objective;
    res.columns_generated = generated;
    res.coverage.assign(ground_size, Rational(0));
    for (std::size_t j = 0; j < columns.size(); ++j) {
        const Rational& x = sol.primal[j];
        if (x == 0) continue;
        res.distribution.support.push_back({columns[j], x});
        for (int a : columns[j]) res.coverage[a] += x;
    }
    std::sort(res.distribution.support.begin(), res.distribution.support.end(),
              [](const DistributionEntry& l, const DistributionEntry& r) {
                  return l.member < r.member;
              });
    res.certificate.alpha.assign(sol.dual.begin(),
                                 sol.dual.begin() + static_cast<long>(ground_size));
    res.certificate.beta = sol.dual[ground_size];
    Rational alpha_sum(0);
    for (const Rational& a : res.certificate.alpha) alpha_sum += a;
    if (alpha_sum != Rational(-1))
        throw std::logic_error("dual normalization violated");
    if (measure == FairnessMeasure::Rawlsian)
        for (const Rational& a : res.certificate.alpha)
            if (a > 0) throw std::logic_error("Rawlsian prices must be nonpositive");
    return res;
}

bool is_colgen_kind(ProblemKind kind) {
    return kind == ProblemKind::MatchingEdges ||
           kind == ProblemKind::MatchingVertices ||
           kind == ProblemKind::IndependentSet;
}

std::vector<int> covered_set(const Graph& g, const std::vector<int>& edges) {
    std::vector<int> verts;
    verts.reserve(2 * edges.size());
    for (int e : edges) {
        verts.push_back(g.edges()[e].first);
        verts.push_back(g.edges()[e].second);
    }
    std::sort(verts.begin(), verts.end());
    return verts;
}

// Validates that a priced member really belongs to the (possibly restricted)
// family; throws std::logic_error with an "oracle violation" message when not.
void check_member(const Graph& g, ProblemKind kind, const std::vector<int>& member,
                  std::size_t ground_size, const GroupConstraints* constraints) {
    for (std::size_t i = 0; i < member.size(); ++i) {
        if (member[i] < 0 || static_cast<std::size_t>(member[i]) >= ground_size)
            throw std::logic_error("oracle violation: element id out of range");
        if (i > 0 && member[i] <= member[i - 1])
            throw std::logic_error("oracle violation: member elements must be strictly increasing");
    }
    switch (kind) {
        case ProblemKind::MatchingEdges: {
            std::vector<char> used(g.vertex_count(), 0);
            for (int e : member) {
                auto [u, v] = g.edges()[e];
                if (used[u] || used[v])
                    throw std::logic_error("oracle violation: edge set is not a matching");
                used[u] = used[v] = 1;
            }
            break;
        }
        case ProblemKind::MatchingVertices: {
            std::vector<std::pair<int, int>> inner;
            for (auto [u, v] : g.edges()) {
                auto iu = std::lower_bound(member.begin(), member.end(), u);
                auto iv = std::lower_bound(member.begin(), member.end(), v);
                if (iu != member.end() && *iu == u && iv != member.end() && *iv == v)
                    inner.emplace_back(static_cast<int>(iu - member.begin()),
                                       static_cast<int>(iv - member.begin()));
            }
            Graph induced(static_cast<int>(member.size()), std::move(inner));
            std::vector<Rational> zero(induced.edge_count(), Rational(0));
            if (!max_weight_perfect_matching(induced, zero))
                throw std::logic_error(
                    "oracle violation: vertex set is not covered by any matching");
            break;
        }
        case ProblemKind::IndependentSet: {
            for (int v : member)
                for (int u : g.neighbors(v)) {
                    auto it = std::lower_bound(member.begin(), member.end(), u);
                    if (it != member.end() && *it == u)
                        throw std::logic_error("oracle violation: set is not independent");
                }
            break;
        }
        default:
            throw std::logic_error("oracle violation: unsupported problem kind");
    }
    if (constraints && !satisfies(member, *constraints))
        throw std::logic_error("oracle violation: member violates the group constraints");
}

}  // namespace

FairnessResult solve_explicit(const ExplicitSetSystem& s, FairnessMeasure measure) {
    if (s.ground.empty()) throw ModelError("empty ground set");
    if (s.family.empty()) throw ModelError("empty restricted family");
    LinearProgram lp = build_master(s.family, s.ground.size(), measure);
    LpSolution sol = solve(lp);
    if (sol.status == LpStatus::Infeasible)
        throw InfeasibleError("uniform fairness is infeasible for this family");
    if (sol.status != LpStatus::Optimal)
        throw std::logic_error("fairness master cannot be unbounded");
    return result_from_master(lp, sol, s.family, s.ground.size(), measure, 0);
}

FairnessResult solve_colgen(const Graph& g, ProblemKind kind, FairnessMeasure measure,
                            const PricingOracle& oracle,
                            const GroupConstraints* constraints) {
    if (!is_colgen_kind(kind))
        throw std::invalid_argument(
            "column generation supports matching-edges, matching-vertices, and "
            "independent-set; vertex-cover and clique go through their complement "
            "transforms");
    if (constraints && kind != ProblemKind::MatchingVertices)
        throw std::invalid_argument(
            "group constraints in column generation require matchings-for-vertices");
    if (oracle.kind() != kind)
        throw std::invalid_argument("pricing oracle kind does not match the problem kind");
    const std::vector<std::string> ground = ground_labels(g, kind);
    const std::size_t n = ground.size();
    std::optional<GroupConstraints> norm;
    if (constraints) norm = normalize_constraints(*constraints, n);

    std::vector<std::vector<int>> columns = initial_columns(g, kind, constraints);
    std::set<std::vector<int>> column_set(columns.begin(), columns.end());
    int generated = 0;

    for (;;) {
        LinearProgram lp = build_master(columns, n, measure);
        LpSolution sol = solve(lp);
        std::vector<Rational> alpha;
        Rational beta;
        bool master_infeasible = false;
        if (sol.status == LpStatus::Optimal) {
            alpha.assign(sol.dual.begin(), sol.dual.begin() + static_cast<long>(n));
            beta = sol.dual[n];
        } else if (sol.status == LpStatus::Infeasible) {
            // Price against the infeasibility certificate: its row multipliers
            // play the role of (alpha, beta). Any member with negative
            // aggregated value breaks the certificate; if none exists the
            // certificate extends to the full family.
            if (measure == FairnessMeasure::Rawlsian)
                throw std::logic_error("Rawlsian master cannot be infeasible");
            if (sol.farkas.size() != n + 1)
                throw std::logic_error("missing infeasibility certificate");
            alpha.assign(sol.farkas.begin(), sol.farkas.begin() + static_cast<long>(n));
            beta = sol.farkas[n];
            master_infeasible = true;
        } else {
            throw std::logic_error("fairness master cannot be unbounded");
        }

        std::vector<int> member = oracle.price(alpha);
        std::sort(member.begin(), member.end());
        check_member(g, kind, member, n, norm ? &*norm : nullptr);
        Rational value(0);
        for (int a : member) value += alpha[a];
        Rational reduced = value + beta;
        if (reduced >= 0) {
            if (master_infeasible)
                throw InfeasibleError(
                    "uniform fairness is infeasible for the restricted family");
            return result_from_master(lp, sol, columns, n, measure, generated);
        }
        if (column_set.count(member))
            throw std::logic_error(
                "no progress: pricing repeated a column at negative reduced cost");
        column_set.insert(member);
        columns.push_back(std::move(member));
        ++generated;
    }
}

std::vector<std::vector<int>> initial_columns(const Graph& g, ProblemKind kind,
                                              const GroupConstraints* constraints) {
    if (!is_colgen_kind(kind))
        throw std::invalid_argument(
            "column generation supports matching-edges, matching-vertices, and "
            "independent-set; vertex-cover and clique go through their complement "
            "transforms");
    if (constraints && kind != ProblemKind::MatchingVertices)
        throw std::invalid_argument(
            "group constraints in column generation require matchings-for-vertices");
    const std::vector<std::string> ground = ground_labels(g, kind);
    std::set<std::vector<int>> out;
    if (!constraints) {
        out.insert(std::vector<int>{});
        switch (kind) {
            case ProblemKind::MatchingEdges:
                for (int e = 0; e < g.edge_count(); ++e) out.insert({e});
                break;
            case ProblemKind::MatchingVertices:
                for (int v = 0; v < g.vertex_count(); ++v) {
                    if (g.degree(v) == 0)
                        throw ModelError("element uncoverable: " + g.label(v));
                    const int u = g.neighbors(v)[0];
                    out.insert({std::min(u, v), std::max(u, v)});
                }
                break;
            case ProblemKind::IndependentSet:
                for (int v = 0; v < g.vertex_count(); ++v) out.insert({v});
                break;
            default:
                break;
        }
        return {out.begin(), out.end()};
    }

    const GroupConstraints norm = normalize_constraints(*constraints, ground.size());
    // An isolated vertex is uncoverable no matter the constraints; report it
    // first so the error precedence matches the enumeration route.
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) throw ModelError("element uncoverable: " + g.label(v));
    if (satisfies({}, norm)) out.insert(std::vector<int>{});
    for (int v = 0; v < g.vertex_count(); ++v) {
        // Probe with weight 1 on v alone: the optimum covers v exactly when
        // some feasible member does.
        std::vector<Rational> w(g.vertex_count(), Rational(0));
        w[v] = 1;
        auto probe = group_fair_optimum(g, norm, w);
        if (!probe) throw ModelError("empty restricted family");
        std::vector<int> member = covered_set(g, probe->edges);
        if (!std::binary_search(member.begin(), member.end(), v))
            throw ModelError("element uncoverable: " + g.label(v));
        out.insert(std::move(member));
    }
    return {out.begin(), out.end()};
}

FairnessResult transform_reversed(const FairnessResult& base, std::size_t ground_size) {
    if (base.coverage.size() != ground_size)
        throw std::invalid_argument("coverage size does not match the ground size");
    FairnessResult out;
    out.measure = base.measure;
    Rational flipped = Rational(1) - base.value;
    out.value = flipped;
    out.columns_generated = base.columns_generated;
    out.certificate = base.certificate;
    for (const auto& entry : base.distribution.support) {
        std::vector<char> in(ground_size, 0);
        for (int a : entry.member) {
            if (a < 0 || static_cast<std::size_t>(a) >= ground_size)
                throw std::invalid_argument("member element outside the ground set");
            in[a] = 1;
        }
        std::vector<int> comp;
        comp.reserve(ground_size - entry.member.size());
        for (std::size_t a = 0; a < ground_size; ++a)
            if (!in[a]) comp.push_back(static_cast<int>(a));
        out.distribution.support.push_back({std::move(comp), entry.probability});
    }
    std::sort(out.distribution.support.begin(), out.distribution.support.end(),
              [](const DistributionEntry& l, const DistributionEntry& r) {
                  return l.member < r.member;
              });
    out.coverage.reserve(ground_size);
    for (const Rational& c : base.coverage) {
        Rational f = Rational(1) - c;
        out.coverage.push_back(f);
    }
    return out;
}

std::vector<std::vector<int>> sample(const Distribution& d, std::uint64_t seed,
                                     int count) {
    if (count < 0) throw std::invalid_argument("draw count must be nonnegative");
    if (d.support.empty()) throw ParseError("empty distribution");
    Rational total(0);
    for (const auto& entry : d.support) {
        if (entry.probability < 0) throw ParseError("negative probability");
        total += entry.probability;
    }
    if (total != 1) throw ParseError("probabilities do not sum to 1");

    BigInt common_den(1);
    for (const auto& entry : d.support) {
        BigInt den = boost::multiprecision::denominator(entry.probability);
        common_den = boost::multiprecision::lcm(common_den, den);
    }
    std::vector<BigInt> cumulative;
    cumulative.reserve(d.support.size());
    BigInt acc(0);
    for (const auto& entry : d.support) {
        BigInt num = boost::multiprecision::numerator(entry.probability);
        BigInt den = boost::multiprecision::denominator(entry.probability);
        acc += num * (common_den / den);
        cumulative.push_back(acc);
    }
    if (acc != common_den) throw std::logic_error("weight accumulation failed");

    // Exact uniform draw from [0, common_den): assemble enough 64-bit words
    // to cover the range, reject the overhang so every residue stays equally
    // likely, then reduce. Depends only on the mt19937_64 stream, which the
    // standard fixes bit-for-bit.
    std::mt19937_64 rng(seed);
    unsigned words = 1;
    {
        BigInt top = common_den - 1;
        const unsigned bits = top == 0 ? 1 : boost::multiprecision::msb(top) + 1;
        words = (bits + 63) / 64;
    }
    const BigInt span = BigInt(1) << (64 * words);
    const BigInt limit = span - span % common_den;
    std::vector<std::vector<int>> draws;
    draws.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        BigInt v;
        do {
            v = 0;
            for (unsigned k = 0; k < words; ++k) {
                BigInt word(rng());
                v |= word << (64 * k);
            }
        } while (v >= limit);
        BigInt idx = v % common_den;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), idx);
        draws.push_back(d.support[static_cast<std::size_t>(it - cumulative.begin())].member);
    }
    return draws;
}

FairnessResult compute_fairness(const Graph& g, ProblemKind kind, FairnessMeasure measure,
                                const GroupConstraints* constraints,
                                const ComputeOptions& opts) {
    const GroupConstraints* cons =
        (constraints && !constraints->empty()) ? constraints : nullptr;
    if (cons && kind != ProblemKind::MatchingEdges && kind != ProblemKind::MatchingVertices)
        throw ModelError("group constraints are only supported for the matching kinds");

    if (kind == ProblemKind::VertexCover) {
        FairnessResult base =
            compute_fairness(g, ProblemKind::IndependentSet, measure, nullptr, opts);
        return transform_reversed(base, static_cast<std::size_t>(g.vertex_count()));
    }
    if (kind == ProblemKind::Clique) {
        Graph comp = complement(g);
        return compute_fairness(comp, ProblemKind::IndependentSet, measure, nullptr, opts);
    }

    SolveMethod method = opts.method;
    if (method == SolveMethod::Auto) {
        if (kind == ProblemKind::IndependentSet)
            method = g.vertex_count() <= 20 ? SolveMethod::Exact : SolveMethod::Colgen;
        else
            method = SolveMethod::Colgen;
    }
    if (cons && kind == ProblemKind::MatchingEdges && method == SolveMethod::Colgen) {
        if (opts.method == SolveMethod::Colgen)
            throw ModelError(
                "group constraints on matching-edges require explicit enumeration");
        method = SolveMethod::Exact;
    }

    if (method == SolveMethod::Exact) {
        ExplicitSetSystem sys = enumerate_family(g, kind, opts.cap);
        if (cons) {
            sys = restrict_explicit(sys, *cons);
            if (!sys.uncovered_elements.empty())
                throw ModelError("element uncoverable: " +
                                 sys.ground[sys.uncovered_elements.front()]);
        }
        return solve_explicit(sys, measure);
    }
    if (cons) {
        auto oracle = make_group_fair_oracle(g, *cons);
        return solve_colgen(g, kind, measure, *oracle, cons);
    }
    auto oracle = make_pricing_oracle(g, kind);
    return solve_colgen(g, kind, measure, *oracle, nullptr);
}

}  // namespace fairdist
