#include "fairdist/analysis.hpp"

#include <functional>
#include <stdexcept>

#include "fairdist/errors.hpp"
#include "fairdist/lp.hpp"
#include "fairdist/matching.hpp"

namespace fairdist {

namespace {

int max_cardinality_matching(const Graph& g) {
    const std::vector<Rational> ones(g.edge_count(), Rational(1));
    return static_cast<int>(max_weight_matching(g, ones).edges.size());
}

}  // namespace

GraphInvariants compute_invariants(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("graph has no vertices");
    GraphInvariants inv;
    inv.matching_number = max_cardinality_matching(g);
    // The fractional matching polytope is half-integral: its optimum equals
    // half the integral matching number of the bipartite double cover.
    inv.fractional_matching_number =
        Rational(max_cardinality_matching(bipartite_double_cover(g)), 2);
    inv.has_perfect_matching = 2 * inv.matching_number == g.vertex_count();
    inv.has_fractional_perfect_matching =
        inv.fractional_matching_number == Rational(g.vertex_count(), 2);
    const DegreeProfile deg = degree_profile(g);
    inv.max_degree = deg.max_degree;
    inv.min_degree = deg.min_degree;
    return inv;
}

bool pu_positive_matching_vertices(const Graph& g) {
    return compute_invariants(g).has_fractional_perfect_matching;
}

ReducedDualZeroResult reduced_dual_zero_test(const Graph& g) {
    // The uniform optimum is zero iff some alpha has alpha_u + alpha_v >= 0
    // on every edge and a negative total; scaling lets us normalize the
    // total to -1, turning the strict inequality into plain feasibility.
    const int n = g.vertex_count();
    LinearProgram lp;
    for (int v = 0; v < n; ++v) lp.add_variable(Rational(0), std::nullopt, std::nullopt);
    for (auto [u, v] : g.edges()) {
        std::vector<Rational> row(n, Rational(0));
        row[u] = 1;
        row[v] = 1;
        lp.add_row(std::move(row), Relation::Ge, Rational(0));
    }
    lp.add_row(std::vector<Rational>(n, Rational(1)), Relation::Eq, Rational(-1));

    const LpSolution sol = solve(lp);
    ReducedDualZeroResult out;
    if (sol.status == LpStatus::Optimal) {
        out.is_zero = true;
        out.certificate = sol.primal;
    } else if (sol.status == LpStatus::Infeasible) {
        out.is_zero = false;
    } else {
        throw std::logic_error("a zero-objective feasibility program cannot be unbounded");
    }
    return out;
}

BoundsReport bounds_report(const Graph& g) {
    if (g.edge_count() == 0) throw ModelError("no edges");
    const DegreeProfile deg = degree_profile(g);
    BoundsReport report;
    report.edge_fairness_bounds = {Rational(1, deg.max_degree + 1),
                                   Rational(1, deg.max_degree)};
    report.rawlsian_vertex_lower =
        deg.is_regular ? Rational(2, 3)
                       : Rational(1, deg.max_degree - deg.min_degree + 1);
    report.pu_positive = pu_positive_matching_vertices(g);
    report.pu_dichotomy_lower = report.pu_positive ? Rational(2, 3) : Rational(0);
    return report;
}

bool check_matching_size_condition(const Graph& g) {
    if (g.edge_count() == 0) throw ModelError("no edges");
    const DegreeProfile deg = degree_profile(g);
    return Rational(max_cardinality_matching(g)) >=
           Rational(g.edge_count(), deg.max_degree);
}

bool q_factor_exists(const Graph& g) {
    if (g.vertex_count() == 0) return true;  // the empty spanning subgraph
    const bool via_double_cover = compute_invariants(g).has_fractional_perfect_matching;
    if (g.vertex_count() <= 10 &&
        detail::q_factor_by_search(g) != via_double_cover)
        throw std::logic_error("q-factor search disagrees with the double-cover method");
    return via_double_cover;
}

namespace detail {

bool q_factor_by_search(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    if (n > 20) throw std::invalid_argument("q-factor search is limited to small graphs");
    const unsigned full = (1u << n) - 1u;
    std::vector<char> known_bad(std::size_t{1} << n, 0);

    // Exact cover: peel off the lowest uncovered vertex as either one end of
    // a single-edge component or a member of an odd-cycle component.
    std::function<bool(unsigned)> cover = [&](unsigned used) -> bool {
        if (used == full) return true;
        if (known_bad[used]) return false;
        int v = 0;
        while (used >> v & 1u) ++v;
        for (int u : g.neighbors(v))
            if (!(used >> u & 1u) && cover(used | 1u << v | 1u << u)) return true;
        // Grow simple paths from v through unused vertices; closing an edge
        // back to v with an odd vertex count >= 3 completes a cycle component.
        std::function<bool(int, unsigned, int)> extend = [&](int cur, unsigned path,
                                                             int len) -> bool {
            for (int w : g.neighbors(cur)) {
                if (w == v) {
                    if (len >= 3 && len % 2 == 1 && cover(used | path)) return true;
                    continue;
                }
                if ((used >> w & 1u) || (path >> w & 1u)) continue;
                if (extend(w, path | 1u << w, len + 1)) return true;
            }
            return false;
        };
        if (extend(v, 1u << v, 1)) return true;
        known_bad[used] = 1;
        return false;
    };
    return cover(0);
}

}  // namespace detail

}  // namespace fairdist
