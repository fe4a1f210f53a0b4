#include "fairdist/set_system.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fairdist/errors.hpp"
#include "fairdist/lp.hpp"

namespace fairdist {

std::string to_string(ProblemKind kind) {
    switch (kind) {
        case ProblemKind::MatchingEdges: return "matching-edges";
        case ProblemKind::MatchingVertices: return "matching-vertices";
        case ProblemKind::IndependentSet: return "independent-set";
        case ProblemKind::VertexCover: return "vertex-cover";
        case ProblemKind::Clique: return "clique";
    }
    throw std::logic_error("unreachable");
}

ProblemKind problem_kind_from_string(const std::string& name) {
    if (name == "matching-edges") return ProblemKind::MatchingEdges;
    if (name == "matching-vertices") return ProblemKind::MatchingVertices;
    if (name == "independent-set") return ProblemKind::IndependentSet;
    if (name == "vertex-cover") return ProblemKind::VertexCover;
    if (name == "clique") return ProblemKind::Clique;
    throw ParseError("unknown problem kind: " + name);
}

void refresh_system_flags(ExplicitSetSystem& s) {
    s.has_empty_member = false;
    std::vector<char> covered(s.ground.size(), 0);
    for (const auto& m : s.family) {
        if (m.empty()) s.has_empty_member = true;
        for (int a : m) covered[a] = 1;
    }
    s.uncovered_elements.clear();
    for (std::size_t a = 0; a < covered.size(); ++a)
        if (!covered[a]) s.uncovered_elements.push_back(static_cast<int>(a));
}

std::vector<std::string> ground_labels(const Graph& g, ProblemKind kind) {
    std::vector<std::string> out;
    if (kind == ProblemKind::MatchingEdges) {
        for (const auto& [u, v] : g.edges())
            out.push_back("{" + g.label(u) + "," + g.label(v) + "}");
    } else {
        out = g.labels();
    }
    if (out.empty()) throw ModelError("empty ground set");
    return out;
}

namespace {

class FamilyCollector {
  public:
    explicit FamilyCollector(std::size_t cap) : cap_(cap) {}

    void insert(std::vector<int> member) {
        std::sort(member.begin(), member.end());
        members_.insert(std::move(member));
        if (members_.size() > cap_) throw CapExceededError(cap_, members_.size());
    }

    std::vector<std::vector<int>> take() {
        return {members_.begin(), members_.end()};
    }

  private:
    std::size_t cap_;
    std::set<std::vector<int>> members_;
};

// Visits every matching of g exactly once (edges taken in increasing index
// order); `edges` holds the indices, `covered` the matched vertices.
template <typename Visit>
void walk_matchings(const Graph& g, int start, std::vector<int>& edges,
                    std::vector<char>& covered, const Visit& visit) {
    visit(edges);
    for (int i = start; i < g.edge_count(); ++i) {
        auto [u, v] = g.edges()[i];
        if (covered[u] || covered[v]) continue;
        covered[u] = covered[v] = 1;
        edges.push_back(i);
        walk_matchings(g, i + 1, edges, covered, visit);
        edges.pop_back();
        covered[u] = covered[v] = 0;
    }
}

// Visits every independent set of g exactly once (vertices in increasing id).
template <typename Visit>
void walk_independent_sets(const Graph& g, int start, std::vector<int>& members,
                           std::vector<char>& taken, const Visit& visit) {
    visit(members);
    for (int v = start; v < g.vertex_count(); ++v) {
        bool clash = false;
        for (int w : g.neighbors(v))
            if (taken[w]) {
                clash = true;
                break;
            }
        if (clash) continue;
        taken[v] = 1;
        members.push_back(v);
        walk_independent_sets(g, v + 1, members, taken, visit);
        members.pop_back();
        taken[v] = 0;
    }
}

std::vector<std::vector<int>> collect_matchings(const Graph& g, std::size_t cap,
                                                bool as_vertex_sets) {
    FamilyCollector out(cap);
    std::vector<int> edges;
    std::vector<char> covered(g.vertex_count(), 0);
    walk_matchings(g, 0, edges, covered, [&](const std::vector<int>& m) {
        if (as_vertex_sets) {
            std::vector<int> verts;
            verts.reserve(2 * m.size());
            for (int e : m) {
                verts.push_back(g.edges()[e].first);
                verts.push_back(g.edges()[e].second);
            }
            out.insert(std::move(verts));
        } else {
            out.insert(m);
        }
    });
    return out.take();
}

std::vector<std::vector<int>> collect_independent_sets(const Graph& g,
                                                       std::size_t cap) {
    FamilyCollector out(cap);
    std::vector<int> members;
    std::vector<char> taken(g.vertex_count(), 0);
    walk_independent_sets(g, 0, members, taken,
                          [&](const std::vector<int>& m) { out.insert(m); });
    return out.take();
}

}  // namespace

ExplicitSetSystem enumerate_family(const Graph& g, ProblemKind kind,
                                   std::size_t cap) {
    if (cap < 1) throw std::invalid_argument("cap must be at least 1");
    ExplicitSetSystem s;
    s.ground = ground_labels(g, kind);
    switch (kind) {
        case ProblemKind::MatchingEdges:
            s.family = collect_matchings(g, cap, /*as_vertex_sets=*/false);
            break;
        case ProblemKind::MatchingVertices:
            s.family = collect_matchings(g, cap, /*as_vertex_sets=*/true);
            break;
        case ProblemKind::IndependentSet:
            s.family = collect_independent_sets(g, cap);
            break;
        case ProblemKind::VertexCover: {
            // m is a vertex cover iff V \ m is independent.
            FamilyCollector out(cap);
            for (const auto& ind : collect_independent_sets(g, cap)) {
                std::vector<char> in(g.vertex_count(), 0);
                for (int v : ind) in[v] = 1;
                std::vector<int> cover;
                for (int v = 0; v < g.vertex_count(); ++v)
                    if (!in[v]) cover.push_back(v);
                out.insert(std::move(cover));
            }
            s.family = out.take();
            break;
        }
        case ProblemKind::Clique:
            s.family = collect_independent_sets(complement(g), cap);
            break;
    }
    refresh_system_flags(s);
    if (!s.uncovered_elements.empty())
        throw ModelError("element uncoverable: " + s.ground[s.uncovered_elements.front()]);
    return s;
}

bool is_independence_system(const ExplicitSetSystem& s) {
    std::set<std::vector<int>> fam(s.family.begin(), s.family.end());
    if (fam.find({}) == fam.end()) return false;
    for (const auto& m : s.family) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::vector<int> sub;
            sub.reserve(m.size() - 1);
            for (std::size_t j = 0; j < m.size(); ++j)
                if (j != i) sub.push_back(m[j]);
            if (fam.find(sub) == fam.end()) return false;
        }
    }
    return true;
}

namespace {

LpSolution solve_weighting_lp(const ExplicitSetSystem& s, Relation rel) {
    LinearProgram lp;
    lp.sense = Sense::Minimize;
    for (std::size_t m = 0; m < s.family.size(); ++m)
        lp.add_variable(Rational(1));
    for (std::size_t a = 0; a < s.ground.size(); ++a) {
        std::vector<Rational> row(s.family.size(), Rational(0));
        for (std::size_t m = 0; m < s.family.size(); ++m)
            for (int e : s.family[m])
                if (static_cast<std::size_t>(e) == a) row[m] = 1;
        lp.add_row(std::move(row), rel, Rational(1));
    }
    return solve(lp);
}

}  // namespace

HypergraphInvariants hypergraph_invariants(const ExplicitSetSystem& s) {
    HypergraphInvariants inv;
    LpSolution part = solve_weighting_lp(s, Relation::Eq);
    if (part.status == LpStatus::Optimal) inv.fractional_partitioning = part.objective;
    LpSolution cover = solve_weighting_lp(s, Relation::Ge);
    if (cover.status != LpStatus::Optimal)
        throw std::logic_error("covering LP must be solvable on a valid system");
    inv.fractional_covering = cover.objective;
    return inv;
}

}  // namespace fairdist
