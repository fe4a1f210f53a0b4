#include "fairdist/group_fairness.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "fairdist/errors.hpp"

namespace fairdist {

GroupConstraints normalize_constraints(GroupConstraints c, std::size_t ground_size) {
    const std::size_t k = c.groups.size();
    if (c.names.empty())
        for (std::size_t i = 0; i < k; ++i) c.names.push_back("g" + std::to_string(i));
    if (c.names.size() != k)
        throw ParseError("group name count does not match the group count");
    if (c.absolute.empty())
        for (std::size_t i = 0; i < k; ++i)
            c.absolute.emplace_back(0, static_cast<int>(c.groups[i].size()));
    if (c.absolute.size() != k)
        throw ParseError("absolute bound count does not match the group count");

    std::vector<char> seen(ground_size, 0);
    for (auto& group : c.groups) {
        std::sort(group.begin(), group.end());
        group.erase(std::unique(group.begin(), group.end()), group.end());
        for (int a : group) {
            if (a < 0 || static_cast<std::size_t>(a) >= ground_size)
                throw ParseError("group element out of range: " + std::to_string(a));
            if (seen[a]) throw ParseError("groups must be pairwise disjoint");
            seen[a] = 1;
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        auto& [lo, hi] = c.absolute[i];
        // An inverted pair is a contradiction unless it only reflects the
        // group-size clamp below; that keeps normalization idempotent while a
        // lower bound above the group size still reads as an empty range.
        const int size = static_cast<int>(c.groups[i].size());
        if (lo < 0 || hi < std::min(lo, size))
            throw ParseError("invalid absolute bounds for group " + c.names[i]);
        hi = std::min(hi, size);
    }
    for (const auto& rel : c.relative) {
        if (rel.i < 0 || static_cast<std::size_t>(rel.i) >= k || rel.j < 0 ||
            static_cast<std::size_t>(rel.j) >= k || rel.i == rel.j)
            throw ParseError("relative bound references an invalid group pair");
        if (rel.ratio < 0) throw ParseError("relative bound ratio must be nonnegative");
    }
    return c;
}

namespace {

std::vector<int> group_counts(const std::vector<int>& member, const GroupConstraints& c) {
    std::vector<int> counts(c.groups.size(), 0);
    for (std::size_t i = 0; i < c.groups.size(); ++i) {
        const auto& g = c.groups[i];
        std::size_t a = 0, b = 0;
        while (a < member.size() && b < g.size()) {
            if (member[a] < g[b]) ++a;
            else if (member[a] > g[b]) ++b;
            else { ++counts[i]; ++a; ++b; }
        }
    }
    return counts;
}

bool counts_satisfy(const std::vector<int>& counts, const GroupConstraints& c) {
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i] < c.absolute[i].first || counts[i] > c.absolute[i].second)
            return false;
    for (const auto& rel : c.relative) {
        Rational rhs = rel.ratio * Rational(counts[rel.j]);
        if (Rational(counts[rel.i]) > rhs) return false;
    }
    return true;
}

}  // namespace

bool satisfies(const std::vector<int>& member, const GroupConstraints& c) {
    return counts_satisfy(group_counts(member, c), c);
}

ExplicitSetSystem restrict_explicit(const ExplicitSetSystem& s, const GroupConstraints& c) {
    GroupConstraints norm = normalize_constraints(c, s.ground.size());
    ExplicitSetSystem out;
    out.ground = s.ground;
    for (const auto& m : s.family)
        if (satisfies(m, norm)) out.family.push_back(m);
    if (out.family.empty()) throw ModelError("empty restricted family");
    refresh_system_flags(out);
    return out;
}

std::optional<WeightedMatchingResult> exact_budgeted_matching(
    const Graph& g, const VertexColoring& colors, const std::vector<int>& r,
    const std::vector<Rational>& w) {
    const int n = g.vertex_count();
    if (static_cast<int>(colors.color.size()) != n)
        throw std::invalid_argument("coloring size does not match the vertex count");
    if (static_cast<int>(w.size()) != n)
        throw std::invalid_argument("weight count does not match the vertex count");
    const int k = colors.num_colors;
    if (static_cast<int>(r.size()) != k)
        throw std::invalid_argument("requirement count does not match the color count");
    std::vector<std::vector<int>> classes(k);
    for (int v = 0; v < n; ++v) {
        int cls = colors.color[v];
        if (cls < 0 || cls >= k) throw std::invalid_argument("vertex color out of range");
        classes[cls].push_back(v);
    }
    for (int i = 0; i < k; ++i)
        if (r[i] < 0 || r[i] > static_cast<int>(classes[i].size()))
            throw std::invalid_argument("requirement outside [0, class size]");

    // Auxiliary graph: originals keep their ids; class i gets |class i| - r[i]
    // dummy vertices adjacent to exactly its members (weight 0), and an
    // original edge {u, v} carries weight w(u) + w(v). Its perfect matchings
    // correspond exactly to matchings of g covering r[i] vertices of class i,
    // with total weight equal to the covered-vertex weight; in particular a
    // parity mismatch simply leaves the auxiliary graph without a perfect
    // matching.
    std::vector<std::pair<int, int>> aux_edges;
    std::map<std::pair<int, int>, Rational> weight_of;
    for (auto [u, v] : g.edges()) {
        aux_edges.emplace_back(u, v);
        Rational s = w[u] + w[v];
        weight_of[{u, v}] = s;
    }
    int next = n;
    for (int i = 0; i < k; ++i) {
        const int dummies = static_cast<int>(classes[i].size()) - r[i];
        for (int d = 0; d < dummies; ++d, ++next)
            for (int v : classes[i]) {
                aux_edges.emplace_back(v, next);
                weight_of[{v, next}] = Rational(0);
            }
    }
    Graph aux(next, std::move(aux_edges));
    std::vector<Rational> aux_w;
    aux_w.reserve(aux.edges().size());
    for (const auto& e : aux.edges()) aux_w.push_back(weight_of.at(e));

    auto pm = max_weight_perfect_matching(aux, aux_w);
    if (!pm) return std::nullopt;

    std::map<std::pair<int, int>, int> edge_index;
    for (int e = 0; e < g.edge_count(); ++e) edge_index[g.edges()[e]] = e;
    WeightedMatchingResult out;
    for (int e : pm->edges) {
        auto [u, v] = aux.edges()[e];
        if (u < n && v < n) out.edges.push_back(edge_index.at({u, v}));
    }
    std::sort(out.edges.begin(), out.edges.end());
    out.weight = Rational(0);
    std::vector<int> counts(k, 0);
    for (int e : out.edges) {
        auto [u, v] = g.edges()[e];
        Rational s = w[u] + w[v];
        out.weight += s;
        ++counts[colors.color[u]];
        ++counts[colors.color[v]];
    }
    if (counts != r)
        throw std::logic_error("budgeted matching violated its class counts");
    out.is_perfect = (2 * static_cast<int>(out.edges.size()) == n);
    return out;
}

std::vector<std::vector<int>> feasible_requirement_vectors(
    const GroupConstraints& c, const std::vector<int>& sizes) {
    const std::size_t k = c.groups.size();
    if (k > 6)
        throw ModelError("too many groups: " + std::to_string(k) +
                         " exceeds the exact-enumeration bound of 6");
    if (sizes.size() != k)
        throw std::invalid_argument("size count does not match the group count");
    if (c.absolute.size() != k)
        throw std::invalid_argument("constraints must be normalized first");
    std::vector<std::vector<int>> out;
    std::vector<int> r(k, 0);
    auto walk = [&](auto&& self, std::size_t i) -> void {
        if (i == k) {
            if (counts_satisfy(r, c)) out.push_back(r);
            return;
        }
        const int hi = std::min(c.absolute[i].second, sizes[i]);
        for (int v = c.absolute[i].first; v <= hi; ++v) {
            r[i] = v;
            self(self, i + 1);
        }
    };
    walk(walk, 0);
    return out;
}

VertexColoring coloring_from_groups(const GroupConstraints& c, int n) {
    const int k = static_cast<int>(c.groups.size());
    VertexColoring coloring;
    coloring.color.assign(n, k);
    for (int i = 0; i < k; ++i)
        for (int v : c.groups[i]) {
            if (v < 0 || v >= n) throw std::invalid_argument("group element out of range");
            coloring.color[v] = i;
        }
    bool any_uncolored = false;
    for (int v = 0; v < n; ++v)
        if (coloring.color[v] == k) any_uncolored = true;
    coloring.num_colors = k + (any_uncolored ? 1 : 0);
    return coloring;
}

namespace {

// Visits every matching of g once, in lexicographic edge-index order, handing
// the visitor the edge list and the covered-vertex indicator.
template <typename Visit>
void walk_matchings(const Graph& g, int start, std::vector<int>& edges,
                    std::vector<char>& covered, const Visit& visit) {
    visit(edges, covered);
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

WeightedMatchingResult result_for_edges(const Graph& g, std::vector<int> edges,
                                        const std::vector<Rational>& w) {
    WeightedMatchingResult out;
    out.edges = std::move(edges);
    out.weight = Rational(0);
    for (int e : out.edges) {
        auto [u, v] = g.edges()[e];
        Rational s = w[u] + w[v];
        out.weight += s;
    }
    out.is_perfect = (2 * static_cast<int>(out.edges.size()) == g.vertex_count());
    return out;
}

}  // namespace

std::optional<WeightedMatchingResult> group_fair_optimum(
    const Graph& g, const GroupConstraints& c, const std::vector<Rational>& w) {
    const int n = g.vertex_count();
    if (static_cast<int>(w.size()) != n)
        throw std::invalid_argument("weight count does not match the vertex count");
    GroupConstraints norm = normalize_constraints(c, static_cast<std::size_t>(n));

    if (n < detail::kExhaustiveMatchingThreshold) {
        std::optional<std::vector<int>> best_edges;
        Rational best_weight(0);
        std::vector<int> edges;
        std::vector<char> covered(n, 0);
        walk_matchings(g, 0, edges, covered,
                       [&](const std::vector<int>& m, const std::vector<char>&) {
                           std::vector<int> verts = covered_set(g, m);
                           if (!satisfies(verts, norm)) return;
                           Rational weight(0);
                           for (int v : verts) weight += w[v];
                           if (!best_edges || weight > best_weight) {
                               best_edges = m;
                               best_weight = weight;
                           }
                       });
        if (!best_edges) return std::nullopt;
        return result_for_edges(g, std::move(*best_edges), w);
    }

    std::vector<int> sizes;
    for (const auto& group : norm.groups) sizes.push_back(static_cast<int>(group.size()));
    const std::vector<std::vector<int>> vectors = feasible_requirement_vectors(norm, sizes);
    const VertexColoring coloring = coloring_from_groups(norm, n);
    const bool has_uncolored = coloring.num_colors > static_cast<int>(norm.groups.size());
    int uncolored = 0;
    if (has_uncolored)
        for (int v = 0; v < n; ++v)
            if (coloring.color[v] == static_cast<int>(norm.groups.size())) ++uncolored;

    std::optional<WeightedMatchingResult> best;
    for (const auto& base : vectors) {
        const int extra_max = has_uncolored ? uncolored : 0;
        for (int extra = 0; extra <= extra_max; ++extra) {
            std::vector<int> full = base;
            if (has_uncolored) full.push_back(extra);
            auto m = exact_budgeted_matching(g, coloring, full, w);
            if (m && (!best || m->weight > best->weight)) best = std::move(m);
        }
    }
    return best;
}

std::optional<std::vector<int>> group_fair_pricing(
    const Graph& g, const GroupConstraints& c, const std::vector<Rational>& alpha) {
    const int n = g.vertex_count();
    if (static_cast<int>(alpha.size()) != n)
        throw std::invalid_argument("price count does not match the vertex count");

    if (n < detail::kExhaustiveMatchingThreshold) {
        GroupConstraints norm = normalize_constraints(c, static_cast<std::size_t>(n));
        std::optional<std::vector<int>> best;
        Rational best_value(0);
        std::vector<int> edges;
        std::vector<char> covered(n, 0);
        walk_matchings(g, 0, edges, covered,
                       [&](const std::vector<int>& m, const std::vector<char>&) {
                           std::vector<int> verts = covered_set(g, m);
                           if (!satisfies(verts, norm)) return;
                           Rational value(0);
                           for (int v : verts) value += alpha[v];
                           if (!best || value < best_value ||
                               (value == best_value && verts < *best)) {
                               best = std::move(verts);
                               best_value = value;
                           }
                       });
        return best;
    }

    std::vector<Rational> w(alpha.size());
    for (std::size_t v = 0; v < alpha.size(); ++v) {
        Rational neg = -alpha[v];
        w[v] = neg;
    }
    auto m = group_fair_optimum(g, c, w);
    if (!m) return std::nullopt;
    return covered_set(g, m->edges);
}

namespace {

class GroupFairVertexOracle final : public PricingOracle {
  public:
    GroupFairVertexOracle(Graph g, GroupConstraints c)
        : g_(std::move(g)),
          c_(normalize_constraints(std::move(c),
                                   static_cast<std::size_t>(g_.vertex_count()))) {}

    ProblemKind kind() const override { return ProblemKind::MatchingVertices; }

    std::vector<int> price(const std::vector<Rational>& alpha) const override {
        auto member = group_fair_pricing(g_, c_, alpha);
        if (!member)
            throw std::logic_error("group pricing called on an empty restricted family");
        return *member;
    }

  private:
    Graph g_;
    GroupConstraints c_;
};

}  // namespace

std::unique_ptr<PricingOracle> make_group_fair_oracle(const Graph& g, GroupConstraints c) {
    return std::make_unique<GroupFairVertexOracle>(g, std::move(c));
}

}  // namespace fairdist
