#include "fairdist/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

#include "fairdist/errors.hpp"

namespace fairdist {

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list,
             std::vector<std::string> labels)
    : n_(n), edges_(std::move(edge_list)), labels_(std::move(labels)) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    if (labels_.empty()) {
        labels_.reserve(n_);
        for (int v = 0; v < n_; ++v) labels_.push_back(std::to_string(v));
    }
    if (static_cast<int>(labels_.size()) != n_)
        throw std::invalid_argument("label count does not match vertex count");
    for (auto& [u, v] : edges_) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw ParseError("edge endpoint is not a valid vertex: {" +
                             std::to_string(u) + ", " + std::to_string(v) + "}");
        if (u == v) throw ParseError("self-loop at vertex " + labels_[u]);
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i] == edges_[i - 1])
            throw ParseError("duplicate edge {" + labels_[edges_[i].first] + ", " +
                             labels_[edges_[i].second] + "}");
    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

DegreeProfile degree_profile(const Graph& g) {
    if (g.vertex_count() == 0) throw ModelError("empty graph");
    DegreeProfile p{g.degree(0), g.degree(0), true};
    for (int v = 1; v < g.vertex_count(); ++v) {
        p.min_degree = std::min(p.min_degree, g.degree(v));
        p.max_degree = std::max(p.max_degree, g.degree(v));
    }
    p.is_regular = p.min_degree == p.max_degree;
    return p;
}

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph(g.vertex_count(), std::move(edges), g.labels());
}

Graph bipartite_double_cover(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(2 * g.edges().size());
    for (const auto& [u, v] : g.edges()) {
        edges.emplace_back(u, v + n);
        edges.emplace_back(v, u + n);
    }
    std::vector<std::string> labels;
    labels.reserve(2 * n);
    for (int side = 0; side < 2; ++side)
        for (int v = 0; v < n; ++v)
            labels.push_back(g.label(v) + "^" + std::to_string(side));
    return Graph(2 * n, std::move(edges), std::move(labels));
}

int isolated_after_removal(const Graph& g, const std::vector<int>& s) {
    std::vector<char> removed(g.vertex_count(), 0);
    for (int v : s) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("invalid vertex id " + std::to_string(v));
        removed[v] = 1;
    }
    int count = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (removed[v]) continue;
        bool isolated = true;
        for (int w : g.neighbors(v))
            if (!removed[w]) {
                isolated = false;
                break;
            }
        if (isolated) ++count;
    }
    return count;
}

std::optional<std::vector<int>> bipartite_sides(const Graph& g) {
    std::vector<int> side(g.vertex_count(), -1);
    for (int start = 0; start < g.vertex_count(); ++start) {
        if (side[start] != -1) continue;
        side[start] = 0;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

}  // namespace fairdist
