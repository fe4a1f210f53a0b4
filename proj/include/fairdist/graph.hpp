#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fairdist {

// Simple undirected graph on dense integer vertex ids 0..n-1 with an optional
// label table. Edges are canonicalized (u < v, sorted lexicographically) at
// construction and the graph is immutable afterwards, so every enumeration
// order downstream is reproducible.
class Graph {
  public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edge_list,
          std::vector<std::string> labels = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    const std::string& label(int v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const { return labels_; }
    bool has_edge(int u, int v) const;

    // Structural equality: same vertex count and same canonical edge set.
    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }
    bool operator!=(const Graph& other) const { return !(*this == other); }

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> adj_;
};

// Total assignment of vertices to color classes 0..num_colors-1 (not
// necessarily a proper coloring).
struct VertexColoring {
    std::vector<int> color;  // one entry per vertex
    int num_colors = 0;
};

struct DegreeProfile {
    int min_degree = 0;
    int max_degree = 0;
    bool is_regular = false;
};

// Minimum degree, maximum degree, regularity flag. Throws ModelError on an
// empty vertex set.
DegreeProfile degree_profile(const Graph& g);

// Graph on the same vertex set (labels preserved) whose edges are exactly the
// non-edges of g.
Graph complement(const Graph& g);

// Graph on vertex set {v^0, v^1 : v in V} with edges {u^0, v^1} and {u^1, v^0}
// for every edge {u, v}. Vertex v^0 gets id v, vertex v^1 gets id v + n.
Graph bipartite_double_cover(const Graph& g);

// Number of vertices outside s whose neighbors all lie inside s. Throws
// std::invalid_argument on an out-of-range vertex id.
int isolated_after_removal(const Graph& g, const std::vector<int>& s);

// Two-coloring of the vertices (0/1 per vertex) if the graph is bipartite,
// std::nullopt otherwise. Deterministic: BFS from the least unvisited id.
std::optional<std::vector<int>> bipartite_sides(const Graph& g);

}  // namespace fairdist
