#pragma once

#include <utility>
#include <vector>

namespace mis {

// Immutable undirected simple graph. Vertex ids are 0..n-1; edges are kept
// canonically as (min, max) pairs sorted ascending, adjacency lists sorted.
// Safe to share across threads once constructed.
class Graph {
public:
    Graph() = default;

    // Rejects self-loops and out-of-range endpoints; duplicate edges and
    // reversed orientations collapse to one undirected edge.
    Graph(int n_vertices, std::vector<std::pair<int, int>> edge_list);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(int u, int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// An independent-set candidate: sorted vertex ids plus cardinality score.
struct Solution {
    std::vector<int> vertices;
    int score = 0;
};

// Normalizes (sorts, dedups) and sets the score.
Solution make_solution(std::vector<int> vertices);

struct SolutionCheck {
    bool feasible = false;
    bool maximal = false;
};

// feasible <=> no edge inside s; maximal <=> feasible and every outside
// vertex has a neighbor in s. Throws std::out_of_range on bad ids.
SolutionCheck check_solution(const Graph& g, const Solution& s);

// Vertex ids sorted by ascending degree, ties by ascending id.
std::vector<int> degree_order(const Graph& g);

}  // namespace mis
