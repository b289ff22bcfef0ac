#include "mis/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mis {

Graph::Graph(int n_vertices, std::vector<std::pair<int, int>> edge_list)
    : n_(n_vertices) {
    if (n_vertices < 0) {
        throw std::invalid_argument("graph: negative vertex count");
    }
    edges_.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) {
            throw std::invalid_argument("graph: edge endpoint out of range: (" +
                                        std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        }
        if (u == v) {
            throw std::invalid_argument("graph: self-loop at vertex " +
                                        std::to_string(u));
        }
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int w = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(nb.begin(), nb.end(), w);
}

Solution make_solution(std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()),
                   vertices.end());
    Solution s;
    s.score = static_cast<int>(vertices.size());
    s.vertices = std::move(vertices);
    return s;
}

SolutionCheck check_solution(const Graph& g, const Solution& s) {
    std::vector<char> in_set(g.num_vertices(), 0);
    for (int v : s.vertices) {
        if (v < 0 || v >= g.num_vertices()) {
            throw std::out_of_range("check_solution: vertex id " +
                                    std::to_string(v) + " out of range");
        }
        in_set[v] = 1;
    }

    SolutionCheck res;
    res.feasible = true;
    for (int v : s.vertices) {
        for (int u : g.neighbors(v)) {
            if (in_set[u]) {
                res.feasible = false;
                return res;
            }
        }
    }

    res.maximal = true;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (in_set[v]) continue;
        bool covered = false;
        for (int u : g.neighbors(v)) {
            if (in_set[u]) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            res.maximal = false;
            break;
        }
    }
    return res;
}

std::vector<int> degree_order(const Graph& g) {
    std::vector<int> order(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&g](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
        return a < b;
    });
    return order;
}

}  // namespace mis
