#include "mis/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "mis/rng.hpp"

namespace mis {

std::string family_name(GraphFamily f) {
    switch (f) {
        case GraphFamily::barabasi_albert: return "barabasi_albert";
        case GraphFamily::watts_strogatz: return "watts_strogatz";
        case GraphFamily::erdos_renyi: return "erdos_renyi";
    }
    throw std::logic_error("unreachable");
}

GraphFamily family_from_name(const std::string& name) {
    if (name == "barabasi_albert" || name == "ba") {
        return GraphFamily::barabasi_albert;
    }
    if (name == "watts_strogatz" || name == "ws") {
        return GraphFamily::watts_strogatz;
    }
    if (name == "erdos_renyi" || name == "er") {
        return GraphFamily::erdos_renyi;
    }
    throw std::invalid_argument("unknown graph family: " + name);
}

Graph gen_erdos_renyi(int n, double p, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("erdos_renyi: n must be >= 2");
    if (p < 0.0 || p > 1.0) {
        throw std::invalid_argument("erdos_renyi: p must be in [0, 1]");
    }
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.uniform01() < p) edges.emplace_back(u, v);
        }
    }
    return Graph(n, std::move(edges));
}

Graph gen_barabasi_albert(int n, int m, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("barabasi_albert: n must be >= 2");
    if (m < 1 || m >= n) {
        throw std::invalid_argument("barabasi_albert: need 1 <= m < n");
    }
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m) * (n - m));
    std::vector<double> weight(n, 0.0);  // degree + 1, zeroed when picked
    std::vector<int> degree(n, 0);

    for (int v = m; v < n; ++v) {
        double total = 0.0;
        for (int u = 0; u < v; ++u) {
            weight[u] = degree[u] + 1.0;
            total += weight[u];
        }
        for (int pick = 0; pick < m; ++pick) {
            double r = rng.uniform01() * total;
            double cum = 0.0;
            int chosen = -1;
            for (int u = 0; u < v; ++u) {
                if (weight[u] <= 0.0) continue;
                cum += weight[u];
                chosen = u;
                if (r < cum) break;
            }
            edges.emplace_back(chosen, v);
            total -= weight[chosen];
            weight[chosen] = 0.0;  // without replacement
        }
        for (int pick = 0; pick < m; ++pick) {
            auto [u, w] = edges[edges.size() - 1 - pick];
            ++degree[u];
            ++degree[w];
        }
    }
    return Graph(n, std::move(edges));
}

Graph gen_watts_strogatz(int n, int k, double p, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("watts_strogatz: n must be >= 2");
    if (k % 2 != 0 || k < 2 || k >= n) {
        throw std::invalid_argument("watts_strogatz: need even k, 2 <= k < n");
    }
    if (p < 0.0 || p > 1.0) {
        throw std::invalid_argument("watts_strogatz: p must be in [0, 1]");
    }
    Rng rng(seed);
    std::vector<std::set<int>> adj(n);
    auto add = [&adj](int u, int v) {
        adj[u].insert(v);
        adj[v].insert(u);
    };
    for (int off = 1; off <= k / 2; ++off) {
        for (int v = 0; v < n; ++v) add(v, (v + off) % n);
    }
    // Rewire in the same deterministic order the lattice was built in.
    for (int off = 1; off <= k / 2; ++off) {
        for (int v = 0; v < n; ++v) {
            int w = (v + off) % n;
            if (rng.uniform01() >= p) continue;
            if (static_cast<int>(adj[v].size()) >= n - 1) continue;  // no valid target
            int t;
            do {
                t = rng.uniform_int(n);
            } while (t == v || adj[v].count(t));
            adj[v].erase(w);
            adj[w].erase(v);
            add(v, t);
        }
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n) * k / 2);
    for (int v = 0; v < n; ++v) {
        for (int u : adj[v]) {
            if (v < u) edges.emplace_back(v, u);
        }
    }
    return Graph(n, std::move(edges));
}

Graph generate(const GraphFamilySpec& spec) {
    switch (spec.family) {
        case GraphFamily::erdos_renyi:
            return gen_erdos_renyi(spec.n, spec.p, spec.seed);
        case GraphFamily::barabasi_albert:
            return gen_barabasi_albert(spec.n, spec.m, spec.seed);
        case GraphFamily::watts_strogatz:
            return gen_watts_strogatz(spec.n, spec.k, spec.p, spec.seed);
    }
    throw std::logic_error("unreachable");
}

}  // namespace mis
