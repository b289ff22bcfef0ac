#include "mis/exact.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <sstream>
#include <stdexcept>

namespace mis {

Subproblem build_subproblem(const Graph& g, const AgeTable& ages) {
    if (ages.size() != g.num_vertices()) {
        throw std::invalid_argument("build_subproblem: age table size " +
                                    std::to_string(ages.size()) +
                                    " does not match graph order " +
                                    std::to_string(g.num_vertices()));
    }
    Subproblem sp;
    sp.parent = &g;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (ages.in_subproblem(v)) sp.vertices.push_back(v);
    }
    std::vector<char> in_sp(g.num_vertices(), 0);
    for (int v : sp.vertices) in_sp[v] = 1;
    for (auto [u, v] : g.edges()) {
        if (in_sp[u] && in_sp[v]) sp.induced_edges.emplace_back(u, v);
    }
    return sp;
}

namespace {

using Clock = std::chrono::steady_clock;
using Bits = std::vector<std::uint64_t>;

inline void set_bit(Bits& b, int i) { b[i >> 6] |= 1ULL << (i & 63); }
inline void clear_bit(Bits& b, int i) { b[i >> 6] &= ~(1ULL << (i & 63)); }
inline bool test_bit(const Bits& b, int i) {
    return (b[i >> 6] >> (i & 63)) & 1ULL;
}

inline int popcount(const Bits& b) {
    int c = 0;
    for (std::uint64_t w : b) c += std::popcount(w);
    return c;
}

inline bool any(const Bits& b) {
    for (std::uint64_t w : b) {
        if (w) return true;
    }
    return false;
}

inline int first_bit(const Bits& b) {
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i]) return static_cast<int>(i * 64 + std::countr_zero(b[i]));
    }
    return -1;
}

// Local-index view of the induced subgraph, shared by the solver and the
// standalone bound.
struct LocalGraph {
    int n = 0;
    int words = 0;
    std::vector<Bits> adj;

    explicit LocalGraph(const Subproblem& sp) {
        n = static_cast<int>(sp.vertices.size());
        words = (n + 63) / 64;
        adj.assign(n, Bits(words, 0));
        for (auto [u, v] : sp.induced_edges) {
            int lu = local(sp, u);
            int lv = local(sp, v);
            set_bit(adj[lu], lv);
            set_bit(adj[lv], lu);
        }
    }

    static int local(const Subproblem& sp, int parent_id) {
        auto it = std::lower_bound(sp.vertices.begin(), sp.vertices.end(),
                                   parent_id);
        if (it == sp.vertices.end() || *it != parent_id) {
            throw std::invalid_argument("vertex not in subproblem: " +
                                        std::to_string(parent_id));
        }
        return static_cast<int>(it - sp.vertices.begin());
    }
};

// Greedy clique cover of the vertices in `candidates`; any independent set
// takes at most one vertex per clique, so the count is an upper bound.
int clique_cover_count(const LocalGraph& lg, const Bits& candidates,
                       Bits& scratch_uncov, Bits& scratch_common) {
    scratch_uncov = candidates;
    int cliques = 0;
    int v;
    while ((v = first_bit(scratch_uncov)) >= 0) {
        ++cliques;
        clear_bit(scratch_uncov, v);
        for (int w = 0; w < lg.words; ++w) {
            scratch_common[w] = lg.adj[v][w] & scratch_uncov[w];
        }
        int u;
        while ((u = first_bit(scratch_common)) >= 0) {
            clear_bit(scratch_uncov, u);
            for (int w = 0; w < lg.words; ++w) {
                scratch_common[w] &= lg.adj[u][w];
            }
        }
    }
    return cliques;
}

struct Searcher {
    const LocalGraph& lg;
    std::uint64_t max_nodes;
    Clock::time_point deadline;

    std::uint64_t nodes = 0;
    bool stopped = false;
    std::vector<int> current;
    std::vector<int> best;
    std::vector<Bits> pool;  // one undecided set per depth
    Bits uncov, common;      // clique-cover scratch

    Searcher(const LocalGraph& g, std::uint64_t max_nodes_,
             Clock::time_point deadline_)
        : lg(g), max_nodes(max_nodes_), deadline(deadline_),
          pool(g.n + 2, Bits(g.words, 0)), uncov(g.words, 0),
          common(g.words, 0) {}

    void search(int depth, int included) {
        Bits& und = pool[depth];
        while (true) {
            ++nodes;
            if (nodes >= max_nodes) {
                stopped = true;
                return;
            }
            if ((nodes & 1023) == 0 && Clock::now() >= deadline) {
                stopped = true;
                return;
            }

            if (!any(und)) {
                if (included > static_cast<int>(best.size())) best = current;
                return;
            }

            const int bound =
                included + clique_cover_count(lg, und, uncov, common);
            if (bound <= static_cast<int>(best.size())) return;

            // Branch vertex: maximum degree within the undecided set.
            int v = -1, vdeg = -1;
            for (int cand = first_bit(und); cand >= 0 && cand < lg.n; ++cand) {
                if (!test_bit(und, cand)) continue;
                int deg = 0;
                for (int w = 0; w < lg.words; ++w) {
                    deg += std::popcount(lg.adj[cand][w] & und[w]);
                }
                if (deg > vdeg) {
                    vdeg = deg;
                    v = cand;
                }
            }

            if (vdeg == 0) {
                // Only isolated vertices remain; take all of them.
                const int total = included + popcount(und);
                if (total > static_cast<int>(best.size())) {
                    best = current;
                    for (int u = first_bit(und); u >= 0 && u < lg.n; ++u) {
                        if (test_bit(und, u)) best.push_back(u);
                    }
                }
                return;
            }

            // Include v.
            Bits& child = pool[depth + 1];
            for (int w = 0; w < lg.words; ++w) {
                child[w] = und[w] & ~lg.adj[v][w];
            }
            clear_bit(child, v);
            current.push_back(v);
            search(depth + 1, included + 1);
            current.pop_back();
            if (stopped) return;

            // Exclude v and keep branching at this depth.
            clear_bit(und, v);
        }
    }
};

std::vector<int> greedy_incumbent(const LocalGraph& lg) {
    std::vector<int> order(lg.n);
    for (int i = 0; i < lg.n; ++i) order[i] = i;
    std::vector<int> deg(lg.n);
    for (int i = 0; i < lg.n; ++i) deg[i] = popcount(lg.adj[i]);
    std::sort(order.begin(), order.end(), [&deg](int a, int b) {
        if (deg[a] != deg[b]) return deg[a] < deg[b];
        return a < b;
    });
    Bits taken(lg.words, 0);
    std::vector<int> sol;
    for (int v : order) {
        bool ok = true;
        for (int w = 0; w < lg.words; ++w) {
            if (lg.adj[v][w] & taken[w]) {
                ok = false;
                break;
            }
        }
        if (ok) {
            sol.push_back(v);
            set_bit(taken, v);
        }
    }
    return sol;
}

}  // namespace

ExactResult solve_exact(const Subproblem& sp, const SolveLimits& limits) {
    const auto start = Clock::now();
    ExactResult res;

    const LocalGraph lg(sp);
    if (lg.n == 0) {
        res.proven_optimal = true;
        return res;
    }

    auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(
                                    std::min(limits.wall_seconds, 1e9)));

    Searcher searcher(lg, limits.max_nodes, deadline);
    searcher.best = greedy_incumbent(lg);
    for (int i = 0; i < lg.words; ++i) {
        searcher.pool[0][i] = ~0ULL;
    }
    if (lg.n & 63) {
        searcher.pool[0][lg.words - 1] = (1ULL << (lg.n & 63)) - 1;
    }
    searcher.search(0, 0);

    std::vector<int> parent_ids;
    parent_ids.reserve(searcher.best.size());
    for (int local : searcher.best) parent_ids.push_back(sp.vertices[local]);
    res.solution = make_solution(std::move(parent_ids));
    res.proven_optimal = !searcher.stopped;
    res.nodes_explored = searcher.nodes;
    res.elapsed_s =
        std::chrono::duration<double>(Clock::now() - start).count();
    return res;
}

ExactResult solve_exact(const Subproblem& sp, double time_limit_s) {
    SolveLimits limits;
    limits.wall_seconds = time_limit_s;
    return solve_exact(sp, limits);
}

int upper_bound(const Subproblem& sp, const PartialAssignment& assignment) {
    const LocalGraph lg(sp);
    Bits undecided(std::max(lg.words, 1), 0);
    for (int i = 0; i < lg.n; ++i) set_bit(undecided, i);

    Bits included(std::max(lg.words, 1), 0);
    for (int v : assignment.included) {
        const int lv = LocalGraph::local(sp, v);
        for (int w = 0; w < lg.words; ++w) {
            if (lg.adj[lv][w] & included[w]) {
                throw std::invalid_argument(
                    "upper_bound: included vertices are not independent");
            }
        }
        set_bit(included, lv);
    }
    for (int v : assignment.included) {
        const int lv = LocalGraph::local(sp, v);
        clear_bit(undecided, lv);
        for (int w = 0; w < lg.words; ++w) undecided[w] &= ~lg.adj[lv][w];
    }
    for (int v : assignment.excluded) {
        clear_bit(undecided, LocalGraph::local(sp, v));
    }

    Bits uncov(lg.words, 0), common(lg.words, 0);
    const int cover =
        lg.n == 0 ? 0 : clique_cover_count(lg, undecided, uncov, common);
    return static_cast<int>(assignment.included.size()) + cover;
}

std::string write_lp(const Subproblem& sp) {
    std::ostringstream out;
    out << "Maximize\n obj:";
    if (sp.vertices.empty()) {
        out << " 0";
    } else {
        bool first = true;
        for (int v : sp.vertices) {
            out << (first ? " " : " + ") << "x" << v;
            first = false;
        }
    }
    out << "\nSubject To\n";
    int c = 0;
    for (auto [u, v] : sp.induced_edges) {
        out << " c" << ++c << ": x" << u << " + x" << v << " <= 1\n";
    }
    out << "Binaries\n";
    for (int v : sp.vertices) out << " x" << v;
    out << "\nEnd\n";
    return out.str();
}

}  // namespace mis
