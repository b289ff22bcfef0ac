#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "mis/age_table.hpp"
#include "mis/graph.hpp"

namespace mis {

// The reduced problem handed to the exact solver: the subgraph induced by
// the vertices currently in the subproblem (age >= 0).
struct Subproblem {
    const Graph* parent = nullptr;
    std::vector<int> vertices;  // sorted ascending
    std::vector<std::pair<int, int>> induced_edges;
};

Subproblem build_subproblem(const Graph& g, const AgeTable& ages);

struct ExactResult {
    Solution solution;           // vertex ids of the parent graph
    bool proven_optimal = false; // search tree exhausted within the limits
    double elapsed_s = 0.0;
    std::uint64_t nodes_explored = 0;
};

struct SolveLimits {
    double wall_seconds = std::numeric_limits<double>::infinity();
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
};

// Time-limited branch-and-bound over the standard pairwise ILP model of
// the subproblem. Branches on a maximum-degree undecided vertex
// (include/exclude, ties by lower id), prunes with a greedy clique-cover
// upper bound, and seeds the incumbent with a greedy maximal set, so the
// result is never worse than the greedy set and always feasible.
// Deterministic given the subproblem and max_nodes; the wall limit is
// checked every 1024 nodes. Hitting a limit is a normal outcome signaled
// via proven_optimal = false.
ExactResult solve_exact(const Subproblem& sp, const SolveLimits& limits);
ExactResult solve_exact(const Subproblem& sp, double time_limit_s);

// Consistent partial assignment over Subproblem.vertices.
struct PartialAssignment {
    std::vector<int> included;
    std::vector<int> excluded;
};

// Admissible bound for any completion of the assignment: included count
// plus the number of cliques in a greedy clique cover of the still
// selectable vertices (unassigned minus neighbors of included ones).
// Throws std::invalid_argument if two included vertices are adjacent.
int upper_bound(const Subproblem& sp, const PartialAssignment& assignment);

// The subproblem's ILP model in LP text format, for cross-checking
// against external solvers.
std::string write_lp(const Subproblem& sp);

}  // namespace mis
