#pragma once

#include <cstdint>
#include <string>

#include "mis/graph.hpp"

namespace mis {

enum class GraphFamily { barabasi_albert, watts_strogatz, erdos_renyi };

std::string family_name(GraphFamily f);
GraphFamily family_from_name(const std::string& name);

// One benchmark graph description. Which parameters apply depends on the
// family: BA uses m (attachment count), WS uses k (even ring degree) and p
// (rewire probability), ER uses p (edge probability).
struct GraphFamilySpec {
    GraphFamily family = GraphFamily::erdos_renyi;
    int n = 0;
    int m = 0;
    int k = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
};

// All generators are pure functions of their arguments: same spec and seed
// give the identical Graph, bit for bit.

// Each of the n(n-1)/2 pairs included independently with probability p.
Graph gen_erdos_renyi(int n, double p, std::uint64_t seed);

// Preferential attachment from m isolated seed vertices; every new vertex
// attaches to m distinct existing vertices with probability proportional
// to degree+1. Exactly m*(n-m) edges.
Graph gen_barabasi_albert(int n, int m, std::uint64_t seed);

// Ring lattice with k/2 neighbors per side, each edge rewired with
// probability p to a uniform non-duplicate, non-self target (skipped when
// none exists). Exactly n*k/2 edges.
Graph gen_watts_strogatz(int n, int k, double p, std::uint64_t seed);

Graph generate(const GraphFamilySpec& spec);

}  // namespace mis
