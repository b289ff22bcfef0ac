#pragma once

#include <string>
#include <vector>

#include "mis/age_table.hpp"
#include "mis/graph.hpp"
#include "mis/rng.hpp"

namespace mis {

enum class HeuristicVariant { original, v1_weighted, v2_entropy };

std::string variant_name(HeuristicVariant v);
HeuristicVariant variant_from_name(const std::string& name);

// Which candidate the deterministic branch takes from the probability
// vector. `max` is the default; `min` preserves an alternative reading for
// experiments.
enum class DeterministicPick { max, min };

struct ConstructParams {
    double d_rate = 0.8;          // probability of the deterministic pick
    int candidate_list_size = 10; // CL size for the original heuristic
    DeterministicPick deterministic_pick = DeterministicPick::max;
};

struct ProbEntry {
    int vertex;
    double prob;
};

struct ProbVector {
    std::vector<ProbEntry> entries;
};

// Snapshot of one construction step: the vertices that can still be chosen,
// plus everything the selection rules need.
struct ConstructionState {
    const Graph* graph = nullptr;
    const AgeTable* ages = nullptr;
    std::vector<int> feasible;  // ascending vertex ids
    double d_rate = 0.8;
    int candidate_list_size = 10;
};

// Selection weight w = 1/(2+age) + 1/(1+degree). Strictly decreasing in
// both arguments; age -1 (outside the subproblem) is the smallest legal
// age. Throws std::domain_error for age < -1.
double weight(int age, int degree);

// Weighted probabilities over the current feasible set, entries summing
// to 1. Throws std::invalid_argument on an empty feasible set.
ProbVector selection_probs_v1(const ConstructionState& state);

// Flattens p toward uniform: output_j proportional to p_j + H with
// H = -sum p log p (natural log, 0 log 0 = 0). Uniform maps to uniform.
ProbVector entropy_adjust(const ProbVector& p);

double shannon_entropy(const ProbVector& p);

// One uniform draw; cumulative scan with the final entry absorbing any
// rounding residue.
int roulette_select(const ProbVector& p, Rng& rng);

// Highest-probability entry (or lowest, per pick), ties by lower vertex id.
int deterministic_select(const ProbVector& p, DeterministicPick pick);

// The expert-designed probabilistic greedy: lowest-degree vertex with
// probability d_rate, else uniform among the first min(k, |feasible|)
// vertices in degree order. Returns a maximal independent set.
//
// work_ops, when given, accumulates the deterministic cost model used by
// the engine clock.
Solution construct_original(const Graph& g, const ConstructParams& params,
                            Rng& rng, double* work_ops = nullptr);

// The age-aware heuristics: selection via the weighted probabilities
// (v1_weighted), optionally entropy-adjusted (v2_entropy). Deterministic
// branch with probability d_rate, roulette wheel otherwise. Returns a
// maximal independent set. Does not modify the age table.
Solution construct_weighted(const Graph& g, const AgeTable& ages,
                            const ConstructParams& params, Rng& rng,
                            HeuristicVariant variant,
                            double* work_ops = nullptr);

}  // namespace mis
