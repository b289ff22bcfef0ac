#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mis/age_table.hpp"
#include "mis/construct.hpp"
#include "mis/graph.hpp"

namespace mis {

struct CmsaParams {
    int n_a = 5;                   // constructions per iteration
    int age_max = 3;               // removal threshold (strict: age > age_max)
    double t_max_s = 10.0;         // total budget
    double t_limit_s = -1.0;       // per-iteration solver budget; <= 0 means t_max/10
    double d_rate = 0.8;
    int candidate_list_size = 10;
    HeuristicVariant variant = HeuristicVariant::v1_weighted;
    std::uint64_t seed = 1;
    DeterministicPick deterministic_pick = DeterministicPick::max;

    double effective_t_limit() const {
        return t_limit_s > 0.0 ? t_limit_s : t_max_s / 10.0;
    }

    ConstructParams construct_params() const {
        return {d_rate, candidate_list_size, deterministic_pick};
    }

    // Throws std::invalid_argument on out-of-range values.
    void validate() const;
};

struct ConvergenceEvent {
    double elapsed_s;
    int score;
};

struct RunResult {
    Solution best;
    double best_time_s = 0.0;
    int iterations = 0;
    std::vector<ConvergenceEvent> convergence;  // strictly improving
    CmsaParams params;
    std::string instance_id;
};

// Merge phase: vertices appearing in any constructed solution enter the
// subproblem with age 0; existing non-negative ages are untouched.
void merge_constructed(AgeTable& ages, const std::vector<Solution>& constructed);

// Adapt phase: subproblem vertices in the solver's solution reset to age 0;
// the rest age by one and drop out (-1) past age_max. Throws
// std::invalid_argument if the solution contains a vertex outside the
// subproblem.
void adapt_ages(AgeTable& ages, const Solution& solver_solution, int age_max);

// Invoked after each iteration's Adapt with the iteration index, the age
// table, and the best solution so far. Purely observational.
using RunObserver =
    std::function<void(int iteration, const AgeTable& ages, const Solution& best)>;

// The CMSA loop: Construct, Merge, Solve, Adapt until t_max on the
// deterministic run clock (construction i of iteration j draws from a
// sub-stream of (seed, j, i), so the whole run is a pure function of the
// graph and params). A wall-clock backstop guarantees return within
// t_max + t_limit plus a small constant even if the cost calibration is
// off for the host machine.
RunResult run(const Graph& g, const CmsaParams& params,
              const std::string& instance_id = "",
              const RunObserver& observer = {});

// Canonical JSON serialization; byte-identical for identical runs.
std::string run_result_to_json(const RunResult& r);
RunResult run_result_from_json(const std::string& text);

}  // namespace mis
