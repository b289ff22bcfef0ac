#include "mis/cmsa.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"
#include "mis/exact.hpp"
#include "mis/rng.hpp"
#include "mis/work_clock.hpp"

namespace mis {

void CmsaParams::validate() const {
    if (n_a < 1) throw std::invalid_argument("params: n_a must be >= 1");
    if (age_max < 0) throw std::invalid_argument("params: age_max must be >= 0");
    if (d_rate < 0.0 || d_rate > 1.0) {
        throw std::invalid_argument("params: d_rate must be in [0, 1]");
    }
    if (candidate_list_size < 1) {
        throw std::invalid_argument("params: candidate_list_size must be >= 1");
    }
    if (t_max_s <= 0.0) throw std::invalid_argument("params: t_max must be > 0");
    if (effective_t_limit() > t_max_s) {
        throw std::invalid_argument("params: t_limit must be <= t_max");
    }
}

void merge_constructed(AgeTable& ages,
                       const std::vector<Solution>& constructed) {
    for (const Solution& s : constructed) {
        for (int v : s.vertices) {
            if (ages[v] == -1) ages[v] = 0;
        }
    }
}

void adapt_ages(AgeTable& ages, const Solution& solver_solution, int age_max) {
    std::vector<char> in_sol(ages.size(), 0);
    for (int v : solver_solution.vertices) {
        if (ages[v] < 0) {
            throw std::invalid_argument(
                "adapt: solver solution contains vertex " + std::to_string(v) +
                " outside the subproblem");
        }
        in_sol[v] = 1;
    }
    for (int v = 0; v < ages.size(); ++v) {
        if (ages[v] < 0) continue;
        if (in_sol[v]) {
            ages[v] = 0;
        } else if (++ages[v] > age_max) {
            ages[v] = -1;
        }
    }
}

RunResult run(const Graph& g, const CmsaParams& params,
              const std::string& instance_id, const RunObserver& observer) {
    params.validate();

    RunResult rr;
    rr.params = params;
    rr.params.t_limit_s = params.effective_t_limit();
    rr.instance_id = instance_id;

    const int n = g.num_vertices();
    if (n == 0) return rr;

    const double t_max = params.t_max_s;
    const double t_limit = params.effective_t_limit();
    const ConstructParams cp = params.construct_params();

    AgeTable ages(n);
    WorkClock clock;
    int iter = 0;

    while (clock.elapsed_s() < t_max && clock.wall_elapsed_s() < t_max) {
        std::vector<Solution> constructed;
        constructed.reserve(params.n_a);
        for (int i = 0; i < params.n_a; ++i) {
            Rng rng(derive_stream(params.seed, iter, i));
            double units = 0.0;
            Solution s =
                params.variant == HeuristicVariant::original
                    ? construct_original(g, cp, rng, &units)
                    : construct_weighted(g, ages, cp, rng, params.variant,
                                         &units);
            clock.charge(units * kConstructionUnitOps);
            constructed.push_back(std::move(s));
        }

        merge_constructed(ages, constructed);

        const Subproblem sp = build_subproblem(g, ages);
        const double per_node =
            solver_node_ops(static_cast<int>(sp.vertices.size()));
        const double budget = std::max(
            0.0, std::min(t_limit, t_max - clock.elapsed_s()));
        SolveLimits limits;
        limits.max_nodes = std::max<std::uint64_t>(
            1, static_cast<std::uint64_t>(budget * WorkClock::kOpsPerSecond /
                                          per_node));
        limits.wall_seconds =
            std::max(0.01, t_max + t_limit - clock.wall_elapsed_s());
        const ExactResult res = solve_exact(sp, limits);
        clock.charge(static_cast<double>(res.nodes_explored) * per_node);

        adapt_ages(ages, res.solution, params.age_max);

        if (res.solution.score > rr.best.score) {
            rr.best = res.solution;
            rr.best_time_s = clock.elapsed_s();
            rr.convergence.push_back({rr.best_time_s, rr.best.score});
        }
        if (observer) observer(iter, ages, rr.best);
        ++iter;
    }

    rr.iterations = iter;
    return rr;
}

std::string run_result_to_json(const RunResult& r) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["instance_id"] = r.instance_id;
    j["variant"] = variant_name(r.params.variant);
    j["seed"] = r.params.seed;
    j["params"] = {
        {"n_a", r.params.n_a},
        {"age_max", r.params.age_max},
        {"t_max_s", r.params.t_max_s},
        {"t_limit_s", r.params.effective_t_limit()},
        {"d_rate", r.params.d_rate},
        {"candidate_list_size", r.params.candidate_list_size},
        {"deterministic_pick",
         r.params.deterministic_pick == DeterministicPick::max ? "max" : "min"},
    };
    j["best_score"] = r.best.score;
    j["best_time_s"] = r.best_time_s;
    j["iterations"] = r.iterations;
    j["best_vertices"] = r.best.vertices;
    auto conv = nlohmann::ordered_json::array();
    for (const auto& ev : r.convergence) {
        conv.push_back({ev.elapsed_s, ev.score});
    }
    j["convergence"] = std::move(conv);
    return j.dump();
}

RunResult run_result_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    RunResult r;
    r.instance_id = j.at("instance_id").get<std::string>();
    r.params.variant = variant_from_name(j.at("variant").get<std::string>());
    r.params.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("params")) {
        const auto& p = j.at("params");
        r.params.n_a = p.value("n_a", r.params.n_a);
        r.params.age_max = p.value("age_max", r.params.age_max);
        r.params.t_max_s = p.value("t_max_s", r.params.t_max_s);
        r.params.t_limit_s = p.value("t_limit_s", r.params.t_limit_s);
        r.params.d_rate = p.value("d_rate", r.params.d_rate);
        r.params.candidate_list_size =
            p.value("candidate_list_size", r.params.candidate_list_size);
        if (p.value("deterministic_pick", "max") == std::string("min")) {
            r.params.deterministic_pick = DeterministicPick::min;
        }
    }
    r.best.score = j.at("best_score").get<int>();
    if (j.contains("best_vertices")) {
        r.best.vertices = j.at("best_vertices").get<std::vector<int>>();
    }
    r.best_time_s = j.at("best_time_s").get<double>();
    r.iterations = j.value("iterations", 0);
    for (const auto& ev : j.at("convergence")) {
        r.convergence.push_back(
            {ev.at(0).get<double>(), ev.at(1).get<int>()});
    }
    return r;
}

}  // namespace mis
