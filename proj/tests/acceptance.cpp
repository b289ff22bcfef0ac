// Acceptance suite: runs every release criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exits non-zero if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "mis/bench.hpp"
#include "mis/cmsa.hpp"
#include "mis/construct.hpp"
#include "mis/convergence.hpp"
#include "mis/dimacs.hpp"
#include "mis/exact.hpp"
#include "mis/generators.hpp"
#include "mis/stats.hpp"
#include "oracles.hpp"

using namespace mis;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool pass,
            const std::string& detail) {
    std::printf("[%d] %-38s %s  (%s)\n", index, name.c_str(),
                pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

// 1. solve_exact equals exhaustive enumeration on 200 random instances.
void criterion_exact_oracle() {
    const auto t0 = std::chrono::steady_clock::now();
    Rng seeder(4242);
    const double densities[] = {0.1, 0.3, 0.5};
    int ok = 0;
    const int total = 200;
    for (int i = 0; i < total; ++i) {
        const int n = 5 + seeder.uniform_int(16);  // 5..20
        const double p = densities[seeder.uniform_int(3)];
        const Graph g = gen_erdos_renyi(n, p, seeder.next_u64());
        AgeTable ages(n);
        for (int v = 0; v < n; ++v) ages[v] = 0;
        const auto res = solve_exact(build_subproblem(g, ages), 10.0);
        if (res.proven_optimal &&
            res.solution.score == oracle::brute_force_mis(g)) {
            ++ok;
        }
    }
    const double elapsed = seconds_since(t0);
    char detail[128];
    std::snprintf(detail, sizeof detail, "%d/%d optimal, %.1fs", ok, total,
                  elapsed);
    report(1, "exact-solver oracle equivalence", ok == total && elapsed < 120.0,
           detail);
}

// 2. 1000 constructions across all variants are feasible and maximal.
void criterion_feasibility() {
    Rng seeder(31337);
    int ok = 0;
    const int total = 1000;
    const HeuristicVariant variants[] = {HeuristicVariant::original,
                                         HeuristicVariant::v1_weighted,
                                         HeuristicVariant::v2_entropy};
    for (int i = 0; i < total; ++i) {
        const int n = 2 + seeder.uniform_int(199);  // up to 200
        const double p = seeder.uniform01() * 0.25;
        const Graph g = gen_erdos_renyi(n, p, seeder.next_u64());
        AgeTable ages(n);
        for (int v = 0; v < n; ++v) ages[v] = seeder.uniform_int(6) - 1;
        ConstructParams cp;
        cp.d_rate = seeder.uniform01();
        cp.candidate_list_size = 1 + seeder.uniform_int(15);
        Rng rng(seeder.next_u64());
        const HeuristicVariant variant = variants[i % 3];
        const Solution s =
            variant == HeuristicVariant::original
                ? construct_original(g, cp, rng)
                : construct_weighted(g, ages, cp, rng, variant);
        const auto chk = check_solution(g, s);
        if (chk.feasible && chk.maximal) ++ok;
    }
    char detail[64];
    std::snprintf(detail, sizeof detail, "%d/%d feasible+maximal", ok, total);
    report(2, "construction feasibility/maximality", ok == total, detail);
}

// 3. Weight formula, probability normalization, entropy properties.
void criterion_formulas() {
    struct Case {
        int age;
        int degree;
        double expected;
    };
    // hand-evaluated: 1/(2+age) + 1/(1+degree)
    const Case table[] = {
        {-1, 0, 2.0},
        {-1, 1, 1.5},
        {-1, 3, 1.25},
        {-1, 10, 1.0909090909090908},
        {0, 0, 1.5},
        {0, 1, 1.0},
        {0, 2, 0.83333333333333337},
        {0, 5, 0.66666666666666663},
        {1, 0, 1.3333333333333333},
        {1, 4, 0.53333333333333333},
        {2, 2, 0.58333333333333337},
        {2, 7, 0.375},
        {3, 3, 0.45000000000000001},
        {3, 9, 0.29999999999999999},
        {5, 9, 0.24285714285714285},
        {4, 0, 1.1666666666666667},
        {7, 12, 0.18803418803418803},
        {10, 1, 0.58333333333333337},
        {25, 50, 0.056644880174291937},
        {100, 0, 1.0098039215686274},
    };
    bool ok = true;
    std::string detail = "20-case table";
    for (const Case& c : table) {
        if (std::abs(weight(c.age, c.degree) - c.expected) > 1e-12) {
            ok = false;
            detail = "weight mismatch at age=" + std::to_string(c.age);
        }
    }

    Rng rng(2718);
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        const int n = 1 + rng.uniform_int(12);
        ProbVector p;
        double total = 0.0;
        for (int i = 0; i < n; ++i) {
            const double w = rng.uniform01() + 1e-9;
            p.entries.push_back({i, w});
            total += w;
        }
        for (auto& e : p.entries) e.prob /= total;

        double sum = 0.0;
        for (const auto& e : p.entries) sum += e.prob;
        if (std::abs(sum - 1.0) > 1e-9) {
            ok = false;
            detail = "probability sum off";
            break;
        }
        const double h = shannon_entropy(p);
        if (h < 0.0) {
            ok = false;
            detail = "negative entropy";
            break;
        }
        const auto q = entropy_adjust(p);
        double qsum = 0.0, max_in = 0.0, max_out = 0.0;
        for (std::size_t i = 0; i < p.entries.size(); ++i) {
            qsum += q.entries[i].prob;
            max_in = std::max(max_in, p.entries[i].prob);
            max_out = std::max(max_out, q.entries[i].prob);
        }
        if (std::abs(qsum - 1.0) > 1e-9) {
            ok = false;
            detail = "adjusted sum off";
            break;
        }
        if (n >= 2 && h > 0.0 && max_out > max_in + 1e-15) {
            ok = false;
            detail = "contraction violated";
            break;
        }
    }

    // uniform maps to uniform
    if (ok) {
        ProbVector uni{{{0, 0.25}, {1, 0.25}, {2, 0.25}, {3, 0.25}}};
        for (const auto& e : entropy_adjust(uni).entries) {
            if (std::abs(e.prob - 0.25) > 1e-12) {
                ok = false;
                detail = "uniform not preserved";
            }
        }
    }
    report(3, "formula conformance", ok, detail);
}

// 4. Monotone best, valid ages after every Adapt, byte-identical reruns.
void criterion_engine_invariants() {
    Rng seeder(1001);
    bool ok = true;
    std::string detail = "50 runs x 2";
    const HeuristicVariant variants[] = {HeuristicVariant::original,
                                         HeuristicVariant::v1_weighted,
                                         HeuristicVariant::v2_entropy};
    for (int i = 0; i < 50 && ok; ++i) {
        const Graph g = gen_erdos_renyi(40 + seeder.uniform_int(41),
                                        0.05 + 0.1 * seeder.uniform01(),
                                        seeder.next_u64());
        CmsaParams params;
        params.t_max_s = 2.0;
        params.seed = seeder.next_u64();
        params.variant = variants[i % 3];

        bool ages_valid = true;
        int last_best = 0;
        bool monotone = true;
        auto observer = [&](int, const AgeTable& ages, const Solution& best) {
            if (!ages.valid(params.age_max)) ages_valid = false;
            if (best.score < last_best) monotone = false;
            last_best = best.score;
        };
        const RunResult a = run(g, params, "inv", observer);
        const RunResult b = run(g, params, "inv");
        if (!ages_valid) {
            ok = false;
            detail = "age table invariant violated";
        } else if (!monotone) {
            ok = false;
            detail = "best-so-far not monotone";
        } else if (run_result_to_json(a) != run_result_to_json(b)) {
            ok = false;
            detail = "rerun not byte-identical on run " + std::to_string(i);
        }
    }
    report(4, "engine invariants + determinism", ok, detail);
}

// 5. Every variant reaches the exact optimum on ER(30, 0.2) in 5s.
void criterion_small_instance_optimality() {
    const auto t0 = std::chrono::steady_clock::now();
    Rng seeder(9090);
    bool ok = true;
    std::string detail;
    const HeuristicVariant variants[] = {HeuristicVariant::original,
                                         HeuristicVariant::v1_weighted,
                                         HeuristicVariant::v2_entropy};
    for (int i = 0; i < 20 && ok; ++i) {
        const Graph g = gen_erdos_renyi(30, 0.2, seeder.next_u64());
        const int optimum = oracle::brute_force_mis(g);
        for (HeuristicVariant variant : variants) {
            CmsaParams params;
            params.t_max_s = 5.0;
            params.seed = seeder.next_u64();
            params.variant = variant;
            const RunResult rr = run(g, params);
            if (rr.best.score != optimum) {
                ok = false;
                detail = variant_name(variant) + " got " +
                         std::to_string(rr.best.score) + " vs optimum " +
                         std::to_string(optimum) + " on instance " +
                         std::to_string(i);
                break;
            }
        }
    }
    const double elapsed = seconds_since(t0);
    if (elapsed >= 180.0) {
        ok = false;
        detail = "over time budget";
    }
    if (ok) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "60/60 optimal, %.1fs", elapsed);
        detail = buf;
    }
    report(5, "small-instance optimality", ok, detail);
}

// 6. Directional replication: v1 at least matches original on ER(500, 0.05).
void criterion_directional() {
    Rng seeder(60606);
    std::vector<BenchRecord> records;
    double mean_orig = 0.0, mean_v1 = 0.0;
    for (int i = 0; i < 10; ++i) {
        const Graph g = gen_erdos_renyi(500, 0.05, seeder.next_u64());
        const std::string id = "er500_" + std::to_string(i);
        for (HeuristicVariant variant :
             {HeuristicVariant::original, HeuristicVariant::v1_weighted}) {
            CmsaParams params;
            params.t_max_s = 10.0;
            params.seed = 7;
            params.variant = variant;
            const RunResult rr = run(g, params, id);
            BenchRecord rec;
            rec.instance_id = id;
            rec.group_id = "er500";
            rec.variant = variant_name(variant);
            rec.seed = params.seed;
            rec.best_score = rr.best.score;
            rec.best_time_s = rr.best_time_s;
            rec.t_max_s = params.t_max_s;
            records.push_back(rec);
            if (variant == HeuristicVariant::original) {
                mean_orig += rr.best.score;
            } else {
                mean_v1 += rr.best.score;
            }
        }
    }
    mean_orig /= 10.0;
    mean_v1 /= 10.0;
    const CdReport rep = friedman_from_records(records, 0.05);
    double rank_orig = 0.0, rank_v1 = 0.0;
    for (std::size_t i = 0; i < rep.algorithms.size(); ++i) {
        if (rep.algorithms[i] == "original") rank_orig = rep.mean_ranks[i];
        if (rep.algorithms[i] == "v1") rank_v1 = rep.mean_ranks[i];
    }
    const bool ok = mean_v1 >= mean_orig && rank_v1 <= rank_orig;
    char detail[128];
    std::snprintf(detail, sizeof detail,
                  "mean v1 %.1f vs original %.1f; rank v1 %.2f vs %.2f",
                  mean_v1, mean_orig, rank_v1, rank_orig);
    report(6, "directional replication (v1 >= original)", ok, detail);
}

// 7. Statistics oracle on fixed synthetic tables.
void criterion_stats_oracle() {
    bool ok = true;
    std::string detail = "2 tables + all-ties";
    auto expect = [&ok, &detail](double got, double want, const char* what) {
        if (std::abs(got - want) > 1e-9) {
            ok = false;
            detail = std::string(what) + " mismatch";
        }
    };

    {
        const std::vector<std::string> algos = {"better", "worse"};
        const std::vector<std::vector<double>> scores(20, {2.0, 1.0});
        const CdReport rep = friedman_nemenyi(algos, scores, 0.05);
        expect(rep.mean_ranks[0], 1.0, "k2 rank");
        expect(rep.mean_ranks[1], 2.0, "k2 rank");
        expect(rep.friedman_statistic, 20.0, "k2 chi2");
        expect(rep.critical_difference, 0.438261270288291, "k2 CD");
        if (rep.equivalence_groups.size() != 2) {
            ok = false;
            detail = "k2 groups";
        }
    }
    {
        const std::vector<std::string> algos = {"A", "B", "C"};
        const std::vector<std::vector<double>> scores = {
            {10, 8, 8}, {5, 7, 6}, {4, 4, 4}, {9, 9, 7}, {3, 5, 4},
            {8, 6, 7},  {2, 2, 3}, {7, 9, 8}, {6, 6, 5}, {1, 3, 2}};
        const CdReport rep = friedman_nemenyi(algos, scores, 0.05);
        expect(rep.mean_ranks[0], 2.15, "3x10 rank A");
        expect(rep.mean_ranks[1], 1.70, "3x10 rank B");
        expect(rep.mean_ranks[2], 2.15, "3x10 rank C");
        expect(rep.friedman_statistic, 1.35, "3x10 chi2");
        expect(rep.critical_difference, 1.04813476600965, "3x10 CD");
    }
    {
        const std::vector<std::string> algos = {"a", "b", "c", "d"};
        const std::vector<std::vector<double>> ties(5, {3.0, 3.0, 3.0, 3.0});
        const CdReport rep = friedman_nemenyi(algos, ties, 0.05);
        expect(rep.friedman_statistic, 0.0, "ties chi2");
        if (rep.equivalence_groups.size() != 1 ||
            rep.equivalence_groups[0].size() != 4) {
            ok = false;
            detail = "ties groups";
        }
    }
    report(7, "statistics oracle", ok, detail);
}

// 8. Generator contracts across 50 specs, byte-identical regeneration.
void criterion_generator_contracts() {
    Rng seeder(808);
    bool ok = true;
    std::string detail = "50 specs";
    for (int i = 0; i < 50 && ok; ++i) {
        const std::uint64_t seed = seeder.next_u64();

        const int n_ws = 10 + 2 * seeder.uniform_int(40);
        int k = 2 + 2 * seeder.uniform_int(5);
        if (k >= n_ws) k = 2;
        const double p = seeder.uniform01();
        const Graph ws = gen_watts_strogatz(n_ws, k, p, seed);
        if (ws.num_edges() != n_ws * k / 2) {
            ok = false;
            detail = "ws edge count";
            break;
        }
        if (!(write_instance(ws) ==
              write_instance(gen_watts_strogatz(n_ws, k, p, seed)))) {
            ok = false;
            detail = "ws regeneration differs";
            break;
        }

        const int n_ba = 10 + seeder.uniform_int(100);
        const int m = 1 + seeder.uniform_int(std::min(9, n_ba - 1));
        const Graph ba = gen_barabasi_albert(n_ba, m, seed);
        if (ba.num_edges() != m * (n_ba - m)) {
            ok = false;
            detail = "ba edge count";
            break;
        }
        if (!(write_instance(ba) ==
              write_instance(gen_barabasi_albert(n_ba, m, seed)))) {
            ok = false;
            detail = "ba regeneration differs";
            break;
        }

        const int n_er = 5 + seeder.uniform_int(60);
        if (gen_erdos_renyi(n_er, 0.0, seed).num_edges() != 0) {
            ok = false;
            detail = "er p=0";
            break;
        }
        if (gen_erdos_renyi(n_er, 1.0, seed).num_edges() !=
            n_er * (n_er - 1) / 2) {
            ok = false;
            detail = "er p=1";
            break;
        }
        const double pe = seeder.uniform01() * 0.5;
        if (!(write_instance(gen_erdos_renyi(n_er, pe, seed)) ==
              write_instance(gen_erdos_renyi(n_er, pe, seed)))) {
            ok = false;
            detail = "er regeneration differs";
            break;
        }
    }
    report(8, "generator contracts", ok, detail);
}

}  // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    criterion_exact_oracle();
    criterion_feasibility();
    criterion_formulas();
    criterion_engine_invariants();
    criterion_small_instance_optimality();
    criterion_directional();
    criterion_stats_oracle();
    criterion_generator_contracts();
    std::printf("%s (%d/8 criteria, %.1fs total)\n",
                failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
                8 - failures, seconds_since(t0));
    return failures == 0 ? 0 : 1;
}
