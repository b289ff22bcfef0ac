#include "mis/construct.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace mis {

std::string variant_name(HeuristicVariant v) {
    switch (v) {
        case HeuristicVariant::original: return "original";
        case HeuristicVariant::v1_weighted: return "v1";
        case HeuristicVariant::v2_entropy: return "v2";
    }
    throw std::logic_error("unreachable");
}

HeuristicVariant variant_from_name(const std::string& name) {
    if (name == "original") return HeuristicVariant::original;
    if (name == "v1" || name == "v1_weighted") return HeuristicVariant::v1_weighted;
    if (name == "v2" || name == "v2_entropy") return HeuristicVariant::v2_entropy;
    throw std::invalid_argument("unknown heuristic variant: " + name);
}

double weight(int age, int degree) {
    if (age < -1) {
        throw std::domain_error("weight: age must be >= -1, got " +
                                std::to_string(age));
    }
    if (degree < 0) {
        throw std::domain_error("weight: degree must be >= 0");
    }
    return 1.0 / (2.0 + age) + 1.0 / (1.0 + degree);
}

namespace {

ProbVector weighted_probs(const Graph& g, const AgeTable& ages,
                          const std::vector<int>& feasible) {
    if (feasible.empty()) {
        throw std::invalid_argument("selection probabilities over an empty feasible set");
    }
    ProbVector p;
    p.entries.reserve(feasible.size());
    double total = 0.0;
    for (int v : feasible) {
        double w = weight(ages[v], g.degree(v));
        p.entries.push_back({v, w});
        total += w;
    }
    for (auto& e : p.entries) e.prob /= total;
    return p;
}

}  // namespace

ProbVector selection_probs_v1(const ConstructionState& state) {
    return weighted_probs(*state.graph, *state.ages, state.feasible);
}

double shannon_entropy(const ProbVector& p) {
    double h = 0.0;
    for (const auto& e : p.entries) {
        if (e.prob > 0.0) h -= e.prob * std::log(e.prob);
    }
    return h;
}

ProbVector entropy_adjust(const ProbVector& p) {
    const double h = shannon_entropy(p);
    double sum = 0.0;
    for (const auto& e : p.entries) sum += e.prob;
    const double denom = sum + h * static_cast<double>(p.entries.size());
    ProbVector out;
    out.entries.reserve(p.entries.size());
    for (const auto& e : p.entries) {
        out.entries.push_back({e.vertex, (e.prob + h) / denom});
    }
    return out;
}

int roulette_select(const ProbVector& p, Rng& rng) {
    const double u = rng.uniform01();
    double cum = 0.0;
    const std::size_t last = p.entries.size() - 1;
    for (std::size_t i = 0; i < last; ++i) {
        cum += p.entries[i].prob;
        if (u < cum) return p.entries[i].vertex;
    }
    return p.entries[last].vertex;
}

int deterministic_select(const ProbVector& p, DeterministicPick pick) {
    const ProbEntry* best = &p.entries[0];
    for (const auto& e : p.entries) {
        const bool better = pick == DeterministicPick::max ? e.prob > best->prob
                                                           : e.prob < best->prob;
        if (better) best = &e;  // ties keep the earlier (lower) vertex id
    }
    return best->vertex;
}

Solution construct_original(const Graph& g, const ConstructParams& params,
                            Rng& rng, double* work_ops) {
    const int n = g.num_vertices();
    double ops = 2.0 * n;
    std::vector<int> picked;

    const std::vector<int> order = degree_order(g);
    std::vector<int> position_of(n);
    std::set<int> positions;
    for (int i = 0; i < n; ++i) {
        positions.insert(positions.end(), i);
        position_of[order[i]] = i;
    }

    while (!positions.empty()) {
        const double dec = rng.uniform01();
        int position;
        int scanned = 1;
        if (dec <= params.d_rate) {
            position = *positions.begin();
        } else {
            int max = params.candidate_list_size;
            if (max > static_cast<int>(positions.size())) {
                max = static_cast<int>(positions.size());
            }
            const int pos = rng.uniform_int(max);
            auto it = positions.begin();
            std::advance(it, pos);
            position = *it;
            scanned = max;
        }
        const int v = order[position];
        picked.push_back(v);
        positions.erase(position);
        for (int u : g.neighbors(v)) positions.erase(position_of[u]);
        ops += 8.0 + scanned + g.degree(v);
    }

    if (work_ops) *work_ops += ops;
    return make_solution(std::move(picked));
}

Solution construct_weighted(const Graph& g, const AgeTable& ages,
                            const ConstructParams& params, Rng& rng,
                            HeuristicVariant variant, double* work_ops) {
    const int n = g.num_vertices();
    double ops = 2.0 * n;
    std::vector<int> picked;

    std::vector<char> available(n, 1);
    std::vector<int> feasible(n);
    for (int v = 0; v < n; ++v) feasible[v] = v;

    const double step_factor =
        variant == HeuristicVariant::v2_entropy ? 3.0 : 2.0;

    while (!feasible.empty()) {
        ProbVector probs = weighted_probs(g, ages, feasible);
        if (variant == HeuristicVariant::v2_entropy) {
            probs = entropy_adjust(probs);
        }
        const double r = rng.uniform01();
        const int v = r <= params.d_rate
                          ? deterministic_select(probs, params.deterministic_pick)
                          : roulette_select(probs, rng);
        picked.push_back(v);
        available[v] = 0;
        for (int u : g.neighbors(v)) available[u] = 0;

        std::vector<int> next;
        next.reserve(feasible.size());
        for (int u : feasible) {
            if (available[u]) next.push_back(u);
        }
        ops += 8.0 + step_factor * static_cast<double>(feasible.size()) +
               g.degree(v);
        feasible = std::move(next);
    }

    if (work_ops) *work_ops += ops;
    return make_solution(std::move(picked));
}

}  // namespace mis
