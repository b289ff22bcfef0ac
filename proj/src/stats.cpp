#include "mis/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace mis {

std::vector<double> fractional_ranks_desc(const std::vector<double>& scores) {
    const std::size_t k = scores.size();
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&scores](auto a, auto b) {
        return scores[a] > scores[b];
    });

    std::vector<double> ranks(k, 0.0);
    std::size_t i = 0;
    while (i < k) {
        std::size_t j = i;
        while (j + 1 < k && scores[order[j + 1]] == scores[order[i]]) ++j;
        // positions i..j (0-based) tie: mean of ranks i+1..j+1
        const double mean_rank = static_cast<double>(i + j + 2) / 2.0;
        for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = mean_rank;
        i = j + 1;
    }
    return ranks;
}

std::vector<double> average_ranks(
    const std::vector<std::vector<double>>& scores) {
    if (scores.empty()) throw std::invalid_argument("average_ranks: no blocks");
    const std::size_t k = scores[0].size();
    std::vector<double> mean(k, 0.0);
    for (const auto& block : scores) {
        if (block.size() != k) {
            throw std::invalid_argument("average_ranks: ragged block design");
        }
        const auto ranks = fractional_ranks_desc(block);
        for (std::size_t j = 0; j < k; ++j) mean[j] += ranks[j];
    }
    for (double& m : mean) m /= static_cast<double>(scores.size());
    return mean;
}

namespace {

// Regularized incomplete gamma P(a, x): series for x < a+1, continued
// fraction (modified Lentz) otherwise.
double gamma_p(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw std::domain_error("gamma_p: bad arguments");
    if (x == 0.0) return 0.0;
    const double gln = std::lgamma(a);
    if (x < a + 1.0) {
        double ap = a;
        double sum = 1.0 / a;
        double del = sum;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::abs(del) < std::abs(sum) * 1e-16) break;
        }
        return sum * std::exp(-x + a * std::log(x) - gln);
    }
    // Q(a, x) via continued fraction, then P = 1 - Q.
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -static_cast<double>(i) * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    const double q = std::exp(-x + a * std::log(x) - gln) * h;
    return 1.0 - q;
}

}  // namespace

double chi_squared_sf(double x, int df) {
    if (df < 1) throw std::invalid_argument("chi_squared_sf: df must be >= 1");
    if (x <= 0.0) return 1.0;
    return 1.0 - gamma_p(df / 2.0, x / 2.0);
}

double nemenyi_q(int k, double alpha) {
    // Studentized range quantile at infinite df divided by sqrt(2).
    static const double q05[] = {1.959963984540053, 2.343700586378409,
                                 2.569031772546482, 2.727774370870376,
                                 2.849705419610002, 2.948320017529674,
                                 3.030878449614413, 3.101730341303381,
                                 3.163683577053373};
    static const double q10[] = {1.644853626951472, 2.052292730496776,
                                 2.291341496888057, 2.459515764271418,
                                 2.588520601922348, 2.692732100967759,
                                 2.779883608152978, 2.854606431198025,
                                 2.919888840061538};
    if (k < 2 || k > 10) {
        throw std::invalid_argument("nemenyi_q: k must be in [2, 10]");
    }
    const bool a05 = std::abs(alpha - 0.05) < 1e-12;
    const bool a10 = std::abs(alpha - 0.10) < 1e-12;
    if (!a05 && !a10) {
        throw std::invalid_argument("nemenyi_q: unsupported alpha (use 0.05 or 0.10)");
    }
    return a05 ? q05[k - 2] : q10[k - 2];
}

CdReport friedman_nemenyi(const std::vector<std::string>& algorithms,
                          const std::vector<std::vector<double>>& scores,
                          double alpha) {
    const int k = static_cast<int>(algorithms.size());
    const int n = static_cast<int>(scores.size());
    if (k < 2) throw std::invalid_argument("friedman: need k >= 2 algorithms");
    if (n < 2) throw std::invalid_argument("friedman: need N >= 2 blocks");

    CdReport rep;
    rep.algorithms = algorithms;
    rep.mean_ranks = average_ranks(scores);
    rep.n_blocks = n;
    rep.alpha = alpha;

    double sum_r2 = 0.0;
    for (double r : rep.mean_ranks) sum_r2 += r * r;
    rep.friedman_statistic = 12.0 * n / (k * (k + 1.0)) *
                             (sum_r2 - k * (k + 1.0) * (k + 1.0) / 4.0);
    if (rep.friedman_statistic < 0.0) rep.friedman_statistic = 0.0;  // fp dust
    rep.p_value = chi_squared_sf(rep.friedman_statistic, k - 1);
    rep.critical_difference =
        nemenyi_q(k, alpha) * std::sqrt(k * (k + 1.0) / (6.0 * n));

    // Maximal runs of rank-sorted algorithms spanning less than the CD.
    std::vector<int> by_rank(k);
    std::iota(by_rank.begin(), by_rank.end(), 0);
    std::sort(by_rank.begin(), by_rank.end(), [&rep](int a, int b) {
        if (rep.mean_ranks[a] != rep.mean_ranks[b]) {
            return rep.mean_ranks[a] < rep.mean_ranks[b];
        }
        return rep.algorithms[a] < rep.algorithms[b];
    });
    int prev_end = -1;
    for (int i = 0; i < k; ++i) {
        int j = i;
        while (j + 1 < k && rep.mean_ranks[by_rank[j + 1]] -
                                    rep.mean_ranks[by_rank[i]] <
                                rep.critical_difference) {
            ++j;
        }
        if (j > prev_end) {
            std::vector<std::string> group;
            for (int t = i; t <= j; ++t) {
                group.push_back(algorithms[by_rank[t]]);
            }
            rep.equivalence_groups.push_back(std::move(group));
            prev_end = j;
        }
    }
    return rep;
}

std::string cd_report_to_json(const CdReport& report) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["alpha"] = report.alpha;
    j["n_blocks"] = report.n_blocks;
    j["algorithms"] = report.algorithms;
    auto ranks = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < report.algorithms.size(); ++i) {
        ranks[report.algorithms[i]] = report.mean_ranks[i];
    }
    j["mean_ranks"] = std::move(ranks);
    j["friedman_statistic"] = report.friedman_statistic;
    j["p_value"] = report.p_value;
    j["critical_difference"] = report.critical_difference;
    j["equivalence_groups"] = report.equivalence_groups;
    return j.dump();
}

}  // namespace mis
