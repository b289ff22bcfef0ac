#pragma once

#include <string>
#include <vector>

namespace mis {

// Rank-based comparison of algorithms over a complete block design
// (Friedman test with Nemenyi post hoc, the standard procedure behind
// critical-difference diagrams).

struct CdReport {
    std::vector<std::string> algorithms;
    std::vector<double> mean_ranks;  // aligned with algorithms; rank 1 = best
    int n_blocks = 0;
    double alpha = 0.05;
    double friedman_statistic = 0.0;
    double p_value = 1.0;
    double critical_difference = 0.0;
    // Maximal sets of algorithms whose pairwise mean-rank differences are
    // below the critical difference.
    std::vector<std::vector<std::string>> equivalence_groups;
};

// Fractional ranking of one block, best (highest) score = rank 1; tied
// scores share the mean of their positions.
std::vector<double> fractional_ranks_desc(const std::vector<double>& scores);

// Per-algorithm mean rank over blocks. scores[block][algorithm].
std::vector<double> average_ranks(const std::vector<std::vector<double>>& scores);

// Friedman chi-square with Nemenyi critical difference. Supported alpha:
// 0.05 and 0.10. Requires k >= 2 algorithms and N >= 2 complete blocks.
CdReport friedman_nemenyi(const std::vector<std::string>& algorithms,
                          const std::vector<std::vector<double>>& scores,
                          double alpha);

// Studentized-range constant q_alpha for the Nemenyi test, k = 2..10.
double nemenyi_q(int k, double alpha);

// Upper tail P(X >= x) of the chi-square distribution with df degrees of
// freedom, via the regularized incomplete gamma function.
double chi_squared_sf(double x, int df);

std::string cd_report_to_json(const CdReport& report);

}  // namespace mis
