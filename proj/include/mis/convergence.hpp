#pragma once

#include <string>
#include <vector>

#include "mis/cmsa.hpp"

namespace mis {

// Best-so-far score at time t of a run's step function (0 before the
// first improvement).
double step_value_at(const std::vector<ConvergenceEvent>& events, double t);

// Mean best-so-far over several runs, sampled at the grid points.
std::vector<double> mean_trajectory(const std::vector<RunResult>& runs,
                                    const std::vector<double>& grid);

// Writes plot data for a set of runs on one instance: a step-series CSV
// (time_s,score) per run and a mean-trajectory CSV (time_s,mean_score)
// per variant on a uniform grid over [0, max t_max]. Returns the paths
// written. Throws std::invalid_argument on empty input.
std::vector<std::string> convergence_export(const std::vector<RunResult>& runs,
                                            const std::string& out_dir,
                                            int grid_points = 200);

}  // namespace mis
