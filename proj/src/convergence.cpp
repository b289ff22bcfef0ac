#include "mis/convergence.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>

namespace fs = std::filesystem;

namespace mis {

double step_value_at(const std::vector<ConvergenceEvent>& events, double t) {
    double value = 0.0;
    for (const auto& ev : events) {
        if (ev.elapsed_s > t) break;
        value = ev.score;
    }
    return value;
}

std::vector<double> mean_trajectory(const std::vector<RunResult>& runs,
                                    const std::vector<double>& grid) {
    if (runs.empty()) throw std::invalid_argument("mean_trajectory: no runs");
    std::vector<double> mean(grid.size(), 0.0);
    for (const auto& r : runs) {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            mean[i] += step_value_at(r.convergence, grid[i]);
        }
    }
    for (double& m : mean) m /= static_cast<double>(runs.size());
    return mean;
}

namespace {

std::string sanitize(const std::string& s) {
    std::string out;
    for (char c : s) {
        out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    }
    return out.empty() ? std::string("run") : out;
}

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

}  // namespace

std::vector<std::string> convergence_export(const std::vector<RunResult>& runs,
                                            const std::string& out_dir,
                                            int grid_points) {
    if (runs.empty()) {
        throw std::invalid_argument("convergence_export: no runs given");
    }
    if (grid_points < 2) {
        throw std::invalid_argument("convergence_export: need >= 2 grid points");
    }
    fs::create_directories(out_dir);
    std::vector<std::string> written;

    std::map<std::string, std::vector<RunResult>> by_variant;
    std::map<std::string, int> step_count;
    double horizon = 0.0;
    for (const auto& r : runs) {
        const std::string variant = variant_name(r.params.variant);
        by_variant[variant].push_back(r);
        horizon = std::max(horizon, r.params.t_max_s);

        const std::string stem = sanitize(r.instance_id) + "_" + variant;
        const int k = step_count[stem]++;
        const fs::path path =
            fs::path(out_dir) / ("steps_" + stem + "_" + std::to_string(k) + ".csv");
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + path.string());
        out << "time_s,score\n";
        for (const auto& ev : r.convergence) {
            out << fmt(ev.elapsed_s) << ',' << ev.score << '\n';
        }
        written.push_back(path.string());
    }

    std::vector<double> grid(grid_points);
    for (int i = 0; i < grid_points; ++i) {
        grid[i] = horizon * static_cast<double>(i) /
                  (static_cast<double>(grid_points) - 1.0);
    }
    for (const auto& [variant, vruns] : by_variant) {
        const auto mean = mean_trajectory(vruns, grid);
        const fs::path path = fs::path(out_dir) / ("mean_" + variant + ".csv");
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + path.string());
        out << "time_s,mean_score\n";
        for (std::size_t i = 0; i < grid.size(); ++i) {
            out << fmt(grid[i]) << ',' << fmt(mean[i]) << '\n';
        }
        written.push_back(path.string());
    }
    return written;
}

}  // namespace mis
