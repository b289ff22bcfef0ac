#pragma once

#include <chrono>
#include <cstdint>

namespace mis {

// Deterministic run clock. The engine's time axis counts work units
// (construction work and solver nodes) converted through pinned cost
// constants, so identical (instance, params, seed) runs report identical
// elapsed values and make identical budget decisions regardless of machine
// load. Wall time is tracked separately as a safety backstop only.
//
// One op nominally corresponds to 1 ns of desk CPU; the constants below
// were calibrated against measured throughput of this code base and
// overcharge by roughly 2x so the wall backstop stays idle on comparable
// hardware.
class WorkClock {
public:
    static constexpr double kOpsPerSecond = 1e9;

    void charge(double ops) { ops_ += ops; }
    double elapsed_s() const { return ops_ / kOpsPerSecond; }

    double wall_elapsed_s() const {
        return std::chrono::duration<double>(
                   std::chrono::steady_clock::now() - wall_start_)
            .count();
    }

private:
    double ops_ = 0.0;
    std::chrono::steady_clock::time_point wall_start_ =
        std::chrono::steady_clock::now();
};

// Charged cost of one branch-and-bound node on a subproblem with
// n_vertices: bound computation and branching both scan adjacency bitsets.
inline double solver_node_ops(int n_vertices) {
    const double words = static_cast<double>((n_vertices + 63) / 64);
    return 60.0 + 2.5 * static_cast<double>(n_vertices) * words;
}

// Multiplier applied to the work-unit counts reported by the construction
// heuristics (candidate evaluations, neighbor removals).
inline constexpr double kConstructionUnitOps = 14.0;

}  // namespace mis
