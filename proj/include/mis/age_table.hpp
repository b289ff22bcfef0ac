#pragma once

#include <vector>

namespace mis {

// Per-vertex age values defining the current subproblem. -1 means the
// vertex is not in the subproblem; otherwise the age is in [0, age_max].
struct AgeTable {
    std::vector<int> values;

    AgeTable() = default;
    explicit AgeTable(int n_vertices) : values(n_vertices, -1) {}

    int operator[](int v) const { return values[v]; }
    int& operator[](int v) { return values[v]; }
    int size() const { return static_cast<int>(values.size()); }

    bool in_subproblem(int v) const { return values[v] >= 0; }

    bool valid(int age_max) const {
        for (int a : values) {
            if (a < -1 || a > age_max) return false;
        }
        return true;
    }
};

}  // namespace mis
