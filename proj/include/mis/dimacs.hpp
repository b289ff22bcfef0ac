#pragma once

#include <stdexcept>
#include <string>

#include "mis/graph.hpp"

namespace mis {

// Instance I/O in DIMACS edge format: `c` comment lines, one
// `p edge <n> <m>` header, then `m` lines `e <u> <v>` with 1-based ids.

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Duplicate edge lines and both orientations collapse to one undirected
// edge; the header's edge count must match the deduplicated total.
Graph parse_instance(const std::string& text);

// Canonical form: header, then edges sorted by (min, max), 1-based.
// parse_instance(write_instance(g)) == g.
std::string write_instance(const Graph& g);

Graph load_instance_file(const std::string& path);
void save_instance_file(const Graph& g, const std::string& path);

}  // namespace mis
