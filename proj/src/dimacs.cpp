#include "mis/dimacs.hpp"

#include <fstream>
#include <sstream>

namespace mis {

Graph parse_instance(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int header_line = 0;
    bool got_header = false;
    long long n = 0, m = 0;
    std::vector<std::pair<int, int>> edges;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;

        if (tag == "p") {
            if (got_header) throw ParseError(line_no, "duplicate header");
            std::string fmt;
            std::string extra;
            if (!(ls >> fmt >> n >> m) || fmt != "edge" || n < 0 || m < 0 ||
                (ls >> extra)) {
                throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
            }
            got_header = true;
            header_line = line_no;
        } else if (tag == "e") {
            if (!got_header) {
                throw ParseError(line_no, "edge before 'p edge' header");
            }
            long long u = 0, v = 0;
            std::string extra;
            if (!(ls >> u >> v) || (ls >> extra)) {
                throw ParseError(line_no, "malformed edge line, expected 'e <u> <v>'");
            }
            if (u < 1 || v < 1 || u > n || v > n) {
                throw ParseError(line_no, "edge endpoint out of range [1, " +
                                              std::to_string(n) + "]");
            }
            if (u == v) throw ParseError(line_no, "self-loop not allowed");
            edges.emplace_back(static_cast<int>(u) - 1,
                               static_cast<int>(v) - 1);
        } else {
            throw ParseError(line_no, "unknown line type '" + tag + "'");
        }
    }

    if (!got_header) throw ParseError(line_no, "missing 'p edge' header");

    Graph g(static_cast<int>(n), std::move(edges));
    if (g.num_edges() != m) {
        throw ParseError(header_line,
                         "header declares " + std::to_string(m) +
                             " edges but file contains " +
                             std::to_string(g.num_edges()) +
                             " distinct edges");
    }
    return g;
}

std::string write_instance(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) {
        out << "e " << (u + 1) << ' ' << (v + 1) << '\n';
    }
    return out.str();
}

Graph load_instance_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

void save_instance_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write instance file: " + path);
    out << write_instance(g);
}

}  // namespace mis
