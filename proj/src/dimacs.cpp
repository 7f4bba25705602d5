#include "ucp/dimacs.hpp"

#include <fstream>
#include <sstream>

#include "ucp/errors.hpp"

namespace ucp {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

}  // namespace

GraphInstance parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) fail(line_no, "second problem line");
            std::string kind;
            long declared_m = 0;
            if (!(ls >> kind >> n >> declared_m)) {
                fail(line_no, "problem line needs \"p edge <n> <m>\"");
            }
            if (kind != "edge" && kind != "col") {
                fail(line_no, "unknown problem kind \"" + kind + "\"");
            }
            if (n < 1) fail(line_no, "vertex count must be positive");
            continue;
        }
        if (tag == "e") {
            if (n < 0) fail(line_no, "edge before the problem line");
            int u = 0, v = 0;
            if (!(ls >> u >> v)) fail(line_no, "edge line needs two endpoints");
            if (u < 1 || u > n || v < 1 || v > n) {
                fail(line_no, "endpoint out of range 1.." + std::to_string(n));
            }
            if (u == v) fail(line_no, "loops are not allowed");
            edges.emplace_back(u - 1, v - 1);
            continue;
        }
        fail(line_no, "unknown line tag \"" + tag + "\"");
    }
    if (n < 0) throw ParseError("no problem line found");
    return make_graph(n, std::move(edges));
}

GraphInstance read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_dimacs(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string write_dimacs(const GraphInstance& g) {
    std::ostringstream out;
    out << "p edge " << g.n << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

}  // namespace ucp
