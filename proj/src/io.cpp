#include "edcs/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace edcs {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::runtime_error("graph file: " + what); }

Graph parse_graph(std::istream& in) {
    long long n = -1, m = -1;
    if (!(in >> n >> m)) fail("missing 'n m' header");
    if (n < 0 || m < 0) fail("negative counts in header");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v)) fail("expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        if (u == v) fail("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            fail("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    try {
        return Graph(static_cast<int>(n), std::move(edges));
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
}

} // namespace

Graph read_graph(std::istream& in) { return parse_graph(in); }

Graph read_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open " + path.string());
    return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_graph_file(const std::filesystem::path& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) fail("cannot open " + path.string() + " for writing");
    write_graph(out, g);
}

void write_edcs(std::ostream& out, const Edcs& e) {
    out << "# edcs beta=" << e.params().beta << " beta_minus=" << e.params().beta_minus << '\n';
    write_graph(out, e.subgraph());
}

void write_edcs_file(const std::filesystem::path& path, const Edcs& e) {
    std::ofstream out(path);
    if (!out) fail("cannot open " + path.string() + " for writing");
    write_edcs(out, e);
}

EdcsFile read_edcs_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open " + path.string());
    std::string header;
    if (!std::getline(in, header)) fail("missing edcs header");
    long long beta = -1, beta_minus = -1;
    if (std::sscanf(header.c_str(), "# edcs beta=%lld beta_minus=%lld", &beta, &beta_minus) != 2)
        fail("malformed edcs header: " + header);
    return {EdcsParams(beta, beta_minus), parse_graph(in)};
}

} // namespace edcs
