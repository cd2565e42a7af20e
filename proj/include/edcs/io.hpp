#pragma once

#include "edcs/edcs.hpp"
#include "edcs/graph.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace edcs {

// Plain-text graph format: first line "n m", then m lines "u v" (0-based).
// Inputs are canonicalized to u < v on load; self-loops and duplicates are
// rejected with a diagnostic. The writer emits sorted edges so output is
// byte-stable.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::filesystem::path& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::filesystem::path& path, const Graph& g);

// Graph format prefixed with "# edcs beta=<b> beta_minus=<bm>".
void write_edcs(std::ostream& out, const Edcs& e);
void write_edcs_file(const std::filesystem::path& path, const Edcs& e);

struct EdcsFile {
    EdcsParams params;
    Graph subgraph;
};
EdcsFile read_edcs_file(const std::filesystem::path& path);

} // namespace edcs
