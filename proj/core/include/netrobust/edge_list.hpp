#pragma once

#include <netrobust/graph.hpp>

#include <filesystem>
#include <iosfwd>
#include <string_view>

namespace netrobust {

/// Konect and SNAP files may carry extra columns (weights, timestamps) after
/// the endpoint pair; plain files must have exactly two tokens per line.
enum class EdgeListFormat { Konect, Snap, Plain };

EdgeListFormat parseEdgeListFormat(std::string_view name);
std::string_view toString(EdgeListFormat format);

struct LoadReport {
    count lines = 0;
    count self_loops = 0;
    count duplicate_edges = 0;
};

struct LoadedGraph {
    Graph graph;
    LoadReport report;
};

/**
 * Reads an undirected edge list. Lines starting with '%' or '#' and blank lines
 * are skipped. Node identifiers are compacted to 0..n-1 in order of first
 * appearance and kept as labels. Self-loops and repeated edges (in either
 * orientation) are dropped and counted.
 *
 * Throws ParseError on a non-integer endpoint token or when no edge is found.
 */
LoadedGraph loadEdgeList(std::istream &in, EdgeListFormat format = EdgeListFormat::Konect);
LoadedGraph loadEdgeListFile(const std::filesystem::path &path,
                             EdgeListFormat format = EdgeListFormat::Konect);

/// Writes one "i j" line per edge (i < j) using internal indices.
void writeEdgeList(std::ostream &out, const Graph &g);

} // namespace netrobust
