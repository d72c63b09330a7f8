#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace netrobust {

using node = std::uint32_t;
using count = std::uint64_t;
using label = std::int64_t;

/// A set of node indices. Kept as a vector: callers that care about order
/// (greedy selections) rely on insertion order being preserved.
using NodeSet = std::vector<node>;

/**
 * Immutable undirected simple graph in compressed adjacency (CSR) form.
 *
 * Neighbor lists are sorted and free of self-loops and duplicates; every edge
 * {i, j} appears in both lists. Each node carries a label (the identifier used
 * by the dataset it was read from) and, for graphs produced by deleteNodes(),
 * the index it had in the parent graph.
 */
class Graph {
public:
    Graph() = default;

    /// Builds a graph over nodes 0..n-1 from an edge list. Self-loops and
    /// duplicate edges are dropped. Throws GraphError on out-of-range endpoints.
    static Graph fromEdges(count n, std::span<const std::pair<node, node>> edges,
                           std::vector<label> labels = {});

    count numberOfNodes() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    count numberOfEdges() const noexcept { return neighbors_.size() / 2; }

    std::span<const node> neighbors(node u) const {
        return {neighbors_.data() + offsets_[u], neighbors_.data() + offsets_[u + 1]};
    }

    count degree(node u) const;
    count maxDegree() const noexcept;
    bool hasEdge(node u, node v) const;

    /// Dataset identifier of node u (u itself for synthetic graphs).
    label nodeLabel(node u) const { return labels_[u]; }
    const std::vector<label> &labels() const noexcept { return labels_; }

    /// Index of each node in the graph this one was derived from; empty unless
    /// produced by deleteNodes().
    const std::vector<node> &parentIndices() const noexcept { return parent_; }

    /// Each undirected edge once, as (i, j) with i < j, in ascending order.
    std::vector<std::pair<node, node>> edges() const;

    /// Raw CSR arrays, for kernels that want tight loops.
    std::span<const count> offsets() const noexcept { return offsets_; }
    std::span<const node> adjacency() const noexcept { return neighbors_; }

    /// Returns a new graph over the nodes not in `removed`, re-indexed densely
    /// in ascending original order. Labels carry over; parentIndices() maps
    /// back to this graph. Throws GraphError on out-of-range or repeated indices.
    Graph deleteNodes(std::span<const node> removed) const;

    /// Same as deleteNodes() but takes a per-node removal mask (size n).
    Graph deleteMasked(const std::vector<char> &removed) const;

private:
    std::vector<count> offsets_;
    std::vector<node> neighbors_;
    std::vector<label> labels_;
    std::vector<node> parent_;
};

/// Number of edges incident onto u. Throws GraphError if u is out of range.
count degreeOf(const Graph &g, node u);

} // namespace netrobust
