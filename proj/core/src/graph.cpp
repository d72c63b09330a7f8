#include <netrobust/errors.hpp>
#include <netrobust/graph.hpp>

#include <algorithm>
#include <numeric>
#include <string>

namespace netrobust {

Graph Graph::fromEdges(count n, std::span<const std::pair<node, node>> edges,
                       std::vector<label> labels) {
    if (!labels.empty() && labels.size() != n)
        throw GraphError("label count " + std::to_string(labels.size())
                         + " does not match node count " + std::to_string(n));

    std::vector<count> deg(n, 0);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v)
                             + ") out of range for " + std::to_string(n) + " nodes");
        if (u == v)
            continue;
        ++deg[u];
        ++deg[v];
    }

    Graph g;
    g.offsets_.assign(n + 1, 0);
    for (count u = 0; u < n; ++u)
        g.offsets_[u + 1] = g.offsets_[u] + deg[u];
    g.neighbors_.resize(g.offsets_[n]);

    std::vector<count> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : edges) {
        if (u == v)
            continue;
        g.neighbors_[fill[u]++] = v;
        g.neighbors_[fill[v]++] = u;
    }

    // sort and dedup each list, then compact
    count write = 0;
    for (count u = 0; u < n; ++u) {
        auto first = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u]);
        auto last = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u + 1]);
        std::sort(first, last);
        last = std::unique(first, last);
        g.offsets_[u] = write;
        for (auto it = first; it != last; ++it)
            g.neighbors_[write++] = *it;
    }
    g.offsets_[n] = write;
    g.neighbors_.resize(write);
    g.neighbors_.shrink_to_fit();

    if (labels.empty()) {
        g.labels_.resize(n);
        std::iota(g.labels_.begin(), g.labels_.end(), label{0});
    } else {
        g.labels_ = std::move(labels);
    }
    return g;
}

count Graph::degree(node u) const {
    return offsets_[u + 1] - offsets_[u];
}

count Graph::maxDegree() const noexcept {
    count best = 0;
    for (count u = 0; u + 1 < offsets_.size(); ++u)
        best = std::max(best, offsets_[u + 1] - offsets_[u]);
    return best;
}

bool Graph::hasEdge(node u, node v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<node, node>> Graph::edges() const {
    std::vector<std::pair<node, node>> out;
    out.reserve(numberOfEdges());
    const count n = numberOfNodes();
    for (node u = 0; u < n; ++u)
        for (node v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Graph Graph::deleteNodes(std::span<const node> removed) const {
    const count n = numberOfNodes();
    std::vector<char> mask(n, 0);
    for (node u : removed) {
        if (u >= n)
            throw GraphError("node " + std::to_string(u) + " out of range for "
                             + std::to_string(n) + " nodes");
        if (mask[u])
            throw GraphError("node " + std::to_string(u) + " listed twice in deletion set");
        mask[u] = 1;
    }
    return deleteMasked(mask);
}

Graph Graph::deleteMasked(const std::vector<char> &removed) const {
    const count n = numberOfNodes();
    if (removed.size() != n)
        throw GraphError("deletion mask has size " + std::to_string(removed.size())
                         + ", expected " + std::to_string(n));

    constexpr node none = ~node{0};
    std::vector<node> remap(n, none);
    Graph h;
    for (node u = 0; u < n; ++u) {
        if (!removed[u]) {
            remap[u] = static_cast<node>(h.parent_.size());
            h.parent_.push_back(u);
        }
    }

    const count kept = h.parent_.size();
    h.offsets_.assign(kept + 1, 0);
    h.labels_.resize(kept);
    h.neighbors_.reserve(neighbors_.size());
    for (node nu = 0; nu < kept; ++nu) {
        const node u = h.parent_[nu];
        h.labels_[nu] = labels_[u];
        // neighbor lists stay sorted: remap is monotone
        for (node v : neighbors(u))
            if (remap[v] != none)
                h.neighbors_.push_back(remap[v]);
        h.offsets_[nu + 1] = h.neighbors_.size();
    }
    h.neighbors_.shrink_to_fit();
    return h;
}

count degreeOf(const Graph &g, node u) {
    if (u >= g.numberOfNodes())
        throw GraphError("node " + std::to_string(u) + " out of range for "
                         + std::to_string(g.numberOfNodes()) + " nodes");
    return g.degree(u);
}

} // namespace netrobust
