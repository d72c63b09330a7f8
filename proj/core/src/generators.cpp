#include <netrobust/errors.hpp>
#include <netrobust/generators.hpp>
#include <netrobust/random.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace netrobust::generators {

namespace {

void requireNodes(count n, count minimum, const char *what) {
    if (n < minimum)
        throw GraphError(std::string(what) + " needs at least " + std::to_string(minimum)
                         + " nodes, got " + std::to_string(n));
}

} // namespace

Graph erdosRenyi(count n, double p, std::uint64_t seed) {
    requireNodes(n, 1, "erdos_renyi");
    if (!(p >= 0.0 && p <= 1.0))
        throw GraphError("erdos_renyi edge probability must lie in [0, 1]");

    std::vector<std::pair<node, node>> edges;
    if (p >= 1.0)
        return complete(n);
    if (p > 0.0) {
        // Batagelj-Brandes geometric skipping over the lower triangle
        std::mt19937_64 rng(seed);
        const double logq = std::log1p(-p);
        std::int64_t v = 1;
        std::int64_t w = -1;
        const auto nn = static_cast<std::int64_t>(n);
        while (v < nn) {
            const double r = uniform01(rng);
            w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / logq));
            while (w >= v && v < nn) {
                w -= v;
                ++v;
            }
            if (v < nn)
                edges.emplace_back(static_cast<node>(w), static_cast<node>(v));
        }
    }
    return Graph::fromEdges(n, edges);
}

Graph barabasiAlbert(count n, count attach, std::uint64_t seed) {
    if (attach < 1)
        throw GraphError("barabasi_albert needs attach >= 1");
    requireNodes(n, attach + 1, "barabasi_albert");

    std::mt19937_64 rng(seed);
    std::vector<std::pair<node, node>> edges;
    // every edge endpoint, so a uniform pick is degree-proportional
    std::vector<node> endpoints;
    const count seedSize = attach + 1;
    for (node u = 0; u < seedSize; ++u)
        for (node v = u + 1; v < seedSize; ++v) {
            edges.emplace_back(u, v);
            endpoints.push_back(u);
            endpoints.push_back(v);
        }

    std::vector<node> picked;
    for (node u = static_cast<node>(seedSize); u < n; ++u) {
        picked.clear();
        while (picked.size() < attach) {
            const auto idx = static_cast<std::size_t>(uniform01(rng) * static_cast<double>(endpoints.size()));
            const node target = endpoints[idx];
            if (std::find(picked.begin(), picked.end(), target) == picked.end())
                picked.push_back(target);
        }
        for (node t : picked) {
            edges.emplace_back(t, u);
            endpoints.push_back(t);
            endpoints.push_back(u);
        }
    }
    return Graph::fromEdges(n, edges);
}

Graph complete(count n) {
    requireNodes(n, 1, "complete");
    std::vector<std::pair<node, node>> edges;
    edges.reserve(n * (n - 1) / 2);
    for (node u = 0; u < n; ++u)
        for (node v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph::fromEdges(n, edges);
}

Graph cycle(count n) {
    requireNodes(n, 3, "cycle");
    std::vector<std::pair<node, node>> edges;
    for (node u = 0; u < n; ++u)
        edges.emplace_back(u, static_cast<node>((u + 1) % n));
    return Graph::fromEdges(n, edges);
}

Graph path(count n) {
    requireNodes(n, 1, "path");
    std::vector<std::pair<node, node>> edges;
    for (node u = 0; u + 1 < n; ++u)
        edges.emplace_back(u, u + 1);
    return Graph::fromEdges(n, edges);
}

Graph star(count leaves) {
    std::vector<std::pair<node, node>> edges;
    for (node u = 1; u <= leaves; ++u)
        edges.emplace_back(0, u);
    return Graph::fromEdges(leaves + 1, edges);
}

Graph petersen() {
    std::vector<std::pair<node, node>> edges;
    for (node i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);         // outer cycle
        edges.emplace_back(i, i + 5);               // spokes
        edges.emplace_back(i + 5, (i + 2) % 5 + 5); // inner pentagram
    }
    return Graph::fromEdges(10, edges);
}

} // namespace netrobust::generators
