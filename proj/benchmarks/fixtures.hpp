#pragma once

#include <netrobust/generators.hpp>

#include <map>

namespace bench {

/// Preferential-attachment graphs, built once per size and shared across benchmarks.
/// 58228 nodes with 4 attachments per step is roughly the size of the BrightKite network.
inline const netrobust::Graph &scaleFree(netrobust::count n) {
    static std::map<netrobust::count, netrobust::Graph> cache;
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, netrobust::generators::barabasiAlbert(n, 4, 12345)).first;
    return it->second;
}

} // namespace bench
