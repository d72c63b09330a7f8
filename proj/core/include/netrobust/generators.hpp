#pragma once

#include <netrobust/graph.hpp>

#include <cstdint>

namespace netrobust::generators {

/// G(n, p): every pair present independently with probability p.
Graph erdosRenyi(count n, double p, std::uint64_t seed);

/// Preferential attachment: starts from a clique on attach+1 nodes, then each
/// new node links to `attach` distinct existing nodes chosen proportionally to degree.
Graph barabasiAlbert(count n, count attach, std::uint64_t seed);

Graph complete(count n);
Graph cycle(count n);
Graph path(count n);

/// K_{1,leaves}: node 0 is the center.
Graph star(count leaves);

Graph petersen();

} // namespace netrobust::generators
