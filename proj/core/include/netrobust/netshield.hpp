#pragma once

#include <netrobust/graph.hpp>
#include <netrobust/spectral.hpp>

#include <span>
#include <vector>

namespace netrobust {

struct ShieldSelection {
    count k = 0;
    /// In selection order.
    NodeSet selected;
    double shield_value = 0.0;
    /// lambda_before - lambda_after.
    double eigen_drop = 0.0;
    double lambda_before = 0.0;
    double lambda_after = 0.0;
};

/**
 * Shield value of a node set under the dominant eigenpair (lambda, u):
 *
 *   Sv(S) = sum_{i in S} 2 lambda u_i^2 - sum_{i,j in S} A_ij u_i u_j
 *
 * (the double sum runs over ordered pairs, so each internal edge counts twice).
 */
double shieldValue(const Graph &g, const Eigenpair &pair, std::span<const node> set);

/**
 * Greedy shield-value maximization with one eigenpair, never recomputed.
 *
 * Each step adds the node maximizing the marginal gain
 *   (2 lambda - A_ii) u_i^2 - 2 u_i sum_{j in S} A_ij u_j,
 * which for simple graphs (A_ii = 0) is 2 lambda u_i^2 - 2 u_i sum_{j in S} A_ij u_j.
 * Ties (within 1e-12 relative) go to the lowest index. When `candidates` is
 * non-empty only nodes with candidates[i] != 0 may be picked, and fewer than k
 * nodes are returned if the pool runs out.
 *
 * Neighbor sums are maintained incrementally, so the cost is O(nk + m) on top
 * of the eigenpair.
 */
NodeSet netshieldGreedy(const Graph &g, const Eigenpair &pair, count k,
                        const std::vector<char> &candidates = {});

/// NetShield on the whole graph. Throws GraphError if the graph has no edges
/// or k is not in [1, n].
ShieldSelection netshieldSelect(const Graph &g, count k, const SpectralOptions &spectral = {});

/// Exhaustive search for the k-subset whose deletion leaves the smallest
/// lambda_1 (lexicographically first on ties). Refuses graphs with n > 20.
ShieldSelection bruteForceBestDeletion(const Graph &g, count k, const SpectralOptions &spectral = {});

} // namespace netrobust
