#include <netrobust/errors.hpp>
#include <netrobust/netshield.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace netrobust {

double shieldValue(const Graph &g, const Eigenpair &pair, std::span<const node> set) {
    const auto &u = pair.vector;
    std::vector<char> in(g.numberOfNodes(), 0);
    for (node i : set)
        in[i] = 1;
    double value = 0.0;
    for (node i : set) {
        value += 2.0 * pair.value * u[i] * u[i];
        for (node j : g.neighbors(i))
            if (in[j])
                value -= u[i] * u[j];
    }
    return value;
}

NodeSet netshieldGreedy(const Graph &g, const Eigenpair &pair, count k, const std::vector<char> &candidates) {
    const count n = g.numberOfNodes();
    const auto &u = pair.vector;
    const double lambda = pair.value;
    const bool restricted = !candidates.empty();

    // base[i] = (2 lambda - A_ii) u_i^2 with A_ii = 0
    std::vector<double> base(n);
    for (node i = 0; i < n; ++i)
        base[i] = 2.0 * lambda * u[i] * u[i];

    // coupling[i] = sum over selected neighbors j of u_j
    std::vector<double> coupling(n, 0.0);
    std::vector<char> taken(n, 0);
    NodeSet selected;
    selected.reserve(k);

    for (count step = 0; step < k; ++step) {
        double best = -INFINITY;
        double scale = 0.0;
        for (node i = 0; i < n; ++i) {
            if (taken[i] || (restricted && !candidates[i]))
                continue;
            const double score = base[i] - 2.0 * u[i] * coupling[i];
            best = std::max(best, score);
            scale = std::max(scale, std::abs(score));
        }
        if (best == -INFINITY)
            break;
        const double cutoff = best - 1e-12 * std::max(scale, 1e-300);
        node pick = 0;
        for (node i = 0; i < n; ++i) {
            if (taken[i] || (restricted && !candidates[i]))
                continue;
            if (base[i] - 2.0 * u[i] * coupling[i] >= cutoff) {
                pick = i;
                break;
            }
        }
        taken[pick] = 1;
        selected.push_back(pick);
        for (node j : g.neighbors(pick))
            coupling[j] += u[pick];
    }
    return selected;
}

namespace {

void requireShieldInput(const Graph &g, count k) {
    if (g.numberOfEdges() == 0)
        throw GraphError("NetShield needs a graph with at least one edge");
    if (k < 1 || k > g.numberOfNodes())
        throw GraphError("k = " + std::to_string(k) + " outside [1, " + std::to_string(g.numberOfNodes()) + "]");
}

} // namespace

ShieldSelection netshieldSelect(const Graph &g, count k, const SpectralOptions &spectral) {
    requireShieldInput(g, k);
    const Eigenpair pair = dominantEigenpair(g, spectral);
    ShieldSelection out;
    out.k = k;
    out.selected = netshieldGreedy(g, pair, k);
    out.shield_value = shieldValue(g, pair, out.selected);
    out.lambda_before = pair.value;
    out.lambda_after = spectralRadius(g.deleteNodes(out.selected), spectral).value;
    out.eigen_drop = out.lambda_before - out.lambda_after;
    return out;
}

ShieldSelection bruteForceBestDeletion(const Graph &g, count k, const SpectralOptions &spectral) {
    constexpr count kMaxNodes = 20;
    if (g.numberOfNodes() > kMaxNodes)
        throw GraphError("exhaustive deletion search refused for n = " + std::to_string(g.numberOfNodes())
                         + " (limit " + std::to_string(kMaxNodes) + ")");
    requireShieldInput(g, k);

    const count n = g.numberOfNodes();
    NodeSet subset(k);
    for (node i = 0; i < k; ++i)
        subset[i] = i;

    NodeSet bestSet;
    double bestLambda = INFINITY;
    while (true) {
        const double lambda = spectralRadius(g.deleteNodes(subset), spectral).value;
        if (lambda < bestLambda - 1e-12) {
            bestLambda = lambda;
            bestSet = subset;
        }
        // next combination in lexicographic order
        std::size_t i = k;
        while (i > 0 && subset[i - 1] == n - k + (i - 1))
            --i;
        if (i == 0)
            break;
        ++subset[i - 1];
        for (std::size_t j = i; j < k; ++j)
            subset[j] = subset[j - 1] + 1;
    }

    const Eigenpair pair = dominantEigenpair(g, spectral);
    ShieldSelection out;
    out.k = k;
    out.selected = std::move(bestSet);
    out.shield_value = shieldValue(g, pair, out.selected);
    out.lambda_before = pair.value;
    out.lambda_after = bestLambda;
    out.eigen_drop = out.lambda_before - out.lambda_after;
    return out;
}

} // namespace netrobust
