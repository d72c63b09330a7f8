#include <netrobust/centrality.hpp>
#include <netrobust/errors.hpp>
#include <netrobust/spectral.hpp>

#include "format.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

namespace netrobust {

std::string_view toString(Metric metric) {
    switch (metric) {
    case Metric::Degree:
        return "degree";
    case Metric::HIndex:
        return "h_index";
    case Metric::Coreness:
        return "coreness";
    case Metric::Eigenvector:
        return "eigenvector";
    case Metric::Katz:
        return "katz";
    }
    return "?";
}

Metric parseMetric(std::string_view name) {
    if (name == "degree")
        return Metric::Degree;
    if (name == "h_index" || name == "hindex" || name == "h-index")
        return Metric::HIndex;
    if (name == "coreness")
        return Metric::Coreness;
    if (name == "eigenvector")
        return Metric::Eigenvector;
    if (name == "katz")
        return Metric::Katz;
    throw ConfigError("unknown centrality metric '" + std::string(name) + "'");
}

CentralityVector degreeCentrality(const Graph &g) {
    const count n = g.numberOfNodes();
    CentralityVector out{Metric::Degree, std::vector<double>(n), std::nullopt};
    for (node u = 0; u < n; ++u)
        out.scores[u] = static_cast<double>(g.degree(u));
    return out;
}

CentralityVector hIndexCentrality(const Graph &g) {
    const count n = g.numberOfNodes();
    CentralityVector out{Metric::HIndex, std::vector<double>(n), std::nullopt};
    std::vector<count> bins;
    for (node u = 0; u < n; ++u) {
        const count d = g.degree(u);
        // bins[h] = neighbors with degree min(deg, d); h can never exceed d
        bins.assign(d + 1, 0);
        for (node v : g.neighbors(u))
            ++bins[std::min(g.degree(v), d)];
        count atLeast = 0;
        count h = 0;
        for (count c = d; c > 0; --c) {
            atLeast += bins[c];
            if (atLeast >= c) {
                h = c;
                break;
            }
        }
        out.scores[u] = static_cast<double>(h);
    }
    return out;
}

CentralityVector corenessCentrality(const Graph &g) {
    const count n = g.numberOfNodes();
    CentralityVector out{Metric::Coreness, std::vector<double>(n), std::nullopt};
    if (n == 0)
        return out;

    const count maxDeg = g.maxDegree();
    std::vector<count> deg(n), pos(n), bin(maxDeg + 1, 0);
    std::vector<node> vert(n);
    for (node u = 0; u < n; ++u) {
        deg[u] = g.degree(u);
        ++bin[deg[u]];
    }
    count start = 0;
    for (count d = 0; d <= maxDeg; ++d) {
        const count num = bin[d];
        bin[d] = start;
        start += num;
    }
    for (node u = 0; u < n; ++u) {
        pos[u] = bin[deg[u]];
        vert[pos[u]] = u;
        ++bin[deg[u]];
    }
    for (count d = maxDeg; d > 0; --d)
        bin[d] = bin[d - 1];
    bin[0] = 0;

    for (count i = 0; i < n; ++i) {
        const node v = vert[i];
        for (node u : g.neighbors(v)) {
            if (deg[u] > deg[v]) {
                // move u to the front of its bucket, then shrink its degree
                const count du = deg[u];
                const count pu = pos[u];
                const count pw = bin[du];
                const node w = vert[pw];
                if (u != w) {
                    pos[u] = pw;
                    vert[pu] = w;
                    pos[w] = pu;
                    vert[pw] = u;
                }
                ++bin[du];
                --deg[u];
            }
        }
    }
    for (node u = 0; u < n; ++u)
        out.scores[u] = static_cast<double>(deg[u]);
    return out;
}

CentralityVector eigenvectorCentrality(const Graph &g, const IterativeOptions &options) {
    if (g.numberOfEdges() == 0)
        throw GraphError("eigenvector undefined on empty-edge graph");

    SpectralOptions spectral;
    spectral.tol = options.tol;
    spectral.max_iter = options.max_iter;
    std::vector<double> x;
    try {
        x = dominantEigenpair(g, spectral).vector;
    } catch (const NumericalError &e) {
        throw NumericalError(std::string("eigenvector centrality: ") + e.what(), e.estimate(),
                             e.residual(), e.last_iterate());
    }

    // polish with shifted power steps until successive iterates agree
    const count n = g.numberOfNodes();
    std::vector<double> ax(n);
    double change = INFINITY;
    for (count it = 0; it < options.max_iter; ++it) {
        multiplyAdjacency(g, x, ax);
        double nrm = 0.0;
        for (count t = 0; t < n; ++t) {
            ax[t] += x[t];
            nrm += ax[t] * ax[t];
        }
        nrm = std::sqrt(nrm);
        change = 0.0;
        for (count t = 0; t < n; ++t) {
            const double next = ax[t] / nrm;
            change = std::max(change, std::abs(next - x[t]));
            x[t] = next;
        }
        if (change < options.tol)
            return {Metric::Eigenvector, std::move(x), std::nullopt};
    }
    throw NumericalError("eigenvector centrality did not converge within "
                             + std::to_string(options.max_iter) + " iterations",
                         0.0, change, std::move(x));
}

CentralityVector katzCentrality(const Graph &g, double alpha, const IterativeOptions &options) {
    if (!(alpha > 0.0))
        throw ConfigError("Katz alpha must be positive");

    const count n = g.numberOfNodes();
    std::vector<double> k(n, 1.0), ak(n);
    constexpr double kDivergenceBound = 1e15;
    double change = INFINITY;
    for (count it = 0; it < options.max_iter; ++it) {
        multiplyAdjacency(g, k, ak);
        change = 0.0;
        double largest = 0.0;
        for (count t = 0; t < n; ++t) {
            const double next = 1.0 + alpha * ak[t];
            change = std::max(change, std::abs(next - k[t]));
            largest = std::max(largest, next);
            k[t] = next;
        }
        if (!std::isfinite(largest) || largest > kDivergenceBound)
            throw NumericalError("Katz iteration diverged: alpha >= 1/lambda_1", largest, change, k);
        if (change < options.tol)
            return {Metric::Katz, std::move(k), alpha};
    }
    throw NumericalError("Katz iteration did not converge within "
                             + std::to_string(options.max_iter)
                             + " iterations (alpha may be too close to 1/lambda_1)",
                         0.0, change, std::move(k));
}

CentralityVector computeCentrality(const Graph &g, Metric metric, double katz_alpha,
                                   const IterativeOptions &options) {
    switch (metric) {
    case Metric::Degree:
        return degreeCentrality(g);
    case Metric::HIndex:
        return hIndexCentrality(g);
    case Metric::Coreness:
        return corenessCentrality(g);
    case Metric::Eigenvector:
        return eigenvectorCentrality(g, options);
    case Metric::Katz:
        return katzCentrality(g, katz_alpha, options);
    }
    throw ConfigError("unknown metric");
}

void writeCentralityCsv(std::ostream &out, const Graph &g, const CentralityVector &phi) {
    out << "node_id,metric,score\n";
    const auto name = toString(phi.metric);
    for (node u = 0; u < phi.scores.size(); ++u)
        out << g.nodeLabel(u) << ',' << name << ',' << detail::formatReal(phi.scores[u]) << '\n';
}

} // namespace netrobust
