#pragma once

#include <netrobust/graph.hpp>

#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

namespace netrobust {

enum class Metric { Degree, HIndex, Coreness, Eigenvector, Katz };

inline constexpr Metric kAllMetrics[] = {Metric::Degree, Metric::HIndex, Metric::Coreness,
                                         Metric::Eigenvector, Metric::Katz};

std::string_view toString(Metric metric);
/// Accepts "degree", "h_index" (or "hindex"), "coreness", "eigenvector", "katz".
Metric parseMetric(std::string_view name);

struct CentralityVector {
    Metric metric = Metric::Degree;
    std::vector<double> scores;
    /// Attenuation factor, set for Katz only.
    std::optional<double> alpha;
};

struct IterativeOptions {
    double tol = 1e-9;
    count max_iter = 100000;
};

CentralityVector degreeCentrality(const Graph &g);

/// Largest h such that at least h neighbors have degree >= h. Isolated nodes get 0.
CentralityVector hIndexCentrality(const Graph &g);

/// k-core number by bucket peeling (Batagelj-Zaversnik). Isolated nodes get 0.
CentralityVector corenessCentrality(const Graph &g);

/**
 * Dominant adjacency eigenvector, unit Euclidean norm, non-negative.
 *
 * On a disconnected graph this is the eigenvector of the component realizing
 * lambda_1 (zero elsewhere). Converged once two successive power iterates
 * differ by less than tol in max-norm; the iteration is warm-started from a
 * Lanczos estimate.
 *
 * Throws GraphError on a graph without edges and NumericalError (with the
 * last iterate) on non-convergence.
 */
CentralityVector eigenvectorCentrality(const Graph &g, const IterativeOptions &options = {});

/**
 * Katz scores k = (I - alpha A)^{-1} 1 by the fixed point k <- 1 + alpha A k.
 *
 * Requires alpha < 1 / lambda_1. A diverging iterate raises NumericalError
 * ("alpha >= 1/lambda_1"); exhausting max_iter raises NumericalError with the
 * final max-norm change as residual.
 */
CentralityVector katzCentrality(const Graph &g, double alpha, const IterativeOptions &options = {});

/// Dispatches on metric; `katz_alpha` is only read for Metric::Katz.
CentralityVector computeCentrality(const Graph &g, Metric metric, double katz_alpha = 0.1,
                                   const IterativeOptions &options = {});

/// CSV with header "node_id,metric,score"; node_id is the dataset label.
void writeCentralityCsv(std::ostream &out, const Graph &g, const CentralityVector &phi);

} // namespace netrobust
