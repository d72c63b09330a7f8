#pragma once

#include <netrobust/graph.hpp>

#include <string_view>
#include <vector>

namespace netrobust {

enum class EigenMethod {
    /// Explicitly restarted Lanczos with full reorthogonalization.
    Lanczos,
    /// Power iteration on A + I (the shift removes the +-lambda oscillation of
    /// bipartite graphs without changing the dominant eigenvector).
    ShiftedPower,
};

/// "lanczos" or "power".
std::string_view toString(EigenMethod method);
/// Throws ConfigError on an unknown name.
EigenMethod parseEigenMethod(std::string_view name);

struct SpectralOptions {
    /// Convergence threshold on the eigen-residual ||Ax - lambda x||, relative to max(1, lambda).
    double tol = 1e-9;
    /// Budget of sparse matrix-vector products.
    count max_iter = 100000;
    EigenMethod method = EigenMethod::Lanczos;
};

struct SpectralRadius {
    double value = 0.0;
    count iterations = 0;
    double residual = 0.0;
};

struct Eigenpair {
    double value = 0.0;
    /// Unit norm, non-negative entries.
    std::vector<double> vector;
    count iterations = 0;
    double residual = 0.0;
};

/**
 * Dominant eigenpair of the adjacency matrix, starting from the uniform vector.
 *
 * The uniform start overlaps every component's Perron vector, so on a
 * disconnected graph the iteration settles on the component(s) realizing the
 * global maximum and the remaining entries tend to zero. Graphs without edges
 * yield value 0, zero iterations and the uniform vector.
 *
 * Throws NumericalError (carrying the best estimate and its residual) if the
 * matvec budget runs out.
 */
Eigenpair dominantEigenpair(const Graph &g, const SpectralOptions &options = {});

/// Largest adjacency eigenvalue; 0 for graphs without edges.
SpectralRadius spectralRadius(const Graph &g, const SpectralOptions &options = {});

/// y = A x.
void multiplyAdjacency(const Graph &g, const std::vector<double> &x, std::vector<double> &y);

struct ComponentSummary {
    count component_count = 0;
    count lcc_size = 0;
    /// Sorted members of the largest component (lowest-indexed one on ties).
    NodeSet lcc_members;
    /// Component id per node, ids assigned in order of lowest member.
    std::vector<count> component_of;
};

ComponentSummary connectedComponents(const Graph &g);

/// Size of the largest connected component without materializing members.
count largestComponentSize(const Graph &g);

} // namespace netrobust
