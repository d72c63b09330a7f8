#pragma once

#include <netrobust/centrality.hpp>
#include <netrobust/graph.hpp>
#include <netrobust/spectral.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace netrobust {

/// Probability psi(i) that a targeted node survives an attack.
class SurvivalModel {
public:
    enum class Kind { Uniform, BestConnected };

    /// psi(i) = p for every node. Throws ConfigError unless 0 <= p <= 1.
    static SurvivalModel uniform(double p);
    /// psi(i) = d_i / 2m.
    static SurvivalModel bestConnected();
    /// The always-successful removal process: uniform with p = 0.
    static SurvivalModel benchmark() { return uniform(0.0); }

    Kind kind() const noexcept { return kind_; }
    /// Only meaningful for Kind::Uniform.
    double p() const noexcept { return p_; }
    bool isBenchmark() const noexcept { return kind_ == Kind::Uniform && p_ == 0.0; }

    /// "uniform", "bc" or "benchmark".
    std::string_view name() const noexcept;

    friend bool operator==(const SurvivalModel &, const SurvivalModel &) = default;

private:
    SurvivalModel(Kind kind, double p) : kind_(kind), p_(p) {}

    Kind kind_;
    double p_;
};

enum class RemovalMode {
    /// Each node fails independently with probability 1 - psi(i); failed nodes
    /// are ranked by phi and the top ceil(tau n) removed.
    Stochastic,
    /// Rank every node by sigma_i = (1 - psi(i)) phi(i) and remove the top ceil(tau n).
    DeterministicScore,
};

std::string_view toString(RemovalMode mode);
RemovalMode parseRemovalMode(std::string_view name);

/// psi(i). Throws GraphError if i is out of range, or for BC on a graph without edges.
double survivalProbability(const SurvivalModel &model, const Graph &g, node i);

/// Independent Bernoulli draw per node: i is included (fails) with probability
/// 1 - psi(i). Deterministic in the seed; returned sorted.
///
/// The i-th uniform variate of the stream is always compared against node i, so
/// two models sampled with the same seed are coupled: a node failing under a
/// higher survival probability also fails under a lower one.
NodeSet sampleFailures(const SurvivalModel &model, const Graph &g, std::uint64_t seed);

/// ceil(tau * n), robust to the rounding of tau grids such as 3 * 0.02.
count requestedRemovals(double tau, count n);

struct TargetSelection {
    /// In rank order (highest score first).
    NodeSet nodes;
    count requested = 0;
    /// requested - nodes.size() when the candidate pool ran short.
    count shortfall = 0;
    /// Set when every candidate scored zero and order came from the tie-break alone.
    bool degenerate = false;
};

/// Orders `candidates` by descending score, ties by ascending index.
NodeSet rankByScore(std::span<const node> candidates, std::span<const double> scores);

/// Top min(ceil(tau n), |failed|) members of `failed` by phi.
TargetSelection selectTargets(const Graph &g, const CentralityVector &phi,
                              std::span<const node> failed, double tau);

/// Top ceil(tau n) nodes of the whole graph by sigma_i = (1 - psi(i)) phi(i).
TargetSelection selectTargetsDeterministic(const Graph &g, const CentralityVector &phi,
                                           const SurvivalModel &model, double tau);

struct RemovalPlan {
    double tau = 0.0;
    Metric metric = Metric::Degree;
    SurvivalModel model = SurvivalModel::benchmark();
    RemovalMode mode = RemovalMode::Stochastic;
    std::uint64_t seed = 0;
};

struct TrialOutcome {
    NodeSet removed;
    count requested_count = 0;
    count actually_removed = 0;
    double lambda_tilde = 0.0;
    count lcc_tilde = 0;
    /// lambda_tilde / lambda_1 (effectiveness).
    double rho = 1.0;
    /// lcc_tilde / lcc (coverage).
    double gamma = 1.0;
};

/**
 * One removal trial: select targets per plan.mode, delete them, and measure
 * the surviving graph. phi, base_lambda and base_lcc must come from g itself;
 * centrality is never recomputed on the damaged graph.
 */
TrialOutcome runTrial(const Graph &g, const RemovalPlan &plan, const CentralityVector &phi,
                      double base_lambda, count base_lcc, const SpectralOptions &spectral = {});

/**
 * A trial over a whole tau grid. The failure sample (stochastic mode) and the
 * ranking are computed once, so the removed sets are nested prefixes and the
 * resulting rho and gamma curves are non-increasing in tau.
 */
std::vector<TrialOutcome> runTrialCurve(const Graph &g, const SurvivalModel &model, RemovalMode mode,
                                        const CentralityVector &phi, std::uint64_t seed,
                                        std::span<const double> taus, double base_lambda,
                                        count base_lcc, const SpectralOptions &spectral = {});

} // namespace netrobust
