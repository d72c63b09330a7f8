#pragma once

#include <netrobust/centrality.hpp>
#include <netrobust/failure_model.hpp>
#include <netrobust/graph.hpp>
#include <netrobust/spectral.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace netrobust {

/// tau values 0, step, 2 step, ... up to tau_max inclusive, rounded to 12 decimals.
std::vector<double> makeTauGrid(double tau_max, double step);

struct ExperimentConfig {
    std::string dataset;
    std::vector<SurvivalModel> models;
    std::vector<Metric> metrics;
    std::vector<double> tau_grid;
    count trials = 20;
    double katz_alpha = 0.1;
    std::uint64_t seed = 0;
    std::vector<count> netshield_k;
    RemovalMode mode = RemovalMode::Stochastic;
    /// Maximum number of trials evaluated concurrently.
    unsigned jobs = 1;
    IterativeOptions centrality;
    SpectralOptions spectral;

    /// Uniform p in {0.1, 0.3, 0.5}, BC and the benchmark; all five metrics;
    /// tau 0..0.18 step 0.02; 20 trials; Katz alpha 0.1; k in {1, 2, 5, 10, 15}.
    static ExperimentConfig defaults();

    /// Throws ConfigError on an empty or non-increasing tau grid, tau outside
    /// [0, 1], zero trials, zero jobs, k < 1 or alpha <= 0.
    void validate() const;
};

struct TrialRecord {
    std::size_t model = 0; ///< index into the config's model list
    Metric metric = Metric::Degree;
    std::size_t tau_index = 0;
    double tau = 0.0;
    count trial = 0;
    std::uint64_t seed = 0;
    count requested_removed = 0;
    count actually_removed = 0;
    double lambda_tilde = 0.0;
    count lcc_tilde = 0;
    double rho = 1.0;
    double gamma = 1.0;
};

struct CellSummary {
    std::size_t model = 0;
    Metric metric = Metric::Degree;
    double tau = 0.0;
    count trials = 0;
    count requested_removed = 0;
    double mean_actually_removed = 0.0;
    double mean_lambda_tilde = 0.0;
    double mean_lcc_tilde = 0.0;
    double mean_rho = 0.0;
    double std_rho = 0.0;
    double mean_gamma = 0.0;
    double std_gamma = 0.0;
};

struct SweepResult {
    std::vector<SurvivalModel> models;
    std::vector<double> tau_grid;
    double lambda_base = 0.0;
    count lcc_base = 0;
    /// Katz alpha actually used (differs from the configured one after substitution).
    double katz_alpha = 0.0;
    /// Ordered by model, metric, trial, tau.
    std::vector<TrialRecord> trials;
    /// Ordered by model, metric, tau.
    std::vector<CellSummary> cells;
    /// "model/metric: reason" for every (model, metric) cell that could not be computed.
    std::vector<std::string> failed_cells;
    std::vector<std::string> warnings;
    /// Trial curves in which some tau point removed fewer nodes than requested.
    count shortfall_trials = 0;
};

/// Seed of trial t under master seed s. Shared by every model and metric, so
/// all cells of one trial see coupled failure samples.
std::uint64_t trialSeed(std::uint64_t master, count trial);

/**
 * Full effectiveness/coverage sweep. Centralities, lambda_1 and the LCC are
 * computed once on g; each (model, metric, trial) draws one failure sample
 * shared across the whole tau grid. Output is identical for any `jobs` value.
 */
SweepResult runSweep(const Graph &g, const ExperimentConfig &config);

/// Mean and population standard deviation per (model, metric, tau) from the
/// per-trial records. Records must be ordered as in SweepResult::trials.
std::vector<CellSummary> aggregateTrials(const std::vector<TrialRecord> &trials);

enum class Observable { Rho, Gamma };

struct Deviation {
    SurvivalModel model;
    double percent = 0.0;
    /// tau points that contributed (tau > 0 with a non-zero model value).
    count points = 0;
};

/**
 * 100 * mean over tau > 0 of |bench(tau) - model(tau)| / model(tau). Grid
 * points where the model curve is zero are skipped; with no usable point the
 * result is NaN.
 */
double deviationPercent(const std::vector<double> &taus, const std::vector<double> &benchmark,
                        const std::vector<double> &model, count *points = nullptr);

/// Deviation of every non-benchmark model's degree curve from the benchmark
/// degree curve. Throws ConfigError if the sweep has no benchmark degree rows.
std::vector<Deviation> benchmarkDeviation(const SweepResult &sweep, Observable observable);

struct NetShieldTrialRecord {
    std::size_t model = 0;
    count k = 0;
    count trial = 0;
    std::uint64_t seed = 0;
    bool skipped = false;
    bool same_selection = false;
    double lambda_netshield = 0.0;
    double lambda_degree = 0.0;
    count lcc_netshield = 0;
    count lcc_degree = 0;
    double beta = 0.0;
    double gamma_ratio = 0.0;
};

struct NetShieldCell {
    std::size_t model = 0;
    count k = 0;
    count trials_used = 0;
    count trials_skipped = 0;
    /// Means over non-skipped trials; NaN when every trial skipped.
    double beta = 0.0;
    double gamma_ratio = 0.0;
    double mean_lambda_netshield = 0.0;
    double mean_lambda_degree = 0.0;
    double mean_lcc_netshield = 0.0;
    double mean_lcc_degree = 0.0;
};

struct NetShieldComparison {
    std::vector<SurvivalModel> models;
    double lambda_base = 0.0;
    count lcc_base = 0;
    /// Ordered by model, trial, k.
    std::vector<NetShieldTrialRecord> trials;
    /// Ordered by model, k.
    std::vector<NetShieldCell> cells;
    std::vector<std::string> warnings;
};

/**
 * NetShield versus degree under node failures. For each trial one failure
 * sample is drawn; S_d(k) is the top-k failed nodes by degree and S_NS(k) the
 * greedy NetShield selection restricted to failed nodes (one eigenpair of g
 * shared by all trials). beta = lambda(G - S_NS) / lambda(G - S_d) and
 * gamma_ratio = lcc(G - S_NS) / lcc(G - S_d), both exactly 1 when the two
 * selections coincide or both numerator and denominator vanish. A trial with
 * fewer than k failed nodes, or a zero denominator with a non-zero numerator,
 * is skipped for that k.
 */
NetShieldComparison runNetShieldComparison(const Graph &g, const ExperimentConfig &config);

} // namespace netrobust
