#include <netrobust/errors.hpp>
#include <netrobust/failure_model.hpp>
#include <netrobust/random.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace netrobust {

SurvivalModel SurvivalModel::uniform(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw ConfigError("uniform survival probability must lie in [0, 1], got " + std::to_string(p));
    return {Kind::Uniform, p};
}

SurvivalModel SurvivalModel::bestConnected() {
    return {Kind::BestConnected, 0.0};
}

std::string_view SurvivalModel::name() const noexcept {
    if (kind_ == Kind::BestConnected)
        return "bc";
    return p_ == 0.0 ? "benchmark" : "uniform";
}

std::string_view toString(RemovalMode mode) {
    return mode == RemovalMode::Stochastic ? "stochastic" : "deterministic_score";
}

RemovalMode parseRemovalMode(std::string_view name) {
    if (name == "stochastic")
        return RemovalMode::Stochastic;
    if (name == "deterministic_score" || name == "deterministic")
        return RemovalMode::DeterministicScore;
    throw ConfigError("unknown removal mode '" + std::string(name) + "'");
}

double survivalProbability(const SurvivalModel &model, const Graph &g, node i) {
    if (i >= g.numberOfNodes())
        throw GraphError("node " + std::to_string(i) + " out of range");
    if (model.kind() == SurvivalModel::Kind::Uniform)
        return model.p();
    const count m = g.numberOfEdges();
    if (m == 0)
        throw GraphError("best-connected survival is undefined on a graph without edges");
    return static_cast<double>(g.degree(i)) / (2.0 * static_cast<double>(m));
}

NodeSet sampleFailures(const SurvivalModel &model, const Graph &g, std::uint64_t seed) {
    const count n = g.numberOfNodes();
    std::mt19937_64 rng(seed);
    NodeSet failed;
    for (node i = 0; i < n; ++i) {
        const double u = uniform01(rng);
        if (u < 1.0 - survivalProbability(model, g, i))
            failed.push_back(i);
    }
    return failed;
}

count requestedRemovals(double tau, count n) {
    if (!(tau >= 0.0 && tau <= 1.0))
        throw ConfigError("tau must lie in [0, 1]");
    const double exact = tau * static_cast<double>(n);
    // products like 0.06 * 50 land a hair above the integer they denote
    const auto c = static_cast<count>(std::ceil(exact - 1e-9 * std::max(1.0, exact)));
    return std::min(c, n);
}

NodeSet rankByScore(std::span<const node> candidates, std::span<const double> scores) {
    NodeSet order(candidates.begin(), candidates.end());
    std::sort(order.begin(), order.end(), [&](node a, node b) {
        if (scores[a] != scores[b])
            return scores[a] > scores[b];
        return a < b;
    });
    return order;
}

namespace {

void requireScores(const Graph &g, const CentralityVector &phi) {
    if (phi.scores.size() != g.numberOfNodes())
        throw GraphError("centrality vector has " + std::to_string(phi.scores.size())
                         + " entries for a graph with " + std::to_string(g.numberOfNodes()) + " nodes");
}

std::vector<double> sigmaScores(const Graph &g, const CentralityVector &phi, const SurvivalModel &model) {
    const count n = g.numberOfNodes();
    std::vector<double> sigma(n);
    for (node i = 0; i < n; ++i)
        sigma[i] = (1.0 - survivalProbability(model, g, i)) * phi.scores[i];
    return sigma;
}

// Full removal order for one trial.
NodeSet removalOrder(const Graph &g, const SurvivalModel &model, RemovalMode mode,
                     const CentralityVector &phi, std::uint64_t seed, bool &degenerate) {
    degenerate = false;
    if (mode == RemovalMode::Stochastic) {
        const NodeSet failed = sampleFailures(model, g, seed);
        return rankByScore(failed, phi.scores);
    }
    const auto sigma = sigmaScores(g, phi, model);
    degenerate = std::all_of(sigma.begin(), sigma.end(), [](double s) { return s == 0.0; });
    NodeSet all(g.numberOfNodes());
    std::iota(all.begin(), all.end(), node{0});
    return rankByScore(all, sigma);
}

} // namespace

TargetSelection selectTargets(const Graph &g, const CentralityVector &phi,
                              std::span<const node> failed, double tau) {
    requireScores(g, phi);
    for (node u : failed)
        if (u >= g.numberOfNodes())
            throw GraphError("failed node " + std::to_string(u) + " out of range");
    TargetSelection out;
    out.requested = requestedRemovals(tau, g.numberOfNodes());
    out.nodes = rankByScore(failed, phi.scores);
    if (out.nodes.size() > out.requested)
        out.nodes.resize(out.requested);
    out.shortfall = out.requested - out.nodes.size();
    return out;
}

TargetSelection selectTargetsDeterministic(const Graph &g, const CentralityVector &phi,
                                           const SurvivalModel &model, double tau) {
    requireScores(g, phi);
    TargetSelection out;
    out.requested = requestedRemovals(tau, g.numberOfNodes());
    const auto sigma = sigmaScores(g, phi, model);
    out.degenerate = std::all_of(sigma.begin(), sigma.end(), [](double s) { return s == 0.0; });
    NodeSet all(g.numberOfNodes());
    std::iota(all.begin(), all.end(), node{0});
    out.nodes = rankByScore(all, sigma);
    out.nodes.resize(out.requested);
    return out;
}

namespace {

std::vector<TrialOutcome> measurePrefixes(const Graph &g, const NodeSet &order, std::span<const double> taus,
                                          double base_lambda, count base_lcc,
                                          const SpectralOptions &spectral, bool keep_removed) {
    if (!(base_lambda > 0.0) || base_lcc == 0)
        throw GraphError("trial needs a graph with at least one edge (base lambda and LCC must be positive)");

    const count n = g.numberOfNodes();
    std::vector<TrialOutcome> out;
    out.reserve(taus.size());
    std::vector<char> mask(n, 0);
    count applied = 0;
    double lastLambda = base_lambda;
    count lastLcc = base_lcc;
    for (double tau : taus) {
        TrialOutcome t;
        t.requested_count = requestedRemovals(tau, n);
        t.actually_removed = std::min<count>(t.requested_count, order.size());
        if (t.actually_removed != applied) {
            if (t.actually_removed < applied) {
                // grid not increasing: rebuild the mask from scratch
                std::fill(mask.begin(), mask.end(), 0);
                applied = 0;
            }
            for (; applied < t.actually_removed; ++applied)
                mask[order[applied]] = 1;
            const Graph damaged = g.deleteMasked(mask);
            lastLambda = spectralRadius(damaged, spectral).value;
            lastLcc = largestComponentSize(damaged);
        }
        t.lambda_tilde = lastLambda;
        t.lcc_tilde = lastLcc;
        t.rho = lastLambda / base_lambda;
        t.gamma = static_cast<double>(lastLcc) / static_cast<double>(base_lcc);
        if (keep_removed)
            t.removed.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(t.actually_removed));
        out.push_back(std::move(t));
    }
    return out;
}

} // namespace

TrialOutcome runTrial(const Graph &g, const RemovalPlan &plan, const CentralityVector &phi,
                      double base_lambda, count base_lcc, const SpectralOptions &spectral) {
    requireScores(g, phi);
    const double taus[] = {plan.tau};
    bool degenerate = false;
    const NodeSet order = removalOrder(g, plan.model, plan.mode, phi, plan.seed, degenerate);
    return std::move(measurePrefixes(g, order, taus, base_lambda, base_lcc, spectral, true).front());
}

std::vector<TrialOutcome> runTrialCurve(const Graph &g, const SurvivalModel &model, RemovalMode mode,
                                        const CentralityVector &phi, std::uint64_t seed,
                                        std::span<const double> taus, double base_lambda,
                                        count base_lcc, const SpectralOptions &spectral) {
    requireScores(g, phi);
    bool degenerate = false;
    const NodeSet order = removalOrder(g, model, mode, phi, seed, degenerate);
    return measurePrefixes(g, order, taus, base_lambda, base_lcc, spectral, true);
}

} // namespace netrobust
