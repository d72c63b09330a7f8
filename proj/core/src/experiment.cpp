#include <netrobust/errors.hpp>
#include <netrobust/experiment.hpp>
#include <netrobust/netshield.hpp>
#include <netrobust/random.hpp>

#include "format.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <tuple>

namespace netrobust {

std::vector<double> makeTauGrid(double tau_max, double step) {
    if (!(step > 0.0))
        throw ConfigError("tau step must be positive");
    if (!(tau_max >= 0.0 && tau_max <= 1.0))
        throw ConfigError("tau max must lie in [0, 1]");
    std::vector<double> grid;
    const auto points = static_cast<count>(std::floor(tau_max / step + 1e-9));
    for (count i = 0; i <= points; ++i)
        grid.push_back(std::round(static_cast<double>(i) * step * 1e12) / 1e12);
    return grid;
}

ExperimentConfig ExperimentConfig::defaults() {
    ExperimentConfig c;
    c.models = {SurvivalModel::uniform(0.1), SurvivalModel::uniform(0.3), SurvivalModel::uniform(0.5),
                SurvivalModel::bestConnected(), SurvivalModel::benchmark()};
    c.metrics.assign(std::begin(kAllMetrics), std::end(kAllMetrics));
    c.tau_grid = makeTauGrid(0.18, 0.02);
    c.netshield_k = {1, 2, 5, 10, 15};
    return c;
}

void ExperimentConfig::validate() const {
    if (models.empty())
        throw ConfigError("at least one survival model is required");
    if (tau_grid.empty())
        throw ConfigError("tau grid is empty");
    for (std::size_t i = 0; i < tau_grid.size(); ++i) {
        if (!(tau_grid[i] >= 0.0 && tau_grid[i] <= 1.0))
            throw ConfigError("tau values must lie in [0, 1]");
        if (i > 0 && !(tau_grid[i] > tau_grid[i - 1]))
            throw ConfigError("tau grid must be strictly increasing");
    }
    if (trials < 1)
        throw ConfigError("trials must be at least 1");
    if (jobs < 1)
        throw ConfigError("jobs must be at least 1");
    if (!(katz_alpha > 0.0))
        throw ConfigError("Katz alpha must be positive");
    for (count k : netshield_k)
        if (k < 1)
            throw ConfigError("NetShield k must be at least 1");
}

std::uint64_t trialSeed(std::uint64_t master, count trial) {
    return deriveSeed(master, trial);
}

namespace {

struct MeanStd {
    double mean = 0.0;
    double stddev = 0.0;
};

MeanStd meanStd(const std::vector<double> &xs) {
    MeanStd out;
    if (xs.empty())
        return {NAN, NAN};
    for (double x : xs)
        out.mean += x;
    out.mean /= static_cast<double>(xs.size());
    double ss = 0.0;
    for (double x : xs)
        ss += (x - out.mean) * (x - out.mean);
    out.stddev = std::sqrt(ss / static_cast<double>(xs.size()));
    return out;
}

void requireNonTrivial(const Graph &g) {
    if (g.numberOfNodes() == 0 || g.numberOfEdges() == 0)
        throw GraphError("experiments need a graph with at least one edge");
}

std::string modelLabel(const SurvivalModel &m) {
    if (m.kind() == SurvivalModel::Kind::BestConnected)
        return "bc";
    return std::string(m.name()) + "(p=" + detail::formatReal(m.p()) + ")";
}

// Trials of this model are exact copies of one another.
bool trialsIdentical(const SurvivalModel &model, RemovalMode mode) {
    return mode == RemovalMode::DeterministicScore || model.isBenchmark();
}

} // namespace

std::vector<CellSummary> aggregateTrials(const std::vector<TrialRecord> &trials) {
    using Key = std::tuple<std::size_t, int, std::size_t>;
    std::map<Key, std::size_t> index;
    std::vector<Key> order;
    std::vector<std::vector<const TrialRecord *>> groups;
    for (const auto &r : trials) {
        const Key key{r.model, static_cast<int>(r.metric), r.tau_index};
        auto [it, inserted] = index.try_emplace(key, groups.size());
        if (inserted) {
            order.push_back(key);
            groups.emplace_back();
        }
        groups[it->second].push_back(&r);
    }
    // first-appearance order of (model, metric), then tau
    std::vector<std::size_t> perm(order.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
        perm[i] = i;
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        const auto &ra = *groups[a].front();
        const auto &rb = *groups[b].front();
        const auto fa = &ra - trials.data();
        const auto fb = &rb - trials.data();
        if (ra.model != rb.model || ra.metric != rb.metric)
            return fa < fb;
        return ra.tau_index < rb.tau_index;
    });

    std::vector<CellSummary> out;
    out.reserve(groups.size());
    std::vector<double> rho, gamma;
    for (std::size_t gi : perm) {
        const auto &group = groups[gi];
        CellSummary c;
        c.model = group.front()->model;
        c.metric = group.front()->metric;
        c.tau = group.front()->tau;
        c.trials = group.size();
        c.requested_removed = group.front()->requested_removed;
        rho.clear();
        gamma.clear();
        for (const auto *r : group) {
            c.mean_actually_removed += static_cast<double>(r->actually_removed);
            c.mean_lambda_tilde += r->lambda_tilde;
            c.mean_lcc_tilde += static_cast<double>(r->lcc_tilde);
            rho.push_back(r->rho);
            gamma.push_back(r->gamma);
        }
        const auto nt = static_cast<double>(group.size());
        c.mean_actually_removed /= nt;
        c.mean_lambda_tilde /= nt;
        c.mean_lcc_tilde /= nt;
        const auto r = meanStd(rho);
        const auto gm = meanStd(gamma);
        c.mean_rho = r.mean;
        c.std_rho = r.stddev;
        c.mean_gamma = gm.mean;
        c.std_gamma = gm.stddev;
        out.push_back(c);
    }
    return out;
}

SweepResult runSweep(const Graph &g, const ExperimentConfig &config) {
    config.validate();
    requireNonTrivial(g);

    SweepResult result;
    result.models = config.models;
    result.tau_grid = config.tau_grid;
    result.lambda_base = spectralRadius(g, config.spectral).value;
    result.lcc_base = largestComponentSize(g);

    result.katz_alpha = config.katz_alpha;
    const bool wantsKatz = std::find(config.metrics.begin(), config.metrics.end(), Metric::Katz)
                           != config.metrics.end();
    if (wantsKatz && config.katz_alpha * result.lambda_base >= 1.0) {
        result.katz_alpha = 0.9 / result.lambda_base;
        result.warnings.push_back("Katz alpha " + detail::formatReal(config.katz_alpha)
                                  + " violates alpha < 1/lambda_1 (lambda_1 = "
                                  + detail::formatReal(result.lambda_base) + "); substituted alpha = 0.9/lambda_1 = "
                                  + detail::formatReal(result.katz_alpha));
    }

    // centrality once per metric on the intact graph
    const std::size_t nm = config.metrics.size();
    std::vector<std::optional<CentralityVector>> phis(nm);
    std::vector<std::string> metricErrors(nm);
    for (std::size_t ci = 0; ci < nm; ++ci) {
        try {
            phis[ci] = computeCentrality(g, config.metrics[ci], result.katz_alpha, config.centrality);
        } catch (const std::exception &e) {
            metricErrors[ci] = e.what();
        }
    }

    struct Task {
        std::size_t model, metric;
        count trial;
    };
    std::vector<Task> tasks;
    for (std::size_t mi = 0; mi < config.models.size(); ++mi)
        for (std::size_t ci = 0; ci < nm; ++ci) {
            if (!phis[ci])
                continue;
            const count distinct = trialsIdentical(config.models[mi], config.mode) ? 1 : config.trials;
            for (count t = 0; t < distinct; ++t)
                tasks.push_back({mi, ci, t});
        }

    std::vector<std::vector<TrialOutcome>> curves(tasks.size());
    std::vector<std::string> taskErrors(tasks.size());
    detail::parallelFor(tasks.size(), config.jobs, [&](std::size_t i) {
        const Task &task = tasks[i];
        try {
            curves[i] = runTrialCurve(g, config.models[task.model], config.mode, *phis[task.metric],
                                      trialSeed(config.seed, task.trial), config.tau_grid,
                                      result.lambda_base, result.lcc_base, config.spectral);
            for (auto &point : curves[i])
                point.removed = {}; // only the counts are reported
        } catch (const std::exception &e) {
            taskErrors[i] = e.what();
        }
    });

    std::size_t cursor = 0;
    for (std::size_t mi = 0; mi < config.models.size(); ++mi) {
        for (std::size_t ci = 0; ci < nm; ++ci) {
            const std::string cellName = modelLabel(config.models[mi]) + "/"
                                         + std::string(toString(config.metrics[ci]));
            if (!phis[ci]) {
                result.failed_cells.push_back(cellName + ": " + metricErrors[ci]);
                continue;
            }
            const count distinct = trialsIdentical(config.models[mi], config.mode) ? 1 : config.trials;
            const std::size_t first = cursor;
            cursor += distinct;

            std::string error;
            for (std::size_t i = first; i < cursor; ++i)
                if (!taskErrors[i].empty()) {
                    error = taskErrors[i];
                    break;
                }
            if (!error.empty()) {
                result.failed_cells.push_back(cellName + ": " + error);
                continue;
            }

            for (count t = 0; t < config.trials; ++t) {
                const auto &curve = curves[first + (distinct == 1 ? 0 : t)];
                bool shortfall = false;
                for (std::size_t ti = 0; ti < curve.size(); ++ti) {
                    const auto &o = curve[ti];
                    TrialRecord r;
                    r.model = mi;
                    r.metric = config.metrics[ci];
                    r.tau_index = ti;
                    r.tau = config.tau_grid[ti];
                    r.trial = t;
                    r.seed = trialSeed(config.seed, t);
                    r.requested_removed = o.requested_count;
                    r.actually_removed = o.actually_removed;
                    r.lambda_tilde = o.lambda_tilde;
                    r.lcc_tilde = o.lcc_tilde;
                    r.rho = o.rho;
                    r.gamma = o.gamma;
                    shortfall |= o.actually_removed < o.requested_count;
                    result.trials.push_back(r);
                }
                result.shortfall_trials += shortfall ? 1 : 0;
            }
        }
    }
    if (result.shortfall_trials > 0)
        result.warnings.push_back(std::to_string(result.shortfall_trials)
                                  + " trial curves removed fewer nodes than requested at some tau "
                                    "(fewer failed nodes than ceil(tau n)); all failed nodes were removed");
    for (const auto &f : result.failed_cells)
        result.warnings.push_back("cell failed: " + f);

    result.cells = aggregateTrials(result.trials);
    return result;
}

double deviationPercent(const std::vector<double> &taus, const std::vector<double> &benchmark,
                        const std::vector<double> &model, count *points) {
    if (taus.size() != benchmark.size() || taus.size() != model.size())
        throw ConfigError("deviation curves must share the tau grid");
    double sum = 0.0;
    count used = 0;
    for (std::size_t i = 0; i < taus.size(); ++i) {
        if (!(taus[i] > 0.0) || model[i] == 0.0)
            continue;
        sum += std::abs(benchmark[i] - model[i]) / model[i];
        ++used;
    }
    if (points)
        *points = used;
    return used == 0 ? NAN : 100.0 * sum / static_cast<double>(used);
}

std::vector<Deviation> benchmarkDeviation(const SweepResult &sweep, Observable observable) {
    auto curveOf = [&](std::size_t model) {
        std::vector<double> taus, values;
        for (const auto &c : sweep.cells)
            if (c.model == model && c.metric == Metric::Degree) {
                taus.push_back(c.tau);
                values.push_back(observable == Observable::Rho ? c.mean_rho : c.mean_gamma);
            }
        return std::pair{taus, values};
    };

    std::optional<std::size_t> bench;
    for (std::size_t mi = 0; mi < sweep.models.size(); ++mi)
        if (sweep.models[mi].isBenchmark() && !curveOf(mi).first.empty()) {
            bench = mi;
            break;
        }
    if (!bench)
        throw ConfigError("benchmark deviation needs benchmark (p = 0) rows for the degree metric");

    const auto [benchTaus, benchValues] = curveOf(*bench);
    std::vector<Deviation> out;
    for (std::size_t mi = 0; mi < sweep.models.size(); ++mi) {
        if (sweep.models[mi].isBenchmark())
            continue;
        const auto [taus, values] = curveOf(mi);
        if (taus.empty())
            continue;
        if (taus != benchTaus)
            throw ConfigError("benchmark and model curves use different tau grids");
        Deviation d{sweep.models[mi], 0.0, 0};
        d.percent = deviationPercent(taus, benchValues, values, &d.points);
        out.push_back(d);
    }
    return out;
}

NetShieldComparison runNetShieldComparison(const Graph &g, const ExperimentConfig &config) {
    config.validate();
    requireNonTrivial(g);
    if (config.netshield_k.empty())
        throw ConfigError("NetShield comparison needs at least one k");

    NetShieldComparison result;
    result.models = config.models;
    const Eigenpair pair = dominantEigenpair(g, config.spectral);
    result.lambda_base = pair.value;
    result.lcc_base = largestComponentSize(g);
    if (config.mode == RemovalMode::DeterministicScore)
        result.warnings.push_back("NetShield comparison always samples failures; deterministic_score mode ignored");

    const count kmax = *std::max_element(config.netshield_k.begin(), config.netshield_k.end());
    if (kmax > g.numberOfNodes())
        throw ConfigError("k = " + std::to_string(kmax) + " exceeds the node count");
    const CentralityVector degree = degreeCentrality(g);
    const count nk = config.netshield_k.size();

    struct Task {
        std::size_t model;
        count trial;
    };
    std::vector<Task> tasks;
    for (std::size_t mi = 0; mi < config.models.size(); ++mi) {
        const count distinct = config.models[mi].isBenchmark() ? 1 : config.trials;
        for (count t = 0; t < distinct; ++t)
            tasks.push_back({mi, t});
    }

    std::vector<std::vector<NetShieldTrialRecord>> records(tasks.size());
    std::vector<std::string> errors(tasks.size());
    detail::parallelFor(tasks.size(), config.jobs, [&](std::size_t i) {
        try {
            const auto &model = config.models[tasks[i].model];
            const std::uint64_t seed = trialSeed(config.seed, tasks[i].trial);
            const NodeSet failed = sampleFailures(model, g, seed);
            std::vector<char> mask(g.numberOfNodes(), 0);
            for (node u : failed)
                mask[u] = 1;
            NodeSet byDegree = rankByScore(failed, degree.scores);
            if (byDegree.size() > kmax)
                byDegree.resize(kmax);
            const NodeSet byShield = netshieldGreedy(g, pair, kmax, mask);

            for (count k : config.netshield_k) {
                NetShieldTrialRecord r;
                r.model = tasks[i].model;
                r.k = k;
                r.seed = seed;
                if (failed.size() < k) {
                    r.skipped = true;
                    records[i].push_back(r);
                    continue;
                }
                NodeSet sd(byDegree.begin(), byDegree.begin() + static_cast<std::ptrdiff_t>(k));
                NodeSet sns(byShield.begin(), byShield.begin() + static_cast<std::ptrdiff_t>(k));
                std::sort(sd.begin(), sd.end());
                std::sort(sns.begin(), sns.end());
                r.same_selection = sd == sns;

                const Graph gd = g.deleteNodes(sd);
                r.lambda_degree = spectralRadius(gd, config.spectral).value;
                r.lcc_degree = largestComponentSize(gd);
                if (r.same_selection) {
                    r.lambda_netshield = r.lambda_degree;
                    r.lcc_netshield = r.lcc_degree;
                    r.beta = 1.0;
                    r.gamma_ratio = 1.0;
                } else {
                    const Graph gns = g.deleteNodes(sns);
                    r.lambda_netshield = spectralRadius(gns, config.spectral).value;
                    r.lcc_netshield = largestComponentSize(gns);
                    auto ratio = [&](double num, double den) -> std::optional<double> {
                        if (den > 0.0)
                            return num / den;
                        if (num == 0.0)
                            return 1.0;
                        return std::nullopt;
                    };
                    const auto beta = ratio(r.lambda_netshield, r.lambda_degree);
                    const auto gam = ratio(static_cast<double>(r.lcc_netshield), static_cast<double>(r.lcc_degree));
                    if (beta && gam) {
                        r.beta = *beta;
                        r.gamma_ratio = *gam;
                    } else {
                        r.skipped = true;
                    }
                }
                records[i].push_back(r);
            }
        } catch (const std::exception &e) {
            errors[i] = e.what();
        }
    });

    for (const auto &e : errors)
        if (!e.empty())
            throw NumericalError("NetShield comparison trial failed: " + e, NAN, NAN);

    // expand replicated trials, order by model, trial, k
    std::size_t cursor = 0;
    for (std::size_t mi = 0; mi < config.models.size(); ++mi) {
        const count distinct = config.models[mi].isBenchmark() ? 1 : config.trials;
        for (count t = 0; t < config.trials; ++t) {
            for (auto r : records[cursor + (distinct == 1 ? 0 : t)]) {
                r.trial = t;
                r.seed = trialSeed(config.seed, t);
                result.trials.push_back(r);
            }
        }
        cursor += distinct;
    }

    for (std::size_t mi = 0; mi < config.models.size(); ++mi) {
        for (std::size_t ki = 0; ki < nk; ++ki) {
            NetShieldCell c;
            c.model = mi;
            c.k = config.netshield_k[ki];
            std::vector<double> betas, gammas;
            for (const auto &r : result.trials) {
                if (r.model != mi || r.k != c.k)
                    continue;
                if (r.skipped) {
                    ++c.trials_skipped;
                    continue;
                }
                ++c.trials_used;
                betas.push_back(r.beta);
                gammas.push_back(r.gamma_ratio);
                c.mean_lambda_netshield += r.lambda_netshield;
                c.mean_lambda_degree += r.lambda_degree;
                c.mean_lcc_netshield += static_cast<double>(r.lcc_netshield);
                c.mean_lcc_degree += static_cast<double>(r.lcc_degree);
            }
            c.beta = meanStd(betas).mean;
            c.gamma_ratio = meanStd(gammas).mean;
            const double used = c.trials_used ? static_cast<double>(c.trials_used) : NAN;
            c.mean_lambda_netshield /= used;
            c.mean_lambda_degree /= used;
            c.mean_lcc_netshield /= used;
            c.mean_lcc_degree /= used;
            if (c.trials_used == 0)
                result.warnings.push_back("NetShield cell " + modelLabel(config.models[mi]) + "/k="
                                          + std::to_string(c.k) + " is empty: every trial skipped");
            result.cells.push_back(c);
        }
    }
    return result;
}

} // namespace netrobust
