#include "cli_options.hpp"

#include <netrobust/errors.hpp>
#include <netrobust/results_io.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>

namespace netrobust::cli {

namespace {

struct RawOptions {
    std::string graph;
    std::string format = "konect";
    std::vector<std::string> models;
    std::vector<double> ps;
    std::vector<std::string> metrics;
    std::string mode = "stochastic";
    double tau_max = 0.18;
    double tau_step = 0.02;
    count trials = 20;
    std::uint64_t seed = 0;
    double katz_alpha = 0.1;
    std::vector<count> ks;
    unsigned jobs = 1;
    std::string out = "results";
    std::string eigen_method = "lanczos";
};

void addOptions(CLI::App &app, RawOptions &o) {
    auto env = [](const char *name) { return std::string("NETROBUST_") + name; };
    app.add_option("--graph", o.graph, "Edge-list file")->envname(env("GRAPH"));
    app.add_option("--format", o.format, "Edge-list format: konect, snap or plain")
        ->check(CLI::IsMember({"konect", "snap", "plain"}))
        ->envname(env("FORMAT"));
    app.add_option("--model", o.models, "Survival model: uniform, bc or benchmark (repeatable)")
        ->delimiter(',')
        ->check(CLI::IsMember({"uniform", "bc", "benchmark"}))
        ->envname(env("MODEL"));
    app.add_option("--p", o.ps, "Uniform survival probability (repeatable)")
        ->delimiter(',')
        ->check(CLI::Range(0.0, 1.0))
        ->envname(env("P"));
    app.add_option("--metric", o.metrics, "Centrality: degree, h_index, coreness, eigenvector, katz (repeatable)")
        ->delimiter(',')
        ->check(CLI::IsMember({"degree", "h_index", "hindex", "h-index", "coreness", "eigenvector", "katz"}))
        ->envname(env("METRIC"));
    app.add_option("--mode", o.mode, "Removal mode: stochastic or deterministic_score")
        ->check(CLI::IsMember({"stochastic", "deterministic_score"}))
        ->envname(env("MODE"));
    app.add_option("--tau-max", o.tau_max, "Largest target fraction")
        ->check(CLI::Range(0.0, 1.0))
        ->envname(env("TAU_MAX"));
    app.add_option("--tau-step", o.tau_step, "Target fraction grid step")
        ->check(CLI::PositiveNumber & CLI::Range(0.0, 1.0))
        ->envname(env("TAU_STEP"));
    app.add_option("--trials", o.trials, "Trials per cell")->check(CLI::PositiveNumber)->envname(env("TRIALS"));
    app.add_option("--seed", o.seed, "Master seed")->envname(env("SEED"));
    app.add_option("--katz-alpha", o.katz_alpha, "Katz attenuation factor")
        ->check(CLI::PositiveNumber)
        ->envname(env("KATZ_ALPHA"));
    app.add_option("--k", o.ks, "NetShield budgets, e.g. 1,2,5,10,15")
        ->delimiter(',')
        ->check(CLI::PositiveNumber)
        ->envname(env("K"));
    app.add_option("--jobs", o.jobs, "Maximum concurrent trials")->check(CLI::PositiveNumber)->envname(env("JOBS"));
    app.add_option("--out", o.out, "Output directory")->envname(env("OUT"));
    app.add_option("--eigen-method", o.eigen_method, "Dominant eigenpair solver: lanczos or power")
        ->check(CLI::IsMember({"lanczos", "power"}))
        ->envname(env("EIGEN_METHOD"));
    app.set_config("--config", "", "key=value configuration file (flag names without dashes)");
    app.allow_config_extras(CLI::config_extras_mode::error);
}

std::vector<SurvivalModel> buildModels(const RawOptions &o, Command command, bool &explicit_models) {
    explicit_models = !o.models.empty() || !o.ps.empty();
    if (!explicit_models)
        return ExperimentConfig::defaults().models;

    std::vector<SurvivalModel> models;
    auto add = [&](const SurvivalModel &m) {
        if (std::find(models.begin(), models.end(), m) == models.end())
            models.push_back(m);
    };
    const bool wantsUniform = o.models.empty()
                              || std::find(o.models.begin(), o.models.end(), "uniform") != o.models.end();
    if (!o.ps.empty() && !wantsUniform)
        throw UsageError("--p only applies to --model uniform");
    for (const auto &name : o.models) {
        if (name == "bc") {
            add(SurvivalModel::bestConnected());
        } else if (name == "benchmark") {
            add(SurvivalModel::benchmark());
        } else if (o.ps.empty()) {
            for (double p : {0.1, 0.3, 0.5})
                add(SurvivalModel::uniform(p));
        } else {
            for (double p : o.ps)
                add(SurvivalModel::uniform(p));
        }
    }
    if (o.models.empty())
        for (double p : o.ps)
            add(SurvivalModel::uniform(p));
    if (command == Command::Sweep)
        add(SurvivalModel::benchmark());
    return models;
}

/// Turns NETROBUST_* variables into arguments for flags absent from the command line, so they
/// outrank the config file (which CLI11 would otherwise apply first) but not explicit flags.
std::vector<std::string> withEnvironment(const CLI::App &app, std::vector<std::string> args) {
    const std::vector<std::string> given = args;
    for (const CLI::Option *opt : app.get_options()) {
        const std::string &var = opt->get_envname();
        const char *value = var.empty() ? nullptr : std::getenv(var.c_str());
        if (!value)
            continue;
        const std::string flag = opt->get_name();
        const bool present = std::any_of(given.begin(), given.end(), [&](const std::string &a) {
            return a == flag || a.starts_with(flag + "=");
        });
        if (!present) {
            args.push_back(flag);
            args.push_back(value);
        }
    }
    return args;
}

} // namespace

ParsedCli parseCli(const std::vector<std::string> &args) {
    CLI::App app{"Robustness of networks under probabilistic node failures", "netrobust"};
    app.set_version_flag("--version", std::string(toolVersion()));
    app.require_subcommand(1);

    RawOptions o;
    addOptions(app, o);
    auto *sweep = app.add_subcommand("sweep", "Effectiveness and coverage sweep over the tau grid");
    auto *shield = app.add_subcommand("netshield", "NetShield versus degree selection under failures");
    auto *central = app.add_subcommand("centrality", "Write centrality scores of the intact graph");
    auto *info = app.add_subcommand("info", "Print graph statistics");
    for (auto *sub : {sweep, shield, central, info})
        sub->fallthrough();

    // CLI11 parses in reverse order when given a vector
    const std::vector<std::string> full = withEnvironment(app, args);
    std::vector<std::string> reversed(full.rbegin(), full.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        return {std::nullopt, app.help()};
    } catch (const CLI::CallForAllHelp &) {
        return {std::nullopt, app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::CallForVersion &) {
        return {std::nullopt, std::string(toolVersion()) + "\n"};
    } catch (const CLI::ParseError &e) {
        throw UsageError(e.what());
    }

    CliRequest r;
    if (sweep->parsed())
        r.command = Command::Sweep;
    else if (shield->parsed())
        r.command = Command::NetShield;
    else if (central->parsed())
        r.command = Command::Centrality;
    else
        r.command = Command::Info;

    if (o.graph.empty())
        throw UsageError("--graph is required");
    r.graph = o.graph;
    r.out = o.out;

    try {
        r.format = parseEdgeListFormat(o.format);
        auto &c = r.config;
        c = ExperimentConfig::defaults();
        c.dataset = r.graph.filename().string();
        c.models = buildModels(o, r.command, r.explicit_models);
        if (!o.metrics.empty()) {
            c.metrics.clear();
            for (const auto &name : o.metrics) {
                const Metric m = parseMetric(name);
                if (std::find(c.metrics.begin(), c.metrics.end(), m) == c.metrics.end())
                    c.metrics.push_back(m);
            }
        }
        c.mode = parseRemovalMode(o.mode);
        c.tau_grid = makeTauGrid(o.tau_max, o.tau_step);
        c.trials = o.trials;
        c.seed = o.seed;
        c.katz_alpha = o.katz_alpha;
        if (!o.ks.empty())
            c.netshield_k = o.ks;
        c.jobs = o.jobs;
        c.spectral.method = parseEigenMethod(o.eigen_method);
        c.validate();
    } catch (const ConfigError &e) {
        throw UsageError(e.what());
    }
    return {std::move(r), {}};
}

} // namespace netrobust::cli
