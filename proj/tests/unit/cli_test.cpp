#include "cli_options.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace netrobust;
using namespace netrobust::cli;

namespace {

CliRequest parse(const std::vector<std::string> &args) {
    const ParsedCli parsed = parseCli(args);
    if (!parsed.request)
        throw std::runtime_error("no request");
    return *parsed.request;
}

} // namespace

TEST(Cli, SweepExample) {
    const auto r = parse({"sweep", "--graph", "pg.txt", "--model", "uniform", "--p", "0.1", "--metric", "degree",
                          "--tau-max", "0.18", "--trials", "20", "--seed", "7"});
    EXPECT_EQ(r.command, Command::Sweep);
    EXPECT_EQ(r.graph, "pg.txt");
    const auto &c = r.config;
    EXPECT_EQ(c.tau_grid, makeTauGrid(0.18, 0.02));
    EXPECT_EQ(c.tau_grid.size(), 10u);
    EXPECT_EQ(c.trials, 20u);
    EXPECT_EQ(c.seed, 7u);
    EXPECT_EQ(c.metrics, (std::vector<Metric>{Metric::Degree}));
    ASSERT_EQ(c.models.size(), 2u);
    EXPECT_EQ(c.models[0], SurvivalModel::uniform(0.1));
    EXPECT_TRUE(c.models[1].isBenchmark()) << "sweeps always carry the benchmark";
    EXPECT_EQ(c.katz_alpha, 0.1);
}

TEST(Cli, NetShieldExample) {
    const auto r = parse({"netshield", "--graph", "pg.txt", "--k", "1,2,5,10,15", "--model", "bc"});
    EXPECT_EQ(r.command, Command::NetShield);
    EXPECT_EQ(r.config.netshield_k, (std::vector<count>{1, 2, 5, 10, 15}));
    EXPECT_EQ(r.config.models, (std::vector<SurvivalModel>{SurvivalModel::bestConnected()}));
}

TEST(Cli, OutOfRangeIsUsageError) {
    EXPECT_THROW(parse({"sweep", "--p", "1.5"}), UsageError);
    EXPECT_THROW(parse({"sweep", "--graph", "g", "--p", "1.5"}), UsageError);
    EXPECT_THROW(parse({"sweep", "--graph", "g", "--trials", "0"}), UsageError);
    EXPECT_THROW(parse({"sweep", "--graph", "g", "--metric", "betweenness"}), UsageError);
    EXPECT_THROW(parse({"sweep", "--graph", "g", "--bogus"}), UsageError);
    EXPECT_THROW(parse({"--graph", "g"}), UsageError);
    EXPECT_THROW(parse({"sweep"}), UsageError);
    EXPECT_THROW(parse({"sweep", "--graph", "g", "--model", "bc", "--p", "0.2"}), UsageError);
}

TEST(Cli, DefaultsApplied) {
    const auto r = parse({"sweep", "--graph", "g.txt"});
    const auto d = ExperimentConfig::defaults();
    EXPECT_EQ(r.config.models, d.models);
    EXPECT_EQ(r.config.metrics, d.metrics);
    EXPECT_EQ(r.config.tau_grid, d.tau_grid);
    EXPECT_EQ(r.config.trials, d.trials);
    EXPECT_EQ(r.format, EdgeListFormat::Konect);
    EXPECT_FALSE(r.explicit_models);
}

TEST(Cli, RepeatedModelsAndPs) {
    const auto r = parse({"sweep", "--graph", "g", "--p", "0.1", "--p", "0.5", "--model", "bc", "--model", "uniform"});
    EXPECT_EQ(r.config.models,
              (std::vector<SurvivalModel>{SurvivalModel::bestConnected(), SurvivalModel::uniform(0.1),
                                          SurvivalModel::uniform(0.5), SurvivalModel::benchmark()}));
}

TEST(Cli, HelpAndVersion) {
    const auto help = parseCli({"--help"});
    EXPECT_FALSE(help.request.has_value());
    EXPECT_NE(help.text.find("sweep"), std::string::npos);
    const auto version = parseCli({"--version"});
    EXPECT_FALSE(version.request.has_value());
}

TEST(Cli, ConfigFileAndPrecedence) {
    const auto path = std::filesystem::temp_directory_path() / "netrobust_cli_test.conf";
    {
        std::ofstream out(path);
        out << "graph = \"from_file.txt\"\ntrials = 7\nseed = 11\nmetric = [\"coreness\", \"katz\"]\n";
    }
    const auto fromFile = parse({"sweep", "--config", path.string()});
    EXPECT_EQ(fromFile.graph, "from_file.txt");
    EXPECT_EQ(fromFile.config.trials, 7u);
    EXPECT_EQ(fromFile.config.metrics, (std::vector<Metric>{Metric::Coreness, Metric::Katz}));

    const auto flagWins = parse({"sweep", "--config", path.string(), "--trials", "3"});
    EXPECT_EQ(flagWins.config.trials, 3u);
    EXPECT_EQ(flagWins.config.seed, 11u);

    ::setenv("NETROBUST_TRIALS", "9", 1);
    const auto envOverFile = parse({"sweep", "--config", path.string()});
    EXPECT_EQ(envOverFile.config.trials, 9u);
    const auto flagOverEnv = parse({"sweep", "--config", path.string(), "--trials", "2"});
    EXPECT_EQ(flagOverEnv.config.trials, 2u);
    ::unsetenv("NETROBUST_TRIALS");

    {
        std::ofstream out(path);
        out << "graph = \"g\"\nunknown_key = 1\n";
    }
    EXPECT_THROW(parse({"sweep", "--config", path.string()}), UsageError);
    std::filesystem::remove(path);
}
