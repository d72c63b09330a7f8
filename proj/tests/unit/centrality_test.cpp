#include "oracles.hpp"

#include <netrobust/centrality.hpp>
#include <netrobust/errors.hpp>
#include <netrobust/generators.hpp>
#include <netrobust/spectral.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

using namespace netrobust;
namespace gen = netrobust::generators;

namespace {

using Scores = std::vector<double>;

const Graph &trianglePendant() {
    static const Graph g = oracle::fromPairs(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    return g;
}

} // namespace

TEST(Degree, Examples) {
    EXPECT_EQ(degreeCentrality(gen::complete(3)).scores, (Scores{2, 2, 2}));
    EXPECT_EQ(degreeCentrality(gen::star(4)).scores, (Scores{4, 1, 1, 1, 1}));
    EXPECT_EQ(degreeCentrality(gen::path(3)).scores, (Scores{1, 2, 1}));
    EXPECT_EQ(degreeCentrality(gen::path(3)).metric, Metric::Degree);
}

TEST(HIndex, Examples) {
    EXPECT_EQ(hIndexCentrality(gen::complete(3)).scores, (Scores{2, 2, 2}));
    EXPECT_EQ(hIndexCentrality(gen::star(4)).scores, (Scores{1, 1, 1, 1, 1}));
    EXPECT_EQ(hIndexCentrality(gen::petersen()).scores, Scores(10, 3.0));
    EXPECT_EQ(hIndexCentrality(gen::erdosRenyi(5, 0.0, 1)).scores, Scores(5, 0.0));
}

TEST(HIndex, MatchesBruteForceOnErdosRenyi) {
    const Graph g = gen::erdosRenyi(30, 0.2, 42);
    EXPECT_EQ(hIndexCentrality(g).scores, oracle::bruteHIndex(g));
}

TEST(Coreness, Examples) {
    EXPECT_EQ(corenessCentrality(gen::complete(3)).scores, (Scores{2, 2, 2}));
    EXPECT_EQ(corenessCentrality(gen::star(4)).scores, Scores(5, 1.0));
    EXPECT_EQ(corenessCentrality(trianglePendant()).scores, (Scores{2, 2, 2, 1}));
    EXPECT_EQ(oracle::bruteCorenessSubsets(trianglePendant()), (Scores{2, 2, 2, 1}));
    EXPECT_EQ(corenessCentrality(gen::erdosRenyi(4, 0.0, 1)).scores, Scores(4, 0.0));
}

TEST(Coreness, MatchesSubsetSearchOnSmallGraphs) {
    std::mt19937_64 rng(8);
    for (int round = 0; round < 60; ++round) {
        const Graph g = oracle::randomGraph(3 + rng() % 10, 0.2 + 0.5 * (rng() % 10) / 10.0, rng);
        ASSERT_LE(g.numberOfNodes(), 12u);
        EXPECT_EQ(corenessCentrality(g).scores, oracle::bruteCorenessSubsets(g));
    }
}

TEST(Eigenvector, Examples) {
    const auto k3 = eigenvectorCentrality(gen::complete(3));
    for (double x : k3.scores)
        EXPECT_NEAR(x, 1.0 / std::sqrt(3.0), 1e-9);

    const auto star = eigenvectorCentrality(gen::star(4));
    EXPECT_NEAR(star.scores[0], 1.0 / std::sqrt(2.0), 1e-9);
    for (node leaf = 1; leaf <= 4; ++leaf)
        EXPECT_NEAR(star.scores[leaf], 1.0 / (2.0 * std::sqrt(2.0)), 1e-9);
    const auto dense = oracle::denseDominant(gen::star(4));
    for (node u = 0; u < 5; ++u)
        EXPECT_NEAR(star.scores[u], dense.vector[u], 1e-9);

    for (const Graph &regular : {gen::petersen(), gen::cycle(9), gen::complete(6)}) {
        const auto e = eigenvectorCentrality(regular);
        const double uniform = 1.0 / std::sqrt(static_cast<double>(regular.numberOfNodes()));
        for (double x : e.scores)
            EXPECT_NEAR(x, uniform, 1e-9);
    }
}

TEST(Eigenvector, EmptyEdgeGraphIsRejected) {
    try {
        eigenvectorCentrality(gen::erdosRenyi(4, 0.0, 1));
        FAIL() << "expected GraphError";
    } catch (const GraphError &e) {
        EXPECT_STREQ(e.what(), "eigenvector undefined on empty-edge graph");
    }
}

TEST(Eigenvector, NonConvergenceCarriesLastIterate) {
    const Graph g = gen::barabasiAlbert(300, 2, 4);
    try {
        eigenvectorCentrality(g, IterativeOptions{1e-15, 2});
        FAIL() << "expected NumericalError";
    } catch (const NumericalError &e) {
        EXPECT_EQ(e.last_iterate().size(), g.numberOfNodes());
    }
}

TEST(Katz, Examples) {
    for (double x : katzCentrality(gen::complete(3), 0.1).scores)
        EXPECT_NEAR(x, 1.25, 1e-9);
    for (double x : katzCentrality(gen::cycle(4), 0.1).scores)
        EXPECT_NEAR(x, 1.25, 1e-9);
    const auto p3 = katzCentrality(gen::path(3), 0.1);
    const auto expected = oracle::denseKatz(gen::path(3), 0.1);
    for (node u = 0; u < 3; ++u)
        EXPECT_NEAR(p3.scores[u], expected[u], 1e-9);
    ASSERT_TRUE(p3.alpha.has_value());
    EXPECT_EQ(*p3.alpha, 0.1);
}

TEST(Katz, DivergenceIsReported) {
    const Graph g = gen::complete(20); // lambda_1 = 19
    try {
        katzCentrality(g, 0.1);
        FAIL() << "expected NumericalError";
    } catch (const NumericalError &e) {
        EXPECT_NE(std::string(e.what()).find("alpha >= 1/lambda_1"), std::string::npos);
    }
    EXPECT_THROW(katzCentrality(g, 0.0), ConfigError);
}

TEST(Katz, MatchesDenseSolveAndIsAtLeastOne) {
    std::mt19937_64 rng(21);
    for (int round = 0; round < 30; ++round) {
        const Graph g = gen::erdosRenyi(20 + rng() % 60, 0.1, rng());
        const double lambda = std::max(oracle::denseDominant(g).value, 1e-3);
        const double alpha = 0.5 / lambda;
        const auto k = katzCentrality(g, alpha);
        const auto want = oracle::denseKatz(g, alpha);
        for (std::size_t i = 0; i < want.size(); ++i) {
            EXPECT_NEAR(k.scores[i], want[i], 1e-6 * want[i]);
            EXPECT_GE(k.scores[i], 1.0);
        }
    }
}

TEST(Katz, SmallAlphaFollowsDegreeOrder) {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 20; ++round) {
        const Graph g = gen::barabasiAlbert(80, 2, rng());
        const double lambda = spectralRadius(g).value;
        const auto katz = katzCentrality(g, 1e-4 / lambda);
        const auto deg = degreeCentrality(g).scores;
        for (node i = 0; i < g.numberOfNodes(); ++i)
            for (node j = 0; j < g.numberOfNodes(); ++j)
                if (deg[i] > deg[j])
                    ASSERT_GT(katz.scores[i], katz.scores[j]) << i << " vs " << j;
    }
}

TEST(Katz, LargeAlphaAlignsWithEigenvector) {
    std::mt19937_64 rng(41);
    for (int round = 0; round < 20; ++round) {
        const Graph g = gen::barabasiAlbert(100, 2, rng());
        const double lambda = spectralRadius(g).value;
        const auto katz = katzCentrality(g, 0.99 / lambda).scores;
        const auto eig = eigenvectorCentrality(g).scores;
        double dot = 0.0, nk = 0.0, ne = 0.0;
        for (std::size_t i = 0; i < katz.size(); ++i) {
            dot += katz[i] * eig[i];
            nk += katz[i] * katz[i];
            ne += eig[i] * eig[i];
        }
        EXPECT_GT(dot / std::sqrt(nk * ne), 0.99);
    }
}

TEST(Metrics, NamesRoundTrip) {
    for (Metric m : kAllMetrics)
        EXPECT_EQ(parseMetric(toString(m)), m);
    EXPECT_EQ(parseMetric("hindex"), Metric::HIndex);
    EXPECT_EQ(toString(Metric::HIndex), "h_index");
    EXPECT_THROW(parseMetric("betweenness"), ConfigError);
}

TEST(Metrics, ComputeDispatchesAndSizes) {
    const Graph g = gen::barabasiAlbert(50, 2, 9);
    for (Metric m : kAllMetrics) {
        const auto phi = computeCentrality(g, m, 0.05);
        EXPECT_EQ(phi.metric, m);
        EXPECT_EQ(phi.scores.size(), g.numberOfNodes());
        for (double x : phi.scores)
            EXPECT_GE(x, 0.0);
    }
}

TEST(Metrics, CsvDumpUsesLabels) {
    std::vector<std::pair<node, node>> edges{{0, 1}};
    const Graph g = Graph::fromEdges(2, edges, std::vector<label>{10, 20});
    std::ostringstream out;
    writeCentralityCsv(out, g, degreeCentrality(g));
    EXPECT_EQ(out.str(), "node_id,metric,score\n10,degree,1\n20,degree,1\n");
}
