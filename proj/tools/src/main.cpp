#include "cli_options.hpp"

#include <netrobust/errors.hpp>
#include <netrobust/results_io.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

namespace {

using namespace netrobust;

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNumerical = 3;

RunManifest startManifest(const cli::CliRequest &request, std::string_view command) {
    RunManifest m;
    m.command = std::string(command);
    m.config = request.config;
    m.dataset_checksum = checksumFile(request.graph);
    return m;
}

double secondsSince(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void reportWritten(const std::vector<std::filesystem::path> &paths) {
    for (const auto &p : paths)
        std::cout << "wrote " << p.string() << '\n';
}

void reportWarnings(const std::vector<std::string> &warnings) {
    for (const auto &w : warnings)
        std::cerr << "warning: " << w << '\n';
}

int runInfo(const Graph &g, const LoadReport &report, const cli::CliRequest &request) {
    const ComponentSummary components = connectedComponents(g);
    std::cout << "nodes " << g.numberOfNodes() << '\n'
              << "edges " << g.numberOfEdges() << '\n'
              << "self_loops_dropped " << report.self_loops << '\n'
              << "duplicate_edges_dropped " << report.duplicate_edges << '\n'
              << "max_degree " << g.maxDegree() << '\n'
              << "components " << components.component_count << '\n'
              << "lcc " << components.lcc_size << '\n';
    if (g.numberOfEdges() > 0)
        std::cout << "lambda1 " << spectralRadius(g, request.config.spectral).value << '\n';
    std::cout << "checksum " << checksumFile(request.graph) << '\n';
    return 0;
}

int runCentrality(const Graph &g, const cli::CliRequest &request) {
    std::filesystem::create_directories(request.out);
    std::vector<std::filesystem::path> written;
    for (Metric metric : request.config.metrics) {
        const CentralityVector phi
            = computeCentrality(g, metric, request.config.katz_alpha, request.config.centrality);
        const auto path = request.out / ("centrality_" + std::string(toString(metric)) + ".csv");
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError(path.string() + ": cannot open for writing");
        writeCentralityCsv(out, g, phi);
        if (!out.flush())
            throw IoError(path.string() + ": write failed");
        written.push_back(path);
    }
    reportWritten(written);
    return 0;
}

int runSweepCommand(const Graph &g, const cli::CliRequest &request) {
    const auto start = std::chrono::steady_clock::now();
    RunManifest manifest = startManifest(request, "sweep");
    const SweepResult sweep = runSweep(g, request.config);
    manifest.duration_seconds = secondsSince(start);
    reportWarnings(sweep.warnings);
    reportWritten(emitSweep(request.out, sweep, std::move(manifest)));
    return 0;
}

int runNetShieldCommand(const Graph &g, const cli::CliRequest &request) {
    const auto start = std::chrono::steady_clock::now();
    RunManifest manifest = startManifest(request, "netshield");
    const NetShieldComparison cmp = runNetShieldComparison(g, request.config);
    manifest.duration_seconds = secondsSince(start);
    reportWarnings(cmp.warnings);
    reportWritten(emitNetShield(request.out, cmp, std::move(manifest)));
    return 0;
}

int run(const cli::CliRequest &request) {
    const LoadedGraph loaded = loadEdgeListFile(request.graph, request.format);
    if (loaded.report.self_loops > 0 || loaded.report.duplicate_edges > 0)
        std::cerr << "note: dropped " << loaded.report.self_loops << " self-loops and "
                  << loaded.report.duplicate_edges << " duplicate edges\n";
    switch (request.command) {
    case cli::Command::Info:
        return runInfo(loaded.graph, loaded.report, request);
    case cli::Command::Centrality:
        return runCentrality(loaded.graph, request);
    case cli::Command::Sweep:
        return runSweepCommand(loaded.graph, request);
    case cli::Command::NetShield:
        return runNetShieldCommand(loaded.graph, request);
    }
    return kExitUsage;
}

} // namespace

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        const cli::ParsedCli parsed = cli::parseCli(args);
        if (!parsed.request) {
            std::cout << parsed.text;
            return 0;
        }
        return run(*parsed.request);
    } catch (const cli::UsageError &e) {
        std::cerr << "usage error: " << e.what() << "\nrun 'netrobust --help' for the option list\n";
        return kExitUsage;
    } catch (const ConfigError &e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NumericalError &e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
}
