#pragma once

#include <netrobust/edge_list.hpp>
#include <netrobust/experiment.hpp>

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace netrobust::cli {

enum class Command { Sweep, NetShield, Centrality, Info };

/// Bad flag, bad value or missing argument. Maps to exit code 1.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CliRequest {
    Command command = Command::Sweep;
    std::filesystem::path graph;
    EdgeListFormat format = EdgeListFormat::Konect;
    std::filesystem::path out = "results";
    /// Validated, with defaults applied for everything not given.
    ExperimentConfig config;
    /// Set when the user passed at least one --model or --p.
    bool explicit_models = false;
};

struct ParsedCli {
    /// Empty when help or version output was requested.
    std::optional<CliRequest> request;
    /// Help or version text to print.
    std::string text;
};

/**
 * Parses argv[1..] (the program name excluded). Precedence is command-line
 * flags, then NETROBUST_* environment variables, then the --config file, then
 * defaults. Throws UsageError with a readable message.
 *
 * --model takes uniform, bc or benchmark and may repeat; each --p value adds
 * one uniform model, and --p without --model implies uniform. A sweep always
 * carries the benchmark model so deviations can be reported.
 */
ParsedCli parseCli(const std::vector<std::string> &args);

} // namespace netrobust::cli
