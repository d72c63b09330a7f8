#pragma once

#include <netrobust/experiment.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace netrobust {

/// Library version reported in manifests.
std::string_view toolVersion();

/// FNV-1a 64-bit hash of a byte stream, as 16 lowercase hex digits.
std::string checksumStream(std::istream &in);
/// checksumStream over a file. Throws IoError if it cannot be read.
std::string checksumFile(const std::filesystem::path &path);

/// Everything needed to reproduce one run, written next to its result files.
struct RunManifest {
    std::string command;
    ExperimentConfig config;
    std::string tool_version{toolVersion()};
    std::string dataset_checksum;
    double duration_seconds = 0.0;
    std::vector<std::string> warnings;
    /// File names (relative to the output directory) this manifest covers.
    std::vector<std::string> files;
};

/// Pretty-printed JSON.
std::string manifestToJson(const RunManifest &manifest);
/// Inverse of manifestToJson. Throws ConfigError on malformed input.
RunManifest manifestFromJson(std::string_view json);

/// "uniform" (with p), "bc" or "benchmark": the model column of every CSV.
std::string_view modelColumn(const SurvivalModel &model);
/// p for uniform models, empty for BC.
std::string pColumn(const SurvivalModel &model);

/// One row per trial and tau point.
void writeSweepTrialsCsv(std::ostream &out, const SweepResult &sweep, std::string_view dataset, RemovalMode mode);
/// One row per (model, metric, tau) with means and standard deviations.
void writeSweepAggregateCsv(std::ostream &out, const SweepResult &sweep, std::string_view dataset,
                            RemovalMode mode);
/// Benchmark deviation of rho and gamma per non-benchmark model. Header only
/// when the sweep has no benchmark degree rows.
void writeDeviationCsv(std::ostream &out, const SweepResult &sweep, std::string_view dataset);
/// One row per (model, trial, k).
void writeNetShieldTrialsCsv(std::ostream &out, const NetShieldComparison &cmp, std::string_view dataset);
/// One row per (model, k) with trial counts and means.
void writeNetShieldAggregateCsv(std::ostream &out, const NetShieldComparison &cmp, std::string_view dataset);

/**
 * Writes sweep_trials.csv, sweep_aggregate.csv, deviation.csv and
 * manifest.json into out_dir (created if missing). The manifest's file list
 * and warnings are filled in here. Returns the paths written.
 */
std::vector<std::filesystem::path> emitSweep(const std::filesystem::path &out_dir, const SweepResult &sweep,
                                             RunManifest manifest);

/// Writes netshield_trials.csv, netshield_aggregate.csv and manifest.json.
std::vector<std::filesystem::path> emitNetShield(const std::filesystem::path &out_dir,
                                                 const NetShieldComparison &cmp, RunManifest manifest);

} // namespace netrobust
