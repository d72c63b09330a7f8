#include <netrobust/errors.hpp>
#include <netrobust/results_io.hpp>

#include "format.hpp"

#include <json.hpp>

#include <fstream>
#include <istream>
#include <ostream>

namespace netrobust {

namespace fs = std::filesystem;
using nlohmann::json;

std::string_view toolVersion() {
    return NETROBUST_VERSION;
}

std::string checksumStream(std::istream &in) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    char buffer[1 << 16];
    while (in.read(buffer, sizeof buffer) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            hash ^= static_cast<unsigned char>(buffer[i]);
            hash *= 0x100000001b3ULL;
        }
        if (!in)
            break;
    }
    static constexpr char digits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, hash >>= 4)
        out[static_cast<std::size_t>(i)] = digits[hash & 0xf];
    return out;
}

std::string checksumFile(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError(path.string() + ": cannot open for reading");
    return checksumStream(in);
}

namespace {

json modelToJson(const SurvivalModel &m) {
    if (m.kind() == SurvivalModel::Kind::BestConnected)
        return {{"kind", "bc"}};
    return {{"kind", "uniform"}, {"p", m.p()}};
}

SurvivalModel modelFromJson(const json &j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "bc")
        return SurvivalModel::bestConnected();
    if (kind == "uniform")
        return SurvivalModel::uniform(j.at("p").get<double>());
    throw ConfigError("manifest: unknown model kind '" + kind + "'");
}

} // namespace

std::string manifestToJson(const RunManifest &manifest) {
    const auto &c = manifest.config;
    json models = json::array();
    for (const auto &m : c.models)
        models.push_back(modelToJson(m));
    json metrics = json::array();
    for (Metric m : c.metrics)
        metrics.push_back(std::string(toString(m)));

    json j;
    j["command"] = manifest.command;
    j["tool_version"] = manifest.tool_version;
    j["dataset"] = c.dataset;
    j["dataset_checksum"] = manifest.dataset_checksum;
    j["duration_seconds"] = manifest.duration_seconds;
    j["netshield_selection"] = "restricted_to_failed_nodes";
    j["config"] = {
        {"models", models},
        {"metrics", metrics},
        {"tau_grid", c.tau_grid},
        {"trials", c.trials},
        {"katz_alpha", c.katz_alpha},
        {"seed", c.seed},
        {"netshield_k", c.netshield_k},
        {"mode", std::string(toString(c.mode))},
        {"jobs", c.jobs},
        {"centrality", {{"tol", c.centrality.tol}, {"max_iter", c.centrality.max_iter}}},
        {"spectral",
         {{"tol", c.spectral.tol},
          {"max_iter", c.spectral.max_iter},
          {"method", std::string(toString(c.spectral.method))}}},
    };
    j["warnings"] = manifest.warnings;
    j["files"] = manifest.files;
    return j.dump(2) + "\n";
}

RunManifest manifestFromJson(std::string_view text) {
    try {
        const json j = json::parse(text);
        RunManifest m;
        m.command = j.at("command").get<std::string>();
        m.tool_version = j.at("tool_version").get<std::string>();
        m.dataset_checksum = j.at("dataset_checksum").get<std::string>();
        m.duration_seconds = j.at("duration_seconds").get<double>();
        m.warnings = j.at("warnings").get<std::vector<std::string>>();
        m.files = j.at("files").get<std::vector<std::string>>();

        auto &c = m.config;
        const json &cj = j.at("config");
        c.dataset = j.at("dataset").get<std::string>();
        for (const auto &mj : cj.at("models"))
            c.models.push_back(modelFromJson(mj));
        for (const auto &name : cj.at("metrics"))
            c.metrics.push_back(parseMetric(name.get<std::string>()));
        c.tau_grid = cj.at("tau_grid").get<std::vector<double>>();
        c.trials = cj.at("trials").get<count>();
        c.katz_alpha = cj.at("katz_alpha").get<double>();
        c.seed = cj.at("seed").get<std::uint64_t>();
        c.netshield_k = cj.at("netshield_k").get<std::vector<count>>();
        c.mode = parseRemovalMode(cj.at("mode").get<std::string>());
        c.jobs = cj.at("jobs").get<unsigned>();
        c.centrality.tol = cj.at("centrality").at("tol").get<double>();
        c.centrality.max_iter = cj.at("centrality").at("max_iter").get<count>();
        c.spectral.tol = cj.at("spectral").at("tol").get<double>();
        c.spectral.max_iter = cj.at("spectral").at("max_iter").get<count>();
        c.spectral.method = parseEigenMethod(cj.at("spectral").at("method").get<std::string>());
        return m;
    } catch (const json::exception &e) {
        throw ConfigError(std::string("manifest: ") + e.what());
    }
}

std::string_view modelColumn(const SurvivalModel &model) {
    return model.name();
}

std::string pColumn(const SurvivalModel &model) {
    if (model.kind() == SurvivalModel::Kind::BestConnected)
        return {};
    return detail::formatReal(model.p());
}

namespace {

std::string real(double x) {
    return detail::formatReal(x);
}

} // namespace

void writeSweepTrialsCsv(std::ostream &out, const SweepResult &sweep, std::string_view dataset, RemovalMode mode) {
    out << "dataset,mode,model,p,metric,tau,trial,seed,requested_removed,actually_removed,"
           "lambda1_base,lambda1_tilde,lcc_base,lcc_tilde,rho,gamma\n";
    for (const auto &r : sweep.trials) {
        const auto &model = sweep.models[r.model];
        out << dataset << ',' << toString(mode) << ',' << modelColumn(model) << ',' << pColumn(model) << ','
            << toString(r.metric) << ',' << real(r.tau) << ',' << r.trial << ',' << r.seed << ','
            << r.requested_removed << ',' << r.actually_removed << ',' << real(sweep.lambda_base) << ','
            << real(r.lambda_tilde) << ',' << sweep.lcc_base << ',' << r.lcc_tilde << ',' << real(r.rho) << ','
            << real(r.gamma) << '\n';
    }
}

void writeSweepAggregateCsv(std::ostream &out, const SweepResult &sweep, std::string_view dataset,
                            RemovalMode mode) {
    out << "dataset,mode,model,p,metric,tau,trials,requested_removed,mean_actually_removed,"
           "lambda1_base,mean_lambda1_tilde,lcc_base,mean_lcc_tilde,mean_rho,std_rho,mean_gamma,std_gamma\n";
    for (const auto &c : sweep.cells) {
        const auto &model = sweep.models[c.model];
        out << dataset << ',' << toString(mode) << ',' << modelColumn(model) << ',' << pColumn(model) << ','
            << toString(c.metric) << ',' << real(c.tau) << ',' << c.trials << ',' << c.requested_removed << ','
            << real(c.mean_actually_removed) << ',' << real(sweep.lambda_base) << ','
            << real(c.mean_lambda_tilde) << ',' << sweep.lcc_base << ',' << real(c.mean_lcc_tilde) << ','
            << real(c.mean_rho) << ',' << real(c.std_rho) << ',' << real(c.mean_gamma) << ','
            << real(c.std_gamma) << '\n';
    }
}

void writeDeviationCsv(std::ostream &out, const SweepResult &sweep, std::string_view dataset) {
    out << "dataset,model,p,rho_deviation_percent,gamma_deviation_percent,points\n";
    const bool hasBenchmark = [&] {
        for (const auto &c : sweep.cells)
            if (c.metric == Metric::Degree && sweep.models[c.model].isBenchmark())
                return true;
        return false;
    }();
    if (!hasBenchmark)
        return;
    const auto rho = benchmarkDeviation(sweep, Observable::Rho);
    const auto gamma = benchmarkDeviation(sweep, Observable::Gamma);
    for (std::size_t i = 0; i < rho.size(); ++i)
        out << dataset << ',' << modelColumn(rho[i].model) << ',' << pColumn(rho[i].model) << ','
            << real(rho[i].percent) << ',' << real(gamma[i].percent) << ',' << rho[i].points << '\n';
}

void writeNetShieldTrialsCsv(std::ostream &out, const NetShieldComparison &cmp, std::string_view dataset) {
    out << "dataset,model,p,k,trial,beta,gamma_ratio,skipped_flag\n";
    for (const auto &r : cmp.trials) {
        const auto &model = cmp.models[r.model];
        out << dataset << ',' << modelColumn(model) << ',' << pColumn(model) << ',' << r.k << ',' << r.trial
            << ',';
        if (r.skipped)
            out << ",,1\n";
        else
            out << real(r.beta) << ',' << real(r.gamma_ratio) << ",0\n";
    }
}

void writeNetShieldAggregateCsv(std::ostream &out, const NetShieldComparison &cmp, std::string_view dataset) {
    out << "dataset,model,p,k,trials_used,trials_skipped,beta,gamma_ratio,mean_lambda1_netshield,"
           "mean_lambda1_degree,mean_lcc_netshield,mean_lcc_degree,lambda1_base,lcc_base\n";
    for (const auto &c : cmp.cells) {
        const auto &model = cmp.models[c.model];
        out << dataset << ',' << modelColumn(model) << ',' << pColumn(model) << ',' << c.k << ','
            << c.trials_used << ',' << c.trials_skipped << ',' << real(c.beta) << ',' << real(c.gamma_ratio)
            << ',' << real(c.mean_lambda_netshield) << ',' << real(c.mean_lambda_degree) << ','
            << real(c.mean_lcc_netshield) << ',' << real(c.mean_lcc_degree) << ',' << real(cmp.lambda_base)
            << ',' << cmp.lcc_base << '\n';
    }
}

namespace {

template <typename Writer>
fs::path writeFile(const fs::path &path, Writer &&writer) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError(path.string() + ": cannot open for writing");
    writer(out);
    out.flush();
    if (!out)
        throw IoError(path.string() + ": write failed");
    return path;
}

void prepareDirectory(const fs::path &dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw IoError(dir.string() + ": " + ec.message());
}

void appendWarnings(RunManifest &manifest, const std::vector<std::string> &warnings) {
    manifest.warnings.insert(manifest.warnings.end(), warnings.begin(), warnings.end());
}

} // namespace

std::vector<fs::path> emitSweep(const fs::path &out_dir, const SweepResult &sweep, RunManifest manifest) {
    prepareDirectory(out_dir);
    const std::string &dataset = manifest.config.dataset;
    const RemovalMode mode = manifest.config.mode;
    std::vector<fs::path> written;
    written.push_back(writeFile(out_dir / "sweep_trials.csv",
                                [&](std::ostream &o) { writeSweepTrialsCsv(o, sweep, dataset, mode); }));
    written.push_back(writeFile(out_dir / "sweep_aggregate.csv",
                                [&](std::ostream &o) { writeSweepAggregateCsv(o, sweep, dataset, mode); }));
    written.push_back(writeFile(out_dir / "deviation.csv",
                                [&](std::ostream &o) { writeDeviationCsv(o, sweep, dataset); }));
    appendWarnings(manifest, sweep.warnings);
    manifest.files = {"sweep_trials.csv", "sweep_aggregate.csv", "deviation.csv"};
    const std::string text = manifestToJson(manifest);
    written.push_back(writeFile(out_dir / "manifest.json", [&](std::ostream &o) { o << text; }));
    return written;
}

std::vector<fs::path> emitNetShield(const fs::path &out_dir, const NetShieldComparison &cmp, RunManifest manifest) {
    prepareDirectory(out_dir);
    const std::string &dataset = manifest.config.dataset;
    std::vector<fs::path> written;
    written.push_back(writeFile(out_dir / "netshield_trials.csv",
                                [&](std::ostream &o) { writeNetShieldTrialsCsv(o, cmp, dataset); }));
    written.push_back(writeFile(out_dir / "netshield_aggregate.csv",
                                [&](std::ostream &o) { writeNetShieldAggregateCsv(o, cmp, dataset); }));
    appendWarnings(manifest, cmp.warnings);
    manifest.files = {"netshield_trials.csv", "netshield_aggregate.csv"};
    const std::string text = manifestToJson(manifest);
    written.push_back(writeFile(out_dir / "manifest.json", [&](std::ostream &o) { o << text; }));
    return written;
}

} // namespace netrobust
