// specnoise command-line driver.
//
// Subcommands:
//   run              execute one pipeline from a JSON config
//   sweep            execute a list of configs (or a base config x S values)
//   validate-config  parse and validate a config, print the normalized form
//
// Exit codes: 0 success, 2 config error, 3 numerical failure.

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <Eigen/Core>

#include "specnoise/pipeline.hpp"

using specnoise::json;
using specnoise::RunConfig;

namespace {

json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw specnoise::ConfigError("cannot open config file: " + path);
    try {
        return json::parse(f);
    } catch (const json::exception& e) {
        throw specnoise::ConfigError("config parse error in " + path + ": " +
                                     e.what());
    }
}

void apply_overrides(RunConfig& c, const std::optional<std::uint64_t>& seed,
                     const std::string& out) {
    if (seed) {
        c.seed = *seed;
        c.ensemble.seed = *seed;
    }
    if (!out.empty()) c.out_dir = out;
}

// A sweep file is either {"configs": [ ... ]} or {"base": {...}, "S": [...]}.
std::vector<RunConfig> sweep_configs(const json& j) {
    std::vector<RunConfig> configs;
    if (j.contains("configs")) {
        for (const auto& item : j.at("configs"))
            configs.push_back(specnoise::runconfig_from_json(item));
    } else if (j.contains("base") && j.contains("S")) {
        const RunConfig base = specnoise::runconfig_from_json(j.at("base"));
        for (const auto& s : j.at("S")) {
            RunConfig c = base;
            c.model.S = s.get<double>();
            char tag[32];
            std::snprintf(tag, sizeof(tag), "S_%g", c.model.S);
            c.out_dir = (std::filesystem::path(base.out_dir) / tag).string();
            configs.push_back(c);
        }
    } else {
        throw specnoise::ConfigError(
            "sweep config needs \"configs\" or \"base\"+\"S\"");
    }
    return configs;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral-noise pipelines for driven quantum systems"};
    app.require_subcommand(1);

    std::string config_path, out_dir;
    std::optional<std::uint64_t> seed;
    int threads = 1;
    app.add_option("--threads", threads, "worker threads (linear algebra)");

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file")
            ->required();
        sub->add_option("--seed", seed, "override the root seed");
        sub->add_option("--out", out_dir, "override the output directory");
    };
    CLI::App* cmd_run = app.add_subcommand("run", "execute one pipeline");
    CLI::App* cmd_sweep = app.add_subcommand("sweep", "execute a config list");
    CLI::App* cmd_validate =
        app.add_subcommand("validate-config", "check a config file");
    add_common(cmd_run);
    add_common(cmd_sweep);
    cmd_validate->add_option("--config", config_path, "JSON config file")
        ->required();

    CLI11_PARSE(app, argc, argv);
    Eigen::setNbThreads(threads);

    try {
        if (cmd_validate->parsed()) {
            const json j = load_json(config_path);
            if (j.contains("configs") || j.contains("base")) {
                auto configs = sweep_configs(j);
                std::cout << "ok: sweep with " << configs.size()
                          << " configs\n";
            } else {
                RunConfig c = specnoise::runconfig_from_json(j);
                std::cout << specnoise::to_json(c).dump(2) << "\n";
            }
            return 0;
        }
        if (cmd_run->parsed()) {
            RunConfig c = specnoise::runconfig_from_json(load_json(config_path));
            apply_overrides(c, seed, out_dir);
            specnoise::RunReport rep = specnoise::run(c);
            std::cout << rep.summary.dump(2) << "\n";
            return 0;
        }
        // sweep
        auto configs = sweep_configs(load_json(config_path));
        for (auto& c : configs) {
            std::optional<std::uint64_t> no_seed = seed;
            apply_overrides(c, no_seed, "");
            if (!out_dir.empty())
                c.out_dir = (std::filesystem::path(out_dir) /
                             std::filesystem::path(c.out_dir).filename())
                                .string();
        }
        auto reports = specnoise::sweep(configs);
        bool any_failed = false;
        for (std::size_t i = 0; i < reports.size(); ++i) {
            if (reports[i].ok) {
                std::cout << reports[i].summary.dump() << "\n";
            } else {
                any_failed = true;
                std::cerr << "run " << i << " failed: " << reports[i].error
                          << "\n";
            }
        }
        return any_failed ? 3 : 0;
    } catch (const specnoise::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const specnoise::NumericError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
