// SPDX-License-Identifier: Apache-2.0
//
// elasim - lens-focusing antenna array link-level simulation library
// Copyright (C) 2026 The elasim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Command-line front end. `simulate` runs the rate-vs-M Monte Carlo study and
// writes CSV plus a JSON manifest; `verify` runs the analytic property sweeps.
// Exit codes: 0 success, 1 configuration or I/O error, 2 verification failure.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "elasim/experiments.hpp"
#include "elasim/report.hpp"
#include "elasim/verification.hpp"
#include "elasim/version.hpp"

namespace
{

    struct ScenarioFlags
    {
        int antennas = 0;
        double spacing = 0.0;
        double beamwidth = 0.0;
        double aperture = 0.0;
        double angular_spread = 0.0;
        double snr_db = 0.0;
        int paths = 0;
        int trials = 0;
        std::uint64_t seed = 0;
        std::vector<int> m_values;
        std::string config_path;
        std::string preset;
    };

    void add_scenario_flags(CLI::App* cmd, ScenarioFlags& flags, bool with_preset)
    {
        cmd->add_option("--antennas", flags.antennas, "Number of array elements N");
        cmd->add_option("--spacing", flags.spacing, "Element spacing d in wavelengths");
        cmd->add_option("--beamwidth", flags.beamwidth, "90% power beamwidth in wavelengths");
        cmd->add_option("--aperture", flags.aperture, "Lens aperture D in wavelengths");
        cmd->add_option("--angular-spread", flags.angular_spread,
                        "Width of the angle-of-arrival interval, degrees");
        cmd->add_option("--snr-db", flags.snr_db, "Total received SNR budget, dB");
        cmd->add_option("--paths", flags.paths, "Number of plane-wave paths L");
        cmd->add_option("--trials", flags.trials, "Monte Carlo channel realizations");
        cmd->add_option("--seed", flags.seed, "Master seed for the trial substreams");
        cmd->add_option("--M", flags.m_values, "Selection sizes, comma separated (default 1..N)")
            ->delimiter(',');
        cmd->add_option("--config", flags.config_path,
                        "JSON config file (or a run manifest); explicit flags override it")
            ->check(CLI::ExistingFile);
        if (with_preset)
            cmd->add_option("--preset", flags.preset, "Built-in parameter set: fig6 or fig7")
                ->check(CLI::IsMember({"fig6", "fig7"}));
    }

    std::string read_file(const std::string& path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw std::invalid_argument("cannot read config file: " + path);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    void write_file(const std::string& path, const std::string& content)
    {
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot open output file: " + path);
        out << content;
        out.flush();
        if (!out.good())
            throw std::runtime_error("failed writing output file: " + path);
    }

    // Defaults, then preset, then config file, then explicit flags.
    void apply_flag_overrides(const CLI::App* cmd, const ScenarioFlags& flags,
                              elasim::ScenarioConfig& config, bool allow_paths)
    {
        if (cmd->count("--antennas"))
            config.n_antennas = flags.antennas;
        if (cmd->count("--spacing"))
            config.spacing = flags.spacing;
        if (cmd->count("--beamwidth"))
            config.beamwidth = flags.beamwidth;
        if (cmd->count("--aperture"))
            config.aperture = flags.aperture;
        if (cmd->count("--angular-spread"))
            config.angular_spread = flags.angular_spread;
        if (cmd->count("--snr-db"))
            config.snr_db = flags.snr_db;
        if (cmd->count("--paths"))
        {
            if (!allow_paths)
                throw std::invalid_argument("--paths conflicts with the fig7 preset pair");
            config.n_paths = flags.paths;
        }
        if (cmd->count("--trials"))
            config.n_trials = flags.trials;
        if (cmd->count("--seed"))
            config.master_seed = flags.seed;
        if (cmd->count("--M"))
            config.m_values = flags.m_values;
    }

    struct ResolvedScenarios
    {
        std::vector<elasim::ScenarioConfig> configs;  // one entry, or two for fig7
        std::vector<std::string> labels;              // CSV filename suffix per entry
    };

    ResolvedScenarios resolve_scenarios(const CLI::App* cmd, const ScenarioFlags& flags)
    {
        ResolvedScenarios out;
        if (flags.preset == "fig7")
        {
            auto [low, high] = elasim::fig7_preset();
            out.configs = {low, high};
            out.labels = {"_L2", "_L20"};
        }
        else
        {
            out.configs = {flags.preset == "fig6" ? elasim::fig6_preset() : elasim::ScenarioConfig{}};
            out.labels = {""};
        }

        const bool single = out.configs.size() == 1;
        if (!flags.config_path.empty())
        {
            const std::string text = read_file(flags.config_path);
            for (auto& config : out.configs)
                config = elasim::config_from_json_string(text, config);
            if (!single && (out.configs[0].n_paths != 2 || out.configs[1].n_paths != 20))
                throw std::invalid_argument("config file may not set paths with the fig7 preset pair");
        }
        for (auto& config : out.configs)
            apply_flag_overrides(cmd, flags, config, single);
        for (auto& config : out.configs)
            config.validate();
        return out;
    }

    int run_simulate(const CLI::App* cmd, const ScenarioFlags& flags, const std::string& out_path,
                     int workers)
    {
        const auto started = std::chrono::steady_clock::now();
        const ResolvedScenarios scenarios = resolve_scenarios(cmd, flags);

        const std::filesystem::path out(out_path);
        const std::filesystem::path dir = out.parent_path();
        const std::string stem = out.stem().string();
        const std::string ext = out.extension().string();

        std::vector<std::string> csv_paths;
        for (const auto& label : scenarios.labels)
            csv_paths.push_back((dir / (stem + label + ext)).string());
        const std::string manifest_path = (dir / (stem + ".manifest.json")).string();

        for (std::size_t k = 0; k < scenarios.configs.size(); ++k)
        {
            const elasim::RateCurve curve = elasim::run_rate_vs_m(scenarios.configs[k], workers);
            write_file(csv_paths[k], elasim::rate_curve_to_csv(curve));
            std::cout << "wrote " << csv_paths[k] << " (" << curve.m_values.size() << " rows)\n";
        }

        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

        nlohmann::ordered_json manifest;
        manifest["command"] = "simulate";
        manifest["tool_version"] = elasim::kVersion;
        manifest["runtime_seconds"] = elapsed;
        std::vector<std::string> outputs = csv_paths;
        outputs.push_back(manifest_path);
        manifest["outputs"] = outputs;
        manifest["config"] = nlohmann::ordered_json::parse(
            elasim::config_to_json_string(scenarios.configs.front()));
        if (scenarios.configs.size() > 1)
            manifest["config_high"] = nlohmann::ordered_json::parse(
                elasim::config_to_json_string(scenarios.configs.back()));
        write_file(manifest_path, manifest.dump(2) + "\n");
        std::cout << "wrote " << manifest_path << "\n";
        return 0;
    }

    int run_verify(const CLI::App* cmd, const ScenarioFlags& flags)
    {
        const ResolvedScenarios scenarios = resolve_scenarios(cmd, flags);
        const elasim::VerifyReport report = elasim::run_verification(scenarios.configs.front());

        const elasim::SuiteResult* first_failure = nullptr;
        for (const auto& suite : report.suites)
        {
            if (suite.passed)
            {
                std::cout << suite.name << ": pass (" << suite.n_cases << " cases)\n";
            }
            else
            {
                std::cout << suite.name << ": FAIL\n";
                if (!first_failure)
                    first_failure = &suite;
            }
        }
        if (first_failure)
        {
            std::cerr << "verification failed: " << first_failure->name << " ("
                      << first_failure->detail << ")\n";
            return 2;
        }
        std::cout << "all suites passed\n";
        return 0;
    }

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Lens-focusing antenna array link simulator"};
    app.set_version_flag("--version", elasim::kVersion);
    app.require_subcommand(1);

    ScenarioFlags sim_flags;
    std::string out_path;
    int workers = 1;
    CLI::App* simulate = app.add_subcommand("simulate", "Run the rate-vs-M Monte Carlo study");
    add_scenario_flags(simulate, sim_flags, true);
    simulate->add_option("--out", out_path, "CSV output path; the manifest lands next to it")
        ->required();
    simulate->add_option("--workers", workers, "Worker threads (never changes the output)")
        ->check(CLI::Range(1, 1024));

    ScenarioFlags verify_flags;
    CLI::App* verify = app.add_subcommand("verify", "Run the analytic property sweeps");
    add_scenario_flags(verify, verify_flags, false);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try
    {
        if (simulate->parsed())
            return run_simulate(simulate, sim_flags, out_path, workers);
        return run_verify(verify, verify_flags);
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
