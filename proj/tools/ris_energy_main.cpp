// ris-energy: RIS-aided uplink simulation and UE energy optimization
// Copyright (C) 2026 The ris-energy authors
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
// -------------------------------------------------------------------------

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ris/config.hpp"
#include "ris/experiments.hpp"

int main(int argc, char** argv) {
    CLI::App app{"RIS-aided uplink experiments: average-SNR sweeps, Monte Carlo "
                 "verification, and UE energy optimization"};
    app.set_version_flag("--version", std::string(RIS_ENERGY_VERSION));

    std::string experiment;
    std::string config_path;
    std::string out;
    std::string format;
    std::int64_t seed = -1;
    std::int64_t trials = 0;
    int threads = -1;

    app.add_option("experiment", experiment,
                   "Experiment to run (overrides run.experiment in the config)");
    app.add_option("--config", config_path, "Path to a JSON experiment config")
        ->required()
        ->check(CLI::ExistingFile);
    app.add_option("--out", out, "Output table path (default: run.out or <experiment>.csv)");
    app.add_option("--seed", seed, "Random seed override")->check(CLI::NonNegativeNumber);
    app.add_option("--trials", trials, "Monte Carlo trial count override")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", format, "Table format override")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--threads", threads, "Worker thread override (0 = hardware)")
        ->check(CLI::NonNegativeNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        ris::ExperimentConfig cfg = ris::load_config(config_path);
        if (!experiment.empty()) cfg.experiment = experiment;
        if (!out.empty()) cfg.out = out;
        if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);
        if (trials > 0) cfg.trials = trials;
        if (!format.empty()) cfg.format = format;
        if (threads >= 0) cfg.threads = threads;

        const auto& known = ris::known_experiments();
        bool ok = false;
        for (const auto& name : known) ok = ok || name == cfg.experiment;
        if (!ok) {
            std::string names;
            for (const auto& name : known) names += (names.empty() ? "" : ", ") + name;
            throw ris::ConfigError("unknown experiment " + cfg.experiment +
                                   " (known: " + names + ")");
        }
        cfg.resolved["run"]["experiment"] = cfg.experiment;
        cfg.resolved["run"]["seed"] = cfg.seed;
        cfg.resolved["run"]["trials"] = cfg.trials;
        cfg.resolved["run"]["format"] = cfg.format;
        cfg.resolved["run"]["threads"] = cfg.threads;
        return ris::run_experiment(cfg, std::cout);
    } catch (const ris::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
