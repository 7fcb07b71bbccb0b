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

#ifndef RIS_CONFIG_HPP
#define RIS_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ris/channel.hpp"
#include "ris/energy_opt.hpp"

namespace ris {

// Configuration problems carry the offending field (or file position) so the
// CLI can point at exactly what to fix.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& message) : std::runtime_error(message) {}
};

// A fully resolved run description. Every field is already converted to
// linear units / domain types; `resolved` echoes the effective settings
// (defaults included) for the output sidecar.
struct ExperimentConfig {
    ChannelScenario scenario;

    // Present when the config has a "plan" block. plan.payload_symbols is 0
    // when the block carries a sweep instead of a single length.
    std::optional<TransmissionPlan> plan;
    std::vector<double> payload_sweep_symbols;

    // Link powers for the SNR experiments ("link" block).
    std::optional<double> data_power_w;
    std::vector<double> pilot_powers_w; // entries may be +inf
    double pilot_power_min_w = 1e-4;    // energy-surface grid
    double pilot_power_max_w = 1.0;
    int pilot_power_points = 25;

    // Run mechanics ("run" block).
    std::string experiment;
    long long trials = 10000;
    std::uint64_t seed = 1;
    std::string out;    // empty: derived from the experiment name
    std::string format = "csv";
    int threads = 1;    // 0 = hardware concurrency
    bool verify = false;

    nlohmann::ordered_json resolved;
};

// Parses and validates an in-memory document. Unknown keys, missing required
// fields, and out-of-range values raise ConfigError naming the field.
ExperimentConfig parse_config(const nlohmann::ordered_json& document);

// Reads `path`, reporting JSON syntax errors with a line/column diagnostic.
ExperimentConfig load_config(const std::string& path);

// The experiment names run_experiment understands, in display order.
const std::vector<std::string>& known_experiments();

} // namespace ris

#endif
