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

#ifndef RIS_EXPERIMENTS_HPP
#define RIS_EXPERIMENTS_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ris/config.hpp"

namespace ris {

// An optimization-based experiment could not produce a usable optimum; the
// message carries the case report for the nonzero-exit path.
class InfeasibleError : public std::runtime_error {
  public:
    explicit InfeasibleError(const std::string& message) : std::runtime_error(message) {}
};

// One row per sweep point; cells are JSON scalars keyed by column name.
// Infinite powers are stored as the string "inf" so both output formats
// round-trip them.
struct ResultTable {
    std::vector<std::string> columns;
    std::vector<nlohmann::ordered_json> rows;
};

// Computes the experiment named by config.experiment without touching the
// filesystem. Throws ConfigError when the config lacks a block the experiment
// needs, InfeasibleError when an optimizer fails to converge.
ResultTable build_table(const ExperimentConfig& config);

// RFC-4180-style CSV: header row, comma separator, '.' decimal separator,
// doubles at full precision, LF line endings.
std::string table_to_csv(const ResultTable& table);

// The same table as a JSON array of row objects.
std::string table_to_json(const ResultTable& table);

// Writes through a temp file in the target directory plus an atomic rename,
// creating parent directories as needed.
void write_file_atomic(const std::string& path, const std::string& content);

struct RunPaths {
    std::string table_path;
    std::string sidecar_path;
};

// Output locations: run.out (or "<experiment>.<format>" when empty) and the
// "<table stem>.meta.json" sidecar next to it.
RunPaths output_paths(const ExperimentConfig& config);

// Builds the table, writes it with its sidecar, and prints a short report.
// Exit status: 0 on success, 3 on infeasible optimization, 4 when mc-verify
// finds a failing check. Config problems propagate as ConfigError.
int run_experiment(const ExperimentConfig& config, std::ostream& report);

} // namespace ris

#endif
