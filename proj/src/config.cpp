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

#include "ris/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "ris/units.hpp"

namespace ris {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& field, const std::string& message) {
    throw ConfigError("config field " + field + ": " + message);
}

// Strict accessor for one JSON object: every key must be consumed by a typed
// getter, and finish() rejects whatever is left over.
class Block {
  public:
    Block(const ordered_json& node, std::string path) : node_(node), path_(std::move(path)) {
        if (!node_.is_object()) throw ConfigError("config block " + path_ + " must be an object");
    }

    bool has(const char* key) const { return node_.contains(key); }

    std::string field(const char* key) const { return path_ + "." + key; }

    double number(const char* key) {
        const auto& v = require(key);
        if (!v.is_number()) fail(field(key), "expected a number");
        const double x = v.get<double>();
        if (!std::isfinite(x)) fail(field(key), "must be finite");
        return x;
    }

    double number_or(const char* key, double fallback) {
        return has(key) ? number(key) : fallback;
    }

    long long integer(const char* key) {
        const auto& v = require(key);
        if (!v.is_number_integer()) fail(field(key), "expected an integer");
        return v.get<long long>();
    }

    long long integer_or(const char* key, long long fallback) {
        return has(key) ? integer(key) : fallback;
    }

    std::uint64_t unsigned_integer_or(const char* key, std::uint64_t fallback) {
        if (!has(key)) return fallback;
        const auto& v = require(key);
        if (!(v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0)))
            fail(field(key), "expected a nonnegative integer");
        return v.get<std::uint64_t>();
    }

    std::string string(const char* key) {
        const auto& v = require(key);
        if (!v.is_string()) fail(field(key), "expected a string");
        return v.get<std::string>();
    }

    std::string string_or(const char* key, const std::string& fallback) {
        return has(key) ? string(key) : fallback;
    }

    bool boolean_or(const char* key, bool fallback) {
        if (!has(key)) return fallback;
        const auto& v = require(key);
        if (!v.is_boolean()) fail(field(key), "expected true or false");
        return v.get<bool>();
    }

    const ordered_json& require(const char* key) {
        if (!node_.contains(key)) fail(field(key), "required field is missing");
        seen_.insert(key);
        return node_.at(key);
    }

    void finish() {
        for (const auto& [key, value] : node_.items()) {
            (void)value;
            if (!seen_.count(key)) throw ConfigError("unknown config key " + field(key.c_str()));
        }
    }

  private:
    const ordered_json& node_;
    std::string path_;
    std::set<std::string> seen_;
};

double positive_number(Block& block, const char* key) {
    const double x = block.number(key);
    if (!(x > 0.0)) fail(block.field(key), "must be > 0");
    return x;
}

// A pilot power entry is a positive number of watts or the string "inf".
double pilot_power_entry(const ordered_json& v, const std::string& field_name) {
    if (v.is_string()) {
        if (v.get<std::string>() != "inf") fail(field_name, "expected a number or \"inf\"");
        return std::numeric_limits<double>::infinity();
    }
    if (!v.is_number()) fail(field_name, "expected a number or \"inf\"");
    const double x = v.get<double>();
    if (!(x > 0.0) || !std::isfinite(x)) fail(field_name, "must be > 0");
    return x;
}

} // namespace

const std::vector<std::string>& known_experiments() {
    static const std::vector<std::string> names = {
        "snr-vs-N", "energy-surface", "optimize", "payload-sweep", "energy-vs-N", "mc-verify",
    };
    return names;
}

ExperimentConfig parse_config(const ordered_json& document) {
    if (!document.is_object()) throw ConfigError("config root must be a JSON object");
    ExperimentConfig cfg;
    ordered_json resolved;

    Block root(document, "$");
    // ---- scenario ----
    Block scenario(root.require("scenario"), "scenario");
    const double alpha_db = scenario.number("alpha_db");
    const double beta_db = scenario.number("beta_db");
    const double rho_db = scenario.number("rho_db");
    const long long m = scenario.integer("m");
    if (m < 1) fail("scenario.m", "must be a positive element count");
    const double bandwidth_hz = positive_number(scenario, "bandwidth_hz");
    const double sigma2_dbw = scenario.number("sigma2_dbw");
    scenario.finish();

    cfg.scenario.ris_bs_gain = db_to_linear(alpha_db);
    cfg.scenario.ue_ris_gain = db_to_linear(beta_db);
    cfg.scenario.direct_gain = db_to_linear(rho_db);
    cfg.scenario.num_elements = static_cast<int>(m);
    cfg.scenario.bandwidth_hz = bandwidth_hz;
    cfg.scenario.noise_power_w = db_to_linear(sigma2_dbw);
    cfg.scenario.validate();
    resolved["scenario"] = {{"alpha_db", alpha_db},           {"beta_db", beta_db},
                            {"rho_db", rho_db},               {"m", m},
                            {"bandwidth_hz", bandwidth_hz},   {"sigma2_dbw", sigma2_dbw}};

    // ---- plan (optional) ----
    if (root.has("plan")) {
        Block plan(root.require("plan"), "plan");
        TransmissionPlan p;
        ordered_json plan_json;
        if (plan.has("l") && plan.has("l_sweep"))
            throw ConfigError("config block plan: give either l or l_sweep, not both");
        if (plan.has("l")) {
            p.payload_symbols = positive_number(plan, "l");
            plan_json["l"] = p.payload_symbols;
        } else if (plan.has("l_sweep")) {
            const auto& sweep = plan.require("l_sweep");
            if (!sweep.is_array() || sweep.empty())
                fail("plan.l_sweep", "expected a non-empty array of payload lengths");
            for (std::size_t i = 0; i < sweep.size(); ++i) {
                const auto& v = sweep.at(i);
                if (!v.is_number() || !(v.get<double>() > 0.0) || !std::isfinite(v.get<double>()))
                    fail("plan.l_sweep[" + std::to_string(i) + "]", "must be > 0");
                cfg.payload_sweep_symbols.push_back(v.get<double>());
            }
            plan_json["l_sweep"] = cfg.payload_sweep_symbols;
        } else {
            throw ConfigError("config block plan: one of l or l_sweep is required");
        }
        const double gamma_d_db = plan.number("gamma_d_db");
        const double gamma_p_db = plan.number("gamma_p_db");
        p.data_snr_target = db_to_linear(gamma_d_db);
        p.pilot_snr_target = db_to_linear(gamma_p_db);
        p.circuit_power_w = plan.number_or("p_circuit_w", 0.0);
        if (!(p.circuit_power_w >= 0.0)) fail("plan.p_circuit_w", "must be >= 0");

        ordered_json bits_json = "inf";
        if (plan.has("bits")) {
            const auto& bits = plan.require("bits");
            if (bits.is_string()) {
                if (bits.get<std::string>() != "inf")
                    fail("plan.bits", "expected an integer in [1, 16] or \"inf\"");
                p.codebook = Codebook::infinite();
            } else if (bits.is_number_integer()) {
                const long long b = bits.get<long long>();
                if (b < 1 || b > 16) fail("plan.bits", "expected an integer in [1, 16] or \"inf\"");
                p.codebook = Codebook::with_bits(static_cast<int>(b));
                bits_json = b;
            } else {
                fail("plan.bits", "expected an integer in [1, 16] or \"inf\"");
            }
        }
        plan.finish();
        p.validate();
        cfg.plan = p;
        plan_json["gamma_d_db"] = gamma_d_db;
        plan_json["gamma_p_db"] = gamma_p_db;
        plan_json["p_circuit_w"] = p.circuit_power_w;
        plan_json["bits"] = bits_json;
        resolved["plan"] = plan_json;
    }

    // ---- link (optional) ----
    if (root.has("link")) {
        Block link(root.require("link"), "link");
        if (link.has("data_power_w") && link.has("transmit_snr_db"))
            throw ConfigError(
                "config block link: give either data_power_w or transmit_snr_db, not both");
        ordered_json link_json;
        if (link.has("data_power_w")) {
            cfg.data_power_w = positive_number(link, "data_power_w");
            link_json["data_power_w"] = *cfg.data_power_w;
        } else if (link.has("transmit_snr_db")) {
            const double snr_db = link.number("transmit_snr_db");
            cfg.data_power_w = db_to_linear(snr_db) * cfg.scenario.noise_power_w;
            link_json["transmit_snr_db"] = snr_db;
            link_json["data_power_w"] = *cfg.data_power_w;
        }
        if (link.has("pilot_powers_w")) {
            const auto& powers = link.require("pilot_powers_w");
            if (!powers.is_array() || powers.empty())
                fail("link.pilot_powers_w", "expected a non-empty array");
            ordered_json echo = ordered_json::array();
            for (std::size_t i = 0; i < powers.size(); ++i) {
                const double w = pilot_power_entry(
                    powers.at(i), "link.pilot_powers_w[" + std::to_string(i) + "]");
                cfg.pilot_powers_w.push_back(w);
                if (std::isinf(w))
                    echo.push_back("inf");
                else
                    echo.push_back(w);
            }
            link_json["pilot_powers_w"] = echo;
        }
        cfg.pilot_power_min_w = link.number_or("pilot_power_min_w", cfg.pilot_power_min_w);
        cfg.pilot_power_max_w = link.number_or("pilot_power_max_w", cfg.pilot_power_max_w);
        if (!(cfg.pilot_power_min_w > 0.0)) fail("link.pilot_power_min_w", "must be > 0");
        if (!(cfg.pilot_power_max_w > cfg.pilot_power_min_w))
            fail("link.pilot_power_max_w", "must exceed pilot_power_min_w");
        const long long points = link.integer_or("pilot_power_points", cfg.pilot_power_points);
        if (points < 2 || points > 100000)
            fail("link.pilot_power_points", "expected an integer in [2, 100000]");
        cfg.pilot_power_points = static_cast<int>(points);
        link.finish();
        link_json["pilot_power_min_w"] = cfg.pilot_power_min_w;
        link_json["pilot_power_max_w"] = cfg.pilot_power_max_w;
        link_json["pilot_power_points"] = cfg.pilot_power_points;
        resolved["link"] = link_json;
    }

    // ---- run ----
    Block run(root.require("run"), "run");
    cfg.experiment = run.string("experiment");
    const auto& names = known_experiments();
    if (std::find(names.begin(), names.end(), cfg.experiment) == names.end()) {
        std::ostringstream msg;
        msg << "unknown experiment \"" << cfg.experiment << "\"; expected one of:";
        for (const auto& name : names) msg << " " << name;
        fail("run.experiment", msg.str());
    }
    cfg.trials = run.integer_or("trials", cfg.trials);
    if (cfg.trials < 1 || cfg.trials > 1000000000) fail("run.trials", "expected an integer in [1, 1e9]");
    cfg.seed = run.unsigned_integer_or("seed", cfg.seed);
    cfg.out = run.string_or("out", "");
    cfg.format = run.string_or("format", cfg.format);
    if (cfg.format != "csv" && cfg.format != "json")
        fail("run.format", "expected \"csv\" or \"json\"");
    const long long threads = run.integer_or("threads", cfg.threads);
    if (threads < 0 || threads > 4096) fail("run.threads", "expected an integer in [0, 4096]");
    cfg.threads = static_cast<int>(threads);
    cfg.verify = run.boolean_or("verify", cfg.verify);
    run.finish();
    root.finish();

    resolved["run"] = {{"experiment", cfg.experiment}, {"trials", cfg.trials},
                       {"seed", cfg.seed},             {"out", cfg.out},
                       {"format", cfg.format},         {"threads", cfg.threads},
                       {"verify", cfg.verify}};
    cfg.resolved = std::move(resolved);
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    ordered_json document;
    try {
        document = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // Map the byte offset to a line/column pair for the diagnostic.
        std::size_t line = 1, column = 1;
        const std::size_t stop = std::min(text.size(), e.byte > 0 ? e.byte - 1 : 0);
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ConfigError(path + ":" + std::to_string(line) + ":" + std::to_string(column) +
                          ": " + e.what());
    }
    try {
        return parse_config(document);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

} // namespace ris
