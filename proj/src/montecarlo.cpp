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

#include "ris/montecarlo.hpp"

#include <cmath>
#include <exception>
#include <functional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "ris/estimation.hpp"

namespace ris {

namespace {

int checked_subarray_count(const SnrInputs& inputs) {
    const double n = inputs.num_subarrays;
    const int count = static_cast<int>(std::lround(n));
    if (std::abs(n - count) > 1e-12 || count < 1)
        throw std::invalid_argument("simulation requires an integer num_subarrays >= 1");
    return count;
}

// Fills values[t] for t in [0, trials) from per-trial substreams, splitting
// the index range across threads. The reduction below stays sequential so the
// result is bit-identical for every thread count.
void run_trials(long long trials, int threads, std::vector<double>& values,
                const std::function<double(long long, Rng&)>& trial,
                std::uint64_t seed) {
    values.assign(static_cast<std::size_t>(trials), 0.0);
    int workers = threads == 0 ? static_cast<int>(std::thread::hardware_concurrency()) : threads;
    if (workers < 1) workers = 1;
    if (workers > trials) workers = static_cast<int>(trials);

    const auto worker = [&](long long begin, long long end, std::exception_ptr& error) {
        try {
            for (long long t = begin; t < end; ++t) {
                Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(t));
                values[static_cast<std::size_t>(t)] = trial(t, rng);
            }
        } catch (...) {
            error = std::current_exception();
        }
    };

    if (workers == 1) {
        std::exception_ptr error;
        worker(0, trials, error);
        if (error) std::rethrow_exception(error);
        return;
    }

    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    const long long chunk = (trials + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const long long begin = w * chunk;
        const long long end = std::min(trials, begin + chunk);
        pool.emplace_back(worker, begin, end, std::ref(errors[static_cast<std::size_t>(w)]));
    }
    for (auto& t : pool) t.join();
    for (const auto& error : errors)
        if (error) std::rethrow_exception(error);
}

McResult reduce(const std::vector<double>& values) {
    McResult out;
    out.trials = static_cast<long long>(values.size());
    if (values.empty()) return out;

    double sum = 0.0, comp = 0.0;
    for (double v : values) {
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    out.mean = sum / static_cast<double>(values.size());

    if (values.size() < 2) return out;
    double sq = 0.0;
    comp = 0.0;
    for (double v : values) {
        const double d = v - out.mean;
        const double y = d * d - comp;
        const double t = sq + y;
        comp = (t - sq) - y;
        sq = t;
    }
    const double variance = sq / static_cast<double>(values.size() - 1);
    out.std_error = std::sqrt(variance / static_cast<double>(values.size()));
    return out;
}

std::vector<double> quantize_all(const std::vector<double>& targets, const Codebook& codebook) {
    std::vector<double> phases(targets.size());
    for (std::size_t i = 0; i < targets.size(); ++i) phases[i] = codebook.quantize(targets[i]);
    return phases;
}

} // namespace

McResult mc_average_snr(const SnrInputs& inputs, const McConfig& config) {
    inputs.validate();
    if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
    const int count = checked_subarray_count(inputs);
    const ChannelScenario& scenario = inputs.scenario;
    const bool train =
        config.mode == CsiMode::estimated && !std::isinf(inputs.pilot_power_w);
    PilotMatrix pilots;
    if (train && config.use_explicit_pilot_matrix) pilots = build_pilot_matrix(count);

    const auto trial = [&](long long, Rng& rng) {
        const ChannelRealization realization =
            config.per_element_fading ? sample_realization_per_element(scenario, count, rng)
                                      : sample_realization(scenario, count, rng);

        std::vector<double> targets;
        if (!train) {
            targets = optimal_phases(realization);
        } else {
            const auto decorrelated =
                config.use_explicit_pilot_matrix
                    ? simulate_pilot_reception(realization, pilots, inputs.pilot_power_w,
                                               scenario.noise_power_w, rng)
                    : simulate_pilot_reception_decorrelated(
                          realization, inputs.pilot_power_w, scenario.noise_power_w, rng);
            const ChannelEstimate estimate =
                mmse_estimate(decorrelated, scenario, count, inputs.pilot_power_w);
            const double direct_phase = phase_or_zero(estimate.direct);
            targets.resize(estimate.subarrays.size());
            for (std::size_t n = 0; n < estimate.subarrays.size(); ++n)
                targets[n] = phase_or_zero(estimate.subarrays[n]) - direct_phase;
        }

        const auto g = end_to_end_channel(realization, quantize_all(targets, inputs.codebook));
        return instantaneous_snr(g, inputs.data_power_w, scenario.noise_power_w);
    };

    std::vector<double> values;
    run_trials(config.trials, config.threads, values, trial, config.seed);
    return reduce(values);
}

McResult mc_baseline_elements_off(const SnrInputs& inputs, const McConfig& config) {
    inputs.validate();
    if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
    const int active = checked_subarray_count(inputs);
    if (active > inputs.scenario.num_elements)
        throw std::invalid_argument("active element count exceeds the surface size");

    // The active elements behave like a surface of `active` elements split
    // into single-element subarrays; the rest contribute nothing.
    ChannelScenario reduced = inputs.scenario;
    reduced.num_elements = active;

    const auto trial = [&](long long, Rng& rng) {
        const ChannelRealization realization = sample_realization(reduced, active, rng);
        const auto g = end_to_end_channel(realization, optimal_phases(realization));
        return instantaneous_snr(g, inputs.data_power_w, inputs.scenario.noise_power_w);
    };

    std::vector<double> values;
    run_trials(config.trials, config.threads, values, trial, config.seed);
    return reduce(values);
}

} // namespace ris
