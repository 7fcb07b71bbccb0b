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

#include "ris/estimation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ris {

namespace {

void require_pilot_power(double pilot_power_w, bool allow_infinite) {
    if (std::isnan(pilot_power_w) || pilot_power_w < 0.0)
        throw std::invalid_argument("pilot_power_w must be >= 0");
    if (!allow_infinite && std::isinf(pilot_power_w))
        throw std::invalid_argument(
            "pilot_power_w must be finite here; use the perfect-CSI path for the "
            "infinite-training limit");
}

// Wiener gain for a scalar observation sqrt(s)*h + noise with prior variance v:
// estimate = sqrt(s)*v / (s*v + sigma2) * observation, s = (N+1)*P_pilot.
double wiener_gain(double scaled_power, double prior_variance, double noise_power_w) {
    return std::sqrt(scaled_power) * prior_variance /
           (scaled_power * prior_variance + noise_power_w);
}

} // namespace

PilotMatrix build_pilot_matrix(int num_subarrays) {
    if (num_subarrays < 1)
        throw std::invalid_argument("num_subarrays must be >= 1, got " +
                                    std::to_string(num_subarrays));
    PilotMatrix pilots;
    pilots.num_subarrays = num_subarrays;
    const int dim = pilots.dim();
    pilots.entries.resize(static_cast<std::size_t>(dim) * dim);
    const double base = -2.0 * M_PI / dim;
    for (int t = 0; t < dim; ++t)
        for (int k = 0; k < dim; ++k)
            pilots.entries[static_cast<std::size_t>(t) * dim + k] =
                std::polar(1.0, base * ((static_cast<long long>(t) * k) % dim));
    return pilots;
}

std::vector<std::complex<double>> simulate_pilot_reception(
    const ChannelRealization& realization, const PilotMatrix& pilots,
    double pilot_power_w, double noise_power_w, Rng& rng) {
    require_pilot_power(pilot_power_w, false);
    if (noise_power_w < 0.0) throw std::invalid_argument("noise_power_w must be >= 0");
    const int dim = pilots.dim();
    if (realization.num_subarrays() != pilots.num_subarrays)
        throw std::invalid_argument("realization and pilot matrix disagree on subarrays");

    const double amplitude = std::sqrt(pilot_power_w);
    std::vector<std::complex<double>> received(dim);
    for (int t = 0; t < dim; ++t) {
        std::complex<double> sum = pilots.at(t, 0) * realization.direct;
        for (int k = 1; k < dim; ++k) sum += pilots.at(t, k) * realization.subarrays[k - 1];
        received[t] = amplitude * sum + rng.complex_gaussian(noise_power_w);
    }

    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    std::vector<std::complex<double>> decorrelated(dim);
    for (int k = 0; k < dim; ++k) {
        std::complex<double> sum = 0.0;
        for (int t = 0; t < dim; ++t) sum += std::conj(pilots.at(t, k)) * received[t];
        decorrelated[k] = scale * sum;
    }
    return decorrelated;
}

std::vector<std::complex<double>> simulate_pilot_reception_decorrelated(
    const ChannelRealization& realization, double pilot_power_w, double noise_power_w,
    Rng& rng) {
    require_pilot_power(pilot_power_w, false);
    if (noise_power_w < 0.0) throw std::invalid_argument("noise_power_w must be >= 0");
    const int dim = realization.num_subarrays() + 1;
    const double amplitude = std::sqrt(dim * pilot_power_w);
    std::vector<std::complex<double>> decorrelated(dim);
    decorrelated[0] = amplitude * realization.direct + rng.complex_gaussian(noise_power_w);
    for (int k = 1; k < dim; ++k)
        decorrelated[k] =
            amplitude * realization.subarrays[k - 1] + rng.complex_gaussian(noise_power_w);
    return decorrelated;
}

ChannelEstimate mmse_estimate(std::span<const std::complex<double>> decorrelated,
                              const ChannelScenario& scenario, int num_subarrays,
                              double pilot_power_w) {
    require_pilot_power(pilot_power_w, false);
    if (static_cast<int>(decorrelated.size()) != num_subarrays + 1)
        throw std::invalid_argument("expected " + std::to_string(num_subarrays + 1) +
                                    " decorrelated observations, got " +
                                    std::to_string(decorrelated.size()));

    const double scaled = (num_subarrays + 1) * pilot_power_w;
    const double subarray_prior = scenario.subarray_gain(num_subarrays);
    const double direct_gain = wiener_gain(scaled, scenario.direct_gain, scenario.noise_power_w);
    const double subarray_wgain = wiener_gain(scaled, subarray_prior, scenario.noise_power_w);

    ChannelEstimate estimate;
    estimate.direct = direct_gain * decorrelated[0];
    estimate.subarrays.resize(num_subarrays);
    for (int n = 0; n < num_subarrays; ++n)
        estimate.subarrays[n] = subarray_wgain * decorrelated[n + 1];

    const auto [direct_power, subarray_power] =
        estimate_powers(scenario, num_subarrays, pilot_power_w);
    estimate.direct_estimate_power = direct_power;
    estimate.subarray_estimate_power = subarray_power;
    return estimate;
}

std::pair<double, double> estimate_powers(const ChannelScenario& scenario,
                                          double num_subarrays, double pilot_power_w) {
    require_pilot_power(pilot_power_w, true);
    if (!(num_subarrays >= 1.0))
        throw std::invalid_argument("num_subarrays must be >= 1");
    const double subarray_prior = scenario.subarray_gain(num_subarrays);
    if (std::isinf(pilot_power_w)) return {scenario.direct_gain, subarray_prior};
    const double scaled = (num_subarrays + 1.0) * pilot_power_w;
    const double direct =
        scaled * scenario.direct_gain * scenario.direct_gain /
        (scaled * scenario.direct_gain + scenario.noise_power_w);
    const double subarray = scaled * subarray_prior * subarray_prior /
                            (scaled * subarray_prior + scenario.noise_power_w);
    return {direct, subarray};
}

std::pair<double, double> pilot_snr(const ChannelScenario& scenario, int num_subarrays,
                                    double pilot_power_w) {
    require_pilot_power(pilot_power_w, true);
    if (num_subarrays < 1) throw std::invalid_argument("num_subarrays must be >= 1");
    const double scaled = (num_subarrays + 1.0) * pilot_power_w / scenario.noise_power_w;
    return {scaled * scenario.direct_gain,
            scaled * scenario.total_ris_gain() / num_subarrays};
}

} // namespace ris
