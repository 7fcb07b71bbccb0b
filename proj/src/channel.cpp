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

#include "ris/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ris {

namespace {

void require_subarray_count(const ChannelScenario& scenario, int num_subarrays) {
    if (num_subarrays < 1)
        throw std::invalid_argument("num_subarrays must be >= 1, got " +
                                    std::to_string(num_subarrays));
    if (scenario.num_elements % num_subarrays != 0)
        throw std::invalid_argument("num_subarrays (" + std::to_string(num_subarrays) +
                                    ") must divide num_elements (" +
                                    std::to_string(scenario.num_elements) + ")");
}

} // namespace

double phase_or_zero(std::complex<double> z) {
    if (z.real() == 0.0 && z.imag() == 0.0) return 0.0;
    return std::arg(z);
}

void ChannelScenario::validate() const {
    if (!(direct_gain >= 0.0) || !std::isfinite(direct_gain))
        throw std::invalid_argument("direct_gain must be finite and >= 0");
    if (!(ris_bs_gain > 0.0) || !std::isfinite(ris_bs_gain))
        throw std::invalid_argument("ris_bs_gain must be finite and > 0");
    if (!(ue_ris_gain > 0.0) || !std::isfinite(ue_ris_gain))
        throw std::invalid_argument("ue_ris_gain must be finite and > 0");
    if (num_elements < 1)
        throw std::invalid_argument("num_elements must be >= 1");
    if (!(noise_power_w > 0.0) || !std::isfinite(noise_power_w))
        throw std::invalid_argument("noise_power_w must be finite and > 0");
    if (!(bandwidth_hz > 0.0) || !std::isfinite(bandwidth_hz))
        throw std::invalid_argument("bandwidth_hz must be finite and > 0");
}

ChannelRealization sample_realization(const ChannelScenario& scenario, int num_subarrays,
                                      Rng& rng) {
    require_subarray_count(scenario, num_subarrays);
    ChannelRealization realization;
    realization.direct = rng.complex_gaussian(scenario.direct_gain);
    const double gain = scenario.subarray_gain(num_subarrays);
    realization.subarrays.resize(num_subarrays);
    for (auto& z : realization.subarrays) z = rng.complex_gaussian(gain);
    return realization;
}

ChannelRealization sample_realization_per_element(const ChannelScenario& scenario,
                                                  int num_subarrays, Rng& rng) {
    require_subarray_count(scenario, num_subarrays);
    ChannelRealization realization;
    realization.direct = rng.complex_gaussian(scenario.direct_gain);
    const int per_subarray = scenario.num_elements / num_subarrays;
    const double reflect_amplitude = std::sqrt(scenario.ris_bs_gain);
    realization.subarrays.assign(num_subarrays, {0.0, 0.0});
    for (auto& z : realization.subarrays) {
        for (int e = 0; e < per_subarray; ++e) {
            // Element reflection phase is unknown during sampling: uniform.
            const double reflect_phase = rng.uniform(0.0, 2.0 * M_PI);
            const std::complex<double> fade = rng.complex_gaussian(scenario.ue_ris_gain);
            z += reflect_amplitude * std::polar(1.0, -reflect_phase) * fade;
        }
    }
    return realization;
}

std::complex<double> end_to_end_channel(const ChannelRealization& realization,
                                        std::span<const double> phases) {
    if (phases.size() != realization.subarrays.size())
        throw std::invalid_argument("phases has " + std::to_string(phases.size()) +
                                    " entries for " +
                                    std::to_string(realization.subarrays.size()) +
                                    " subarrays");
    std::complex<double> sum = realization.direct;
    for (std::size_t n = 0; n < phases.size(); ++n)
        sum += realization.subarrays[n] * std::polar(1.0, -phases[n]);
    return sum;
}

double instantaneous_snr(std::complex<double> channel, double data_power_w,
                         double noise_power_w) {
    if (!(data_power_w >= 0.0))
        throw std::invalid_argument("data_power_w must be >= 0");
    if (!(noise_power_w > 0.0))
        throw std::invalid_argument("noise_power_w must be > 0");
    return data_power_w / noise_power_w * std::norm(channel);
}

std::vector<double> optimal_phases(const ChannelRealization& realization) {
    const double direct_phase = phase_or_zero(realization.direct);
    std::vector<double> phases(realization.subarrays.size());
    for (std::size_t n = 0; n < phases.size(); ++n)
        phases[n] = phase_or_zero(realization.subarrays[n]) - direct_phase;
    return phases;
}

} // namespace ris
