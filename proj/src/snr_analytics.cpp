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

#include "ris/snr_analytics.hpp"

#include <cmath>
#include <stdexcept>

namespace ris {

namespace {

constexpr double quarter_pi = M_PI / 4.0;
constexpr double half_pi = M_PI / 2.0;

void require_pilot_power(double pilot_power_w) {
    if (std::isnan(pilot_power_w) || pilot_power_w < 0.0)
        throw std::invalid_argument("pilot_power_w must be >= 0 (may be +inf)");
}

void require_subarrays(double num_subarrays) {
    if (!(num_subarrays >= 1.0) || std::isinf(num_subarrays))
        throw std::invalid_argument("num_subarrays must be finite and >= 1");
}

void require_data_power(double data_power_w) {
    if (!(data_power_w >= 0.0) || std::isinf(data_power_w))
        throw std::invalid_argument("data_power_w must be finite and >= 0");
}

double transmit_snr(const SnrInputs& inputs) {
    require_data_power(inputs.data_power_w);
    return inputs.data_power_w / inputs.scenario.noise_power_w;
}

// Exact perfect-CSI mean channel gain with an aperture of `aggregate` total
// two-hop gain split into n groups: the co-phased magnitude is a sum of n+1
// independent Rayleigh amplitudes.
double perfect_gain(double direct, double aggregate, double n) {
    const double amplitude = std::sqrt(direct) + std::sqrt(aggregate * n);
    return quarter_pi * amplitude * amplitude +
           (1.0 - quarter_pi) * (direct + aggregate);
}

} // namespace

void SnrInputs::validate() const {
    scenario.validate();
    require_subarrays(num_subarrays);
    require_pilot_power(pilot_power_w);
    require_data_power(data_power_w);
}

double avg_snr_lower_bound(const SnrInputs& inputs) {
    inputs.validate();
    const double amplitude = std::sqrt(inputs.scenario.direct_gain) +
                             std::sqrt(inputs.scenario.total_ris_gain() * inputs.num_subarrays);
    return transmit_snr(inputs) * quarter_pi * amplitude * amplitude;
}

double avg_snr_exact_perfect(const SnrInputs& inputs) {
    inputs.validate();
    return transmit_snr(inputs) * perfect_gain(inputs.scenario.direct_gain,
                                               inputs.scenario.total_ris_gain(),
                                               inputs.num_subarrays);
}

double avg_snr_baseline_elements_off(const SnrInputs& inputs) {
    inputs.validate();
    if (inputs.num_subarrays > inputs.scenario.num_elements)
        throw std::invalid_argument("baseline needs num_subarrays <= num_elements");
    // n single-element groups of per-element gain, the rest absorbing.
    const double per_element = inputs.scenario.ris_bs_gain * inputs.scenario.ue_ris_gain;
    return transmit_snr(inputs) * perfect_gain(inputs.scenario.direct_gain,
                                               per_element * inputs.num_subarrays,
                                               inputs.num_subarrays);
}

double average_channel_gain(const ChannelScenario& scenario, double num_subarrays,
                            double pilot_power_w, const Codebook& codebook) {
    scenario.validate();
    require_subarrays(num_subarrays);
    require_pilot_power(pilot_power_w);

    const double n = num_subarrays;
    const double direct = scenario.direct_gain;
    const double aggregate = scenario.total_ris_gain();
    const double phasor = codebook.mean_error_phasor();

    double cross; // direct x configured-subarray coupling, summed over 2N pairs
    double beam;  // distinct configured-subarray coupling, summed over N(N-1) pairs
    if (std::isinf(pilot_power_w)) {
        cross = half_pi * phasor * std::sqrt(direct * aggregate * n);
        beam = quarter_pi * (n - 1.0) * aggregate * phasor * phasor;
    } else {
        const double q = pilot_power_w / scenario.noise_power_w;
        const double floor = 1.0 / (n + 1.0);
        const double direct_term = direct * q + floor;
        const double subarray_term = aggregate / n * q + floor;
        cross = half_pi * direct * aggregate * q * phasor /
                std::sqrt(direct_term * subarray_term);
        beam = quarter_pi * (1.0 - 1.0 / n) * aggregate * aggregate * q * phasor * phasor /
               subarray_term;
    }
    return direct + aggregate + cross + beam;
}

double avg_snr_general(const SnrInputs& inputs) {
    inputs.validate();
    return transmit_snr(inputs) *
           average_channel_gain(inputs.scenario, inputs.num_subarrays, inputs.pilot_power_w,
                                inputs.codebook);
}

double avg_snr_quantized_perfect_csi(const SnrInputs& inputs) {
    inputs.validate();
    const double phasor = inputs.codebook.mean_error_phasor();
    return transmit_snr(inputs) * inputs.scenario.total_ris_gain() *
           (1.0 + quarter_pi * (inputs.num_subarrays - 1.0) * phasor * phasor);
}

double quantization_loss_bound(const Codebook& codebook) {
    const double phasor = codebook.mean_error_phasor();
    return phasor * phasor;
}

double required_data_power(const ChannelScenario& scenario, double num_subarrays,
                           double pilot_power_w, const Codebook& codebook,
                           double target_snr) {
    if (!(target_snr >= 0.0) || std::isinf(target_snr))
        throw std::invalid_argument("target_snr must be finite and >= 0");
    const double gain = average_channel_gain(scenario, num_subarrays, pilot_power_w, codebook);
    if (!(gain > 0.0))
        throw std::invalid_argument("no usable signal path: mean channel gain is zero");
    return scenario.noise_power_w * target_snr / gain;
}

double configured_cross_correlation(const ChannelScenario& scenario, double num_subarrays,
                                    double pilot_power_w, const Codebook& codebook) {
    scenario.validate();
    require_subarrays(num_subarrays);
    require_pilot_power(pilot_power_w);
    const double n = num_subarrays;
    const double direct = scenario.direct_gain;
    const double aggregate = scenario.total_ris_gain();
    const double phasor = codebook.mean_error_phasor();
    if (std::isinf(pilot_power_w))
        return quarter_pi / std::sqrt(n) * phasor * std::sqrt(direct * aggregate);
    const double q = pilot_power_w / scenario.noise_power_w;
    return quarter_pi / std::sqrt(n) * direct * aggregate * q * phasor /
           std::sqrt((direct * q + 1.0 / (n + 1.0)) * (aggregate * q + n / (n + 1.0)));
}

double configured_pair_correlation(const ChannelScenario& scenario, double num_subarrays,
                                   double pilot_power_w, const Codebook& codebook) {
    scenario.validate();
    require_subarrays(num_subarrays);
    require_pilot_power(pilot_power_w);
    const double n = num_subarrays;
    const double aggregate = scenario.total_ris_gain();
    const double phasor = codebook.mean_error_phasor();
    if (std::isinf(pilot_power_w)) return quarter_pi / n * aggregate * phasor * phasor;
    const double q = pilot_power_w / scenario.noise_power_w;
    return quarter_pi / n * aggregate * aggregate * q * phasor * phasor /
           (aggregate * q + n / (n + 1.0));
}

double avg_snr_general_from_correlations(const SnrInputs& inputs) {
    inputs.validate();
    const double n = inputs.num_subarrays;
    const double cross = configured_cross_correlation(inputs.scenario, n,
                                                      inputs.pilot_power_w, inputs.codebook);
    const double pair = configured_pair_correlation(inputs.scenario, n,
                                                    inputs.pilot_power_w, inputs.codebook);
    return transmit_snr(inputs) * (inputs.scenario.direct_gain + 2.0 * n * cross +
                                   inputs.scenario.total_ris_gain() + n * (n - 1.0) * pair);
}

} // namespace ris
