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

#ifndef RIS_CHANNEL_HPP
#define RIS_CHANNEL_HPP

#include <complex>
#include <span>
#include <vector>

#include "ris/rng.hpp"

namespace ris {

// Uplink geometry: a single-antenna UE reaches the BS directly and through a
// RIS whose elements are grouped into equally sized subarrays, each applying
// one common phase shift. All gains are average power gains (linear).
struct ChannelScenario {
    double direct_gain = 0.0;   // UE-BS path
    double ris_bs_gain = 0.0;   // RIS-BS path, per element
    double ue_ris_gain = 0.0;   // UE-RIS path, per element
    int num_elements = 0;       // RIS elements available
    double noise_power_w = 0.0; // receiver noise power over the signal bandwidth
    double bandwidth_hz = 0.0;  // symbol rate

    // Throws std::invalid_argument naming the offending field.
    void validate() const;

    // Aggregate two-hop gain with every element reflecting.
    double total_ris_gain() const { return ris_bs_gain * ue_ris_gain * num_elements; }

    // Cascade power per subarray when the surface is split into n groups.
    double subarray_gain(double n) const { return total_ris_gain() / n; }
};

// One Rayleigh-fading draw: the direct coefficient and the aggregate cascade
// coefficient of each subarray.
struct ChannelRealization {
    std::complex<double> direct;                 // CN(0, direct_gain)
    std::vector<std::complex<double>> subarrays; // CN(0, subarray_gain(n)) each

    int num_subarrays() const { return static_cast<int>(subarrays.size()); }
};

// Draws the subarray aggregates directly from their distribution.
// num_subarrays must be >= 1 and divide scenario.num_elements.
ChannelRealization sample_realization(const ChannelScenario& scenario, int num_subarrays,
                                      Rng& rng);

// Same law, but built element by element: each element contributes an
// independently faded, randomly rotated cascade term. Slower; kept as a
// model-level cross-check of the aggregate sampler.
ChannelRealization sample_realization_per_element(const ChannelScenario& scenario,
                                                  int num_subarrays, Rng& rng);

// End-to-end coefficient when subarray n applies phase shift phases[n]:
// direct + sum_n subarrays[n] * exp(-i * phases[n]).
std::complex<double> end_to_end_channel(const ChannelRealization& realization,
                                        std::span<const double> phases);

// Received SNR for a transmit power and noise power, |channel|^2 scaled.
double instantaneous_snr(std::complex<double> channel, double data_power_w,
                         double noise_power_w);

// arg(z), with the phase of an exactly zero coefficient defined as 0. Every
// phase-alignment rule in this library uses this convention.
double phase_or_zero(std::complex<double> z);

// Phase shifts that co-phase every subarray with the direct path, making the
// end-to-end magnitude |direct| + sum |subarrays[n]|. The phase of an exactly
// zero coefficient is taken as 0.
std::vector<double> optimal_phases(const ChannelRealization& realization);

} // namespace ris

#endif
