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

#ifndef RIS_SNR_ANALYTICS_HPP
#define RIS_SNR_ANALYTICS_HPP

#include "ris/channel.hpp"
#include "ris/quantization.hpp"

namespace ris {

// Closed-form average received SNRs of the co-phased uplink. num_subarrays is
// real-valued so the expressions can also serve the continuous relaxation used
// by the energy optimizer; simulation-facing code restricts it to divisors of
// the element count. pilot_power_w == +infinity selects the perfect-CSI limit
// of each expression analytically.
struct SnrInputs {
    ChannelScenario scenario;
    double num_subarrays = 1.0;
    double pilot_power_w = 0.0;
    double data_power_w = 0.0;
    Codebook codebook = Codebook::infinite();

    void validate() const;
};

// Jensen bound built from the mean co-phased amplitude; tight for large N.
double avg_snr_lower_bound(const SnrInputs& inputs);

// Exact mean SNR with perfect CSI and continuous phases.
double avg_snr_exact_perfect(const SnrInputs& inputs);

// Prior-art reference: only num_subarrays individually phased elements active,
// the rest of the surface off. Exact perfect-CSI expression with the reduced
// aperture. Requires num_subarrays <= num_elements; divisibility is not needed.
double avg_snr_baseline_elements_off(const SnrInputs& inputs);

// Mean SNR under MMSE-estimated CSI and quantized phase control. Reduces to
// avg_snr_exact_perfect when pilot_power_w = +inf and the codebook is infinite.
double avg_snr_general(const SnrInputs& inputs);

// Perfect CSI, quantized phases, no direct path (the scenario's direct gain is
// ignored). Useful as the clean view of pure quantization loss.
double avg_snr_quantized_perfect_csi(const SnrInputs& inputs);

// Worst-case multiplicative loss of average SNR caused by quantization alone:
// the quantized mean SNR is at least this fraction of the unquantized one.
// 1.0 for the infinite codebook.
double quantization_loss_bound(const Codebook& codebook);

// avg_snr_general divided by data_power_w/noise_power_w: the effective mean
// channel power gain after training and quantization.
double average_channel_gain(const ChannelScenario& scenario, double num_subarrays,
                            double pilot_power_w, const Codebook& codebook);

// Transmit power that meets a mean-SNR target given the training setup;
// inverse of avg_snr_general in data_power_w.
double required_data_power(const ChannelScenario& scenario, double num_subarrays,
                           double pilot_power_w, const Codebook& codebook,
                           double target_snr);

// Second-moment building blocks of avg_snr_general, exposed for white-box
// testing. The mean SNR decomposes as
//   (P_data/sigma^2) * (rho + 2*N*cross + total_ris_gain + N*(N-1)*pair)
// where `cross` couples the direct path with one configured subarray and
// `pair` couples two distinct configured subarrays.
double configured_cross_correlation(const ChannelScenario& scenario, double num_subarrays,
                                    double pilot_power_w, const Codebook& codebook);
double configured_pair_correlation(const ChannelScenario& scenario, double num_subarrays,
                                   double pilot_power_w, const Codebook& codebook);
double avg_snr_general_from_correlations(const SnrInputs& inputs);

} // namespace ris

#endif
