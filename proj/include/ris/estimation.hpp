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

#ifndef RIS_ESTIMATION_HPP
#define RIS_ESTIMATION_HPP

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "ris/channel.hpp"
#include "ris/rng.hpp"

namespace ris {

// Training protocol: the UE sends N+1 constant pilots while the RIS cycles
// through the rows of an (N+1)-point DFT, one configuration per pilot symbol.
// The BS multiplies the received block by the scaled conjugate transpose,
// which decorrelates the N+1 unknowns (direct path + N subarrays) into
//   decorrelated[k] = sqrt((N+1) * P_pilot) * h[k] + noise,  noise ~ CN(0, sigma^2).

// Dense DFT training matrix, entries exp(-i*2*pi*t*k/(N+1)). Row t is the
// surface configuration during pilot t. Conjugate-transpose times itself is
// (N+1) * identity.
struct PilotMatrix {
    int num_subarrays = 0;
    std::vector<std::complex<double>> entries; // row-major, dim() x dim()

    int dim() const { return num_subarrays + 1; }
    std::complex<double> at(int row, int col) const {
        return entries[static_cast<std::size_t>(row) * dim() + col];
    }
};

PilotMatrix build_pilot_matrix(int num_subarrays);

// Full pilot pass: synthesize the received block symbol by symbol with fresh
// receiver noise, then decorrelate. noise_power_w may be 0 to force the
// noiseless limit. Returns the N+1 decorrelated observations.
std::vector<std::complex<double>> simulate_pilot_reception(
    const ChannelRealization& realization, const PilotMatrix& pilots,
    double pilot_power_w, double noise_power_w, Rng& rng);

// Shortcut with identical statistics: because the decorrelator is unitary up
// to scale, the post-decorrelation noise is white again, so the observations
// can be drawn without materializing the training matrix.
std::vector<std::complex<double>> simulate_pilot_reception_decorrelated(
    const ChannelRealization& realization, double pilot_power_w, double noise_power_w,
    Rng& rng);

// Linear MMSE (Wiener) estimates of the direct path and subarray cascades
// from the decorrelated observations, plus their analytic second moments.
struct ChannelEstimate {
    std::complex<double> direct;
    std::vector<std::complex<double>> subarrays;
    double direct_estimate_power;   // E{|direct estimate|^2}
    double subarray_estimate_power; // E{|subarray estimate|^2}, same for all n
};

// pilot_power_w must be finite; the perfect-CSI simulation path covers the
// infinite-training limit.
ChannelEstimate mmse_estimate(std::span<const std::complex<double>> decorrelated,
                              const ChannelScenario& scenario, int num_subarrays,
                              double pilot_power_w);

// Analytic estimate powers (direct, per subarray). These approach the channel
// priors as pilot_power_w grows; +infinity is accepted and returns the priors
// exactly. The gap prior - estimate power is the mean-square estimation error.
std::pair<double, double> estimate_powers(const ChannelScenario& scenario,
                                          double num_subarrays, double pilot_power_w);

// Post-decorrelation training SNR (direct branch, per-subarray branch).
std::pair<double, double> pilot_snr(const ChannelScenario& scenario, int num_subarrays,
                                    double pilot_power_w);

} // namespace ris

#endif
