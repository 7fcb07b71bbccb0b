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

#ifndef RIS_MONTECARLO_HPP
#define RIS_MONTECARLO_HPP

#include <cstdint>

#include "ris/snr_analytics.hpp"

namespace ris {

// Where the phase targets come from in each simulated coherence block.
enum class CsiMode {
    perfect,  // true channel phases, no training round
    estimated // pilot reception + linear MMSE, then phase extraction
};

// Trial t always draws from Rng::substream(seed, t), so results are invariant
// to the thread count and individual trials can be replayed in isolation.
struct McConfig {
    long long trials = 10000;
    std::uint64_t seed = 1;
    CsiMode mode = CsiMode::perfect;
    int threads = 1; // 0 = hardware concurrency
    // Synthesize the pilot block with the dense training matrix instead of the
    // statistically identical decorrelated shortcut. Quadratic in the subarray
    // count; meant for cross-checking at small sizes.
    bool use_explicit_pilot_matrix = false;
    // Draw every element's fade and sum within subarrays instead of drawing
    // each subarray aggregate directly. Slower, same distribution.
    bool per_element_fading = false;
};

struct McResult {
    double mean = 0.0;
    double std_error = 0.0; // sample std dev / sqrt(trials); 0 when trials < 2
    long long trials = 0;
};

// Mean received SNR of the co-phased link by simulation. Honors the codebook
// in `inputs`; in estimated mode an infinite pilot_power_w falls back to true
// phases (the error-free limit the estimator approaches). num_subarrays must
// be an integer dividing the element count.
McResult mc_average_snr(const SnrInputs& inputs, const McConfig& config);

// Prior-art reference by simulation: num_subarrays individually phased
// elements active (perfect CSI, continuous phases), the rest of the surface
// absorbing. Ignores codebook and pilot power.
McResult mc_baseline_elements_off(const SnrInputs& inputs, const McConfig& config);

} // namespace ris

#endif
