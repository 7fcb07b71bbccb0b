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

#ifndef RIS_QUANTIZATION_HPP
#define RIS_QUANTIZATION_HPP

#include <vector>

namespace ris {

// Wraps an angle into (-pi, pi].
double wrap_phase(double phase);

// sin(pi/K) / (pi/K) for K >= 2 phase states. This is the mean phasor of a
// quantization error uniform on [-pi/K, pi/K); it scales the coherent terms
// of the average-SNR expressions.
double phase_sinc(int num_phases);

// Phase-shift codebook of a RIS control channel with b bits per subarray:
// 2^b equally spaced angles. 1- and 2-bit surfaces are built on the diagonal
// grid {pi/4 + k*step}; 3 bits and up include 0. An "infinite" codebook
// applies no quantization at all.
class Codebook {
  public:
    static Codebook with_bits(int bits);
    static Codebook infinite();

    bool is_infinite() const { return bits_ == 0; }
    int bits() const;       // throws for the infinite codebook
    int num_phases() const; // 2^bits, throws for the infinite codebook

    // Codebook angles, ascending in (-pi, pi]. Empty for the infinite codebook.
    const std::vector<double>& phases() const { return phases_; }

    // Nearest codebook angle. The returned error wrap(q - target) always lies
    // in [-pi/K, pi/K); exact midpoints resolve to the angle below the target
    // so the interval stays half-open. Infinite codebook: wrap_phase(target).
    double quantize(double target) const;

    // wrap(quantize(target) - target), in [-pi/K, pi/K). Zero when infinite.
    double quantization_error(double target) const;

    // E{exp(i * error)} over targets uniform on the circle:
    // phase_sinc(num_phases()), or 1 when infinite.
    double mean_error_phasor() const;

  private:
    Codebook() = default;
    int bits_ = 0; // 0 encodes the infinite codebook
    std::vector<double> phases_;
};

} // namespace ris

#endif
