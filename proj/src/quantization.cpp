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

#include "ris/quantization.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ris {

double wrap_phase(double phase) {
    if (!std::isfinite(phase)) throw std::invalid_argument("phase must be finite");
    double r = std::fmod(phase + M_PI, 2.0 * M_PI);
    if (r <= 0.0) r += 2.0 * M_PI;
    return r - M_PI;
}

double phase_sinc(int num_phases) {
    if (num_phases < 2)
        throw std::invalid_argument("num_phases must be >= 2, got " +
                                    std::to_string(num_phases));
    const double x = M_PI / num_phases;
    return std::sin(x) / x;
}

Codebook Codebook::with_bits(int bits) {
    if (bits < 1 || bits > 16)
        throw std::invalid_argument("codebook bits must be in [1, 16], got " +
                                    std::to_string(bits));
    Codebook cb;
    cb.bits_ = bits;
    const int count = 1 << bits;
    const double step = 2.0 * M_PI / count;
    const double offset = bits <= 2 ? M_PI / 4.0 : 0.0;
    // offset + k*step <= pi iff 2k <= count*(1 - o) for offset = o*pi, so the
    // wrap into (-pi, pi] is an integer shift of k. Computing each codeword as
    // one product plus one sum (no fmod round trip) keeps small codebooks bit
    // exact, which the tie handling in quantize() relies on.
    const int wrap_from = bits <= 2 ? 3 * count / 8 : count / 2;
    cb.phases_.resize(count);
    for (int k = 0; k < count; ++k) {
        const int j = k <= wrap_from ? k : k - count;
        cb.phases_[static_cast<std::size_t>(k)] = offset + j * step;
    }
    std::sort(cb.phases_.begin(), cb.phases_.end());
    return cb;
}

Codebook Codebook::infinite() { return Codebook(); }

int Codebook::bits() const {
    if (is_infinite()) throw std::logic_error("infinite codebook has no bit width");
    return bits_;
}

int Codebook::num_phases() const { return 1 << bits(); }

double Codebook::quantize(double target) const {
    if (!std::isfinite(target)) throw std::invalid_argument("target phase must be finite");
    if (is_infinite()) return wrap_phase(target);

    const int count = static_cast<int>(phases_.size());
    const double step = 2.0 * M_PI / count;
    const double half_cell = M_PI / count;

    // phases_ is an arithmetic progression with spacing `step`. Codeword i
    // owns targets in (phases_[i] - half_cell, phases_[i] + half_cell] so the
    // error phases_[i] - target stays in [-half_cell, half_cell); in index
    // space that cell is (i - 1/2, i + 1/2].
    const double x = (wrap_phase(target) - phases_.front()) / step;
    long index = static_cast<long>(std::ceil(x - 0.5));
    index = ((index % count) + count) % count;
    // The scaled map rounds, so repair against the stored values once; a
    // boundary error of exactly +half_cell belongs to the lower neighbor.
    const double error = wrap_phase(phases_[static_cast<std::size_t>(index)] - target);
    if (error >= half_cell)
        index = (index - 1 + count) % count;
    else if (error < -half_cell)
        index = (index + 1) % count;
    return phases_[static_cast<std::size_t>(index)];
}

double Codebook::quantization_error(double target) const {
    if (is_infinite()) return 0.0;
    return wrap_phase(quantize(target) - target);
}

double Codebook::mean_error_phasor() const {
    if (is_infinite()) return 1.0;
    return phase_sinc(num_phases());
}

} // namespace ris
