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

#ifndef RIS_RNG_HPP
#define RIS_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <utility>

namespace ris {

// splitmix64 output function. Used to derive well-separated engine seeds.
inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t x = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Deterministic random source. All floating-point mappings are done here from
// raw engine words, so a (seed, substream index) pair yields the same draws on
// every platform and at every worker-thread count.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Independent per-task stream: stream `index` of a master `seed`.
    static Rng substream(std::uint64_t seed, std::uint64_t index) {
        return Rng(splitmix64_at(seed, index));
    }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform on (0, 1]; safe as a log() argument.
    double uniform01_open_low() {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Box-Muller pair of independent standard normals.
    // Consumes exactly two engine words.
    std::pair<double, double> normal_pair() {
        const double radius = std::sqrt(-2.0 * std::log(uniform01_open_low()));
        const double angle = 2.0 * M_PI * uniform01();
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }

    // Circularly symmetric complex Gaussian with E{|z|^2} = variance.
    // variance == 0 returns exactly zero without consuming engine words.
    std::complex<double> complex_gaussian(double variance) {
        if (variance == 0.0) return {0.0, 0.0};
        const double scale = std::sqrt(0.5 * variance);
        const auto [re, im] = normal_pair();
        return {scale * re, scale * im};
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace ris

#endif
