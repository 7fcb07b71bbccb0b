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

#ifndef RIS_ENERGY_OPT_HPP
#define RIS_ENERGY_OPT_HPP

#include <optional>
#include <span>
#include <vector>

#include "ris/channel.hpp"
#include "ris/quantization.hpp"

namespace ris {

// What the UE has to deliver: L payload symbols at a target mean data SNR,
// preceded by N+1 pilot symbols. Circuit power burns during the whole burst.
struct TransmissionPlan {
    double payload_symbols = 0.0; // L
    double data_snr_target = 0.0; // linear
    double pilot_snr_target = 0.0; // linear, per-subarray training SNR (reduced model)
    double circuit_power_w = 0.0;
    Codebook codebook = Codebook::infinite();

    void validate() const;
};

// Energy in joules = (power x symbols) / symbol rate.
struct EnergyBreakdown {
    double pilot_energy_j = 0.0;
    double data_energy_j = 0.0;
    double circuit_energy_j = 0.0;
    double total_j = 0.0;
    double data_power_w = 0.0; // transmit power chosen to meet the data SNR target
};

// UE energy of one burst: N+1 pilots at pilot_power_w, then L payload symbols
// at the power that meets plan.data_snr_target given that training quality.
// num_subarrays is real-valued to serve the continuous relaxation.
EnergyBreakdown transmission_energy(const ChannelScenario& scenario,
                                    const TransmissionPlan& plan, double num_subarrays,
                                    double pilot_power_w);

// Subarray counts the hardware can realize: the divisors of the element count.
std::vector<int> feasible_subarray_counts(int num_elements);

enum class SolutionCase {
    none,             // not classified (joint optimizer results)
    interior,         // energy slope changes sign inside (1, M): proper interior optimum
    all_individual,   // slope still negative at n = M: use every element individually
    single_subarray,  // slope already nonnegative at n = 1: one big subarray
};

const char* to_string(SolutionCase c);

struct JointOptions {
    int max_iterations = 200;
    double initial_pilot_power_w = 0.010;
    double pilot_power_min_w = 1e-8;
    double pilot_power_max_w = 10.0;
    // Also run the exhaustive divisor scan (with per-count pilot re-optimization)
    // and report it alongside the descent result.
    bool verify = false;
    // When set, pilot power is no longer free: it is pinned per subarray count so
    // the per-subarray training SNR equals this value, and only the count is
    // optimized. Used to compare against the reduced fixed-training-quality model.
    std::optional<double> pinned_pilot_snr;
};

struct OptimizationResult {
    int n_star = 1;
    double pilot_power_star_w = 0.0;
    double data_power_w = 0.0;
    double energy_star_j = 0.0;
    double n_continuous = 1.0; // minimizer of the continuous relaxation
    int iterations = 0;
    bool converged = false;
    SolutionCase solution_case = SolutionCase::none;
    // Exhaustive-scan cross-check, filled when JointOptions::verify is set.
    std::optional<int> oracle_n;
    std::optional<double> oracle_pilot_power_w;
    std::optional<double> oracle_energy_j;
};

// Minimizes transmission_energy over (subarray count, pilot power): projected
// steepest descent on the log-log continuous relaxation, then rounding to the
// neighboring feasible counts with a fresh 1-D pilot-power optimization each.
OptimizationResult optimize_joint(const ChannelScenario& scenario,
                                  const TransmissionPlan& plan,
                                  const JointOptions& options = {});

// Best pilot power for a fixed subarray count (grid scan plus golden-section
// refinement). Returns {pilot_power_w, total_energy_j}.
std::pair<double, double> optimize_pilot_power(const ChannelScenario& scenario,
                                               const TransmissionPlan& plan,
                                               double num_subarrays,
                                               const JointOptions& options = {});

struct PayloadPoint {
    double payload_symbols = 0.0;
    OptimizationResult result;
};

// optimize_joint for each payload length, holding everything else fixed.
std::vector<PayloadPoint> payload_sweep(const ChannelScenario& scenario,
                                        const TransmissionPlan& plan,
                                        std::span<const double> payloads,
                                        const JointOptions& options = {});

// Reduced model used for the closed-form optimality analysis: pilot power is
// pinned to hit plan.pilot_snr_target per subarray, the data power is sized
// against the Jensen lower bound of the perfect-CSI mean SNR, and circuit
// power is left out. Convex in the subarray count.
double energy_perfect_csi(const ChannelScenario& scenario, const TransmissionPlan& plan,
                          double num_subarrays);

struct EnergyDerivatives {
    double first = 0.0;
    double second = 0.0;
};

// Closed-form derivatives of energy_perfect_csi in the subarray count.
// The second derivative is positive for every valid input.
EnergyDerivatives energy_perfect_csi_derivatives(const ChannelScenario& scenario,
                                                 const TransmissionPlan& plan,
                                                 double num_subarrays);

struct CaseThresholds {
    SolutionCase solution_case = SolutionCase::none;
    double path_ratio = 0.0; // sqrt(direct gain / aggregate RIS gain)
    // path_ratio at or above this: the slope at n=1 is already >= 0.
    double single_subarray_threshold = 0.0;
    // path_ratio at or below this: the slope at n=M is still <= 0.
    double all_individual_threshold = 0.0;
};

// Classifies the reduced model's optimum from two closed-form inequalities on
// the energy slope at the endpoints n=1 and n=M.
CaseThresholds classify_case(const ChannelScenario& scenario, const TransmissionPlan& plan);

// Solves the reduced model: endpoint slope signs pick the case; an interior
// optimum is located by bisection on the slope and then rounded to the best
// neighboring feasible count.
OptimizationResult optimize_special_case(const ChannelScenario& scenario,
                                         const TransmissionPlan& plan);

} // namespace ris

#endif
