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

#include "ris/energy_opt.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "ris/snr_analytics.hpp"

namespace ris {

namespace {

constexpr double quarter_pi = M_PI / 4.0;
constexpr double half_pi = M_PI / 2.0;

double golden_section_min(const std::function<double(double)>& f, double lo, double hi) {
    constexpr double inv_golden = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_golden * (b - a);
    double x2 = a + inv_golden * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < 72; ++i) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_golden * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_golden * (b - a);
            f2 = f(x2);
        }
    }
    return f1 <= f2 ? x1 : x2;
}

// Neighboring feasible counts around a real-valued target.
std::pair<int, int> bracketing_divisors(const std::vector<int>& divisors, double target) {
    int below = divisors.front();
    int above = divisors.back();
    for (int d : divisors) {
        if (d <= target) below = d;
        if (d >= target) {
            above = d;
            break;
        }
    }
    if (target < divisors.front()) below = divisors.front();
    if (target > divisors.back()) above = divisors.back();
    return {below, above};
}

double pinned_pilot_power(const ChannelScenario& scenario, double pilot_snr,
                          double num_subarrays) {
    // Per-subarray training SNR equals pilot_snr exactly.
    return pilot_snr * num_subarrays * scenario.noise_power_w /
           ((num_subarrays + 1.0) * scenario.total_ris_gain());
}

} // namespace

void TransmissionPlan::validate() const {
    if (!(payload_symbols >= 0.0) || std::isinf(payload_symbols))
        throw std::invalid_argument("payload_symbols must be finite and >= 0");
    if (!(data_snr_target >= 0.0) || std::isinf(data_snr_target))
        throw std::invalid_argument("data_snr_target must be finite and >= 0");
    if (!(pilot_snr_target >= 0.0) || std::isinf(pilot_snr_target))
        throw std::invalid_argument("pilot_snr_target must be finite and >= 0");
    if (!(circuit_power_w >= 0.0) || std::isinf(circuit_power_w))
        throw std::invalid_argument("circuit_power_w must be finite and >= 0");
}

const char* to_string(SolutionCase c) {
    switch (c) {
        case SolutionCase::interior: return "interior";
        case SolutionCase::all_individual: return "all_individual";
        case SolutionCase::single_subarray: return "single_subarray";
        default: return "none";
    }
}

EnergyBreakdown transmission_energy(const ChannelScenario& scenario,
                                    const TransmissionPlan& plan, double num_subarrays,
                                    double pilot_power_w) {
    scenario.validate();
    plan.validate();
    if (!(num_subarrays >= 1.0) || num_subarrays > scenario.num_elements)
        throw std::invalid_argument("num_subarrays must lie in [1, num_elements]");
    if (!(pilot_power_w >= 0.0) || std::isinf(pilot_power_w) || std::isnan(pilot_power_w))
        throw std::invalid_argument("pilot_power_w must be finite and >= 0");

    EnergyBreakdown out;
    out.data_power_w = required_data_power(scenario, num_subarrays, pilot_power_w,
                                           plan.codebook, plan.data_snr_target);
    const double symbol_time = 1.0 / scenario.bandwidth_hz;
    out.pilot_energy_j = (num_subarrays + 1.0) * pilot_power_w * symbol_time;
    out.data_energy_j = plan.payload_symbols * out.data_power_w * symbol_time;
    out.circuit_energy_j =
        (plan.payload_symbols + num_subarrays + 1.0) * plan.circuit_power_w * symbol_time;
    out.total_j = out.pilot_energy_j + out.data_energy_j + out.circuit_energy_j;
    return out;
}

std::vector<int> feasible_subarray_counts(int num_elements) {
    if (num_elements < 1) throw std::invalid_argument("num_elements must be >= 1");
    std::vector<int> divisors;
    for (int d = 1; static_cast<long long>(d) * d <= num_elements; ++d) {
        if (num_elements % d != 0) continue;
        divisors.push_back(d);
        if (d != num_elements / d) divisors.push_back(num_elements / d);
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

std::pair<double, double> optimize_pilot_power(const ChannelScenario& scenario,
                                               const TransmissionPlan& plan,
                                               double num_subarrays,
                                               const JointOptions& options) {
    if (options.pinned_pilot_snr) {
        const double power =
            pinned_pilot_power(scenario, *options.pinned_pilot_snr, num_subarrays);
        return {power, transmission_energy(scenario, plan, num_subarrays, power).total_j};
    }

    const auto energy_at_log = [&](double log_power) {
        return transmission_energy(scenario, plan, num_subarrays, std::exp(log_power)).total_j;
    };
    const double lo = std::log(options.pilot_power_min_w);
    const double hi = std::log(options.pilot_power_max_w);
    if (!(lo < hi)) throw std::invalid_argument("pilot power bounds must satisfy min < max");

    // Coarse scan to bracket the minimum; the profile is smooth in log power.
    constexpr int grid = 48;
    int best = 0;
    double best_value = energy_at_log(lo);
    for (int k = 1; k <= grid; ++k) {
        const double value = energy_at_log(lo + (hi - lo) * k / grid);
        if (value < best_value) {
            best_value = value;
            best = k;
        }
    }
    const double step = (hi - lo) / grid;
    const double a = std::max(lo, lo + (best - 1) * step);
    const double b = std::min(hi, lo + (best + 1) * step);
    const double log_star = golden_section_min(energy_at_log, a, b);
    return {std::exp(log_star), energy_at_log(log_star)};
}

OptimizationResult optimize_joint(const ChannelScenario& scenario,
                                  const TransmissionPlan& plan, const JointOptions& options) {
    scenario.validate();
    plan.validate();
    if (options.max_iterations < 1)
        throw std::invalid_argument("max_iterations must be >= 1");

    const double log_n_max = std::log(static_cast<double>(scenario.num_elements));
    const double log_p_min = std::log(options.pilot_power_min_w);
    const double log_p_max = std::log(options.pilot_power_max_w);
    const bool pinned = options.pinned_pilot_snr.has_value();

    const auto objective = [&](double log_n, double log_p) {
        const double n = std::exp(log_n);
        const double power =
            pinned ? pinned_pilot_power(scenario, *options.pinned_pilot_snr, n)
                   : std::exp(log_p);
        return transmission_energy(scenario, plan, n, power).total_j;
    };
    const auto clamp_x = [&](double x) { return std::clamp(x, 0.0, log_n_max); };
    const auto clamp_y = [&](double y) { return std::clamp(y, log_p_min, log_p_max); };

    double x = clamp_x(std::log(scenario.num_elements / 2.0));
    double y = clamp_y(std::log(options.initial_pilot_power_w));
    double value = objective(x, y);

    OptimizationResult result;
    int iter = 0;
    for (; iter < options.max_iterations; ++iter) {
        // Central differences on the log coordinates.
        const double hx = 1e-4 * std::max(1.0, std::abs(x));
        const double hy = 1e-4 * std::max(1.0, std::abs(y));
        double gx = (objective(clamp_x(x + hx), y) - objective(clamp_x(x - hx), y)) /
                    (clamp_x(x + hx) - clamp_x(x - hx));
        double gy = 0.0;
        if (!pinned)
            gy = (objective(x, clamp_y(y + hy)) - objective(x, clamp_y(y - hy))) /
                 (clamp_y(y + hy) - clamp_y(y - hy));

        // Project the descent direction at active bounds.
        if ((x <= 0.0 && gx > 0.0) || (x >= log_n_max && gx < 0.0)) gx = 0.0;
        if (!pinned && ((y <= log_p_min && gy > 0.0) || (y >= log_p_max && gy < 0.0)))
            gy = 0.0;

        const double norm = std::hypot(gx, gy);
        if (norm == 0.0) {
            result.converged = true;
            break;
        }
        const double dx = -gx / norm, dy = -gy / norm;

        // Backtracking line search with an Armijo condition.
        constexpr double armijo = 1e-4;
        double step_size = 0.5;
        bool moved = false;
        for (int halving = 0; halving < 40; ++halving, step_size *= 0.5) {
            const double nx = clamp_x(x + step_size * dx);
            const double ny = pinned ? y : clamp_y(y + step_size * dy);
            const double trial = objective(nx, ny);
            if (trial <= value - armijo * step_size * norm) {
                const double improvement = value - trial;
                x = nx;
                y = ny;
                value = trial;
                moved = true;
                if (improvement <= 1e-13 * std::abs(value)) result.converged = true;
                break;
            }
        }
        if (!moved) {
            result.converged = true;
            break;
        }
        if (result.converged) break;
    }
    result.iterations = iter;
    result.n_continuous = std::exp(x);

    // Round to the neighboring feasible counts and re-tune the pilot power.
    const auto divisors = feasible_subarray_counts(scenario.num_elements);
    const auto [below, above] = bracketing_divisors(divisors, result.n_continuous);
    result.n_star = below;
    auto [power, energy] = optimize_pilot_power(scenario, plan, below, options);
    if (above != below) {
        const auto [power_hi, energy_hi] = optimize_pilot_power(scenario, plan, above, options);
        if (energy_hi < energy) {
            result.n_star = above;
            power = power_hi;
            energy = energy_hi;
        }
    }
    result.pilot_power_star_w = power;
    result.energy_star_j = energy;
    result.data_power_w =
        transmission_energy(scenario, plan, result.n_star, power).data_power_w;

    if (options.verify) {
        int oracle_n = divisors.front();
        double oracle_power = 0.0;
        double oracle_energy = std::numeric_limits<double>::infinity();
        for (int d : divisors) {
            const auto [p, e] = optimize_pilot_power(scenario, plan, d, options);
            if (e < oracle_energy) {
                oracle_energy = e;
                oracle_power = p;
                oracle_n = d;
            }
        }
        result.oracle_n = oracle_n;
        result.oracle_pilot_power_w = oracle_power;
        result.oracle_energy_j = oracle_energy;
    }
    return result;
}

std::vector<PayloadPoint> payload_sweep(const ChannelScenario& scenario,
                                        const TransmissionPlan& plan,
                                        std::span<const double> payloads,
                                        const JointOptions& options) {
    std::vector<PayloadPoint> points;
    points.reserve(payloads.size());
    for (double payload : payloads) {
        TransmissionPlan varied = plan;
        varied.payload_symbols = payload;
        points.push_back({payload, optimize_joint(scenario, varied, options)});
    }
    return points;
}

double energy_perfect_csi(const ChannelScenario& scenario, const TransmissionPlan& plan,
                          double num_subarrays) {
    scenario.validate();
    plan.validate();
    if (!(num_subarrays > 0.0) || std::isinf(num_subarrays))
        throw std::invalid_argument("num_subarrays must be finite and > 0");
    const double aggregate = scenario.total_ris_gain();
    const double noise = scenario.noise_power_w;
    const double rate = scenario.bandwidth_hz;
    const double amplitude =
        std::sqrt(scenario.direct_gain) + std::sqrt(aggregate * num_subarrays);
    const double pilot = noise * plan.pilot_snr_target * num_subarrays / (rate * aggregate);
    const double data = noise * plan.data_snr_target * plan.payload_symbols /
                        (rate * quarter_pi * amplitude * amplitude);
    return pilot + data;
}

EnergyDerivatives energy_perfect_csi_derivatives(const ChannelScenario& scenario,
                                                 const TransmissionPlan& plan,
                                                 double num_subarrays) {
    scenario.validate();
    plan.validate();
    if (!(num_subarrays > 0.0) || std::isinf(num_subarrays))
        throw std::invalid_argument("num_subarrays must be finite and > 0");
    const double aggregate = scenario.total_ris_gain();
    const double noise = scenario.noise_power_w;
    const double rate = scenario.bandwidth_hz;
    const double root_direct = std::sqrt(scenario.direct_gain);
    const double root_beam = std::sqrt(aggregate * num_subarrays);
    const double amplitude = root_direct + root_beam;
    const double data_scale = noise * plan.data_snr_target * plan.payload_symbols / rate;

    EnergyDerivatives d;
    d.first = noise * plan.pilot_snr_target / (rate * aggregate) -
              data_scale * std::sqrt(aggregate) /
                  (quarter_pi * amplitude * amplitude * amplitude * std::sqrt(num_subarrays));
    d.second = data_scale * std::sqrt(aggregate) * (root_direct + 4.0 * root_beam) /
               (half_pi * amplitude * amplitude * amplitude * amplitude *
                num_subarrays * std::sqrt(num_subarrays));
    return d;
}

CaseThresholds classify_case(const ChannelScenario& scenario, const TransmissionPlan& plan) {
    scenario.validate();
    plan.validate();
    if (!(plan.pilot_snr_target > 0.0))
        throw std::invalid_argument("pilot_snr_target must be > 0 to classify");
    CaseThresholds out;
    const double aggregate = scenario.total_ris_gain();
    const double elements = scenario.num_elements;
    out.path_ratio = std::sqrt(scenario.direct_gain / aggregate);
    const double load =
        4.0 * plan.data_snr_target * plan.payload_symbols / (M_PI * plan.pilot_snr_target);
    out.single_subarray_threshold = std::cbrt(load) - 1.0;
    out.all_individual_threshold = std::cbrt(load / std::sqrt(elements)) - std::sqrt(elements);
    if (out.path_ratio >= out.single_subarray_threshold)
        out.solution_case = SolutionCase::single_subarray;
    else if (out.path_ratio <= out.all_individual_threshold)
        out.solution_case = SolutionCase::all_individual;
    else
        out.solution_case = SolutionCase::interior;
    return out;
}

OptimizationResult optimize_special_case(const ChannelScenario& scenario,
                                         const TransmissionPlan& plan) {
    scenario.validate();
    plan.validate();
    if (!(plan.pilot_snr_target > 0.0))
        throw std::invalid_argument("pilot_snr_target must be > 0 for the reduced model");

    const double elements = scenario.num_elements;
    const double slope_low = energy_perfect_csi_derivatives(scenario, plan, 1.0).first;
    const double slope_high = energy_perfect_csi_derivatives(scenario, plan, elements).first;

    OptimizationResult result;
    result.converged = true;
    if (slope_low >= 0.0) {
        // Already climbing at the left endpoint (zero slope counts as the boundary).
        result.solution_case = SolutionCase::single_subarray;
        result.n_continuous = 1.0;
        result.n_star = 1;
    } else if (slope_high <= 0.0) {
        result.solution_case = SolutionCase::all_individual;
        result.n_continuous = elements;
        result.n_star = scenario.num_elements;
    } else {
        result.solution_case = SolutionCase::interior;
        double lo = 1.0, hi = elements;
        double mid = 0.5 * (lo + hi);
        const double reference = std::abs(slope_low);
        int iter = 0;
        while (iter < 60) {
            mid = 0.5 * (lo + hi);
            const double slope = energy_perfect_csi_derivatives(scenario, plan, mid).first;
            if (hi - lo < 0.5 && std::abs(slope) < 1e-3 * reference) break;
            if (slope < 0.0)
                lo = mid;
            else
                hi = mid;
            ++iter;
        }
        result.iterations = iter;
        result.n_continuous = mid;

        const auto divisors = feasible_subarray_counts(scenario.num_elements);
        const auto [below, above] = bracketing_divisors(divisors, mid);
        result.n_star =
            energy_perfect_csi(scenario, plan, below) <= energy_perfect_csi(scenario, plan, above)
                ? below
                : above;
    }

    result.energy_star_j = energy_perfect_csi(scenario, plan, result.n_star);
    result.pilot_power_star_w =
        pinned_pilot_power(scenario, plan.pilot_snr_target, result.n_star);
    const double amplitude = std::sqrt(scenario.direct_gain) +
                             std::sqrt(scenario.total_ris_gain() * result.n_star);
    result.data_power_w = scenario.noise_power_w * plan.data_snr_target /
                          (quarter_pi * amplitude * amplitude);
    return result;
}

} // namespace ris
