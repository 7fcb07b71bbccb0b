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
//
// Acceptance gate: end-to-end checks of the closed forms, the optimizer, and
// the experiment runner against pinned reference values. Each check prints
// one PASS/FAIL line; the exit status is the number of failures. Reference
// values and tolerances are pinned in code; a handful are external benchmark
// values this model does not hit, and those lines are expected to stay FAIL
// (the actual values are printed and stable).

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "ris/channel.hpp"
#include "ris/config.hpp"
#include "ris/energy_opt.hpp"
#include "ris/estimation.hpp"
#include "ris/experiments.hpp"
#include "ris/montecarlo.hpp"
#include "ris/quantization.hpp"
#include "ris/rng.hpp"
#include "ris/snr_analytics.hpp"
#include "ris/units.hpp"

using namespace ris;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int g_passed = 0;
int g_failed = 0;

std::string fmt(const char* format, ...) {
    char buffer[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buffer, sizeof buffer, format, args);
    va_end(args);
    return buffer;
}

void line(const char* id, bool ok, const std::string& text) {
    std::printf("[%-3s] %s  %s\n", id, ok ? "PASS" : "FAIL", text.c_str());
    if (ok)
        ++g_passed;
    else
        ++g_failed;
}

void note(const std::string& text) { std::printf("       note: %s\n", text.c_str()); }

// Measurement-campaign link budget used by most checks; the direct path
// strength is the swept variable.
ChannelScenario reference_link(double direct_db) {
    ChannelScenario s;
    s.direct_gain = db_to_linear(direct_db);
    s.ris_bs_gain = db_to_linear(-60.0);
    s.ue_ris_gain = db_to_linear(-80.0);
    s.num_elements = 1024;
    s.noise_power_w = db_to_linear(-123.9);
    s.bandwidth_hz = 100e6;
    return s;
}

// Alternate geometry: strong reflected path, weaker direct path.
ChannelScenario strong_surface_link() {
    ChannelScenario s;
    s.direct_gain = db_to_linear(-95.0);
    s.ris_bs_gain = db_to_linear(-80.0);
    s.ue_ris_gain = db_to_linear(-60.0);
    s.num_elements = 1024;
    s.noise_power_w = db_to_linear(-123.9);
    s.bandwidth_hz = 100e6;
    return s;
}

TransmissionPlan reference_plan(double payload) {
    TransmissionPlan p;
    p.payload_symbols = payload;
    p.data_snr_target = db_to_linear(20.0);
    p.pilot_snr_target = db_to_linear(20.0);
    p.circuit_power_w = 0.010;
    p.codebook = Codebook::with_bits(1);
    return p;
}

ChannelScenario random_scenario(Rng& rng) {
    ChannelScenario s;
    s.direct_gain = db_to_linear(rng.uniform(-135.0, -85.0));
    s.ris_bs_gain = db_to_linear(rng.uniform(-85.0, -55.0));
    s.ue_ris_gain = db_to_linear(rng.uniform(-85.0, -55.0));
    s.num_elements = 1 << static_cast<int>(rng.uniform(6.0, 12.0));
    s.noise_power_w = db_to_linear(-123.9);
    s.bandwidth_hz = 100e6;
    return s;
}

TransmissionPlan random_plan(Rng& rng) {
    TransmissionPlan p;
    p.payload_symbols = std::floor(db_to_linear(rng.uniform(20.0, 50.0)));
    p.data_snr_target = db_to_linear(rng.uniform(10.0, 30.0));
    p.pilot_snr_target = db_to_linear(rng.uniform(10.0, 30.0));
    p.circuit_power_w = 0.0;
    p.codebook = Codebook::infinite();
    return p;
}

// --- 1: perfect-CSI mean SNR versus the subarray count ---------------------

void criterion_1() {
    const ChannelScenario scenario = strong_surface_link();
    const double data_power = db_to_linear(104.0) * scenario.noise_power_w;
    constexpr double kMaxSe = 3.0;
    constexpr double kMaxSeconds = 60.0;

    double worst = 0.0, worst_base = 0.0;
    bool below = true, meets_at_full = true;
    const auto t0 = std::chrono::steady_clock::now();
    for (int n = 1; n <= scenario.num_elements; n *= 2) {
        SnrInputs inputs{scenario, static_cast<double>(n), kInf, data_power,
                         Codebook::infinite()};
        McConfig mc;
        mc.trials = 10000;
        mc.seed = 1;
        mc.mode = CsiMode::perfect;
        const McResult split = mc_average_snr(inputs, mc);
        const double closed = avg_snr_exact_perfect(inputs);
        const double dev = (split.mean - closed) / split.std_error;
        if (std::abs(dev) > std::abs(worst)) worst = dev;

        const McResult base = mc_baseline_elements_off(inputs, mc);
        const double base_closed = avg_snr_baseline_elements_off(inputs);
        const double base_dev = (base.mean - base_closed) / base.std_error;
        if (std::abs(base_dev) > std::abs(worst_base)) worst_base = base_dev;

        if (n < scenario.num_elements)
            below = below && base_closed < closed;
        else
            meets_at_full = std::abs(base_closed - closed) <= 1e-9 * closed;
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    line("1.1", std::abs(worst) <= kMaxSe,
         fmt("splitting: simulated mean SNR within %.1f se of the closed form at every "
             "subarray count (worst %+.2f se, 10000 trials)",
             kMaxSe, worst));
    line("1.2", std::abs(worst_base) <= kMaxSe,
         fmt("element-off baseline: simulated mean within %.1f se of its closed form "
             "(worst %+.2f se)",
             kMaxSe, worst_base));
    line("1.3", below && meets_at_full,
         "element-off baseline sits strictly below splitting for n < m and meets it at n = m");
    line("1.4", seconds <= kMaxSeconds,
         fmt("full 11-point sweep with both simulations runs in %.1f s (budget %.0f s)",
             seconds, kMaxSeconds));
}

// --- 2: trained-link mean SNR against the general closed form --------------

void criterion_2() {
    const ChannelScenario scenario = reference_link(-110.0);
    constexpr double kMaxSe = 3.0;
    const Codebook one_bit = Codebook::with_bits(1);

    double worst = 0.0;
    int points = 0;
    for (double pilot : {0.001, 0.01, 0.1}) {
        for (int n = 1; n <= scenario.num_elements; n *= 2) {
            SnrInputs inputs{scenario, static_cast<double>(n), pilot, 0.1, one_bit};
            McConfig mc;
            mc.trials = 1000;
            mc.seed = 5;
            mc.mode = CsiMode::estimated;
            const McResult result = mc_average_snr(inputs, mc);
            const double closed = avg_snr_general(inputs);
            const double dev = (result.mean - closed) / result.std_error;
            if (std::abs(dev) > std::abs(worst)) worst = dev;
            ++points;
        }
    }
    line("2.1", std::abs(worst) <= kMaxSe,
         fmt("trained 1-bit link: simulated mean within %.1f se of the closed form on all "
             "%d (pilot power, subarray count) points (worst %+.2f se, 1000 trials)",
             kMaxSe, points, worst));

    // Pinned external benchmark: 1-bit quantization penalty at n = m and
    // 100 mW pilot power. This model lands higher; the line stays FAIL.
    constexpr double kTargetDb = 2.6, kToleranceDb = 0.3;
    const double quantized = average_channel_gain(scenario, 1024.0, 0.1, one_bit);
    const double unquantized =
        average_channel_gain(scenario, 1024.0, 0.1, Codebook::infinite());
    const double gap_db = linear_to_db(unquantized / quantized);
    line("2.2", std::abs(gap_db - kTargetDb) <= kToleranceDb,
         fmt("1-bit quantization penalty at n = 1024, 100 mW pilots is %.1f +/- %.1f dB "
             "(actual %.4f dB)",
             kTargetDb, kToleranceDb, gap_db));
    const ChannelScenario stronger = reference_link(-90.0);
    note(fmt("with a -90 dB direct path the same penalty is %.4f dB",
             linear_to_db(average_channel_gain(stronger, 1024.0, 0.1, Codebook::infinite()) /
                          average_channel_gain(stronger, 1024.0, 0.1, one_bit))));
}

// --- 3: quantization loss bounds and pinned gaps ----------------------------

void criterion_3() {
    Rng rng = Rng::substream(60, 0);
    bool bounded = true;
    double slack = kInf;
    for (int draw = 0; draw < 100; ++draw) {
        ChannelScenario scenario = random_scenario(rng);
        const int exponent = static_cast<int>(std::log2(scenario.num_elements) + 0.5);
        const double n = 1 << static_cast<int>(rng.uniform(0.0, exponent + 1.0));
        for (int bits : {1, 2, 3}) {
            const Codebook codebook = Codebook::with_bits(bits);
            const double ratio =
                average_channel_gain(scenario, n, kInf, codebook) /
                average_channel_gain(scenario, n, kInf, Codebook::infinite());
            const double bound = quantization_loss_bound(codebook);
            bounded = bounded && ratio >= bound * (1.0 - 1e-12);
            slack = std::min(slack, ratio - bound);
        }
    }
    line("3.1", bounded,
         fmt("mean-gain ratio quantized/unquantized stays above the squared phasor bound on "
             "100 random links x 3 codebooks (min slack %.3e)",
             slack));

    ChannelScenario no_direct = reference_link(-110.0);
    no_direct.direct_gain = 0.0;
    const double unquantized =
        average_channel_gain(no_direct, 1024.0, kInf, Codebook::infinite());
    constexpr double kTargetsDb[3] = {-3.9, -0.9, -0.2};
    constexpr double kToleranceDb = 0.1;
    for (int bits = 1; bits <= 3; ++bits) {
        const double gap_db = linear_to_db(
            average_channel_gain(no_direct, 1024.0, kInf, Codebook::with_bits(bits)) /
            unquantized);
        line(fmt("3.%d", bits + 1).c_str(),
             std::abs(gap_db - kTargetsDb[bits - 1]) <= kToleranceDb,
             fmt("no-direct loss at n = 1024 with %d-bit phases is %.1f +/- %.1f dB "
                 "(actual %.4f dB)",
                 bits, kTargetsDb[bits - 1], kToleranceDb, gap_db));
    }
}

// --- 4: joint subarray-count / pilot-power optimization ---------------------

void criterion_4() {
    JointOptions options;
    options.verify = true;

    // Short payload, weak direct path.
    const ChannelScenario weak = reference_link(-110.0);
    const OptimizationResult a = optimize_joint(weak, reference_plan(200.0), options);
    line("4.1", std::abs(a.n_continuous - 403.0) <= 0.10 * 403.0,
         fmt("short payload: continuous optimum within 10%% of the pinned 403 "
             "(actual %.2f)",
             a.n_continuous));
    // Pinned external benchmarks; this model selects the next divisor up and a
    // lower pilot power, so both lines stay FAIL.
    line("4.2", a.n_star == 256,
         fmt("short payload: chosen divisor equals the pinned 256 (actual %d)", a.n_star));
    line("4.3", std::abs(a.pilot_power_star_w - 0.019) <= 0.15 * 0.019,
         fmt("short payload: pilot power within 15%% of the pinned 19 mW (actual %.4f mW)",
             1e3 * a.pilot_power_star_w));
    {
        TransmissionPlan unquantized = reference_plan(200.0);
        unquantized.codebook = Codebook::infinite();
        const OptimizationResult u = optimize_joint(weak, unquantized, options);
        note(fmt("with continuous phases the same point gives n* = %d, %.2f mW "
                 "(continuous optimum %.2f)",
                 u.n_star, 1e3 * u.pilot_power_star_w, u.n_continuous));
    }

    // Long payload, strong direct path.
    const ChannelScenario strong = reference_link(-90.0);
    const OptimizationResult b = optimize_joint(strong, reference_plan(10000.0), options);
    line("4.4", b.n_star == 1024,
         fmt("long payload, strong direct path: every element driven individually "
             "(n* = %d)",
             b.n_star));
    line("4.5", std::abs(b.pilot_power_star_w - 0.028) <= 0.15 * 0.028,
         fmt("long payload: pilot power within 15%% of the pinned 28 mW (actual %.4f mW)",
             1e3 * b.pilot_power_star_w));

    const bool oracle_ok =
        a.converged && b.converged && a.oracle_energy_j && b.oracle_energy_j &&
        std::abs(a.energy_star_j / *a.oracle_energy_j - 1.0) <= 0.005 &&
        std::abs(b.energy_star_j / *b.oracle_energy_j - 1.0) <= 0.005;
    line("4.6", oracle_ok,
         fmt("both optima converge and match the exhaustive scan within 0.5%% "
             "(gaps %.2e, %.2e)",
             a.oracle_energy_j ? std::abs(a.energy_star_j / *a.oracle_energy_j - 1.0) : -1.0,
             b.oracle_energy_j ? std::abs(b.energy_star_j / *b.oracle_energy_j - 1.0) : -1.0));
}

// --- 5: payload-sweep structure ---------------------------------------------

void criterion_5() {
    std::vector<double> grid;
    for (int k = 0; k <= 24; ++k) grid.push_back(std::round(std::pow(10.0, 2.0 + k / 8.0)));
    const TransmissionPlan plan = reference_plan(0.0);
    const auto weak = payload_sweep(reference_link(-110.0), plan, grid, JointOptions{});
    const auto strong = payload_sweep(reference_link(-90.0), plan, grid, JointOptions{});

    bool monotone = true, dominates = true, drops = true;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        dominates = dominates && weak[k].result.n_star >= strong[k].result.n_star;
        if (k == 0) continue;
        for (const auto* sweep : {&weak, &strong}) {
            const auto& prev = (*sweep)[k - 1].result;
            const auto& cur = (*sweep)[k].result;
            monotone = monotone && cur.n_star >= prev.n_star;
            // The pinned pilot power falls back only when the divisor jumps.
            if (cur.n_star > prev.n_star)
                drops = drops && cur.pilot_power_star_w < prev.pilot_power_star_w;
            else
                drops = drops &&
                        cur.pilot_power_star_w >= prev.pilot_power_star_w * (1.0 - 1e-12);
        }
    }
    line("5.1", monotone, "optimal divisor never shrinks as the payload grows (both links)");
    line("5.2", dominates,
         "the weak-direct link never uses fewer subarrays than the strong-direct link");
    line("5.3", drops,
         "pilot power rises along each divisor plateau and drops exactly at the jumps");

    const auto first_full = [&](const std::vector<PayloadPoint>& sweep) {
        for (std::size_t k = 0; k < sweep.size(); ++k)
            if (sweep[k].result.n_star == 1024) return static_cast<int>(k);
        return -1;
    };
    const int weak_at = first_full(weak);
    const int strong_at = first_full(strong);
    // Grid indices 8 and 14 hold the pinned thresholds 1000 and 5623.
    line("5.4", weak_at >= 0 && std::abs(weak_at - 8) <= 1,
         fmt("weak link reaches n* = m within one grid step of 1000 symbols (at L = %.0f)",
             weak_at >= 0 ? grid[weak_at] : -1.0));
    line("5.5", strong_at >= 0 && std::abs(strong_at - 14) <= 1,
         fmt("strong link reaches n* = m within one grid step of 5623 symbols (at L = %.0f)",
             strong_at >= 0 ? grid[strong_at] : -1.0));
}

// --- 6: reduced-model calculus ----------------------------------------------

void criterion_6() {
    {
        Rng rng = Rng::substream(50, 0);
        bool convex = true, slopes = true;
        double worst_rel = 0.0;
        for (int draw = 0; draw < 100; ++draw) {
            const ChannelScenario scenario = random_scenario(rng);
            const TransmissionPlan plan = random_plan(rng);
            const double elements = scenario.num_elements;
            const double pilot_slope = scenario.noise_power_w * plan.pilot_snr_target /
                                       (scenario.bandwidth_hz * scenario.total_ris_gain());
            for (int k = 0; k < 100; ++k) {
                const double n = 1.0 + (elements - 1.0) * k / 99.0;
                const auto d = energy_perfect_csi_derivatives(scenario, plan, n);
                convex = convex && d.second > 0.0;
                const double h = n * 1e-6;
                const double fd = (energy_perfect_csi(scenario, plan, n + h) -
                                   energy_perfect_csi(scenario, plan, n - h)) /
                                  (2.0 * h);
                // Scale against the slope magnitudes whose difference forms E';
                // a plain relative test divides by zero at the minimizer.
                const double scale = pilot_slope + std::abs(d.first - pilot_slope);
                const double rel = std::abs(d.first - fd) / scale;
                worst_rel = std::max(worst_rel, rel);
                slopes = slopes && rel <= 1e-6;
            }
        }
        line("6.1", convex && slopes,
             fmt("reduced-model energy is convex and its slope matches finite differences "
                 "on a 100x100 random grid (worst %.2e of scale, tolerance 1e-6)",
                 worst_rel));
    }
    {
        Rng rng = Rng::substream(51, 0);
        bool agree = true;
        int interior = 0, single = 0, all = 0;
        for (int draw = 0; draw < 100; ++draw) {
            const ChannelScenario scenario = random_scenario(rng);
            const TransmissionPlan plan = random_plan(rng);
            const auto thresholds = classify_case(scenario, plan);
            const double low = energy_perfect_csi_derivatives(scenario, plan, 1.0).first;
            const double high =
                energy_perfect_csi_derivatives(scenario, plan,
                                               static_cast<double>(scenario.num_elements))
                    .first;
            SolutionCase expected;
            if (low >= 0.0)
                expected = SolutionCase::single_subarray;
            else if (high <= 0.0)
                expected = SolutionCase::all_individual;
            else
                expected = SolutionCase::interior;
            agree = agree && thresholds.solution_case == expected;
            interior += expected == SolutionCase::interior;
            single += expected == SolutionCase::single_subarray;
            all += expected == SolutionCase::all_individual;
        }
        line("6.2", agree && interior > 0 && single > 0 && all > 0,
             fmt("threshold classification matches the endpoint slopes on 100 random draws "
                 "(%d interior, %d single, %d all-individual)",
                 interior, single, all));
    }
    {
        Rng rng = Rng::substream(52, 0);
        bool exact = true;
        int interior = 0;
        for (int draw = 0; draw < 100; ++draw) {
            const ChannelScenario scenario = random_scenario(rng);
            const TransmissionPlan plan = random_plan(rng);
            const auto result = optimize_special_case(scenario, plan);
            int scan_n = 0;
            double scan_e = kInf;
            for (int d : feasible_subarray_counts(scenario.num_elements)) {
                const double e = energy_perfect_csi(scenario, plan, d);
                if (e < scan_e) {
                    scan_e = e;
                    scan_n = d;
                }
            }
            if (result.solution_case == SolutionCase::interior) {
                ++interior;
                exact = exact && result.n_star == scan_n;
            }
            exact = exact && result.energy_star_j <= scan_e * (1.0 + 1e-12);
        }
        line("6.3", exact && interior > 10,
             fmt("bisection lands exactly on the divisor-scan minimum in every interior case "
                 "(%d of 100 draws interior)",
                 interior));
    }
}

// --- 7: estimator statistics -------------------------------------------------

void criterion_7() {
    const ChannelScenario scenario = reference_link(-110.0);
    const int n = 8;
    const double pilot = 0.02;
    constexpr int kDraws = 100000;
    constexpr double kMaxSe = 3.0;

    const auto [direct_power, subarray_power] = estimate_powers(scenario, n, pilot);
    Rng rng = Rng::substream(99, 0);
    double sum_direct = 0.0, sum_sub = 0.0;
    for (int t = 0; t < kDraws; ++t) {
        const ChannelRealization real = sample_realization(scenario, n, rng);
        const auto observed =
            simulate_pilot_reception_decorrelated(real, pilot, scenario.noise_power_w, rng);
        const ChannelEstimate estimate = mmse_estimate(observed, scenario, n, pilot);
        sum_direct += std::norm(estimate.direct);
        for (const auto& z : estimate.subarrays) sum_sub += std::norm(z);
    }
    // |estimate|^2 of a complex gaussian has variance power^2: se = power/sqrt(G).
    const double direct_dev =
        (sum_direct / kDraws - direct_power) / (direct_power / std::sqrt(double(kDraws)));
    const double sub_dev = (sum_sub / (double(kDraws) * n) - subarray_power) /
                           (subarray_power / std::sqrt(double(kDraws) * n));
    line("7.1", std::abs(direct_dev) <= kMaxSe,
         fmt("direct-path estimate power matches the closed form within %.1f se at %d draws "
             "(dev %+.2f se)",
             kMaxSe, kDraws, direct_dev));
    line("7.2", std::abs(sub_dev) <= kMaxSe,
         fmt("subarray estimate power matches the closed form within %.1f se "
             "(dev %+.2f se, pooled)",
             kMaxSe, sub_dev));

    // Training through the explicit orthogonal matrix must whiten the noise:
    // residual covariance sigma^2 I after decorrelation.
    Rng noise_rng = Rng::substream(99, 1);
    const ChannelRealization fixed = sample_realization(scenario, n, noise_rng);
    const PilotMatrix pilots = build_pilot_matrix(n);
    const int dim = n + 1;
    const double amplitude = std::sqrt(dim * pilot);
    std::vector<double> diag(dim, 0.0);
    std::vector<std::complex<double>> cross(dim * dim, 0.0);
    for (int t = 0; t < kDraws; ++t) {
        const auto observed = simulate_pilot_reception(fixed, pilots, pilot,
                                                       scenario.noise_power_w, noise_rng);
        std::vector<std::complex<double>> residual(dim);
        residual[0] = observed[0] - amplitude * fixed.direct;
        for (int k = 1; k < dim; ++k)
            residual[k] = observed[k] - amplitude * fixed.subarrays[k - 1];
        for (int k = 0; k < dim; ++k) {
            diag[k] += std::norm(residual[k]);
            for (int j = k + 1; j < dim; ++j)
                cross[k * dim + j] += residual[k] * std::conj(residual[j]);
        }
    }
    const double sigma2 = scenario.noise_power_w;
    double worst_diag = 0.0, worst_cross = 0.0;
    for (int k = 0; k < dim; ++k) {
        const double dev = (diag[k] / kDraws - sigma2) / (sigma2 / std::sqrt(double(kDraws)));
        worst_diag = std::max(worst_diag, std::abs(dev));
        for (int j = k + 1; j < dim; ++j) {
            // Mean of w_k conj(w_j): each component has variance sigma^4/(2G).
            const double mag = std::abs(cross[k * dim + j]) / kDraws;
            worst_cross = std::max(
                worst_cross, mag / (sigma2 / std::sqrt(2.0 * double(kDraws))));
        }
    }
    line("7.3", worst_diag <= kMaxSe && worst_cross <= 4.0,
         fmt("decorrelated training noise is white: diagonal within %.1f se "
             "(worst %.2f), cross terms within 4.0 se (worst %.2f)",
             kMaxSe, worst_diag, worst_cross));
}

// --- 8: deterministic outputs -------------------------------------------------

void criterion_8() {
    using nlohmann::ordered_json;
    const char* base = R"({
        "scenario": {
            "alpha_db": -60, "beta_db": -80, "rho_db": -110,
            "m": 16, "bandwidth_hz": 1e8, "sigma2_dbw": -123.9
        },
        "plan": {
            "l": 200, "gamma_d_db": 20, "gamma_p_db": 20,
            "p_circuit_w": 0.01, "bits": 1
        },
        "link": {
            "data_power_w": 0.1, "pilot_powers_w": [0.01],
            "pilot_power_points": 5
        },
        "run": {"experiment": "mc-verify", "trials": 400, "seed": 3}
    })";
    bool identical = true;
    std::string detail;
    for (const std::string& experiment : known_experiments()) {
        ordered_json doc = ordered_json::parse(base);
        doc["run"]["experiment"] = experiment;
        if (experiment == "payload-sweep") {
            doc["plan"].erase("l");
            doc["plan"]["l_sweep"] = {100, 1000, 10000};
        }
        doc["run"]["threads"] = 1;
        const std::string once = table_to_csv(build_table(parse_config(doc)));
        const std::string again = table_to_csv(build_table(parse_config(doc)));
        doc["run"]["threads"] = 4;
        const std::string threaded = table_to_csv(build_table(parse_config(doc)));
        if (once != again || once != threaded) {
            identical = false;
            detail += (detail.empty() ? "" : ", ") + experiment;
        }
    }
    line("8.1", identical,
         identical ? std::string("every experiment emits byte-identical tables across "
                                 "repeated runs and across 1 vs 4 worker threads")
                   : "non-deterministic experiments: " + detail);
}

} // namespace

int main() {
    std::printf("acceptance checks (pinned tolerances; deterministic seeds)\n");
    std::printf("-----------------------------------------------------------\n");
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    std::printf("-----------------------------------------------------------\n");
    std::printf("%d passed, %d failed\n", g_passed, g_failed);
    return g_failed;
}
