// SPDX-License-Identifier: Apache-2.0
//
// radcom-emf: exposure-aware waveform design for dual-function
// radar-communication arrays
// Copyright (C) 2026 radcom-emf contributors
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
// ------------------------------------------------------------------------

#include "radcom/montecarlo.hpp"

#include <cmath>
#include <stdexcept>

namespace radcom {

Constellation Constellation::qpsk() {
    const double s = 1.0 / std::sqrt(2.0);
    Constellation c;
    c.name = "qpsk";
    c.points = {{s, s}, {-s, s}, {-s, -s}, {s, -s}};
    return c;
}

Constellation Constellation::psk(int order) {
    if (order < 2) throw std::invalid_argument("PSK order must be >= 2");
    Constellation c;
    c.name = "psk" + std::to_string(order);
    c.points.reserve(order);
    for (int m = 0; m < order; ++m)
        c.points.push_back(std::polar(1.0, 2.0 * kPi * m / order));
    return c;
}

Constellation Constellation::qam(int order) {
    int side = 0;
    if (order == 4) side = 2;
    else if (order == 16) side = 4;
    else if (order == 64) side = 8;
    else throw std::invalid_argument("QAM order must be 4, 16 or 64");
    Constellation c;
    c.name = "qam" + std::to_string(order);
    double energy = 0.0;
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j) {
            const double re = static_cast<double>(2 * i - side + 1);
            const double im = static_cast<double>(2 * j - side + 1);
            c.points.push_back({re, im});
            energy += re * re + im * im;
        }
    const double scale = std::sqrt(static_cast<double>(order) / energy);
    for (auto& p : c.points) p *= scale;
    return c;
}

Constellation Constellation::from_name(const std::string& name) {
    if (name == "qpsk") return qpsk();
    if (name.rfind("psk", 0) == 0) return psk(std::stoi(name.substr(3)));
    if (name.rfind("qam", 0) == 0) return qam(std::stoi(name.substr(3)));
    throw std::invalid_argument("unknown constellation: " + name);
}

int Constellation::detect(std::complex<double> received) const {
    int best = 0;
    double best_distance = std::numeric_limits<double>::infinity();
    for (std::size_t m = 0; m < points.size(); ++m) {
        const double d = std::norm(received - points[m]);
        if (d < best_distance) {
            best_distance = d;
            best = static_cast<int>(m);
        }
    }
    return best;
}

arma::cx_mat modulate(int num_users, int frame_length, const Constellation& constellation,
                      RngStream& rng) {
    if (constellation.points.size() < 2)
        throw std::invalid_argument("constellation must have at least 2 points");
    arma::cx_mat symbols(num_users, frame_length);
    for (int u = 0; u < num_users; ++u)
        for (int l = 0; l < frame_length; ++l)
            symbols(u, l) =
                constellation.points[rng.uniform_int(constellation.points.size())];
    return symbols;
}

namespace {

std::uint64_t trial_errors(const arma::cx_mat& received_noiseless, const arma::cx_mat& symbols,
                           const Constellation& constellation, double noise_variance,
                           RngStream& rng) {
    std::uint64_t errors = 0;
    for (arma::uword l = 0; l < symbols.n_cols; ++l)
        for (arma::uword u = 0; u < symbols.n_rows; ++u) {
            const std::complex<double> y =
                received_noiseless(u, l) + rng.cgaussian(noise_variance);
            const int decided = constellation.detect(y);
            if (constellation.points[static_cast<std::size_t>(decided)] != symbols(u, l))
                ++errors;
        }
    return errors;
}

}  // namespace

std::uint64_t count_detection_errors(const arma::cx_mat& received_noiseless,
                                     const arma::cx_mat& symbols,
                                     const Constellation& constellation,
                                     double noise_variance, std::uint64_t trials,
                                     std::uint64_t seed, std::uint64_t frame_index,
                                     bool parallel) {
    if (received_noiseless.n_rows != symbols.n_rows ||
        received_noiseless.n_cols != symbols.n_cols)
        throw std::invalid_argument("count_detection_errors: dimension mismatch");
    if (!(noise_variance > 0.0))
        throw std::invalid_argument("noise variance must be > 0");

    std::uint64_t total = 0;
    const std::int64_t n = static_cast<std::int64_t>(trials);
    if (parallel) {
#pragma omp parallel for schedule(static) reduction(+ : total)
        for (std::int64_t t = 0; t < n; ++t) {
            RngStream rng(seed, stream::noise,
                          (frame_index << 32) | static_cast<std::uint64_t>(t));
            total += trial_errors(received_noiseless, symbols, constellation, noise_variance,
                                  rng);
        }
    } else {
        for (std::int64_t t = 0; t < n; ++t) {
            RngStream rng(seed, stream::noise,
                          (frame_index << 32) | static_cast<std::uint64_t>(t));
            total += trial_errors(received_noiseless, symbols, constellation, noise_variance,
                                  rng);
        }
    }
    return total;
}

SerEstimate transmit_detect(const arma::cx_mat& channel, const arma::cx_mat& waveform,
                            const arma::cx_mat& symbols, const Constellation& constellation,
                            double noise_variance, std::uint64_t trials, std::uint64_t seed,
                            std::uint64_t frame_index, bool parallel) {
    const arma::cx_mat received = channel * waveform;
    SerEstimate estimate;
    estimate.errors = count_detection_errors(received, symbols, constellation, noise_variance,
                                             trials, seed, frame_index, parallel);
    estimate.symbols = trials * static_cast<std::uint64_t>(symbols.n_elem);
    estimate.ser = static_cast<double>(estimate.errors) / static_cast<double>(estimate.symbols);
    const double p = estimate.ser;
    estimate.halfwidth =
        1.96 * std::sqrt(std::max(p * (1.0 - p), 0.0) / static_cast<double>(estimate.symbols));
    return estimate;
}

double noise_variance_for_snr_db(double snr_db) {
    return 1.0 / std::pow(10.0, snr_db / 10.0);
}

DesignContext prepare_design(const Scenario& scenario) {
    scenario.validate();
    DesignContext context;
    context.placement = resolve_placement(scenario);
    context.channel = build_channel(scenario.config, context.placement);
    context.grid = AngularGrid::from_window(scenario.grid);
    context.desired =
        desired_beampattern(scenario.targets, scenario.mainlobe_width_rad, context.grid);
    context.radar_fit =
        design_covariance(context.desired, scenario.config.frame_power(),
                          scenario.config.num_antennas, scenario.config.wavenumber());
    context.constellation = Constellation::from_name(scenario.constellation);
    return context;
}

std::vector<SweepVariant> default_variants() {
    return {
        {"non_emf", false, std::numeric_limits<double>::quiet_NaN()},
        {"g10", true, 10.0},
        {"g01", true, 0.1},
    };
}

FrameDesign design_frame(const DesignContext& context, const Scenario& scenario,
                         const SweepVariant& variant, double rho, std::uint64_t frame_index) {
    const auto& config = scenario.config;
    FrameDesign frame;
    RngStream symbol_rng(config.rng_seed, stream::symbols, frame_index);
    frame.symbols =
        modulate(config.num_users, config.frame_length, context.constellation, symbol_rng);
    frame.radar_waveform =
        procrustes_waveform(context.channel, frame.symbols, context.radar_fit.covariance);

    const double inf = std::numeric_limits<double>::infinity();
    frame.params.rho = rho;
    frame.params.max_power = config.frame_power();
    const double user_threshold =
        variant.emf_constraints
            ? (std::isnan(variant.gamma_user) ? scenario.gamma_user : variant.gamma_user)
            : inf;
    frame.params.gamma_user.set_size(config.num_users);
    frame.params.gamma_user.fill(user_threshold);
    frame.params.gamma_sector.set_size(scenario.sectors.size());
    for (std::size_t a = 0; a < scenario.sectors.size(); ++a)
        frame.params.gamma_sector[a] =
            variant.emf_constraints ? scenario.sectors[a].gamma_w_m2 : inf;

    const QuadraticTerms terms =
        build_quadratic_terms(context.channel, frame.symbols, frame.radar_waveform, rho,
                              context.placement, scenario.sectors, config.wavenumber());
    frame.solution = solve_emf_constrained(terms, frame.params);
    return frame;
}

namespace {

// Per-frame design and the statistics that do not depend on the noise level.
struct FrameInfo {
    arma::cx_mat symbols;
    arma::cx_mat received;  // H X*
    double mse_linear = 0.0;
    double mse_db = 0.0;
    double objective = 0.0;
    double mui = 0.0;
    double total_user_exposure = 0.0;
};

FrameInfo make_frame_info(const DesignContext& context, const Scenario& scenario,
                          const SweepVariant& variant, double rho, std::uint64_t frame_index) {
    FrameDesign frame = design_frame(context, scenario, variant, rho, frame_index);
    FrameInfo info;
    info.symbols = std::move(frame.symbols);
    info.received = context.channel * frame.solution.waveform;
    const arma::cx_mat covariance = frame.solution.waveform * frame.solution.waveform.t();
    const BeampatternMse mse =
        beampattern_mse(covariance, context.desired, scenario.config.wavenumber(), true);
    info.mse_linear = mse.linear;
    info.mse_db = mse.db;
    info.objective = frame.solution.objective;
    info.mui = frame.solution.mui;
    info.total_user_exposure =
        compliance_report(frame.solution.waveform, context.placement, scenario.sectors,
                          frame.params.gamma_user, scenario.config.wavenumber())
            .total_user_exposure;
    return info;
}

SweepResult run_sweep(const Scenario& scenario, const std::vector<SweepVariant>& variants,
                      const arma::vec& sweep_values, bool sweep_is_rho, double snr_fixed_db,
                      const SweepOptions& options) {
    scenario.validate();
    const auto& config = scenario.config;
    const std::uint64_t trials = options.trials ? options.trials : scenario.sweep.trials;
    const int frames = options.frames ? options.frames : scenario.sweep.frames;
    const std::uint64_t min_errors =
        options.min_errors ? options.min_errors : scenario.sweep.min_errors;
    const std::uint64_t trials_per_frame =
        std::max<std::uint64_t>(1, trials / static_cast<std::uint64_t>(frames));

    DesignContext context = prepare_design(scenario);

    SweepResult result;
    for (const auto& variant : variants) {
        SweepCurve curve;
        curve.variant = variant;
        // SNR sweeps reuse one design per frame across all noise levels.
        std::vector<FrameInfo> cache;
        for (arma::uword p = 0; p < sweep_values.n_elem; ++p) {
            const double value = sweep_values[p];
            const double rho = sweep_is_rho ? value : config.tradeoff_rho;
            const double snr_db = sweep_is_rho ? snr_fixed_db : value;
            const double sigma2 = noise_variance_for_snr_db(snr_db);
            if (sweep_is_rho) cache.clear();

            SweepPoint point;
            point.x = value;
            std::uint64_t errors = 0;
            std::uint64_t symbols = 0;
            double mse_sum = 0.0, mse_db_sum = 0.0, objective_sum = 0.0, mui_sum = 0.0,
                   exposure_sum = 0.0;
            int frames_run = 0;

            // Frames run in a fixed order and the early-stop decision only
            // looks at completed frames, so estimates do not depend on the
            // thread count used inside a frame.
            for (int f = 0; f < frames; ++f) {
                if (static_cast<std::size_t>(f) >= cache.size())
                    cache.push_back(make_frame_info(context, scenario, variant, rho,
                                                    static_cast<std::uint64_t>(f)));
                const FrameInfo& info = cache[static_cast<std::size_t>(f)];
                errors += count_detection_errors(info.received, info.symbols,
                                                 context.constellation, sigma2,
                                                 trials_per_frame, config.rng_seed,
                                                 static_cast<std::uint64_t>(f),
                                                 options.parallel);
                symbols +=
                    trials_per_frame * static_cast<std::uint64_t>(info.symbols.n_elem);
                mse_sum += info.mse_linear;
                mse_db_sum += info.mse_db;
                objective_sum += info.objective;
                mui_sum += info.mui;
                exposure_sum += info.total_user_exposure;
                ++frames_run;
                if (errors >= min_errors) break;
            }

            point.ser.errors = errors;
            point.ser.symbols = symbols;
            point.ser.ser = static_cast<double>(errors) / static_cast<double>(symbols);
            point.ser.halfwidth =
                1.96 * std::sqrt(std::max(point.ser.ser * (1.0 - point.ser.ser), 0.0) /
                                 static_cast<double>(symbols));
            point.mse_linear = mse_sum / frames_run;
            point.mse_db = mse_db_sum / frames_run;
            point.objective = objective_sum / frames_run;
            point.mui = mui_sum / frames_run;
            point.total_user_exposure = exposure_sum / frames_run;
            curve.points.push_back(std::move(point));
        }
        result.curves.push_back(std::move(curve));
    }
    return result;
}

}  // namespace

SweepResult run_snr_sweep(const Scenario& scenario, const std::vector<SweepVariant>& variants,
                          const arma::vec& snr_grid_db, const SweepOptions& options) {
    return run_sweep(scenario, variants, snr_grid_db, false, 0.0, options);
}

SweepResult run_rho_sweep(const Scenario& scenario, const std::vector<SweepVariant>& variants,
                          const arma::vec& rho_grid, double snr_fixed_db,
                          const SweepOptions& options) {
    for (double rho : rho_grid)
        if (!(rho >= 0.0 && rho <= 1.0))
            throw std::invalid_argument("rho grid must lie in [0, 1]");
    return run_sweep(scenario, variants, rho_grid, true, snr_fixed_db, options);
}

}  // namespace radcom
