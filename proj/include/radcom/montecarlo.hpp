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

#ifndef RADCOM_MONTECARLO_HPP
#define RADCOM_MONTECARLO_HPP

#include <armadillo>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "radcom/beampattern.hpp"
#include "radcom/exposure.hpp"
#include "radcom/scenario.hpp"
#include "radcom/waveform.hpp"

namespace radcom {

struct Constellation {
    std::string name;
    std::vector<std::complex<double>> points;  // unit average energy

    static Constellation qpsk();
    static Constellation psk(int order);
    static Constellation qam(int order);  // 4, 16, 64
    static Constellation from_name(const std::string& name);

    // Minimum-distance decision.
    int detect(std::complex<double> received) const;
};

// U x L i.i.d. uniform symbols from the constellation.
arma::cx_mat modulate(int num_users, int frame_length, const Constellation& constellation,
                      RngStream& rng);

struct SerEstimate {
    double ser = 0.0;
    std::uint64_t errors = 0;
    std::uint64_t symbols = 0;
    double halfwidth = 0.0;  // 95% binomial normal-approximation half-width
};

// Noise-only trials over a fixed frame (X, S): per trial Y = H X + W and
// per-entry minimum-distance detection. Each trial draws its noise from an
// independent stream keyed by (seed, frame_index, trial), so the error count
// is identical for any thread count and for the serial reference.
std::uint64_t count_detection_errors(const arma::cx_mat& received_noiseless,
                                     const arma::cx_mat& symbols,
                                     const Constellation& constellation,
                                     double noise_variance, std::uint64_t trials,
                                     std::uint64_t seed, std::uint64_t frame_index,
                                     bool parallel);

SerEstimate transmit_detect(const arma::cx_mat& channel, const arma::cx_mat& waveform,
                            const arma::cx_mat& symbols, const Constellation& constellation,
                            double noise_variance, std::uint64_t trials, std::uint64_t seed,
                            std::uint64_t frame_index = 0, bool parallel = true);

// One curve family of a sweep experiment.
struct SweepVariant {
    std::string name;
    bool emf_constraints = true;
    double gamma_user = std::numeric_limits<double>::quiet_NaN();  // NaN = scenario value
};

struct SweepPoint {
    double x = 0.0;  // SNR in dB or rho
    SerEstimate ser;
    double mse_db = 0.0;
    double mse_linear = 0.0;
    double objective = 0.0;
    double mui = 0.0;
    double total_user_exposure = 0.0;
};

struct SweepCurve {
    SweepVariant variant;
    std::vector<SweepPoint> points;
};

struct SweepResult {
    std::vector<SweepCurve> curves;
};

struct SweepOptions {
    std::uint64_t trials = 0;  // 0 = scenario default
    int frames = 0;
    std::uint64_t min_errors = 0;
    bool parallel = true;
};

// Scenario-level design state reused across sweep points: placement, channel
// and the radar-optimal covariance (none depend on rho, SNR or thresholds).
struct DesignContext {
    UserPlacement placement;
    arma::cx_mat channel;
    AngularGrid grid;
    DesiredBeampattern desired;
    CovarianceFit radar_fit;
    Constellation constellation;
};

DesignContext prepare_design(const Scenario& scenario);

struct FrameDesign {
    arma::cx_mat symbols;
    arma::cx_mat radar_waveform;  // X0
    KktSolution solution;
    TradeoffParams params;
};

// Designs one frame: draw symbols for `frame_index`, synthesize X0, solve the
// constrained trade-off for the given variant.
FrameDesign design_frame(const DesignContext& context, const Scenario& scenario,
                         const SweepVariant& variant, double rho, std::uint64_t frame_index);

// The standard three-variant comparison: unconstrained, threshold 10, 0.1.
std::vector<SweepVariant> default_variants();

// SER vs SNR at the scenario's rho for each variant.
SweepResult run_snr_sweep(const Scenario& scenario, const std::vector<SweepVariant>& variants,
                          const arma::vec& snr_grid_db, const SweepOptions& options = {});

// SER and beampattern MSE vs rho at a fixed SNR for each variant.
SweepResult run_rho_sweep(const Scenario& scenario, const std::vector<SweepVariant>& variants,
                          const arma::vec& rho_grid, double snr_fixed_db,
                          const SweepOptions& options = {});

// Per-symbol noise variance for a given SNR: the design drives the received
// frame toward the unit-energy constellation, so SNR = 1/sigma0^2.
double noise_variance_for_snr_db(double snr_db);

}  // namespace radcom

#endif  // RADCOM_MONTECARLO_HPP
