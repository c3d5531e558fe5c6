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

#ifndef RADCOM_BEAMPATTERN_HPP
#define RADCOM_BEAMPATTERN_HPP

#include <armadillo>
#include <stdexcept>
#include <vector>

#include "radcom/scenario.hpp"

namespace radcom {

struct AngularGrid {
    arma::vec thetas;   // internal radians, strictly increasing
    double resolution;  // radians

    // Inclusive uniform grid over [lo, hi] with the given step.
    static AngularGrid over_window(double lo, double hi, double resolution);
    static AngularGrid from_window(const GridWindow& window);
};

struct DesiredBeampattern {
    AngularGrid grid;
    arma::vec values;          // >= 0, unit-height rectangular template
    double mainlobe_width;     // radians
};

// Radiated power per unit solid angle: a(theta)^H R a(theta) / (4 pi).
// Throws if R is not Hermitian within 1e-8 relative.
double beampattern_value(const arma::cx_mat& covariance, double theta, double wavenumber);

// Grid evaluation; the parallel version distributes grid points across
// OpenMP threads and is bit-identical to the serial reference.
arma::vec beampattern_grid(const arma::cx_mat& covariance, const AngularGrid& grid,
                           double wavenumber);
arma::vec beampattern_grid_serial(const arma::cx_mat& covariance, const AngularGrid& grid,
                                  double wavenumber);

// Rectangular mainlobes of the given width centered on the targets, zero
// elsewhere. Overlapping lobes are rejected.
DesiredBeampattern desired_beampattern(const TargetSet& targets, double width,
                                       const AngularGrid& grid);

struct CovarianceFitOptions {
    int max_iterations = 5000;
    double objective_tol = 1e-8;  // stop on relative objective decrease below this
};

struct CovarianceFit {
    arma::cx_mat covariance;  // Hermitian PSD, equal diagonal = power/N
    double objective;         // achieved least-squares value (normalized power units)
    double template_scale;    // fitted template height alpha
    int iterations;
    bool converged;
    std::vector<double> objective_history;  // per accepted iteration, non-increasing
};

class CovarianceFitError : public std::runtime_error {
  public:
    CovarianceFitError(const std::string& what, CovarianceFit last)
        : std::runtime_error(what), last_fit(std::move(last)) {}
    CovarianceFit last_fit;
};

// Least-squares beampattern match: minimize sum_i (alpha d_i - a_i^H R a_i)^2
// over Hermitian R with R >= 0 and R_nn = power/N, alpha >= 0 free. Solved by
// projected gradient descent with alternating PSD / equal-diagonal projections.
CovarianceFit design_covariance(const DesiredBeampattern& desired, double total_power,
                                int num_antennas, double wavenumber,
                                const CovarianceFitOptions& options = {});

struct BeampatternMse {
    double linear;
    double db;  // 10 log10(mse / mean squared fitted template)
};

// Mean squared error between the covariance beampattern and the template over
// the template's grid, after (optional) optimal least-squares template scaling.
BeampatternMse beampattern_mse(const arma::cx_mat& covariance, const DesiredBeampattern& desired,
                               double wavenumber, bool fit_scale = true);

// Gain over an isotropic radiator carrying the same total power; exact for
// half-wavelength element spacing. Clamped at -120 dBi.
double beampattern_dbi(double quadratic_form, double total_power, int num_antennas);

}  // namespace radcom

#endif  // RADCOM_BEAMPATTERN_HPP
