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

#include "radcom/beampattern.hpp"

#include <cmath>
#include <vector>

namespace radcom {

AngularGrid AngularGrid::over_window(double lo, double hi, double resolution) {
    if (!(resolution > 0.0) || !(hi > lo))
        throw std::invalid_argument("angular grid window is invalid");
    const int count = static_cast<int>(std::floor((hi - lo) / resolution + 0.5)) + 1;
    AngularGrid grid;
    grid.resolution = resolution;
    grid.thetas.set_size(count);
    for (int i = 0; i < count; ++i) grid.thetas[i] = lo + resolution * i;
    if (grid.thetas[count - 1] > hi + 1e-12) grid.thetas[count - 1] = hi;
    return grid;
}

AngularGrid AngularGrid::from_window(const GridWindow& window) {
    // Plot degrees descend as internal radians ascend.
    const double lo = plot_deg_to_internal_rad(window.hi_plot_deg);
    const double hi = plot_deg_to_internal_rad(window.lo_plot_deg);
    return over_window(lo, hi, deg_to_rad(window.resolution_deg));
}

namespace {

void require_hermitian(const arma::cx_mat& covariance) {
    if (!covariance.is_square())
        throw std::invalid_argument("covariance matrix must be square");
    const double scale = arma::norm(covariance, "fro");
    if (scale == 0.0) return;
    const double residual = arma::norm(covariance - covariance.t(), "fro") / scale;
    if (residual > 1e-8)
        throw std::invalid_argument("covariance matrix is not Hermitian");
}

double quadratic_form(const arma::cx_mat& covariance, const arma::cx_vec& a) {
    return std::real(arma::as_scalar(a.t() * covariance * a));
}

}  // namespace

double beampattern_value(const arma::cx_mat& covariance, double theta, double wavenumber) {
    require_hermitian(covariance);
    const arma::cx_vec a =
        steering_vector(theta, static_cast<int>(covariance.n_rows), wavenumber);
    return quadratic_form(covariance, a) / (4.0 * kPi);
}

arma::vec beampattern_grid_serial(const arma::cx_mat& covariance, const AngularGrid& grid,
                                  double wavenumber) {
    require_hermitian(covariance);
    const int n = static_cast<int>(covariance.n_rows);
    arma::vec values(grid.thetas.n_elem);
    for (arma::uword i = 0; i < grid.thetas.n_elem; ++i) {
        const arma::cx_vec a = steering_vector(grid.thetas[i], n, wavenumber);
        values[i] = quadratic_form(covariance, a) / (4.0 * kPi);
    }
    return values;
}

arma::vec beampattern_grid(const arma::cx_mat& covariance, const AngularGrid& grid,
                           double wavenumber) {
    require_hermitian(covariance);
    const int n = static_cast<int>(covariance.n_rows);
    arma::vec values(grid.thetas.n_elem);
    const std::int64_t count = static_cast<std::int64_t>(grid.thetas.n_elem);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
        const arma::cx_vec a = steering_vector(grid.thetas[i], n, wavenumber);
        values[i] = quadratic_form(covariance, a) / (4.0 * kPi);
    }
    return values;
}

DesiredBeampattern desired_beampattern(const TargetSet& targets, double width,
                                       const AngularGrid& grid) {
    targets.validate();
    if (!(width > 0.0)) throw std::invalid_argument("mainlobe width must be > 0");
    const double half = 0.5 * width;
    for (std::size_t i = 0; i < targets.angles.size(); ++i)
        for (std::size_t j = i + 1; j < targets.angles.size(); ++j)
            if (std::abs(targets.angles[i] - targets.angles[j]) < width)
                throw std::invalid_argument("mainlobes overlap");

    DesiredBeampattern desired;
    desired.grid = grid;
    desired.mainlobe_width = width;
    desired.values.zeros(grid.thetas.n_elem);
    const double edge = half + 1e-12;  // keep grid points sitting exactly on the lobe edge
    for (arma::uword i = 0; i < grid.thetas.n_elem; ++i)
        for (double center : targets.angles)
            if (std::abs(grid.thetas[i] - center) <= edge) desired.values[i] = 1.0;
    return desired;
}

namespace {

// Projection onto the PSD cone by eigenvalue clipping. Returns the smallest
// eigenvalue seen before clipping.
double project_psd(arma::cx_mat& covariance) {
    covariance = 0.5 * (covariance + covariance.t());
    arma::vec eigenvalues;
    arma::cx_mat eigenvectors;
    if (!arma::eig_sym(eigenvalues, eigenvectors, covariance))
        throw std::runtime_error("eigendecomposition failed in PSD projection");
    const double min_eig = eigenvalues.min();
    if (min_eig >= 0.0) return min_eig;
    arma::vec clipped = arma::clamp(eigenvalues, 0.0, std::max(eigenvalues.max(), 0.0) + 1.0);
    covariance = eigenvectors * arma::diagmat(clipped) * eigenvectors.t();
    covariance = 0.5 * (covariance + covariance.t());
    return min_eig;
}

void project_equal_diagonal(arma::cx_mat& covariance, double diag_value) {
    covariance.diag().fill(std::complex<double>(diag_value, 0.0));
}

double fit_template_scale(const arma::vec& pattern, const arma::vec& templ) {
    const double denom = arma::dot(templ, templ);
    if (denom <= 0.0) return 0.0;
    return std::max(0.0, arma::dot(templ, pattern) / denom);
}

}  // namespace

CovarianceFit design_covariance(const DesiredBeampattern& desired, double total_power,
                                int num_antennas, double wavenumber,
                                const CovarianceFitOptions& options) {
    if (!(total_power > 0.0)) throw std::invalid_argument("total power must be > 0");
    if (num_antennas < 1) throw std::invalid_argument("num_antennas must be >= 1");
    const arma::uword grid_size = desired.grid.thetas.n_elem;
    if (grid_size == 0) throw std::invalid_argument("empty angular grid");
    if (desired.grid.resolution > 0.5 * desired.mainlobe_width + 1e-12)
        throw std::invalid_argument("grid resolution must not exceed half the mainlobe width");

    // Precompute steering vectors once.
    std::vector<arma::cx_vec> steering(grid_size);
    for (arma::uword i = 0; i < grid_size; ++i)
        steering[i] = steering_vector(desired.grid.thetas[i], num_antennas, wavenumber);

    // Work in normalized power units (trace 1); rescale on return.
    const double diag_value = 1.0 / static_cast<double>(num_antennas);
    arma::cx_mat covariance(num_antennas, num_antennas, arma::fill::eye);
    covariance *= diag_value;

    auto evaluate = [&](const arma::cx_mat& r) {
        arma::vec pattern(grid_size);
        for (arma::uword i = 0; i < grid_size; ++i)
            pattern[i] = quadratic_form(r, steering[i]);
        return pattern;
    };

    arma::vec pattern = evaluate(covariance);
    double alpha = fit_template_scale(pattern, desired.values);
    auto objective_of = [&](const arma::vec& p, double a) {
        const arma::vec diff = p - a * desired.values;
        return arma::dot(diff, diff);
    };
    double objective = objective_of(pattern, alpha);

    double step = 1.0 / (2.0 * static_cast<double>(grid_size));
    int iterations = 0;
    bool converged = false;
    std::vector<double> history;
    history.reserve(256);
    history.push_back(objective);

    for (; iterations < options.max_iterations; ++iterations) {
        // Euclidean gradient in the Hermitian-matrix space.
        arma::cx_mat gradient(num_antennas, num_antennas, arma::fill::zeros);
        for (arma::uword i = 0; i < grid_size; ++i) {
            const double r_i = 2.0 * (pattern[i] - alpha * desired.values[i]);
            if (r_i != 0.0) gradient += r_i * (steering[i] * steering[i].t());
        }

        bool accepted = false;
        for (int bt = 0; bt < 40; ++bt) {
            arma::cx_mat trial = covariance - step * gradient;
            project_psd(trial);
            project_equal_diagonal(trial, diag_value);
            const arma::vec trial_pattern = evaluate(trial);
            const double trial_alpha = fit_template_scale(trial_pattern, desired.values);
            const double trial_objective = objective_of(trial_pattern, trial_alpha);
            if (trial_objective <= objective) {
                const double decrease = objective - trial_objective;
                covariance = std::move(trial);
                pattern = trial_pattern;
                alpha = trial_alpha;
                objective = trial_objective;
                history.push_back(objective);
                step *= 1.25;
                accepted = true;
                if (decrease <= options.objective_tol * std::max(objective, 1e-300))
                    converged = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            converged = true;  // no feasible descent direction at float resolution
            break;
        }
        if (converged) break;
    }

    // Polish feasibility: alternate projections until the iterate sits in the
    // intersection to tight tolerance, ending on the equal-diagonal set with a
    // certified eigenvalue floor.
    for (int round = 0; round < 100; ++round) {
        const double min_eig = project_psd(covariance);
        project_equal_diagonal(covariance, diag_value);
        if (min_eig >= -1e-12) break;
    }
    pattern = evaluate(covariance);
    alpha = fit_template_scale(pattern, desired.values);
    objective = objective_of(pattern, alpha);

    CovarianceFit fit;
    fit.covariance = total_power * covariance;
    fit.objective = objective;
    fit.template_scale = alpha * total_power;
    fit.iterations = iterations;
    fit.converged = converged;
    fit.objective_history = std::move(history);
    if (!converged)
        throw CovarianceFitError("covariance fit did not converge within max_iterations", fit);
    return fit;
}

BeampatternMse beampattern_mse(const arma::cx_mat& covariance, const DesiredBeampattern& desired,
                               double wavenumber, bool fit_scale) {
    const arma::vec pattern = 4.0 * kPi * beampattern_grid(covariance, desired.grid, wavenumber);
    double alpha = 1.0;
    if (fit_scale) alpha = fit_template_scale(pattern, desired.values);
    const arma::vec scaled = alpha * desired.values;
    const arma::vec diff = pattern - scaled;
    const double mse = arma::dot(diff, diff) / static_cast<double>(diff.n_elem);
    const double ref = arma::dot(scaled, scaled) / static_cast<double>(scaled.n_elem);
    BeampatternMse result;
    result.linear = mse;
    result.db = (ref > 0.0 && mse > 0.0) ? 10.0 * std::log10(mse / ref)
                                         : (mse > 0.0 ? 300.0 : -300.0);
    return result;
}

double beampattern_dbi(double quadratic_form_value, double total_power, int num_antennas) {
    const double iso = total_power / static_cast<double>(num_antennas);
    const double ratio = std::max(quadratic_form_value / iso, 1e-12);
    return 10.0 * std::log10(ratio);
}

}  // namespace radcom
