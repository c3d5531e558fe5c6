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

#ifndef RADCOM_EXPOSURE_HPP
#define RADCOM_EXPOSURE_HPP

#include <armadillo>
#include <string>
#include <vector>

#include "radcom/scenario.hpp"

namespace radcom {

// Incident power density at (theta, d): ||a(theta)^H X||^2 / (4 pi d^2).
double user_power_density(const arma::cx_mat& waveform, double theta, double distance_m,
                          double wavenumber);

// Closed form of M = integral over the sector of a(t) a(t)^H sin(t) dt; the
// scalar entries reduce to the antiderivative of exp(-j q cos t) sin t.
arma::cx_mat sector_overlap_matrix(const SectorSpec& sector, int num_antennas,
                                   double wavenumber);

// Sector-averaged density: Tr(R M) / (4 pi d^2 |theta_F - theta_I|).
double sector_exact_density(const arma::cx_mat& waveform, const SectorSpec& sector,
                            double wavenumber);

// Rank-one constraint functional used by the optimizer:
// ||(b(theta_F) - b(theta_I))^H X||^2 / (4 pi d^2). Not equal to the exact
// average; both are reported side by side.
double sector_surrogate_density(const arma::cx_mat& waveform, const SectorSpec& sector,
                                double wavenumber);

// Adaptive Gauss-Legendre evaluation of the sector integral; test/report
// oracle for the closed form.
double sector_density_quadrature(const arma::cx_mat& waveform, const SectorSpec& sector,
                                 double wavenumber, double abs_tol = 1e-10,
                                 double rel_tol = 1e-11);

struct ExposureEntry {
    std::string entity;  // "user3", "sector1"
    std::string kind;    // "user" or "sector"
    double value = 0.0;  // user density / sector surrogate (the constrained quantity)
    double threshold = 0.0;
    bool compliant = false;
    double exact_value = 0.0;  // equals `value` for users; exact average for sectors
};

struct ExposureReport {
    std::vector<ExposureEntry> entries;
    double total_user_exposure = 0.0;  // sum of user densities
    bool all_compliant = true;

    std::string to_text() const;
    // Columns: entity, kind, value_W_m2, threshold, compliant, exact_value_W_m2
    std::string to_csv() const;
};

ExposureReport compliance_report(const arma::cx_mat& waveform, const UserPlacement& placement,
                                 const std::vector<SectorSpec>& sectors,
                                 const arma::vec& gamma_user, double wavenumber);

}  // namespace radcom

#endif  // RADCOM_EXPOSURE_HPP
