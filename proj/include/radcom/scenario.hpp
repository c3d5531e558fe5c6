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

#ifndef RADCOM_SCENARIO_HPP
#define RADCOM_SCENARIO_HPP

#include <armadillo>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "radcom/rng.hpp"

namespace radcom {

inline constexpr double kSpeedOfLight = 299792458.0;
inline constexpr double kPi = 3.14159265358979323846;

// Plot angles are degrees off broadside (the convention of the emitted CSV
// files); internal angles are radians off the array axis so that cos(theta)
// spans (-1, 1) over the visible half-space.
inline double plot_deg_to_internal_rad(double deg) { return (90.0 - deg) * kPi / 180.0; }
inline double internal_rad_to_plot_deg(double rad) { return 90.0 - rad * 180.0 / kPi; }
inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

enum class PowerConvention { frame_total, per_symbol };

// `physical` keeps the free-space attenuation lambda/(4 pi d) in the channel
// gains; `normalized` keeps only the phase structure (unit-magnitude gains),
// which decouples the link-level symbol scale from the radiated power scale.
enum class AttenuationMode { physical, normalized };

struct SystemConfig {
    int num_antennas = 16;
    double spacing_m = 0.0;  // 0 = derive from spacing_wavelengths
    double spacing_wavelengths = 0.5;
    double carrier_frequency_hz = 6.0e9;
    int frame_length = 30;
    int num_users = 4;
    double max_power_w = 12.0e6;
    double noise_variance_w = std::numeric_limits<double>::quiet_NaN();
    double tradeoff_rho = 0.2;
    std::uint64_t rng_seed = 1;
    PowerConvention power_convention = PowerConvention::frame_total;
    AttenuationMode attenuation = AttenuationMode::physical;

    double wavelength() const { return kSpeedOfLight / carrier_frequency_hz; }
    double spacing() const {
        return spacing_m > 0.0 ? spacing_m : spacing_wavelengths * wavelength();
    }
    double wavenumber() const { return 2.0 * kPi * spacing() / wavelength(); }

    // Total energy budget of one frame; the per-symbol convention interprets
    // max_power_w as average power per time slot.
    double frame_power() const {
        return power_convention == PowerConvention::per_symbol
                   ? max_power_w * static_cast<double>(frame_length)
                   : max_power_w;
    }

    void validate() const;  // throws std::invalid_argument
};

struct UserPlacement {
    arma::vec angles;       // internal radians
    arma::vec distances_m;  // > 0
    arma::vec phases;       // [0, 2 pi)

    arma::uword size() const { return angles.n_elem; }
    void validate() const;
};

struct PlacementModel {
    // Stored as internal radians; defaults correspond to a +/-85 degree
    // plotting window (a 5 degree guard band off both endfire directions).
    double angle_min_rad = plot_deg_to_internal_rad(85.0);
    double angle_max_rad = plot_deg_to_internal_rad(-85.0);
    double dist_min_m = 100.0;
    double dist_max_m = 500.0;

    void validate() const;
};

struct TargetSet {
    std::vector<double> angles;  // internal radians, distinct

    void validate() const;
};

struct SectorSpec {
    double theta_i = 0.0;  // internal radians, theta_i < theta_f
    double theta_f = 0.0;
    double distance_m = 0.0;
    double gamma_w_m2 = 0.0;  // exposure threshold

    double angular_width() const { return theta_f - theta_i; }
    void validate() const;
};

struct GridWindow {
    double lo_plot_deg = -90.0;
    double hi_plot_deg = 90.0;
    double resolution_deg = 1.0;
};

struct SweepParams {
    arma::vec snr_grid_db;  // defaults set by config loader: -5:2:25
    arma::vec rho_grid;     // 0:0.1:1
    double snr_fixed_db = 13.0;
    std::uint64_t trials = 100000;
    int frames = 20;
    std::uint64_t min_errors = 500;
};

// Aggregate of everything a scenario file can describe.
struct Scenario {
    SystemConfig config;
    PlacementModel placement;
    TargetSet targets;
    double mainlobe_width_rad = deg_to_rad(10.0);
    GridWindow grid;
    std::vector<SectorSpec> sectors;
    double gamma_user = std::numeric_limits<double>::infinity();
    std::string constellation = "qpsk";
    std::optional<UserPlacement> fixed_users;
    SweepParams sweep;

    void validate() const;
};

// Unit-norm uniform linear array response; entry n is
// exp(-j n k cos(theta)) / sqrt(N).
arma::cx_vec steering_vector(double theta, int num_antennas, double wavenumber);

// Geometric channel: row u is beta_u * exp(-j phi_u) * a(theta_u)^T with
// beta_u = lambda/(4 pi d_u) * exp(-j 2 pi d_u / lambda).
arma::cx_mat build_channel(const SystemConfig& config, const UserPlacement& placement);

// Draws angles/distances/phases uniformly from the placement model; the
// draw order (angle, distance, phase per user) is part of the contract.
UserPlacement place_users_random(const SystemConfig& config, const PlacementModel& model,
                                 RngStream& rng);

// Resolves the placement a scenario runs with: fixed users if present,
// otherwise the seeded random draw.
UserPlacement resolve_placement(const Scenario& scenario);

}  // namespace radcom

#endif  // RADCOM_SCENARIO_HPP
