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

#include "radcom/scenario.hpp"

#include <cmath>
#include <stdexcept>

namespace radcom {

void SystemConfig::validate() const {
    if (num_antennas < 1) throw std::invalid_argument("num_antennas must be >= 1");
    if (frame_length < 1) throw std::invalid_argument("frame_length must be >= 1");
    if (num_users < 1) throw std::invalid_argument("num_users must be >= 1");
    if (frame_length < num_users)
        throw std::invalid_argument("frame_length must be >= num_users");
    if (!(max_power_w > 0.0)) throw std::invalid_argument("max_power_w must be > 0");
    if (!(carrier_frequency_hz > 0.0))
        throw std::invalid_argument("carrier_frequency_hz must be > 0");
    if (!(spacing() > 0.0)) throw std::invalid_argument("antenna spacing must be > 0");
    if (!(tradeoff_rho >= 0.0 && tradeoff_rho <= 1.0))
        throw std::invalid_argument("tradeoff_rho must lie in [0, 1]");
    if (!std::isnan(noise_variance_w) && !(noise_variance_w > 0.0))
        throw std::invalid_argument("noise_variance_w must be > 0 when set");
}

void UserPlacement::validate() const {
    if (angles.n_elem != distances_m.n_elem || angles.n_elem != phases.n_elem)
        throw std::invalid_argument("placement vectors must have equal length");
    for (arma::uword u = 0; u < angles.n_elem; ++u) {
        if (!(distances_m[u] > 0.0))
            throw std::invalid_argument("user distance must be > 0");
        if (!(angles[u] > 0.0 && angles[u] < kPi))
            throw std::invalid_argument("user angle must lie in (0, pi)");
    }
}

void PlacementModel::validate() const {
    if (!(angle_min_rad < angle_max_rad))
        throw std::invalid_argument("placement angle window is empty");
    if (!(angle_min_rad > 0.0 && angle_max_rad < kPi))
        throw std::invalid_argument("placement angle window must lie inside (0, pi)");
    if (!(dist_min_m > 0.0 && dist_max_m >= dist_min_m))
        throw std::invalid_argument("placement distance window is invalid");
}

void TargetSet::validate() const {
    for (std::size_t i = 0; i < angles.size(); ++i) {
        if (!(angles[i] > 0.0 && angles[i] < kPi))
            throw std::invalid_argument("target angle must lie in (0, pi)");
        for (std::size_t j = i + 1; j < angles.size(); ++j)
            if (angles[i] == angles[j])
                throw std::invalid_argument("target angles must be distinct");
    }
}

void SectorSpec::validate() const {
    if (!(theta_i < theta_f)) throw std::invalid_argument("sector requires theta_i < theta_f");
    if (!(distance_m > 0.0)) throw std::invalid_argument("sector distance must be > 0");
    if (!(gamma_w_m2 > 0.0)) throw std::invalid_argument("sector threshold must be > 0");
}

void Scenario::validate() const {
    config.validate();
    placement.validate();
    targets.validate();
    for (const auto& s : sectors) s.validate();
    if (!(mainlobe_width_rad > 0.0))
        throw std::invalid_argument("mainlobe width must be > 0");
    if (!(grid.resolution_deg > 0.0))
        throw std::invalid_argument("grid resolution must be > 0");
    if (!(grid.lo_plot_deg < grid.hi_plot_deg))
        throw std::invalid_argument("grid window is empty");
    if (!(gamma_user > 0.0))
        throw std::invalid_argument("gamma_user must be > 0 (use inf to disable)");
    if (fixed_users) {
        fixed_users->validate();
        if (fixed_users->size() != static_cast<arma::uword>(config.num_users))
            throw std::invalid_argument("fixed user list must match num_users");
    }
}

arma::cx_vec steering_vector(double theta, int num_antennas, double wavenumber) {
    const double c = std::cos(theta);
    const double scale = 1.0 / std::sqrt(static_cast<double>(num_antennas));
    arma::cx_vec a(num_antennas);
    for (int n = 0; n < num_antennas; ++n) {
        const double phase = -wavenumber * static_cast<double>(n) * c;
        a[n] = std::polar(scale, phase);
    }
    return a;
}

arma::cx_mat build_channel(const SystemConfig& config, const UserPlacement& placement) {
    placement.validate();
    if (placement.size() != static_cast<arma::uword>(config.num_users))
        throw std::invalid_argument("placement size does not match num_users");

    const double lambda = config.wavelength();
    const double k = config.wavenumber();
    arma::cx_mat channel(config.num_users, config.num_antennas);
    for (arma::uword u = 0; u < placement.size(); ++u) {
        const double d = placement.distances_m[u];
        const double magnitude =
            config.attenuation == AttenuationMode::physical ? lambda / (4.0 * kPi * d) : 1.0;
        const std::complex<double> beta =
            std::polar(magnitude, -2.0 * kPi * d / lambda - placement.phases[u]);
        channel.row(u) =
            beta * steering_vector(placement.angles[u], config.num_antennas, k).st();
    }
    return channel;
}

UserPlacement place_users_random(const SystemConfig& config, const PlacementModel& model,
                                 RngStream& rng) {
    model.validate();
    UserPlacement placement;
    placement.angles.set_size(config.num_users);
    placement.distances_m.set_size(config.num_users);
    placement.phases.set_size(config.num_users);
    for (int u = 0; u < config.num_users; ++u) {
        placement.angles[u] = rng.uniform(model.angle_min_rad, model.angle_max_rad);
        placement.distances_m[u] = rng.uniform(model.dist_min_m, model.dist_max_m);
        placement.phases[u] = rng.uniform(0.0, 2.0 * kPi);
    }
    return placement;
}

UserPlacement resolve_placement(const Scenario& scenario) {
    if (scenario.fixed_users) return *scenario.fixed_users;
    RngStream rng(scenario.config.rng_seed, stream::placement);
    return place_users_random(scenario.config, scenario.placement, rng);
}

}  // namespace radcom
