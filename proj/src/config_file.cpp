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

#include "radcom/config_file.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace radcom {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& value, int line) {
    try {
        std::size_t used = 0;
        if (value == "inf") return std::numeric_limits<double>::infinity();
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("cannot parse number '" + value + "'", line);
    }
}

std::int64_t parse_int(const std::string& value, int line) {
    try {
        std::size_t used = 0;
        const std::int64_t v = std::stoll(value, &used);
        if (used != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("cannot parse integer '" + value + "'", line);
    }
}

std::uint64_t parse_u64(const std::string& value, int line) {
    try {
        std::size_t used = 0;
        const std::uint64_t v = std::stoull(value, &used);
        if (used != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("cannot parse unsigned integer '" + value + "'", line);
    }
}

// Either whitespace-separated values or a lo:step:hi range expression.
arma::vec parse_grid(const std::string& value, int line) {
    const auto colon = value.find(':');
    if (colon != std::string::npos) {
        const auto colon2 = value.find(':', colon + 1);
        if (colon2 == std::string::npos)
            throw ConfigError("range must be lo:step:hi", line);
        const double lo = parse_double(trim(value.substr(0, colon)), line);
        const double step = parse_double(trim(value.substr(colon + 1, colon2 - colon - 1)), line);
        const double hi = parse_double(trim(value.substr(colon2 + 1)), line);
        if (!(step > 0.0) || !(hi >= lo)) throw ConfigError("invalid range bounds", line);
        const int count = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
        arma::vec grid(count);
        for (int i = 0; i < count; ++i) grid[i] = std::min(lo + step * i, hi);
        return grid;
    }
    std::istringstream in(value);
    std::vector<double> values;
    std::string token;
    while (in >> token) values.push_back(parse_double(token, line));
    if (values.empty()) throw ConfigError("empty value list", line);
    return arma::vec(values);
}

std::pair<double, double> parse_pair(const std::string& value, int line) {
    const arma::vec v = parse_grid(value, line);
    if (v.n_elem != 2) throw ConfigError("expected exactly two values", line);
    return {v[0], v[1]};
}

struct UserLine {
    double angle_deg;
    double distance_m;
    double phase_rad;
};

}  // namespace

Scenario parse_scenario_text(const std::string& text) {
    Scenario scenario;
    scenario.sweep.snr_grid_db = parse_grid("-5:2:25", 0);
    scenario.sweep.rho_grid = parse_grid("0:0.1:1", 0);

    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line = 0;
    std::vector<UserLine> users;
    double placement_angle_lo_deg = -85.0, placement_angle_hi_deg = 85.0;

    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        const auto comment = s.find('#');
        if (comment != std::string::npos) s = s.substr(0, comment);
        s = trim(s);
        if (s.empty()) continue;

        if (s.front() == '[') {
            if (s.back() != ']') throw ConfigError("unterminated section header", line);
            section = trim(s.substr(1, s.size() - 2));
            if (section == "sector") {
                scenario.sectors.emplace_back();
            } else if (section != "system" && section != "targets" && section != "grid" &&
                       section != "placement" && section != "exposure" &&
                       section != "users" && section != "sweep") {
                throw ConfigError("unknown section [" + section + "]", line);
            }
            continue;
        }

        const auto eq = s.find('=');
        if (eq == std::string::npos) throw ConfigError("expected key = value", line);
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty() || value.empty()) throw ConfigError("empty key or value", line);

        auto& config = scenario.config;
        if (section == "system") {
            if (key == "num_antennas") config.num_antennas = static_cast<int>(parse_int(value, line));
            else if (key == "spacing_wavelengths") { config.spacing_wavelengths = parse_double(value, line); config.spacing_m = 0.0; }
            else if (key == "spacing_m") config.spacing_m = parse_double(value, line);
            else if (key == "carrier_frequency_hz") config.carrier_frequency_hz = parse_double(value, line);
            else if (key == "frame_length") config.frame_length = static_cast<int>(parse_int(value, line));
            else if (key == "num_users") config.num_users = static_cast<int>(parse_int(value, line));
            else if (key == "max_power_w") config.max_power_w = parse_double(value, line);
            else if (key == "noise_variance_w") config.noise_variance_w = parse_double(value, line);
            else if (key == "tradeoff_rho") config.tradeoff_rho = parse_double(value, line);
            else if (key == "rng_seed") config.rng_seed = parse_u64(value, line);
            else if (key == "constellation") scenario.constellation = value;
            else if (key == "power_convention") {
                if (value == "frame_total") config.power_convention = PowerConvention::frame_total;
                else if (value == "per_symbol") config.power_convention = PowerConvention::per_symbol;
                else throw ConfigError("power_convention must be frame_total or per_symbol", line);
            } else if (key == "channel_attenuation") {
                if (value == "physical") config.attenuation = AttenuationMode::physical;
                else if (value == "normalized") config.attenuation = AttenuationMode::normalized;
                else throw ConfigError("channel_attenuation must be physical or normalized", line);
            } else throw ConfigError("unknown key '" + key + "' in [system]", line);
        } else if (section == "targets") {
            if (key == "angles_deg") {
                const arma::vec degs = parse_grid(value, line);
                scenario.targets.angles.clear();
                for (double d : degs)
                    scenario.targets.angles.push_back(plot_deg_to_internal_rad(d));
                std::sort(scenario.targets.angles.begin(), scenario.targets.angles.end());
            } else if (key == "mainlobe_width_deg") {
                scenario.mainlobe_width_rad = deg_to_rad(parse_double(value, line));
            } else throw ConfigError("unknown key '" + key + "' in [targets]", line);
        } else if (section == "grid") {
            if (key == "window_deg") {
                const auto [lo, hi] = parse_pair(value, line);
                scenario.grid.lo_plot_deg = lo;
                scenario.grid.hi_plot_deg = hi;
            } else if (key == "resolution_deg") {
                scenario.grid.resolution_deg = parse_double(value, line);
            } else throw ConfigError("unknown key '" + key + "' in [grid]", line);
        } else if (section == "placement") {
            if (key == "angle_window_deg") {
                const auto [lo, hi] = parse_pair(value, line);
                placement_angle_lo_deg = lo;
                placement_angle_hi_deg = hi;
            } else if (key == "distance_m") {
                const auto [lo, hi] = parse_pair(value, line);
                scenario.placement.dist_min_m = lo;
                scenario.placement.dist_max_m = hi;
            } else throw ConfigError("unknown key '" + key + "' in [placement]", line);
        } else if (section == "exposure") {
            if (key == "gamma_user_w_m2") scenario.gamma_user = parse_double(value, line);
            else throw ConfigError("unknown key '" + key + "' in [exposure]", line);
        } else if (section == "sector") {
            if (scenario.sectors.empty()) throw ConfigError("key outside a [sector] block", line);
            auto& sector = scenario.sectors.back();
            if (key == "theta_i_deg") sector.theta_i = parse_double(value, line);
            else if (key == "theta_f_deg") sector.theta_f = parse_double(value, line);
            else if (key == "distance_m") sector.distance_m = parse_double(value, line);
            else if (key == "gamma_w_m2") sector.gamma_w_m2 = parse_double(value, line);
            else throw ConfigError("unknown key '" + key + "' in [sector]", line);
        } else if (section == "users") {
            if (key == "user") {
                const arma::vec v = parse_grid(value, line);
                if (v.n_elem != 3)
                    throw ConfigError("user = angle_deg distance_m phase_rad", line);
                users.push_back({v[0], v[1], v[2]});
            } else throw ConfigError("unknown key '" + key + "' in [users]", line);
        } else if (section == "sweep") {
            if (key == "snr_grid_db") scenario.sweep.snr_grid_db = parse_grid(value, line);
            else if (key == "rho_grid") scenario.sweep.rho_grid = parse_grid(value, line);
            else if (key == "snr_fixed_db") scenario.sweep.snr_fixed_db = parse_double(value, line);
            else if (key == "trials") scenario.sweep.trials = parse_u64(value, line);
            else if (key == "frames") scenario.sweep.frames = static_cast<int>(parse_int(value, line));
            else if (key == "min_errors") scenario.sweep.min_errors = parse_u64(value, line);
            else throw ConfigError("unknown key '" + key + "' in [sweep]", line);
        } else {
            throw ConfigError("key '" + key + "' outside any section", line);
        }
    }

    // Sector angles were stored as plot degrees during the scan; convert and
    // sort so the internal representation always has theta_i < theta_f.
    for (auto& sector : scenario.sectors) {
        const double a = plot_deg_to_internal_rad(sector.theta_i);
        const double b = plot_deg_to_internal_rad(sector.theta_f);
        sector.theta_i = std::min(a, b);
        sector.theta_f = std::max(a, b);
    }
    scenario.placement.angle_min_rad = plot_deg_to_internal_rad(placement_angle_hi_deg);
    scenario.placement.angle_max_rad = plot_deg_to_internal_rad(placement_angle_lo_deg);
    if (!users.empty()) {
        UserPlacement fixed;
        fixed.angles.set_size(users.size());
        fixed.distances_m.set_size(users.size());
        fixed.phases.set_size(users.size());
        for (std::size_t u = 0; u < users.size(); ++u) {
            fixed.angles[u] = plot_deg_to_internal_rad(users[u].angle_deg);
            fixed.distances_m[u] = users[u].distance_m;
            fixed.phases[u] = users[u].phase_rad;
        }
        scenario.fixed_users = std::move(fixed);
    }

    try {
        scenario.validate();
    } catch (const std::exception& e) {
        throw ConfigError(std::string("invalid scenario: ") + e.what());
    }
    return scenario;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open scenario file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario_text(buffer.str());
}

namespace {

std::string format_number(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string serialize_scenario(const Scenario& scenario) {
    std::ostringstream out;
    const auto& config = scenario.config;
    out << "[system]\n";
    out << "num_antennas = " << config.num_antennas << "\n";
    if (config.spacing_m > 0.0)
        out << "spacing_m = " << format_number(config.spacing_m) << "\n";
    else
        out << "spacing_wavelengths = " << format_number(config.spacing_wavelengths) << "\n";
    out << "carrier_frequency_hz = " << format_number(config.carrier_frequency_hz) << "\n";
    out << "frame_length = " << config.frame_length << "\n";
    out << "num_users = " << config.num_users << "\n";
    out << "max_power_w = " << format_number(config.max_power_w) << "\n";
    if (!std::isnan(config.noise_variance_w))
        out << "noise_variance_w = " << format_number(config.noise_variance_w) << "\n";
    out << "tradeoff_rho = " << format_number(config.tradeoff_rho) << "\n";
    out << "rng_seed = " << config.rng_seed << "\n";
    out << "constellation = " << scenario.constellation << "\n";
    out << "power_convention = "
        << (config.power_convention == PowerConvention::frame_total ? "frame_total"
                                                                    : "per_symbol")
        << "\n";
    out << "channel_attenuation = "
        << (config.attenuation == AttenuationMode::physical ? "physical" : "normalized")
        << "\n";

    out << "\n[targets]\n";
    out << "angles_deg =";
    std::vector<double> degs;
    for (double t : scenario.targets.angles) degs.push_back(internal_rad_to_plot_deg(t));
    std::sort(degs.begin(), degs.end());
    for (double d : degs) out << " " << format_number(d);
    out << "\n";
    out << "mainlobe_width_deg = " << format_number(rad_to_deg(scenario.mainlobe_width_rad))
        << "\n";

    out << "\n[grid]\n";
    out << "window_deg = " << format_number(scenario.grid.lo_plot_deg) << " "
        << format_number(scenario.grid.hi_plot_deg) << "\n";
    out << "resolution_deg = " << format_number(scenario.grid.resolution_deg) << "\n";

    out << "\n[placement]\n";
    out << "angle_window_deg = "
        << format_number(internal_rad_to_plot_deg(scenario.placement.angle_max_rad)) << " "
        << format_number(internal_rad_to_plot_deg(scenario.placement.angle_min_rad)) << "\n";
    out << "distance_m = " << format_number(scenario.placement.dist_min_m) << " "
        << format_number(scenario.placement.dist_max_m) << "\n";

    out << "\n[exposure]\n";
    out << "gamma_user_w_m2 = " << format_number(scenario.gamma_user) << "\n";

    for (const auto& sector : scenario.sectors) {
        out << "\n[sector]\n";
        // Emit in plot degrees; theta_i/theta_f swap under the conversion.
        out << "theta_i_deg = " << format_number(internal_rad_to_plot_deg(sector.theta_f))
            << "\n";
        out << "theta_f_deg = " << format_number(internal_rad_to_plot_deg(sector.theta_i))
            << "\n";
        out << "distance_m = " << format_number(sector.distance_m) << "\n";
        out << "gamma_w_m2 = " << format_number(sector.gamma_w_m2) << "\n";
    }

    if (scenario.fixed_users) {
        out << "\n[users]\n";
        for (arma::uword u = 0; u < scenario.fixed_users->size(); ++u)
            out << "user = "
                << format_number(internal_rad_to_plot_deg(scenario.fixed_users->angles[u]))
                << " " << format_number(scenario.fixed_users->distances_m[u]) << " "
                << format_number(scenario.fixed_users->phases[u]) << "\n";
    }

    out << "\n[sweep]\n";
    out << "snr_grid_db =";
    for (double v : scenario.sweep.snr_grid_db) out << " " << format_number(v);
    out << "\n";
    out << "rho_grid =";
    for (double v : scenario.sweep.rho_grid) out << " " << format_number(v);
    out << "\n";
    out << "snr_fixed_db = " << format_number(scenario.sweep.snr_fixed_db) << "\n";
    out << "trials = " << scenario.sweep.trials << "\n";
    out << "frames = " << scenario.sweep.frames << "\n";
    out << "min_errors = " << scenario.sweep.min_errors << "\n";
    return out.str();
}

std::string scenario_schema() {
    return R"(Scenario file format: '#' starts a comment, sections in brackets,
key = value pairs. Angles are degrees off broadside (0 = array normal,
positive toward +90). Grids accept either a space-separated list or a
lo:step:hi range. 'inf' disables a threshold.

[system]
  num_antennas            integer >= 1
  spacing_wavelengths     element spacing in wavelengths (default 0.5)
  spacing_m               element spacing in meters (overrides the above)
  carrier_frequency_hz    carrier frequency
  frame_length            symbols per frame, >= num_users
  num_users               downlink users
  max_power_w             transmit power budget (see power_convention)
  noise_variance_w        optional fixed noise variance; sweeps derive it
                          from SNR instead (sigma0^2 = 1/SNR, the unit-energy
                          constellation is the SNR reference)
  tradeoff_rho            0..1, communication weight of the design objective
  rng_seed                64-bit master seed
  constellation           qpsk | psk<M> | qam<M>  (M in 4/16/64 for QAM)
  power_convention        frame_total: ||X||_F^2 <= max_power_w (default)
                          per_symbol: budget is max_power_w per time slot
  channel_attenuation     physical: gains lambda/(4 pi d) (default)
                          normalized: unit-magnitude gains (link-level studies)

[targets]
  angles_deg              radar target angles, e.g. -60 0 60
  mainlobe_width_deg      rectangular template lobe width (default 10)

[grid]
  window_deg              evaluation window, default -90 90
  resolution_deg          default 1

[placement]               random-user distribution
  angle_window_deg        default -85 85
  distance_m              min max, default 100 500

[exposure]
  gamma_user_w_m2         per-user density threshold (default inf)

[sector]                  repeatable block, one per restricted sector
  theta_i_deg             sector start (plot angle)
  theta_f_deg             sector end
  distance_m              closest distance to the array
  gamma_w_m2              sector density threshold

[users]                   optional fixed placements (overrides random ones)
  user = angle_deg distance_m phase_rad     one line per user

[sweep]
  snr_grid_db             default -5:2:25
  rho_grid                default 0:0.1:1
  snr_fixed_db            SNR of the rho sweep, default 13
  trials                  noise trials per sweep point, default 100000
  frames                  symbol frames the trials are split over, default 20
  min_errors              early-stop error count per point, default 500
)";
}

}  // namespace radcom
