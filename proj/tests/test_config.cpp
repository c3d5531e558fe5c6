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

#include <cmath>
#include <cstdlib>

#include "doctest.h"
#include "radcom/config_file.hpp"

using namespace radcom;

namespace {

std::string scenario_dir() {
    if (const char* env = std::getenv("RADCOM_SCENARIO_DIR")) return env;
    return "scenarios";
}

}  // namespace

TEST_CASE("minimal scenario text applies defaults") {
    const Scenario s = parse_scenario_text("[targets]\nangles_deg = 0\n");
    CHECK(s.config.num_antennas == 16);
    CHECK(s.config.max_power_w == doctest::Approx(12e6));
    CHECK(s.targets.angles.size() == 1);
    CHECK(s.sweep.snr_grid_db.n_elem == 16);
    CHECK(s.sweep.rho_grid.n_elem == 11);
    CHECK(s.sweep.rho_grid.max() == doctest::Approx(1.0));
}

TEST_CASE("scenario serialization round-trips exactly") {
    std::string text = R"(
[system]
num_antennas = 12
spacing_wavelengths = 0.5
carrier_frequency_hz = 3.5e9
frame_length = 20
num_users = 3
max_power_w = 100
tradeoff_rho = 0.3
rng_seed = 99
constellation = qam16
channel_attenuation = normalized

[targets]
angles_deg = -45 45
mainlobe_width_deg = 12

[placement]
angle_window_deg = -80 80
distance_m = 0.5 2

[exposure]
gamma_user_w_m2 = 5

[sector]
theta_i_deg = -30
theta_f_deg = -20
distance_m = 1.5
gamma_w_m2 = 2

[users]
user = -10 1.0 0.5
user = 25 0.8 1.2
user = 60 1.4 3.0

[sweep]
snr_grid_db = 0:5:20
trials = 5000
)";
    const Scenario a = parse_scenario_text(text);
    const std::string serialized = serialize_scenario(a);
    const Scenario b = parse_scenario_text(serialized);
    CHECK(serialize_scenario(b) == serialized);
    CHECK(b.config.num_antennas == 12);
    CHECK(b.sectors.size() == 1);
    REQUIRE(b.fixed_users.has_value());
    CHECK(b.fixed_users->size() == 3);
    CHECK(b.gamma_user == doctest::Approx(5.0));
    // Sector angles land in ascending internal order.
    CHECK(b.sectors[0].theta_i < b.sectors[0].theta_f);
    CHECK(internal_rad_to_plot_deg(b.sectors[0].theta_f) == doctest::Approx(-30.0));
    CHECK(internal_rad_to_plot_deg(b.sectors[0].theta_i) == doctest::Approx(-20.0));
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_scenario_text("[system]\nnum_antennas = twelve\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line_number == 2);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_scenario_text("[bogus]\n"), ConfigError);
    CHECK_THROWS_AS(parse_scenario_text("[system]\nunknown_key = 4\n"), ConfigError);
    CHECK_THROWS_AS(parse_scenario_text("orphan = 1\n"), ConfigError);
    CHECK_THROWS_AS(load_scenario("/nonexistent/path.cfg"), ConfigError);
}

TEST_CASE("invalid field values are rejected on validation") {
    CHECK_THROWS_AS(parse_scenario_text("[system]\ntradeoff_rho = 1.5\n"), ConfigError);
    CHECK_THROWS_AS(parse_scenario_text("[system]\nmax_power_w = -3\n"), ConfigError);
    CHECK_THROWS_AS(
        parse_scenario_text("[sector]\ntheta_i_deg = 10\ntheta_f_deg = 10\n"
                            "distance_m = 5\ngamma_w_m2 = 1\n"),
        ConfigError);
}

TEST_CASE("schema documents every section") {
    const std::string schema = scenario_schema();
    for (const auto* needle :
         {"[system]", "[targets]", "[grid]", "[placement]", "[exposure]", "[sector]",
          "[users]", "[sweep]", "rng_seed", "gamma_user_w_m2", "channel_attenuation"})
        CHECK(schema.find(needle) != std::string::npos);
}

TEST_CASE("shipped reference scenario carries the published parameter set") {
    const Scenario s = load_scenario(scenario_dir() + "/paper_sec4.cfg");
    CHECK(s.config.num_antennas == 16);
    CHECK(s.config.spacing_wavelengths == doctest::Approx(0.5));
    CHECK(s.config.carrier_frequency_hz == doctest::Approx(6.0e9));
    CHECK(s.config.frame_length == 30);
    CHECK(s.config.num_users == 4);
    CHECK(s.config.max_power_w == doctest::Approx(12.0e6));
    REQUIRE(s.targets.angles.size() == 3);
    std::vector<double> degs;
    for (double t : s.targets.angles) degs.push_back(internal_rad_to_plot_deg(t));
    std::sort(degs.begin(), degs.end());
    CHECK(degs[0] == doctest::Approx(-60.0));
    CHECK(degs[1] == doctest::Approx(0.0));
    CHECK(degs[2] == doctest::Approx(60.0));
    REQUIRE(s.sectors.size() == 1);
    CHECK(s.sectors[0].distance_m == doctest::Approx(300.0));
    CHECK(s.sectors[0].gamma_w_m2 == doctest::Approx(7.0));
    const double lo = internal_rad_to_plot_deg(s.sectors[0].theta_f);
    const double hi = internal_rad_to_plot_deg(s.sectors[0].theta_i);
    CHECK(lo == doctest::Approx(-28.0));
    CHECK(hi == doctest::Approx(-11.0));
    CHECK(s.gamma_user == doctest::Approx(10.0));
}

TEST_CASE("shipped sweep scenario is link-level normalized") {
    const Scenario s = load_scenario(scenario_dir() + "/paper_sec4_sweeps.cfg");
    CHECK(s.config.attenuation == AttenuationMode::normalized);
    CHECK(s.config.num_antennas == 16);
    CHECK(s.config.num_users == 4);
    CHECK(s.config.frame_length == 30);
    CHECK(s.config.tradeoff_rho == doctest::Approx(0.4));
    CHECK(s.sweep.snr_fixed_db == doctest::Approx(13.0));
}
