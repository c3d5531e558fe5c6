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

#ifndef RADCOM_CONFIG_FILE_HPP
#define RADCOM_CONFIG_FILE_HPP

#include <stdexcept>
#include <string>

#include "radcom/scenario.hpp"

namespace radcom {

class ConfigError : public std::runtime_error {
  public:
    ConfigError(const std::string& message, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_number(line) {}
    int line_number;
};

// Parses the key=value scenario format described by scenario_schema().
Scenario parse_scenario_text(const std::string& text);
Scenario load_scenario(const std::string& path);

// Round-trippable snapshot of a resolved scenario; parse_scenario_text of the
// output reproduces the scenario exactly.
std::string serialize_scenario(const Scenario& scenario);

// Human-readable documentation of the file format.
std::string scenario_schema();

}  // namespace radcom

#endif  // RADCOM_CONFIG_FILE_HPP
