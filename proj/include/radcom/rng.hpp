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

#ifndef RADCOM_RNG_HPP
#define RADCOM_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace radcom {

// Every random consumer derives its own generator from (master seed, tag,
// index). Results are therefore independent of evaluation order and of the
// number of worker threads.
namespace stream {
inline constexpr std::uint64_t placement = 0x706c6163656d6e74ULL;
inline constexpr std::uint64_t symbols = 0x73796d626f6c7331ULL;
inline constexpr std::uint64_t noise = 0x6e6f697365747267ULL;
inline constexpr std::uint64_t instance = 0x696e7374616e6365ULL;
}  // namespace stream

// SplitMix64 finalizer, used only to spread (seed, tag, index) triples.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class RngStream {
  public:
    RngStream(std::uint64_t master, std::uint64_t tag, std::uint64_t index = 0)
        : engine_(mix64(mix64(mix64(master) ^ tag) ^ index)) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1) with 53 significant bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on (0, 1]; safe as a log() argument.
    double uniform_pos() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Unbiased integer in [0, n) via 128-bit multiply-shift.
    std::uint64_t uniform_int(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    // Standard normal via Box-Muller; avoids the implementation-defined
    // std::normal_distribution so streams are reproducible everywhere.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
        const double t = 2.0 * 3.14159265358979323846 * uniform();
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    // Circularly-symmetric complex Gaussian with E|z|^2 = variance.
    std::complex<double> cgaussian(double variance) {
        const double s = std::sqrt(0.5 * variance);
        return {s * gaussian(), s * gaussian()};
    }

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace radcom

#endif  // RADCOM_RNG_HPP
