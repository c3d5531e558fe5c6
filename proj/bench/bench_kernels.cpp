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
//
// Benchmarks the OpenMP kernels against their serial references and checks
// that both produce identical results.

#include <omp.h>

#include <cstdio>

#include "radcom/beampattern.hpp"
#include "radcom/montecarlo.hpp"

using namespace radcom;

int main() {
    std::printf("threads: %d\n\n", omp_get_max_threads());

    // --- Beampattern grid evaluation ------------------------------------
    {
        RngStream rng(1, stream::instance);
        arma::cx_mat g(16, 16);
        for (auto& v : g) v = {rng.gaussian(), rng.gaussian()};
        const arma::cx_mat r = g * g.t();
        const AngularGrid grid = AngularGrid::over_window(0.01, kPi - 0.01, deg_to_rad(0.01));

        double t0 = omp_get_wtime();
        const arma::vec serial = beampattern_grid_serial(r, grid, kPi);
        const double serial_s = omp_get_wtime() - t0;

        t0 = omp_get_wtime();
        const arma::vec parallel = beampattern_grid(r, grid, kPi);
        const double parallel_s = omp_get_wtime() - t0;

        std::printf("beampattern grid (%llu angles, N=16)\n",
                    static_cast<unsigned long long>(grid.thetas.n_elem));
        std::printf("  serial:   %.3f s\n", serial_s);
        std::printf("  parallel: %.3f s  (speedup %.2fx)\n", parallel_s,
                    serial_s / parallel_s);
        std::printf("  match: %s\n\n",
                    arma::norm(serial - parallel) == 0.0 ? "identical" : "MISMATCH");
    }

    // --- Symbol detection trials -----------------------------------------
    {
        const Constellation qpsk = Constellation::qpsk();
        RngStream rng(2, stream::symbols);
        const arma::cx_mat s = modulate(4, 30, qpsk, rng);
        const arma::cx_mat received = 0.92 * s;  // mild compression, moderate SER
        const std::uint64_t trials = 20000;

        double t0 = omp_get_wtime();
        const std::uint64_t serial =
            count_detection_errors(received, s, qpsk, 0.3, trials, 42, 0, false);
        const double serial_s = omp_get_wtime() - t0;

        t0 = omp_get_wtime();
        const std::uint64_t parallel =
            count_detection_errors(received, s, qpsk, 0.3, trials, 42, 0, true);
        const double parallel_s = omp_get_wtime() - t0;

        std::printf("symbol detection (%llu trials x 120 symbols)\n",
                    static_cast<unsigned long long>(trials));
        std::printf("  serial:   %.3f s (%llu errors)\n", serial_s,
                    static_cast<unsigned long long>(serial));
        std::printf("  parallel: %.3f s (%llu errors, speedup %.2fx)\n", parallel_s,
                    static_cast<unsigned long long>(parallel), serial_s / parallel_s);
        std::printf("  match: %s\n", serial == parallel ? "identical" : "MISMATCH");
        return serial == parallel ? 0 : 1;
    }
}
