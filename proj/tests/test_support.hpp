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
// Test-only oracles, kept independent of the library implementations they
// check: a naive beampattern sum, a Dykstra-projection primal solver for the
// constrained trade-off, and random instance generators.

#ifndef RADCOM_TEST_SUPPORT_HPP
#define RADCOM_TEST_SUPPORT_HPP

#include <armadillo>
#include <vector>

#include "radcom/montecarlo.hpp"
#include "radcom/rng.hpp"
#include "radcom/scenario.hpp"
#include "radcom/waveform.hpp"

namespace radcom::testing {

inline arma::cx_mat random_complex(arma::uword rows, arma::uword cols, RngStream& rng) {
    arma::cx_mat m(rows, cols);
    for (arma::uword j = 0; j < cols; ++j)
        for (arma::uword i = 0; i < rows; ++i)
            m(i, j) = {rng.gaussian(), rng.gaussian()};
    return m;
}

inline arma::cx_mat random_psd(arma::uword n, RngStream& rng) {
    const arma::cx_mat g = random_complex(n, n, rng);
    return g * g.t();
}

// Term-by-term double sum for a^H R a, no matrix products.
inline double naive_quadratic_form(const arma::cx_mat& r, const arma::cx_vec& a) {
    std::complex<double> sum = 0.0;
    for (arma::uword m = 0; m < a.n_elem; ++m)
        for (arma::uword n = 0; n < a.n_elem; ++n)
            sum += std::conj(a[m]) * r(m, n) * a[n];
    return sum.real();
}

// Random N x L partial isometry (Q Q^H = I_N), N <= L.
inline arma::cx_mat random_partial_isometry(arma::uword n, arma::uword l, RngStream& rng) {
    const arma::cx_mat g = random_complex(l, n, rng);
    arma::cx_mat q, r;
    arma::qr_econ(q, r, g);  // q: l x n orthonormal columns
    return q.t();
}

// ---------------------------------------------------------------------------
// Independent primal solver: projected gradient descent with Dykstra's
// alternating projections onto the intersection of the quadratic constraint
// sets {||X||^2 <= p}, {||v_i^H X||^2 <= t_i}.

struct PrimalOracleProblem {
    arma::cx_mat channel, symbols, radar_waveform;
    double rho = 0.5;
    double max_power = 0.0;                  // finite
    std::vector<arma::cx_vec> directions;    // user + sector vectors
    std::vector<double> thresholds;          // finite entries only
};

inline arma::cx_mat project_power_ball(const arma::cx_mat& x, double p) {
    const double n = arma::norm(x, "fro");
    if (n * n <= p) return x;
    return x * std::sqrt(p / (n * n));
}

inline arma::cx_mat project_direction(const arma::cx_mat& x, const arma::cx_vec& v, double t) {
    const arma::cx_rowvec r = v.t() * x;
    const double norm_r = arma::norm(r, "fro");
    const double e = norm_r * norm_r;
    if (e <= t) return x;
    const arma::cx_rowvec target = r * std::sqrt(t / e);
    const double v2 = std::real(arma::cdot(v, v));
    return x + v * ((target - r) / v2);
}

inline arma::cx_mat dykstra_project(const PrimalOracleProblem& problem, arma::cx_mat x) {
    const std::size_t sets = 1 + problem.directions.size();
    std::vector<arma::cx_mat> corrections(sets,
                                          arma::cx_mat(x.n_rows, x.n_cols, arma::fill::zeros));
    for (int cycle = 0; cycle < 2000; ++cycle) {
        const arma::cx_mat before = x;
        for (std::size_t i = 0; i < sets; ++i) {
            const arma::cx_mat y = x + corrections[i];
            const arma::cx_mat projected =
                i == 0 ? project_power_ball(y, problem.max_power)
                       : project_direction(y, problem.directions[i - 1],
                                           problem.thresholds[i - 1]);
            corrections[i] = y - projected;
            x = projected;
        }
        if (arma::norm(x - before, "fro") <= 1e-14 * (1.0 + arma::norm(x, "fro"))) break;
    }
    return x;
}

inline double primal_objective(const PrimalOracleProblem& problem, const arma::cx_mat& x) {
    const double m = arma::norm(problem.channel * x - problem.symbols, "fro");
    const double r = arma::norm(x - problem.radar_waveform, "fro");
    return problem.rho * m * m + (1.0 - problem.rho) * r * r;
}

inline arma::cx_mat primal_pg_solve(const PrimalOracleProblem& problem, int max_iterations = 60000,
                                    double tol = 1e-12) {
    const arma::cx_mat gram = problem.channel.t() * problem.channel;
    arma::vec eig;
    arma::eig_sym(eig, gram);
    const double lipschitz = 2.0 * (problem.rho * eig.max() + (1.0 - problem.rho));
    const double step = 1.0 / lipschitz;
    const arma::cx_mat forcing = problem.rho * problem.channel.t() * problem.symbols +
                                 (1.0 - problem.rho) * problem.radar_waveform;

    arma::cx_mat x(problem.radar_waveform.n_rows, problem.radar_waveform.n_cols,
                   arma::fill::zeros);
    double objective = primal_objective(problem, x);
    int stable = 0;
    for (int iter = 0; iter < max_iterations; ++iter) {
        arma::cx_mat gradient = 2.0 * (problem.rho * (gram * x) + (1.0 - problem.rho) * x -
                                       forcing);
        x = dykstra_project(problem, x - step * gradient);
        const double next = primal_objective(problem, x);
        if (std::abs(objective - next) <= tol * std::max(1.0, std::abs(next))) {
            if (++stable >= 25) break;
        } else {
            stable = 0;
        }
        objective = next;
    }
    return x;
}

// ---------------------------------------------------------------------------
// Random small trade-off instances.

struct SmallInstance {
    arma::cx_mat channel, symbols, radar_covariance, radar_waveform;
    UserPlacement placement;
    std::vector<SectorSpec> sectors;
    double wavenumber = kPi;
    QuadraticTerms terms;
    TradeoffParams params;
};

// Thresholds are drawn as fractions of the unconstrained optimum's constraint
// values, so instances mix active and inactive constraints while staying
// strictly feasible (scaling toward zero satisfies every constraint).
inline SmallInstance random_instance(std::uint64_t seed, int n, int u, int l, int sectors,
                                     double rho_lo = 0.2, double rho_hi = 0.8) {
    RngStream rng(seed, stream::instance);
    SmallInstance inst;
    inst.placement.angles.set_size(u);
    inst.placement.distances_m.set_size(u);
    inst.placement.phases.set_size(u);
    for (int i = 0; i < u; ++i) {
        inst.placement.angles[i] = rng.uniform(0.15 * kPi, 0.85 * kPi);
        inst.placement.distances_m[i] = rng.uniform(0.8, 2.5);
        inst.placement.phases[i] = rng.uniform(0.0, 2.0 * kPi);
    }
    for (int a = 0; a < sectors; ++a) {
        SectorSpec s;
        const double start = rng.uniform(0.2 * kPi, 0.7 * kPi);
        s.theta_i = start;
        s.theta_f = start + rng.uniform(0.05 * kPi, 0.2 * kPi);
        s.distance_m = rng.uniform(0.8, 2.5);
        s.gamma_w_m2 = 1.0;  // replaced below
        inst.sectors.push_back(s);
    }

    inst.channel.set_size(u, n);
    for (int i = 0; i < u; ++i) {
        const double gain = rng.uniform(0.5, 1.5);
        const std::complex<double> phase = std::polar(gain, rng.uniform(0.0, 2.0 * kPi));
        inst.channel.row(i) =
            phase * steering_vector(inst.placement.angles[i], n, inst.wavenumber).st();
    }

    const Constellation qpsk = Constellation::qpsk();
    RngStream symbol_rng(seed, stream::symbols);
    inst.symbols = modulate(u, l, qpsk, symbol_rng);

    arma::cx_mat g = random_complex(n, n, rng);
    inst.radar_covariance = g * g.t();
    inst.radar_covariance *= static_cast<double>(n) /
                             std::real(arma::trace(inst.radar_covariance));
    inst.radar_waveform = procrustes_waveform(inst.channel, inst.symbols,
                                              inst.radar_covariance);

    const double rho = rng.uniform(rho_lo, rho_hi);
    inst.terms = build_quadratic_terms(inst.channel, inst.symbols, inst.radar_waveform, rho,
                                       inst.placement, inst.sectors, inst.wavenumber);

    // Unconstrained minimizer fixes the threshold scale.
    const arma::cx_mat x_free = arma::solve(inst.terms.quadratic, inst.terms.forcing);
    inst.params.rho = rho;
    const double p_free = std::pow(arma::norm(x_free, "fro"), 2);
    inst.params.max_power = p_free * rng.uniform(0.6, 1.4);
    inst.params.gamma_user.set_size(u);
    for (int i = 0; i < u; ++i) {
        const double c = std::pow(
            arma::norm(inst.terms.user_directions[i].t() * x_free, "fro"), 2);
        inst.params.gamma_user[i] = std::max(c, 1e-8) * rng.uniform(0.6, 1.4);
    }
    inst.params.gamma_sector.set_size(sectors);
    for (int a = 0; a < sectors; ++a) {
        const double c = std::pow(
            arma::norm(inst.terms.sector_directions[a].t() * x_free, "fro"), 2);
        inst.params.gamma_sector[a] = std::max(c, 1e-8) * rng.uniform(0.6, 1.4);
        inst.sectors[a].gamma_w_m2 = inst.params.gamma_sector[a];
    }
    return inst;
}

inline PrimalOracleProblem to_oracle_problem(const SmallInstance& inst) {
    PrimalOracleProblem problem;
    problem.channel = inst.channel;
    problem.symbols = inst.symbols;
    problem.radar_waveform = inst.radar_waveform;
    problem.rho = inst.params.rho;
    problem.max_power = inst.params.max_power;
    for (std::size_t i = 0; i < inst.terms.user_directions.size(); ++i) {
        problem.directions.push_back(inst.terms.user_directions[i]);
        problem.thresholds.push_back(inst.params.gamma_user[i]);
    }
    for (std::size_t a = 0; a < inst.terms.sector_directions.size(); ++a) {
        problem.directions.push_back(inst.terms.sector_directions[a]);
        problem.thresholds.push_back(inst.params.gamma_sector[a]);
    }
    return problem;
}

}  // namespace radcom::testing

#endif  // RADCOM_TEST_SUPPORT_HPP
