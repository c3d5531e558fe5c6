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

#ifndef RADCOM_WAVEFORM_HPP
#define RADCOM_WAVEFORM_HPP

#include <armadillo>
#include <stdexcept>
#include <string>
#include <vector>

#include "radcom/scenario.hpp"

namespace radcom {

// Residual multi-user interference energy ||H X - S||_F^2.
double mui_energy(const arma::cx_mat& channel, const arma::cx_mat& waveform,
                  const arma::cx_mat& symbols);

// Elementwise antiderivative of a(theta) sin(theta): entry 0 is
// -cos(theta)/sqrt(N), entry n >= 1 is -j exp(-j n k cos(theta)) / (sqrt(N) n k).
arma::cx_vec antiderivative_vector(double theta, int num_antennas, double wavenumber);

// Gram-constrained interference minimizer: the X with X X^H = R0 closest to
// interference-free reception, via the orthogonal-Procrustes closed form
// X0 = R0^{1/2} U V^H where U S V^H = svd(R0^{1/2} H^H S).
arma::cx_mat procrustes_waveform(const arma::cx_mat& channel, const arma::cx_mat& symbols,
                                 const arma::cx_mat& radar_covariance);

// Quadratic form of the trade-off objective:
//   rho ||H X - S||^2 + (1-rho) ||X - X0||^2
//     = Tr(X^H A X) - 2 Re Tr(X^H B) + const,
// with A = rho H^H H + (1-rho) I and B = rho H^H S + (1-rho) X0. The
// exposure constraints are rank-one quadratics v^H X with the scaled
// directions stored here (C_u = v_u v_u^H, E_a = w_a w_a^H).
struct QuadraticTerms {
    arma::cx_mat quadratic;  // A, N x N Hermitian
    arma::cx_mat forcing;    // B, N x L
    std::vector<arma::cx_vec> user_directions;    // v_u = a(theta_u)/sqrt(4 pi d_u^2)
    std::vector<arma::cx_vec> sector_directions;  // w_a = (b(theta_F)-b(theta_I))/sqrt(4 pi d_a^2)
    double rho = 0.0;

    // Originals kept for objective reporting and certificates.
    arma::cx_mat channel;
    arma::cx_mat symbols;
    arma::cx_mat radar_waveform;
};

QuadraticTerms build_quadratic_terms(const arma::cx_mat& channel, const arma::cx_mat& symbols,
                                     const arma::cx_mat& radar_waveform, double rho,
                                     const UserPlacement& placement,
                                     const std::vector<SectorSpec>& sectors, double wavenumber);

struct TradeoffParams {
    double rho = 0.0;
    double max_power = 0.0;
    arma::vec gamma_user;    // W/m^2, inf disables a constraint
    arma::vec gamma_sector;  // W/m^2

    void validate(std::size_t num_users, std::size_t num_sectors) const;
};

struct SolverOptions {
    double feasibility_tol = 1e-6;   // relative primal feasibility
    double slackness_tol = 1e-6;     // normalized complementary slackness
    double stationarity_tol = 1e-8;  // ||K X - B|| / ||B||
    int max_iterations = 100000;
    arma::vec initial_multipliers;   // optional normalized warm start [power, users..., sectors...]
};

struct KktDiagnostics {
    double stationarity_residual = 0.0;
    double max_primal_violation = 0.0;  // max_i max(0, c_i/t_i - 1)
    double max_slack_product = 0.0;     // max_i nu_i |c_i/t_i - 1|
    int dual_iterations = 0;
    bool used_fallback = false;
    bool converged = false;
    std::string note;
};

struct KktSolution {
    arma::cx_mat waveform;  // X*
    double alpha = 0.0;     // power multiplier
    arma::vec gamma;        // user multipliers
    arma::vec beta;         // sector multipliers
    double objective = 0.0;
    double mui = 0.0;
    double radar_mismatch = 0.0;       // ||X - X0||_F^2
    arma::vec constraint_values;       // [||X||^2, user densities..., sector surrogates...]
    KktDiagnostics diagnostics;

    // Structured-text report: multipliers, residuals, objective split and
    // per-constraint slack.
    std::string report_text(const TradeoffParams& params) const;
};

class SolverError : public std::runtime_error {
  public:
    SolverError(const std::string& what, KktSolution last)
        : std::runtime_error(what), last_solution(std::move(last)) {}
    KktSolution last_solution;
};

// Solves the trade-off problem under the power, per-user and per-sector
// quadratic constraints. The concave dual over the multipliers is maximized
// by projected gradient ascent with backtracking, then polished by an
// active-set Newton step; the returned waveform is the exact stationary
// point X(mu) = (A + alpha I + sum gamma_u C_u + sum beta_a E_a)^{-1} B.
KktSolution solve_emf_constrained(const QuadraticTerms& terms, const TradeoffParams& params,
                                  const SolverOptions& options = {});

struct KktCertificate {
    double stationarity_residual = 0.0;
    double max_primal_violation = 0.0;
    double max_slack_product = 0.0;
    double min_multiplier = 0.0;
    bool stationarity_ok = false;
    bool feasibility_ok = false;
    bool slackness_ok = false;
    bool multipliers_ok = false;

    bool valid() const {
        return stationarity_ok && feasibility_ok && slackness_ok && multipliers_ok;
    }
};

// Recomputes every optimality condition from scratch, independently of the
// solver's internal bookkeeping.
KktCertificate kkt_certificate(const KktSolution& solution, const QuadraticTerms& terms,
                               const TradeoffParams& params,
                               const SolverOptions& tolerances = {});

}  // namespace radcom

#endif  // RADCOM_WAVEFORM_HPP
