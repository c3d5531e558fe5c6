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

#include "radcom/waveform.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace radcom {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

double mui_energy(const arma::cx_mat& channel, const arma::cx_mat& waveform,
                  const arma::cx_mat& symbols) {
    if (channel.n_cols != waveform.n_rows || channel.n_rows != symbols.n_rows ||
        waveform.n_cols != symbols.n_cols)
        throw std::invalid_argument("mui_energy: dimension mismatch");
    const double r = arma::norm(channel * waveform - symbols, "fro");
    return r * r;
}

arma::cx_vec antiderivative_vector(double theta, int num_antennas, double wavenumber) {
    if (num_antennas < 1) throw std::invalid_argument("num_antennas must be >= 1");
    if (num_antennas > 1 && wavenumber == 0.0)
        throw std::invalid_argument("wavenumber must be nonzero");
    const double c = std::cos(theta);
    const double scale = 1.0 / std::sqrt(static_cast<double>(num_antennas));
    arma::cx_vec b(num_antennas);
    b[0] = std::complex<double>(-c * scale, 0.0);
    for (int n = 1; n < num_antennas; ++n) {
        const double q = wavenumber * static_cast<double>(n);
        // -j exp(-j q c) / q, scaled by 1/sqrt(N)
        b[n] = std::complex<double>(0.0, -scale / q) * std::polar(1.0, -q * c);
    }
    return b;
}

arma::cx_mat procrustes_waveform(const arma::cx_mat& channel, const arma::cx_mat& symbols,
                                 const arma::cx_mat& radar_covariance) {
    if (!radar_covariance.is_square())
        throw std::invalid_argument("radar covariance must be square");
    const arma::uword n = radar_covariance.n_rows;
    const arma::uword l = symbols.n_cols;
    if (channel.n_cols != n || channel.n_rows != symbols.n_rows)
        throw std::invalid_argument("procrustes_waveform: dimension mismatch");

    arma::vec eigenvalues;
    arma::cx_mat eigenvectors;
    const arma::cx_mat hermitized = 0.5 * (radar_covariance + radar_covariance.t());
    if (!arma::eig_sym(eigenvalues, eigenvectors, hermitized))
        throw std::runtime_error("procrustes_waveform: eigendecomposition failed");

    const double floor = std::max(eigenvalues.max(), 0.0) * 1e-12;
    const arma::uvec keep = arma::find(eigenvalues > floor);
    if (keep.n_elem > l)
        throw std::invalid_argument(
            "procrustes_waveform: rank of the covariance exceeds the frame length");
    if (keep.n_elem == 0) return arma::cx_mat(n, l, arma::fill::zeros);

    const arma::cx_mat basis = eigenvectors.cols(keep);  // N x r
    const arma::cx_mat root_diag =
        arma::diagmat(arma::conv_to<arma::cx_vec>::from(arma::sqrt(eigenvalues(keep))));
    const arma::cx_mat target = root_diag * basis.t() * channel.t() * symbols;  // r x L

    arma::cx_mat left, right;
    arma::vec singulars;
    if (!arma::svd_econ(left, singulars, right, target))
        throw std::runtime_error("procrustes_waveform: SVD failed");
    const arma::cx_mat isometry = left * right.t();  // r x L, Q Q^H = I_r

    return basis * root_diag * isometry;
}

QuadraticTerms build_quadratic_terms(const arma::cx_mat& channel, const arma::cx_mat& symbols,
                                     const arma::cx_mat& radar_waveform, double rho,
                                     const UserPlacement& placement,
                                     const std::vector<SectorSpec>& sectors, double wavenumber) {
    if (!(rho >= 0.0 && rho <= 1.0)) throw std::invalid_argument("rho must lie in [0, 1]");
    const arma::uword n = channel.n_cols;
    if (radar_waveform.n_rows != n || symbols.n_rows != channel.n_rows ||
        symbols.n_cols != radar_waveform.n_cols)
        throw std::invalid_argument("build_quadratic_terms: dimension mismatch");
    placement.validate();

    QuadraticTerms terms;
    terms.rho = rho;
    terms.quadratic = rho * (channel.t() * channel);
    terms.quadratic.diag() += std::complex<double>(1.0 - rho, 0.0);
    terms.quadratic = 0.5 * (terms.quadratic + terms.quadratic.t());
    terms.forcing = rho * (channel.t() * symbols) + (1.0 - rho) * radar_waveform;

    terms.user_directions.reserve(placement.size());
    for (arma::uword u = 0; u < placement.size(); ++u) {
        const double d = placement.distances_m[u];
        terms.user_directions.push_back(
            steering_vector(placement.angles[u], static_cast<int>(n), wavenumber) /
            std::sqrt(4.0 * kPi * d * d));
    }
    terms.sector_directions.reserve(sectors.size());
    for (const auto& sector : sectors) {
        sector.validate();
        const arma::cx_vec diff =
            antiderivative_vector(sector.theta_f, static_cast<int>(n), wavenumber) -
            antiderivative_vector(sector.theta_i, static_cast<int>(n), wavenumber);
        terms.sector_directions.push_back(diff /
                                          std::sqrt(4.0 * kPi * sector.distance_m * sector.distance_m));
    }

    terms.channel = channel;
    terms.symbols = symbols;
    terms.radar_waveform = radar_waveform;
    return terms;
}

void TradeoffParams::validate(std::size_t num_users, std::size_t num_sectors) const {
    if (!(rho >= 0.0 && rho <= 1.0)) throw std::invalid_argument("rho must lie in [0, 1]");
    if (!(max_power > 0.0)) throw std::invalid_argument("max_power must be > 0");
    if (gamma_user.n_elem != num_users)
        throw std::invalid_argument("gamma_user size mismatch");
    if (gamma_sector.n_elem != num_sectors)
        throw std::invalid_argument("gamma_sector size mismatch");
    bool any_finite = std::isfinite(max_power);
    for (double g : gamma_user) {
        if (!(g > 0.0)) throw std::invalid_argument("gamma_user entries must be > 0");
        any_finite = any_finite || std::isfinite(g);
    }
    for (double g : gamma_sector) {
        if (!(g > 0.0)) throw std::invalid_argument("gamma_sector entries must be > 0");
        any_finite = any_finite || std::isfinite(g);
    }
    if (!any_finite)
        throw std::invalid_argument("at least one constraint must be finite");
}

namespace {

// The dual works on normalized multipliers nu_i = mu_i * t_i so that every
// gradient component c_i/t_i - 1 is dimensionless.
struct DualProblem {
    const QuadraticTerms& terms;
    arma::vec thresholds;        // t_i: [max_power, users..., sectors...]
    std::vector<bool> finite;
    // Tiny ridge applied at rho = 1, where the quadratic term is singular and
    // the dual otherwise nonsmooth; this is the regularized least-squares
    // reading of the communication-only corner.
    double diag_shift = 0.0;

    arma::uword count() const { return thresholds.n_elem; }

    arma::cx_mat build_system(const arma::vec& nu) const {
        arma::cx_mat k = terms.quadratic;
        if (diag_shift != 0.0) k.diag() += std::complex<double>(diag_shift, 0.0);
        if (finite[0] && nu[0] != 0.0)
            k.diag() += std::complex<double>(nu[0] / thresholds[0], 0.0);
        arma::uword idx = 1;
        for (const auto& v : terms.user_directions) {
            if (finite[idx] && nu[idx] != 0.0) k += (nu[idx] / thresholds[idx]) * (v * v.t());
            ++idx;
        }
        for (const auto& w : terms.sector_directions) {
            if (finite[idx] && nu[idx] != 0.0) k += (nu[idx] / thresholds[idx]) * (w * w.t());
            ++idx;
        }
        return k;
    }

    // Q_i X for constraint i.
    arma::cx_mat apply(arma::uword i, const arma::cx_mat& x) const {
        if (i == 0) return x;
        if (i <= terms.user_directions.size()) {
            const auto& v = terms.user_directions[i - 1];
            return v * (v.t() * x);
        }
        const auto& w = terms.sector_directions[i - 1 - terms.user_directions.size()];
        return w * (w.t() * x);
    }

    arma::vec constraint_values(const arma::cx_mat& x) const {
        arma::vec c(count());
        const double fx = arma::norm(x, "fro");
        c[0] = fx * fx;
        arma::uword idx = 1;
        for (const auto& v : terms.user_directions) {
            const double r = arma::norm(v.t() * x, "fro");
            c[idx++] = r * r;
        }
        for (const auto& w : terms.sector_directions) {
            const double r = arma::norm(w.t() * x, "fro");
            c[idx++] = r * r;
        }
        return c;
    }
};

// Hermitian solve with a spectral fallback for the positive-semidefinite case
// (rho = 1 with inactive constraints). The fallback is the eigenvalue-clipped
// pseudo-inverse, i.e. the exact minimum-norm solution of the consistent
// stationarity system.
arma::cx_mat solve_stationarity(const arma::cx_mat& k, const arma::cx_mat& b,
                                bool& used_fallback, double& rel_residual) {
    const double b_norm = arma::norm(b, "fro");
    if (b_norm == 0.0) {
        rel_residual = 0.0;
        return arma::cx_mat(k.n_rows, b.n_cols, arma::fill::zeros);
    }
    arma::cx_mat x;
    if (arma::solve(x, k, b, arma::solve_opts::likely_sympd + arma::solve_opts::no_approx)) {
        rel_residual = arma::norm(k * x - b, "fro") / b_norm;
        if (rel_residual <= 1e-9) return x;
    }
    used_fallback = true;
    arma::vec eigenvalues;
    arma::cx_mat eigenvectors;
    if (!arma::eig_sym(eigenvalues, eigenvectors, 0.5 * (k + k.t())))
        throw std::runtime_error("stationarity solve: eigendecomposition failed");
    const double floor = std::max(eigenvalues.max(), 0.0) * 1e-12;
    arma::vec inverted(eigenvalues.n_elem, arma::fill::zeros);
    for (arma::uword i = 0; i < eigenvalues.n_elem; ++i)
        if (eigenvalues[i] > floor) inverted[i] = 1.0 / eigenvalues[i];
    x = eigenvectors * (arma::diagmat(arma::conv_to<arma::cx_vec>::from(inverted)) *
                        (eigenvectors.t() * b));
    rel_residual = arma::norm(k * x - b, "fro") / b_norm;
    return x;
}

struct DualState {
    arma::cx_mat x;
    arma::vec values;     // c_i(x)
    double dual_value;    // g(nu)
    bool used_fallback = false;
    double solve_residual = 0.0;
};

DualState evaluate_dual(const DualProblem& problem, const arma::vec& nu) {
    DualState state;
    const arma::cx_mat k = problem.build_system(nu);
    state.x = solve_stationarity(k, problem.terms.forcing, state.used_fallback,
                                 state.solve_residual);
    state.values = problem.constraint_values(state.x);
    double nu_sum = 0.0;
    for (arma::uword i = 0; i < problem.count(); ++i)
        if (problem.finite[i]) nu_sum += nu[i];
    state.dual_value =
        -std::real(arma::trace(problem.terms.forcing.t() * state.x)) - nu_sum;
    return state;
}

double max_violation(const DualProblem& problem, const arma::vec& values) {
    double v = 0.0;
    for (arma::uword i = 0; i < problem.count(); ++i)
        if (problem.finite[i])
            v = std::max(v, values[i] / problem.thresholds[i] - 1.0);
    return v;
}

double max_slack_product(const DualProblem& problem, const arma::vec& nu,
                         const arma::vec& values) {
    double s = 0.0;
    for (arma::uword i = 0; i < problem.count(); ++i)
        if (problem.finite[i])
            s = std::max(s, nu[i] * std::abs(values[i] / problem.thresholds[i] - 1.0));
    return s;
}

// KKT residual: primal violation and normalized complementarity product
// together; zero exactly at the optimum.
double kkt_merit(const DualProblem& problem, const arma::vec& nu, const arma::vec& values) {
    return std::max(max_violation(problem, values), max_slack_product(problem, nu, values));
}

// Active-set Newton refinement: solves c_i(nu) = t_i over the active set and
// zeroes multipliers whose Newton candidate turns negative. Returns true once
// the KKT merit drops below `target`.
bool newton_polish(const DualProblem& problem, arma::vec& nu, DualState& state, double target,
                   int max_rounds) {
    const arma::uword m = problem.count();
    for (int round = 0; round < max_rounds; ++round) {
        if (kkt_merit(problem, nu, state.values) <= target) return true;

        std::vector<arma::uword> active;
        std::vector<arma::uword> zeroed;
        for (arma::uword i = 0; i < m; ++i) {
            if (!problem.finite[i]) continue;
            const double rel = state.values[i] / problem.thresholds[i];
            if (nu[i] > 0.0 || rel >= 1.0 - 1e-6) active.push_back(i);
        }
        if (active.empty()) return kkt_merit(problem, nu, state.values) <= target;

        const arma::cx_mat k = problem.build_system(nu);

        arma::vec delta;
        while (!active.empty()) {
            const arma::uword a = active.size();
            arma::vec residual(a);
            std::vector<arma::cx_mat> applied(a), propagated(a);
            for (arma::uword j = 0; j < a; ++j) {
                applied[j] = problem.apply(active[j], state.x);
                bool fallback = false;
                double rres = 0.0;
                propagated[j] = solve_stationarity(k, applied[j], fallback, rres);
                residual[j] = state.values[active[j]] / problem.thresholds[active[j]] - 1.0;
            }
            arma::mat jac(a, a);
            for (arma::uword i = 0; i < a; ++i)
                for (arma::uword j = 0; j < a; ++j)
                    jac(i, j) = 2.0 /
                                (problem.thresholds[active[i]] * problem.thresholds[active[j]]) *
                                std::real(arma::accu(arma::conj(applied[i]) % propagated[j]));

            // jac is the negated constraint Jacobian, PSD by construction.
            jac.diag() += 1e-14 * (1.0 + std::abs(jac.diag().max()));
            if (!arma::solve(delta, jac, residual, arma::solve_opts::no_approx))
                delta = arma::pinv(jac) * residual;

            // Drop the most negative Newton candidate: classic active-set
            // transition (the dropped multiplier snaps to zero).
            arma::sword worst = -1;
            double worst_value = 0.0;
            for (arma::uword j = 0; j < a; ++j) {
                const double candidate = nu[active[j]] + delta[j];
                if (candidate < worst_value) {
                    worst_value = candidate;
                    worst = static_cast<arma::sword>(j);
                }
            }
            if (worst < 0) break;
            zeroed.push_back(active[static_cast<arma::uword>(worst)]);
            active.erase(active.begin() + worst);
        }

        const double merit_before = kkt_merit(problem, nu, state.values);
        bool stepped = false;
        double lambda = 1.0;
        for (int halving = 0; halving < 30; ++halving, lambda *= 0.5) {
            arma::vec trial_nu = nu;
            for (arma::uword z : zeroed) trial_nu[z] = 0.0;
            for (arma::uword j = 0; j < active.size(); ++j)
                trial_nu[active[j]] = std::max(0.0, nu[active[j]] + lambda * delta[j]);
            if (arma::approx_equal(trial_nu, nu, "absdiff", 0.0)) break;
            DualState trial = evaluate_dual(problem, trial_nu);
            if (kkt_merit(problem, trial_nu, trial.values) < merit_before) {
                nu = std::move(trial_nu);
                state = std::move(trial);
                stepped = true;
                break;
            }
        }
        if (!stepped) return kkt_merit(problem, nu, state.values) <= target;
    }
    return kkt_merit(problem, nu, state.values) <= target;
}

}  // namespace

KktSolution solve_emf_constrained(const QuadraticTerms& terms, const TradeoffParams& params,
                                  const SolverOptions& options) {
    const std::size_t num_users = terms.user_directions.size();
    const std::size_t num_sectors = terms.sector_directions.size();
    params.validate(num_users, num_sectors);
    if (std::abs(params.rho - terms.rho) > 1e-12)
        throw std::invalid_argument("TradeoffParams.rho disagrees with the quadratic terms");

    DualProblem problem{terms, {}, {}, 0.0};
    if (terms.rho >= 1.0)
        problem.diag_shift =
            1e-10 * std::real(arma::trace(terms.quadratic)) /
            static_cast<double>(terms.quadratic.n_rows);
    const arma::uword m = 1 + num_users + num_sectors;
    problem.thresholds.set_size(m);
    problem.finite.resize(m);
    problem.thresholds[0] = params.max_power;
    for (std::size_t u = 0; u < num_users; ++u) problem.thresholds[1 + u] = params.gamma_user[u];
    for (std::size_t a = 0; a < num_sectors; ++a)
        problem.thresholds[1 + num_users + a] = params.gamma_sector[a];
    for (arma::uword i = 0; i < m; ++i) problem.finite[i] = std::isfinite(problem.thresholds[i]);

    arma::vec nu(m, arma::fill::zeros);
    if (options.initial_multipliers.n_elem) {
        if (options.initial_multipliers.n_elem != m)
            throw std::invalid_argument("initial_multipliers size mismatch");
        nu = arma::clamp(options.initial_multipliers, 0.0, kInf);
        for (arma::uword i = 0; i < m; ++i)
            if (!problem.finite[i]) nu[i] = 0.0;
    }

    DualState state = evaluate_dual(problem, nu);
    auto satisfied = [&](const arma::vec& multipliers, const DualState& s) {
        return max_violation(problem, s.values) <= options.feasibility_tol &&
               max_slack_product(problem, multipliers, s.values) <= options.slackness_tol;
    };

    int iterations = 0;
    double step = 1.0;
    const double newton_target = 0.5 * std::min(options.feasibility_tol, options.slackness_tol);

    while (!satisfied(nu, state) && iterations < options.max_iterations) {
        // Newton polish once the iterate is in the basin; fall back to
        // projected gradient ascent otherwise.
        if (max_violation(problem, state.values) < 0.5 ||
            (iterations > 0 && iterations % 50 == 0)) {
            if (newton_polish(problem, nu, state, newton_target, 60)) break;
        }

        arma::vec gradient(m, arma::fill::zeros);
        for (arma::uword i = 0; i < m; ++i)
            if (problem.finite[i])
                gradient[i] = state.values[i] / problem.thresholds[i] - 1.0;

        bool accepted = false;
        for (int bt = 0; bt < 60 && !accepted; ++bt) {
            arma::vec trial_nu = arma::clamp(nu + step * gradient, 0.0, kInf);
            for (arma::uword i = 0; i < m; ++i)
                if (!problem.finite[i]) trial_nu[i] = 0.0;
            if (arma::approx_equal(trial_nu, nu, "absdiff", 0.0)) {
                step *= 2.0;  // gradient pushes only against the bound; widen
                continue;
            }
            DualState trial = evaluate_dual(problem, trial_nu);
            ++iterations;
            if (trial.dual_value >= state.dual_value) {
                nu = std::move(trial_nu);
                state = std::move(trial);
                step *= 1.5;
                accepted = true;
            } else {
                step *= 0.5;
            }
            if (iterations >= options.max_iterations) break;
        }
        if (!accepted) {
            if (newton_polish(problem, nu, state, newton_target, 60)) break;
            ++iterations;
            if (step < 1e-18) break;  // dual ascent exhausted at float resolution
        }
    }

    // Assemble the solution and final diagnostics from a fresh recompute.
    KktSolution solution;
    solution.waveform = state.x;
    solution.alpha = problem.finite[0] ? nu[0] / problem.thresholds[0] : 0.0;
    solution.gamma.set_size(num_users);
    for (std::size_t u = 0; u < num_users; ++u)
        solution.gamma[u] = problem.finite[1 + u] ? nu[1 + u] / problem.thresholds[1 + u] : 0.0;
    solution.beta.set_size(num_sectors);
    for (std::size_t a = 0; a < num_sectors; ++a) {
        const arma::uword i = 1 + num_users + a;
        solution.beta[a] = problem.finite[i] ? nu[i] / problem.thresholds[i] : 0.0;
    }
    solution.constraint_values = state.values;
    solution.mui = mui_energy(terms.channel, state.x, terms.symbols);
    solution.radar_mismatch = [&] {
        const double r = arma::norm(state.x - terms.radar_waveform, "fro");
        return r * r;
    }();
    solution.objective = terms.rho * solution.mui + (1.0 - terms.rho) * solution.radar_mismatch;

    // Residual measured against the unshifted stationarity operator.
    const double shift = problem.diag_shift;
    problem.diag_shift = 0.0;
    const arma::cx_mat k_final = problem.build_system(nu);
    problem.diag_shift = shift;
    const double b_norm = arma::norm(terms.forcing, "fro");
    solution.diagnostics.stationarity_residual =
        b_norm > 0.0 ? arma::norm(k_final * state.x - terms.forcing, "fro") / b_norm : 0.0;
    solution.diagnostics.max_primal_violation = max_violation(problem, state.values);
    solution.diagnostics.max_slack_product = max_slack_product(problem, nu, state.values);
    solution.diagnostics.dual_iterations = iterations;
    solution.diagnostics.used_fallback = state.used_fallback || shift > 0.0;
    solution.diagnostics.converged =
        satisfied(nu, state) &&
        solution.diagnostics.stationarity_residual <= options.stationarity_tol;
    if (shift > 0.0)
        solution.diagnostics.note =
            "diagonal-shift regularized solve at rho = 1 (minimum-norm least squares)";
    else if (state.used_fallback)
        solution.diagnostics.note = "pseudo-inverse stationarity solve (minimum-norm fallback)";

    if (!solution.diagnostics.converged) {
        char msg[256];
        std::snprintf(msg, sizeof(msg),
                      "dual ascent did not converge: violation=%.3e slack=%.3e "
                      "stationarity=%.3e after %d iterations",
                      solution.diagnostics.max_primal_violation,
                      solution.diagnostics.max_slack_product,
                      solution.diagnostics.stationarity_residual,
                      solution.diagnostics.dual_iterations);
        throw SolverError(msg, solution);
    }
    return solution;
}

KktCertificate kkt_certificate(const KktSolution& solution, const QuadraticTerms& terms,
                               const TradeoffParams& params, const SolverOptions& tolerances) {
    const std::size_t num_users = terms.user_directions.size();
    const std::size_t num_sectors = terms.sector_directions.size();
    params.validate(num_users, num_sectors);

    // Rebuild the stationarity operator from the reported multipliers.
    arma::cx_mat k = terms.quadratic;
    k.diag() += std::complex<double>(solution.alpha, 0.0);
    for (std::size_t u = 0; u < num_users; ++u) {
        const auto& v = terms.user_directions[u];
        if (solution.gamma[u] != 0.0) k += solution.gamma[u] * (v * v.t());
    }
    for (std::size_t a = 0; a < num_sectors; ++a) {
        const auto& w = terms.sector_directions[a];
        if (solution.beta[a] != 0.0) k += solution.beta[a] * (w * w.t());
    }

    KktCertificate cert;
    const double b_norm = arma::norm(terms.forcing, "fro");
    cert.stationarity_residual =
        b_norm > 0.0
            ? arma::norm(k * solution.waveform - terms.forcing, "fro") / b_norm
            : arma::norm(k * solution.waveform, "fro");

    // Constraint values recomputed from the waveform alone.
    const arma::uword m = 1 + num_users + num_sectors;
    arma::vec values(m), thresholds(m), multipliers(m);
    const double fx = arma::norm(solution.waveform, "fro");
    values[0] = fx * fx;
    thresholds[0] = params.max_power;
    multipliers[0] = solution.alpha;
    for (std::size_t u = 0; u < num_users; ++u) {
        const double r = arma::norm(terms.user_directions[u].t() * solution.waveform, "fro");
        values[1 + u] = r * r;
        thresholds[1 + u] = params.gamma_user[u];
        multipliers[1 + u] = solution.gamma[u];
    }
    for (std::size_t a = 0; a < num_sectors; ++a) {
        const double r = arma::norm(terms.sector_directions[a].t() * solution.waveform, "fro");
        values[1 + num_users + a] = r * r;
        thresholds[1 + num_users + a] = params.gamma_sector[a];
        multipliers[1 + num_users + a] = solution.beta[a];
    }

    cert.max_primal_violation = 0.0;
    cert.max_slack_product = 0.0;
    for (arma::uword i = 0; i < m; ++i) {
        if (std::isfinite(thresholds[i])) {
            cert.max_primal_violation =
                std::max(cert.max_primal_violation, values[i] / thresholds[i] - 1.0);
            // mu_i t_i |c_i/t_i - 1| = mu_i |c_i - t_i|
            cert.max_slack_product =
                std::max(cert.max_slack_product, multipliers[i] * std::abs(values[i] - thresholds[i]));
        } else {
            cert.max_slack_product = std::max(cert.max_slack_product,
                                              multipliers[i] * values[i]);
        }
    }
    cert.min_multiplier = multipliers.min();

    cert.stationarity_ok = cert.stationarity_residual <= tolerances.stationarity_tol;
    cert.feasibility_ok = cert.max_primal_violation <= tolerances.feasibility_tol;
    cert.slackness_ok = cert.max_slack_product <= tolerances.slackness_tol;
    cert.multipliers_ok = cert.min_multiplier >= -1e-12;
    return cert;
}

std::string KktSolution::report_text(const TradeoffParams& params) const {
    std::string out;
    char line[256];
    auto append = [&](const char* fmt, auto... args) {
        std::snprintf(line, sizeof(line), fmt, args...);
        out += line;
    };
    out += "solver_report\n";
    append("objective = %.12g\n", objective);
    append("mui_energy = %.12g\n", mui);
    append("radar_mismatch = %.12g\n", radar_mismatch);
    append("stationarity_residual = %.3e\n", diagnostics.stationarity_residual);
    append("max_primal_violation = %.3e\n", diagnostics.max_primal_violation);
    append("max_slack_product = %.3e\n", diagnostics.max_slack_product);
    append("dual_iterations = %d\n", diagnostics.dual_iterations);
    out += diagnostics.used_fallback ? "used_fallback = true\n" : "used_fallback = false\n";
    if (!diagnostics.note.empty()) out += "note = " + diagnostics.note + "\n";
    append("constraint power: value=%.12g threshold=%.12g multiplier=%.12g slack=%.3e\n",
           constraint_values[0], params.max_power, alpha,
           params.max_power - constraint_values[0]);
    for (arma::uword u = 0; u < gamma.n_elem; ++u)
        append("constraint user%llu: value=%.12g threshold=%.12g multiplier=%.12g slack=%.3e\n",
               static_cast<unsigned long long>(u + 1), constraint_values[1 + u],
               params.gamma_user[u], gamma[u], params.gamma_user[u] - constraint_values[1 + u]);
    for (arma::uword a = 0; a < beta.n_elem; ++a)
        append("constraint sector%llu: value=%.12g threshold=%.12g multiplier=%.12g slack=%.3e\n",
               static_cast<unsigned long long>(a + 1),
               constraint_values[1 + gamma.n_elem + a], params.gamma_sector[a], beta[a],
               params.gamma_sector[a] - constraint_values[1 + gamma.n_elem + a]);
    return out;
}

}  // namespace radcom
