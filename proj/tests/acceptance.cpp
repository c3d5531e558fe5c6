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
// End-to-end verification suite. Each numbered check prints a single
// PASS/FAIL line; the process exit code is the number of failures.
// Usage: radcom_acceptance [scenario_dir]

#include <omp.h>

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include "radcom/config_file.hpp"
#include "radcom/exposure.hpp"
#include "radcom/montecarlo.hpp"
#include "test_support.hpp"

using namespace radcom;
using namespace radcom::testing;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s criterion %d: %s — %s\n", pass ? "PASS" : "FAIL", id, name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof(buf), f, args);
    va_end(args);
    return buf;
}

// ---------------------------------------------------------------------------

void criterion_1_kkt_certificates(const Scenario& reference) {
    bool pass = true;
    std::string detail;

    // Reference scenario: full-size solve with timing.
    DesignContext context = prepare_design(reference);
    const SweepVariant constrained{"emf", true, std::numeric_limits<double>::quiet_NaN()};
    RngStream symbol_rng(reference.config.rng_seed, stream::symbols, 0);
    const Constellation qpsk = Constellation::from_name(reference.constellation);
    const arma::cx_mat symbols = modulate(reference.config.num_users,
                                          reference.config.frame_length, qpsk, symbol_rng);
    const arma::cx_mat x0 =
        procrustes_waveform(context.channel, symbols, context.radar_fit.covariance);
    TradeoffParams params;
    params.rho = reference.config.tradeoff_rho;
    params.max_power = reference.config.frame_power();
    params.gamma_user.set_size(reference.config.num_users);
    params.gamma_user.fill(reference.gamma_user);
    params.gamma_sector.set_size(reference.sectors.size());
    for (std::size_t a = 0; a < reference.sectors.size(); ++a)
        params.gamma_sector[a] = reference.sectors[a].gamma_w_m2;
    const QuadraticTerms terms = build_quadratic_terms(
        context.channel, symbols, x0, params.rho, context.placement, reference.sectors,
        reference.config.wavenumber());

    const double t0 = omp_get_wtime();
    const KktSolution reference_solution = solve_emf_constrained(terms, params);
    const double solve_seconds = omp_get_wtime() - t0;
    KktCertificate cert = kkt_certificate(reference_solution, terms, params);
    if (!cert.valid() || solve_seconds >= 1.0) pass = false;
    detail += fmt("reference solve %.3f s, stationarity %.1e, violation %.1e, slack %.1e; ",
                  solve_seconds, cert.stationarity_residual, cert.max_primal_violation,
                  cert.max_slack_product);

    // 50 random small scenarios.
    double worst_stationarity = 0.0, worst_violation = 0.0, worst_slack = 0.0;
    int solved = 0;
    const int n_choices[] = {4, 8};
    const int u_choices[] = {1, 2, 3};
    const int l_choices[] = {8, 16};
    for (int i = 0; i < 50; ++i) {
        RngStream pick(9000 + i, stream::instance);
        const int n = n_choices[pick.uniform_int(2)];
        const int u = u_choices[pick.uniform_int(3)];
        const int l = l_choices[pick.uniform_int(2)];
        const int sectors = static_cast<int>(pick.uniform_int(3));
        const SmallInstance inst = random_instance(9000 + i, n, u, l, sectors);
        try {
            const KktSolution sol = solve_emf_constrained(inst.terms, inst.params);
            const KktCertificate c = kkt_certificate(sol, inst.terms, inst.params);
            worst_stationarity = std::max(worst_stationarity, c.stationarity_residual);
            worst_violation = std::max(worst_violation, c.max_primal_violation);
            worst_slack = std::max(worst_slack, c.max_slack_product);
            if (!c.valid()) pass = false;
            ++solved;
        } catch (const std::exception& e) {
            pass = false;
            detail += fmt("instance %d failed: %s; ", i, e.what());
        }
    }
    detail += fmt("%d/50 random instances, worst stationarity %.1e, violation %.1e, "
                  "slack %.1e",
                  solved, worst_stationarity, worst_violation, worst_slack);
    report(1, "KKT certificate (reference + 50 random scenarios)", pass, detail);
}

void criterion_2_oracle_equivalence() {
    bool pass = true;
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const SmallInstance inst = random_instance(7000 + i, 4, 2, 8, 1);
        const KktSolution sol = solve_emf_constrained(inst.terms, inst.params);
        const PrimalOracleProblem oracle = to_oracle_problem(inst);
        const arma::cx_mat x_oracle = primal_pg_solve(oracle);
        const double f_dual = primal_objective(oracle, sol.waveform);
        const double f_pg = primal_objective(oracle, x_oracle);
        const double rel = std::abs(f_dual - f_pg) / std::max(1.0, std::abs(f_pg));
        worst = std::max(worst, rel);
        if (rel > 1e-5) pass = false;
    }
    report(2, "dual solver matches primal projected-gradient oracle", pass,
           fmt("20 instances, worst relative objective gap %.2e (tolerance 1e-5)", worst));
}

void criterion_3_degenerate_closed_forms() {
    bool pass = true;
    std::string detail;

    {
        const SmallInstance inst = random_instance(501, 6, 2, 12, 1);
        const QuadraticTerms terms = build_quadratic_terms(
            inst.channel, inst.symbols, inst.radar_waveform, 0.0, inst.placement,
            inst.sectors, inst.wavenumber);
        TradeoffParams params;
        params.rho = 0.0;
        params.max_power = std::pow(arma::norm(inst.radar_waveform, "fro"), 2) * 1.001;
        params.gamma_user.set_size(2);
        params.gamma_user.fill(std::numeric_limits<double>::infinity());
        params.gamma_sector.set_size(1);
        params.gamma_sector.fill(std::numeric_limits<double>::infinity());
        const KktSolution sol = solve_emf_constrained(terms, params);
        const double rel = arma::norm(sol.waveform - inst.radar_waveform, "fro") /
                           arma::norm(inst.radar_waveform, "fro");
        if (rel > 1e-8) pass = false;
        detail += fmt("rho=0: ||X*-X0||/||X0|| = %.2e; ", rel);
    }
    {
        const SmallInstance inst = random_instance(502, 6, 3, 12, 0);
        const QuadraticTerms terms = build_quadratic_terms(
            inst.channel, inst.symbols, inst.radar_waveform, 1.0, inst.placement,
            inst.sectors, inst.wavenumber);
        TradeoffParams params;
        params.rho = 1.0;
        params.max_power = 1e15;
        params.gamma_user.set_size(3);
        params.gamma_user.fill(std::numeric_limits<double>::infinity());
        params.gamma_sector.set_size(0);
        const KktSolution sol = solve_emf_constrained(terms, params);
        const double rel = arma::norm(inst.channel * sol.waveform - inst.symbols, "fro") /
                           arma::norm(inst.symbols, "fro");
        if (rel > 1e-8) pass = false;
        detail += fmt("rho=1: ||HX*-S||/||S|| = %.2e", rel);
    }
    report(3, "degenerate closed forms (rho = 0 and rho = 1)", pass, detail);
}

void criterion_4_procrustes() {
    bool pass = true;
    double worst_gram = 0.0;
    int optimality_violations = 0;
    for (int i = 0; i < 10; ++i) {
        RngStream rng(600 + i, stream::instance);
        const int n = 3 + static_cast<int>(rng.uniform_int(4));
        const int u = 1 + static_cast<int>(rng.uniform_int(3));
        const int l = n + 2 + static_cast<int>(rng.uniform_int(8));
        const arma::cx_mat h = random_complex(u, n, rng);
        const arma::cx_mat s = random_complex(u, l, rng);
        const arma::cx_mat r0 = random_psd(n, rng);
        const arma::cx_mat x0 = procrustes_waveform(h, s, r0);
        const double gram =
            arma::norm(x0 * x0.t() - r0, "fro") / arma::norm(r0, "fro");
        worst_gram = std::max(worst_gram, gram);
        if (gram > 1e-8) pass = false;

        arma::vec eig;
        arma::cx_mat v;
        arma::eig_sym(eig, v, r0);
        const arma::cx_mat root =
            v * arma::diagmat(arma::conv_to<arma::cx_vec>::from(arma::sqrt(eig))) * v.t();
        const double designed = arma::norm(h * x0 - s, "fro");
        for (int c = 0; c < 1000; ++c) {
            const arma::cx_mat q = random_partial_isometry(n, l, rng);
            const double competitor = arma::norm(h * (root * q) - s, "fro");
            if (designed > competitor + 1e-9 * (1.0 + competitor)) {
                ++optimality_violations;
                pass = false;
            }
        }
    }
    report(4, "Gram-constrained interference minimizer", pass,
           fmt("10 instances x 1000 competitors, worst Gram residual %.2e, "
               "%d optimality violations",
               worst_gram, optimality_violations));
}

void criterion_5_sector_integral() {
    bool pass = true;
    double worst = 0.0;
    RngStream rng(800, stream::instance);
    for (int i = 0; i < 100; ++i) {
        SectorSpec sector;
        const double start = rng.uniform(0.08 * kPi, 0.75 * kPi);
        sector.theta_i = start;
        sector.theta_f = start + rng.uniform(0.02 * kPi, 0.22 * kPi);
        sector.distance_m = rng.uniform(0.5, 500.0);
        sector.gamma_w_m2 = 1.0;
        const int n = 2 + static_cast<int>(rng.uniform_int(15));
        const int l = 2 + static_cast<int>(rng.uniform_int(12));
        const arma::cx_mat x = random_complex(n, l, rng);
        const double closed = sector_exact_density(x, sector, kPi);
        const double quadrature = sector_density_quadrature(x, sector, kPi);
        const double rel = std::abs(closed - quadrature) / std::max(std::abs(closed), 1e-30);
        worst = std::max(worst, rel);
        if (rel > 1e-8) pass = false;
    }
    report(5, "closed-form sector integral vs adaptive quadrature", pass,
           fmt("100 random (sector, X) pairs, worst relative gap %.2e", worst));
}

void criterion_6_exposure_numbers(const Scenario& reference) {
    bool pass = true;
    std::string detail;
    DesignContext context = prepare_design(reference);
    const double k = reference.config.wavenumber();
    const double gamma = reference.gamma_user;

    const SweepVariant unconstrained{"non_emf", false, 0.0};
    const SweepVariant constrained{"emf", true, std::numeric_limits<double>::quiet_NaN()};
    const FrameDesign u_design =
        design_frame(context, reference, unconstrained, reference.config.tradeoff_rho, 0);
    const FrameDesign c_design =
        design_frame(context, reference, constrained, reference.config.tradeoff_rho, 0);

    double unconstrained_total = 0.0;
    bool all_exceed = true;
    for (arma::uword u = 0; u < context.placement.size(); ++u) {
        const double d = user_power_density(u_design.solution.waveform,
                                            context.placement.angles[u],
                                            context.placement.distances_m[u], k);
        unconstrained_total += d;
        if (d <= gamma) all_exceed = false;
    }
    if (!all_exceed) {
        pass = false;
        detail += "unconstrained design does not exceed the threshold for every user; ";
    }

    double constrained_total = 0.0;
    double worst_gap = 0.0;
    for (arma::uword u = 0; u < context.placement.size(); ++u) {
        const double d = user_power_density(c_design.solution.waveform,
                                            context.placement.angles[u],
                                            context.placement.distances_m[u], k);
        constrained_total += d;
        worst_gap = std::max(worst_gap, std::abs(d - gamma));
    }
    if (worst_gap > 1e-5) pass = false;
    const double expected_total = gamma * static_cast<double>(context.placement.size());
    if (std::abs(constrained_total - expected_total) > 1e-4) pass = false;

    const double reduction = 1.0 - constrained_total / unconstrained_total;
    if (reduction < 0.30) pass = false;
    detail += fmt("unconstrained total %.4f W/m^2, constrained total %.6f (target %.0f), "
                  "worst per-user gap %.2e, reduction %.1f%%",
                  unconstrained_total, constrained_total, expected_total, worst_gap,
                  100.0 * reduction);
    report(6, "exposure reduction on the shipped scenario seed", pass, detail);
}

bool bands_overlap(const SerEstimate& a, const SerEstimate& b) {
    return std::abs(a.ser - b.ser) <= a.halfwidth + b.halfwidth;
}

void criterion_7_figure_shapes(const Scenario& sweeps) {
    bool pass = true;
    std::string detail;

    double t0 = omp_get_wtime();
    const SweepResult snr =
        run_snr_sweep(sweeps, default_variants(), sweeps.sweep.snr_grid_db);
    const double snr_seconds = omp_get_wtime() - t0;

    t0 = omp_get_wtime();
    const SweepResult rho = run_rho_sweep(sweeps, default_variants(), sweeps.sweep.rho_grid,
                                          sweeps.sweep.snr_fixed_db);
    const double rho_seconds = omp_get_wtime() - t0;

    // SER vs SNR: monotone non-increasing within confidence bands, per variant.
    int monotonicity_violations = 0;
    for (const auto& curve : snr.curves)
        for (std::size_t p = 1; p < curve.points.size(); ++p) {
            const auto& prev = curve.points[p - 1].ser;
            const auto& cur = curve.points[p].ser;
            if (cur.ser > prev.ser + prev.halfwidth + cur.halfwidth)
                ++monotonicity_violations;
        }
    // Variant ordering wherever the confidence bands separate.
    int ordering_violations = 0;
    for (std::size_t p = 0; p < snr.curves.front().points.size(); ++p) {
        const auto& non_emf = snr.curves[0].points[p].ser;
        const auto& g10 = snr.curves[1].points[p].ser;
        const auto& g01 = snr.curves[2].points[p].ser;
        if (!bands_overlap(non_emf, g10) && non_emf.ser > g10.ser) ++ordering_violations;
        if (!bands_overlap(g10, g01) && g10.ser > g01.ser) ++ordering_violations;
        if (!bands_overlap(non_emf, g01) && non_emf.ser > g01.ser) ++ordering_violations;
    }

    // SER vs rho: non-increasing within confidence bands.
    int rho_violations = 0;
    for (const auto& curve : rho.curves)
        for (std::size_t p = 1; p < curve.points.size(); ++p) {
            const auto& prev = curve.points[p - 1].ser;
            const auto& cur = curve.points[p].ser;
            if (cur.ser > prev.ser + prev.halfwidth + cur.halfwidth) ++rho_violations;
        }

    // Beampattern MSE ordering at every rho (deterministic quantities).
    int mse_violations = 0;
    for (std::size_t p = 0; p < rho.curves.front().points.size(); ++p) {
        const double non_emf = rho.curves[0].points[p].mse_linear;
        const double g10 = rho.curves[1].points[p].mse_linear;
        const double g01 = rho.curves[2].points[p].mse_linear;
        if (non_emf > g10 * (1.0 + 1e-9)) ++mse_violations;
        if (g10 > g01 * (1.0 + 1e-9)) ++mse_violations;
    }

    if (monotonicity_violations || ordering_violations || rho_violations || mse_violations)
        pass = false;
    if (snr_seconds >= 300.0 || rho_seconds >= 300.0) pass = false;
    detail = fmt("snr sweep %.1f s, rho sweep %.1f s; violations: snr-monotone %d, "
                 "snr-order %d, rho-monotone %d, mse-order %d",
                 snr_seconds, rho_seconds, monotonicity_violations, ordering_violations,
                 rho_violations, mse_violations);
    report(7, "figure-shape reproduction (orderings and monotonicity)", pass, detail);
}

void criterion_8_beampattern_sanity(const Scenario& reference) {
    bool pass = true;
    std::string detail;
    DesignContext context = prepare_design(reference);
    const double k = reference.config.wavenumber();

    const SweepVariant constrained{"emf", true, std::numeric_limits<double>::quiet_NaN()};
    const SweepVariant unconstrained{"non_emf", false, 0.0};
    const FrameDesign c_design =
        design_frame(context, reference, constrained, reference.config.tradeoff_rho, 0);
    const FrameDesign u_design =
        design_frame(context, reference, unconstrained, reference.config.tradeoff_rho, 0);

    auto has_peak_near = [&](const arma::vec& pattern, double target) {
        // A local maximum of the grid curve within 3 degrees of the target.
        for (arma::uword i = 1; i + 1 < context.grid.thetas.n_elem; ++i) {
            if (std::abs(context.grid.thetas[i] - target) > deg_to_rad(3.0)) continue;
            if (pattern[i] >= pattern[i - 1] && pattern[i] >= pattern[i + 1]) return true;
        }
        return false;
    };

    for (const auto* design : {&c_design, &u_design}) {
        const arma::cx_mat r =
            design->solution.waveform * design->solution.waveform.t();
        const arma::vec pattern = beampattern_grid(r, context.grid, k);
        for (double target : reference.targets.angles)
            if (!has_peak_near(pattern, target)) {
                pass = false;
                detail += fmt("missing lobe near %.0f deg (%s); ",
                              internal_rad_to_plot_deg(target),
                              design == &c_design ? "emf" : "non-emf");
            }
    }

    int exceeding_users = 0;
    bool emf_compliant = true;
    for (arma::uword u = 0; u < context.placement.size(); ++u) {
        const double non_emf_density = user_power_density(
            u_design.solution.waveform, context.placement.angles[u],
            context.placement.distances_m[u], k);
        const double emf_density = user_power_density(
            c_design.solution.waveform, context.placement.angles[u],
            context.placement.distances_m[u], k);
        if (non_emf_density > reference.gamma_user) ++exceeding_users;
        if (emf_density > reference.gamma_user * (1.0 + 1e-6)) emf_compliant = false;
    }
    if (exceeding_users == 0) pass = false;
    if (!emf_compliant) pass = false;
    detail += fmt("lobes at all targets; %d/%llu users exceed the threshold without "
                  "constraints; constrained design compliant: %s",
                  exceeding_users,
                  static_cast<unsigned long long>(context.placement.size()),
                  emf_compliant ? "yes" : "no");
    report(8, "beampattern lobes and per-user density bounds", pass, detail);
}

}  // namespace

int main(int argc, char** argv) {
    const std::string dir = argc > 1 ? argv[1] : "scenarios";
    Scenario reference, sweeps;
    try {
        reference = load_scenario(dir + "/paper_sec4.cfg");
        sweeps = load_scenario(dir + "/paper_sec4_sweeps.cfg");
    } catch (const std::exception& e) {
        std::fprintf(stderr, "cannot load scenarios from '%s': %s\n", dir.c_str(), e.what());
        return 99;
    }

    criterion_1_kkt_certificates(reference);
    criterion_2_oracle_equivalence();
    criterion_3_degenerate_closed_forms();
    criterion_4_procrustes();
    criterion_5_sector_integral();
    criterion_6_exposure_numbers(reference);
    criterion_7_figure_shapes(sweeps);
    criterion_8_beampattern_sanity(reference);

    std::printf("%s: %d of 8 criteria failed\n", failures == 0 ? "OK" : "FAILED", failures);
    return failures;
}
