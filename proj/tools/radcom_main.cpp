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
// Command-line front end: scenario ingestion, experiment orchestration and
// CSV emission. Exit codes: 0 success, 2 configuration error, 3 solver
// failure, 4 I/O error.

#include <omp.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "radcom/config_file.hpp"
#include "radcom/csv.hpp"
#include "radcom/montecarlo.hpp"

namespace {

using namespace radcom;

constexpr const char* kToolVersion = "radcom 0.1.0";

struct CommonArgs {
    std::string scenario_path;
    std::string out_dir = "out";
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::optional<double> rho;
    std::optional<double> snr_db;
    std::optional<double> gamma_user;
    std::optional<double> gamma_sector;
    bool no_emf = false;
};

void add_common_options(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--scenario", args.scenario_path, "scenario file")->required();
    cmd->add_option("--out", args.out_dir, "output directory");
    cmd->add_option("--seed", [&args](const CLI::results_t& r) {
        args.seed = std::stoull(r[0]);
        return true;
    }, "override the scenario rng seed");
    cmd->add_option("--trials", [&args](const CLI::results_t& r) {
        args.trials = std::stoull(r[0]);
        return true;
    }, "override the noise-trial budget per sweep point");
    cmd->add_option("--rho", [&args](const CLI::results_t& r) {
        args.rho = std::stod(r[0]);
        return true;
    }, "override the trade-off factor");
    cmd->add_option("--snr-db", [&args](const CLI::results_t& r) {
        args.snr_db = std::stod(r[0]);
        return true;
    }, "override the fixed SNR of the rho sweep");
    cmd->add_option("--gamma-user", [&args](const CLI::results_t& r) {
        args.gamma_user = std::stod(r[0]);
        return true;
    }, "override the per-user density threshold (W/m^2)");
    cmd->add_option("--gamma-sector", [&args](const CLI::results_t& r) {
        args.gamma_sector = std::stod(r[0]);
        return true;
    }, "override every sector density threshold (W/m^2)");
    cmd->add_flag("--no-emf", args.no_emf, "disable the exposure constraints");
}

Scenario load_with_overrides(const CommonArgs& args) {
    Scenario scenario = load_scenario(args.scenario_path);
    if (args.seed) scenario.config.rng_seed = *args.seed;
    if (args.trials) scenario.sweep.trials = *args.trials;
    if (args.rho) scenario.config.tradeoff_rho = *args.rho;
    if (args.snr_db) scenario.sweep.snr_fixed_db = *args.snr_db;
    if (args.gamma_user) scenario.gamma_user = *args.gamma_user;
    if (args.gamma_sector)
        for (auto& sector : scenario.sectors) sector.gamma_w_m2 = *args.gamma_sector;
    if (args.no_emf) {
        scenario.gamma_user = std::numeric_limits<double>::infinity();
        for (auto& sector : scenario.sectors)
            sector.gamma_w_m2 = std::numeric_limits<double>::infinity();
    }
    scenario.validate();
    return scenario;
}

void write_manifest(const std::string& out_dir, const std::string& subcommand,
                    const Scenario& scenario) {
    std::ofstream out(out_dir + "/manifest.txt");
    if (!out) throw IoError("cannot write manifest in '" + out_dir + "'");
    out << "# run manifest: re-running `radcom " << subcommand
        << " --scenario <this file> --out <dir>` reproduces the outputs\n";
    out << "# tool_version = " << kToolVersion << "\n";
    out << "# subcommand = " << subcommand << "\n";
    out << serialize_scenario(scenario);
    if (!out) throw IoError("error while writing the manifest");
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << content;
    if (!out) throw IoError("error while writing '" + path + "'");
}

std::string out_path(const std::string& dir, const std::string& name) {
    return dir + "/" + name;
}

void prepare_out_dir(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory '" + dir + "'");
}

struct PlotScript {
    std::string name;
    std::string content;
};

void emit_gnuplot(const std::string& dir, const PlotScript& script) {
    write_text_file(out_path(dir, script.name), script.content);
}

// ---------------------------------------------------------------------------

int cmd_beampattern(const CommonArgs& args) {
    Scenario scenario = load_with_overrides(args);
    prepare_out_dir(args.out_dir);

    DesignContext context = prepare_design(scenario);
    const double k = scenario.config.wavenumber();
    const double power = scenario.config.frame_power();

    const SweepVariant emf{"emf_aware", !args.no_emf, scenario.gamma_user};
    const SweepVariant non_emf{"non_emf", false, 0.0};
    const FrameDesign emf_design =
        design_frame(context, scenario, emf, scenario.config.tradeoff_rho, 0);
    const FrameDesign non_design =
        design_frame(context, scenario, non_emf, scenario.config.tradeoff_rho, 0);

    const arma::cx_mat r_emf = emf_design.solution.waveform * emf_design.solution.waveform.t();
    const arma::cx_mat r_non = non_design.solution.waveform * non_design.solution.waveform.t();
    const arma::vec p_emf = 4.0 * kPi * beampattern_grid(r_emf, context.grid, k);
    const arma::vec p_non = 4.0 * kPi * beampattern_grid(r_non, context.grid, k);

    const double alpha = context.radar_fit.template_scale;

    CsvWriter csv(out_path(args.out_dir, "fig2_beampattern.csv"));
    csv.comment("beampattern comparison; columns in dBi relative to an isotropic");
    csv.comment("radiator with the same total transmit power (floor -120 dBi)");
    for (arma::uword u = 0; u < context.placement.size(); ++u) {
        char note[128];
        std::snprintf(note, sizeof(note), "user%llu angle_deg=%.4f distance_m=%.3f",
                      static_cast<unsigned long long>(u + 1),
                      internal_rad_to_plot_deg(context.placement.angles[u]),
                      context.placement.distances_m[u]);
        csv.comment(note);
    }
    for (const auto& sector : scenario.sectors) {
        char note[128];
        std::snprintf(note, sizeof(note), "sector theta_deg=[%.3f, %.3f] distance_m=%.3f",
                      internal_rad_to_plot_deg(sector.theta_f),
                      internal_rad_to_plot_deg(sector.theta_i), sector.distance_m);
        csv.comment(note);
    }
    csv.raw_line("theta_deg,desired,emf_aware_dBi,non_emf_dBi");
    const int n = scenario.config.num_antennas;
    // Internal angles descend in plot degrees; emit ascending plot angles.
    for (arma::uword i = context.grid.thetas.n_elem; i-- > 0;) {
        const double deg = internal_rad_to_plot_deg(context.grid.thetas[i]);
        csv.row({deg, beampattern_dbi(alpha * context.desired.values[i], power, n),
                 beampattern_dbi(p_emf[i], power, n), beampattern_dbi(p_non[i], power, n)});
    }
    csv.close();

    write_text_file(out_path(args.out_dir, "solver_report.txt"),
                    emf_design.solution.report_text(emf_design.params));
    emit_gnuplot(args.out_dir,
                 {"fig2_beampattern.gp",
                  "set datafile separator ','\n"
                  "set xlabel 'theta (deg)'\nset ylabel 'beampattern (dBi)'\n"
                  "plot 'fig2_beampattern.csv' using 1:2 with lines title 'desired', \\\n"
                  "     '' using 1:3 with lines title 'EMF-aware', \\\n"
                  "     '' using 1:4 with lines title 'non EMF-aware'\n"
                  "pause -1\n"});
    write_manifest(args.out_dir, "beampattern", scenario);
    std::cout << "beampattern results written to " << args.out_dir << "\n";
    return 0;
}

void write_ser_csv(const std::string& path, const char* xname, const SweepResult& result) {
    CsvWriter csv(path);
    csv.comment("symbol error rate per design variant; *_hw columns are 95%");
    csv.comment("binomial confidence half-widths");
    std::string header = xname;
    for (const auto& curve : result.curves)
        header += ",ser_" + curve.variant.name + ",ser_" + curve.variant.name + "_hw";
    csv.raw_line(header);
    const std::size_t points = result.curves.front().points.size();
    for (std::size_t p = 0; p < points; ++p) {
        std::vector<double> row;
        row.push_back(result.curves.front().points[p].x);
        for (const auto& curve : result.curves) {
            row.push_back(curve.points[p].ser.ser);
            row.push_back(curve.points[p].ser.halfwidth);
        }
        std::string line;
        char buf[48];
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::snprintf(buf, sizeof(buf), "%.12g", row[i]);
            if (i) line += ",";
            line += buf;
        }
        csv.raw_line(line);
    }
    csv.close();
}

void write_mse_csv(const std::string& path, const SweepResult& result) {
    CsvWriter csv(path);
    csv.comment("beampattern mean squared error vs the desired template, in dB");
    csv.comment("relative to the mean squared fitted template");
    std::string header = "rho";
    for (const auto& curve : result.curves) header += ",mse_db_" + curve.variant.name;
    csv.raw_line(header);
    const std::size_t points = result.curves.front().points.size();
    for (std::size_t p = 0; p < points; ++p) {
        std::string line;
        char buf[48];
        std::snprintf(buf, sizeof(buf), "%.12g", result.curves.front().points[p].x);
        line += buf;
        for (const auto& curve : result.curves) {
            std::snprintf(buf, sizeof(buf), ",%.12g", curve.points[p].mse_db);
            line += buf;
        }
        csv.raw_line(line);
    }
    csv.close();
}

int cmd_ser_sweep(const CommonArgs& args) {
    Scenario scenario = load_with_overrides(args);
    prepare_out_dir(args.out_dir);
    std::vector<SweepVariant> variants = default_variants();
    if (args.no_emf) variants = {SweepVariant{"non_emf", false, 0.0}};
    SweepOptions options;
    if (args.trials) options.trials = *args.trials;
    const SweepResult result =
        run_snr_sweep(scenario, variants, scenario.sweep.snr_grid_db, options);
    write_ser_csv(out_path(args.out_dir, "fig3_ser_vs_snr.csv"), "snr_db", result);
    emit_gnuplot(args.out_dir,
                 {"fig3_ser_vs_snr.gp",
                  "set datafile separator ','\nset logscale y\n"
                  "set xlabel 'SNR (dB)'\nset ylabel 'SER'\n"
                  "plot 'fig3_ser_vs_snr.csv' using 1:2 with linespoints title 'non EMF-aware', \\\n"
                  "     '' using 1:4 with linespoints title 'Gamma=10', \\\n"
                  "     '' using 1:6 with linespoints title 'Gamma=0.1'\n"
                  "pause -1\n"});
    write_manifest(args.out_dir, "ser-sweep", scenario);
    std::cout << "ser sweep written to " << args.out_dir << "\n";
    return 0;
}

int cmd_rho_sweep(const CommonArgs& args) {
    Scenario scenario = load_with_overrides(args);
    prepare_out_dir(args.out_dir);
    std::vector<SweepVariant> variants = default_variants();
    if (args.no_emf) variants = {SweepVariant{"non_emf", false, 0.0}};
    SweepOptions options;
    if (args.trials) options.trials = *args.trials;
    const SweepResult result = run_rho_sweep(scenario, variants, scenario.sweep.rho_grid,
                                             scenario.sweep.snr_fixed_db, options);
    write_ser_csv(out_path(args.out_dir, "fig4_ser_vs_rho.csv"), "rho", result);
    write_mse_csv(out_path(args.out_dir, "fig5_mse_vs_rho.csv"), result);
    emit_gnuplot(args.out_dir,
                 {"fig4_ser_vs_rho.gp",
                  "set datafile separator ','\nset logscale y\n"
                  "set xlabel 'rho'\nset ylabel 'SER'\n"
                  "plot 'fig4_ser_vs_rho.csv' using 1:2 with linespoints title 'non EMF-aware', \\\n"
                  "     '' using 1:4 with linespoints title 'Gamma=10', \\\n"
                  "     '' using 1:6 with linespoints title 'Gamma=0.1'\n"
                  "pause -1\n"});
    emit_gnuplot(args.out_dir,
                 {"fig5_mse_vs_rho.gp",
                  "set datafile separator ','\n"
                  "set xlabel 'rho'\nset ylabel 'beampattern MSE (dB)'\n"
                  "plot 'fig5_mse_vs_rho.csv' using 1:2 with linespoints title 'non EMF-aware', \\\n"
                  "     '' using 1:3 with linespoints title 'Gamma=10', \\\n"
                  "     '' using 1:4 with linespoints title 'Gamma=0.1'\n"
                  "pause -1\n"});
    write_manifest(args.out_dir, "rho-sweep", scenario);
    std::cout << "rho sweep written to " << args.out_dir << "\n";
    return 0;
}

int cmd_exposure(const CommonArgs& args) {
    Scenario scenario = load_with_overrides(args);
    prepare_out_dir(args.out_dir);
    DesignContext context = prepare_design(scenario);
    const double k = scenario.config.wavenumber();

    const SweepVariant constrained{"constrained", true, scenario.gamma_user};
    const SweepVariant unconstrained{"unconstrained", false, 0.0};
    const FrameDesign c_design =
        design_frame(context, scenario, constrained, scenario.config.tradeoff_rho, 0);
    const FrameDesign u_design =
        design_frame(context, scenario, unconstrained, scenario.config.tradeoff_rho, 0);

    const ExposureReport c_report =
        compliance_report(c_design.solution.waveform, context.placement, scenario.sectors,
                          c_design.params.gamma_user, k);
    arma::vec unconstrained_gamma(scenario.config.num_users);
    unconstrained_gamma.fill(scenario.gamma_user);
    const ExposureReport u_report =
        compliance_report(u_design.solution.waveform, context.placement, scenario.sectors,
                          unconstrained_gamma, k);

    write_text_file(out_path(args.out_dir, "exposure_constrained.csv"), c_report.to_csv());
    write_text_file(out_path(args.out_dir, "exposure_unconstrained.csv"), u_report.to_csv());
    write_text_file(out_path(args.out_dir, "solver_report.txt"),
                    c_design.solution.report_text(c_design.params));

    const double reduction =
        u_report.total_user_exposure > 0.0
            ? 1.0 - c_report.total_user_exposure / u_report.total_user_exposure
            : 0.0;
    char summary[512];
    std::snprintf(summary, sizeof(summary),
                  "total_user_exposure_unconstrained = %.10g W/m^2\n"
                  "total_user_exposure_constrained = %.10g W/m^2\n"
                  "exposure_reduction_percent = %.4f\n",
                  u_report.total_user_exposure, c_report.total_user_exposure,
                  100.0 * reduction);
    write_text_file(out_path(args.out_dir, "exposure_summary.txt"), summary);
    std::cout << summary;
    write_manifest(args.out_dir, "exposure", scenario);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* threads = std::getenv("RADCOM_EMF_THREADS")) {
        const int n = std::atoi(threads);
        if (n > 0) omp_set_num_threads(n);
    }

    CLI::App app{"exposure-aware radar-communication waveform designer"};
    app.set_version_flag("--version", kToolVersion);
    bool print_schema = false;
    app.add_flag("--print-schema", print_schema, "print the scenario file schema and exit");

    CommonArgs beam_args, ser_args, rho_args, exposure_args;
    CLI::App* beam = app.add_subcommand("beampattern",
                                        "design both variants and emit the beampattern CSV");
    add_common_options(beam, beam_args);
    CLI::App* ser = app.add_subcommand("ser-sweep", "symbol error rate vs SNR");
    add_common_options(ser, ser_args);
    CLI::App* rho = app.add_subcommand("rho-sweep",
                                       "symbol error rate and beampattern MSE vs rho");
    add_common_options(rho, rho_args);
    CLI::App* exposure = app.add_subcommand("exposure",
                                            "compliance reports and exposure reduction");
    add_common_options(exposure, exposure_args);

    app.require_subcommand(0, 1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (print_schema) {
            std::cout << radcom::scenario_schema();
            return 0;
        }
        if (beam->parsed()) return cmd_beampattern(beam_args);
        if (ser->parsed()) return cmd_ser_sweep(ser_args);
        if (rho->parsed()) return cmd_rho_sweep(rho_args);
        if (exposure->parsed()) return cmd_exposure(exposure_args);
        std::cout << app.help();
        return 0;
    } catch (const radcom::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const radcom::SolverError& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        std::cerr << "stationarity_residual = "
                  << e.last_solution.diagnostics.stationarity_residual << "\n"
                  << "max_primal_violation = "
                  << e.last_solution.diagnostics.max_primal_violation << "\n"
                  << "max_slack_product = "
                  << e.last_solution.diagnostics.max_slack_product << "\n";
        return 3;
    } catch (const radcom::CovarianceFitError& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return 3;
    } catch (const radcom::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
