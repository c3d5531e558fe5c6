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

#include "radcom/exposure.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include "radcom/waveform.hpp"

namespace radcom {

double user_power_density(const arma::cx_mat& waveform, double theta, double distance_m,
                          double wavenumber) {
    if (!(distance_m > 0.0)) throw std::invalid_argument("distance must be > 0");
    const arma::cx_vec a =
        steering_vector(theta, static_cast<int>(waveform.n_rows), wavenumber);
    const double r = arma::norm(a.t() * waveform, "fro");
    return r * r / (4.0 * kPi * distance_m * distance_m);
}

arma::cx_mat sector_overlap_matrix(const SectorSpec& sector, int num_antennas,
                                   double wavenumber) {
    sector.validate();
    const double ci = std::cos(sector.theta_i);
    const double cf = std::cos(sector.theta_f);
    arma::cx_mat overlap(num_antennas, num_antennas);
    for (int n = 0; n < num_antennas; ++n) {
        for (int m = 0; m < num_antennas; ++m) {
            const double q = wavenumber * static_cast<double>(n - m);
            std::complex<double> entry;
            if (n == m) {
                entry = std::complex<double>(ci - cf, 0.0);
            } else {
                // integral of exp(-j q cos t) sin t over the sector:
                // j (exp(-j q ci) - exp(-j q cf)) / q
                entry = std::complex<double>(0.0, 1.0 / q) *
                        (std::polar(1.0, -q * ci) - std::polar(1.0, -q * cf));
            }
            overlap(n, m) = entry / static_cast<double>(num_antennas);
        }
    }
    return 0.5 * (overlap + overlap.t());
}

double sector_exact_density(const arma::cx_mat& waveform, const SectorSpec& sector,
                            double wavenumber) {
    const arma::cx_mat overlap =
        sector_overlap_matrix(sector, static_cast<int>(waveform.n_rows), wavenumber);
    const double quad = std::real(arma::accu(arma::conj(waveform) % (overlap * waveform)));
    return quad /
           (4.0 * kPi * sector.distance_m * sector.distance_m * sector.angular_width());
}

double sector_surrogate_density(const arma::cx_mat& waveform, const SectorSpec& sector,
                                double wavenumber) {
    sector.validate();
    const int n = static_cast<int>(waveform.n_rows);
    const arma::cx_vec diff = antiderivative_vector(sector.theta_f, n, wavenumber) -
                              antiderivative_vector(sector.theta_i, n, wavenumber);
    const double r = arma::norm(diff.t() * waveform, "fro");
    return r * r / (4.0 * kPi * sector.distance_m * sector.distance_m);
}

namespace {

// 15-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr int kGlPoints = 15;
constexpr double kGlNodes[kGlPoints] = {
    -0.9879925180204854, -0.9372733924007060, -0.8482065834104272, -0.7244177313601701,
    -0.5709721726085388, -0.3941513470775634, -0.2011940939974345, 0.0,
    0.2011940939974345,  0.3941513470775634,  0.5709721726085388,  0.7244177313601701,
    0.8482065834104272,  0.9372733924007060,  0.9879925180204854};
constexpr double kGlWeights[kGlPoints] = {
    0.0307532419961173, 0.0703660474881081, 0.1071592204671719, 0.1395706779261543,
    0.1662692058169939, 0.1861610000155622, 0.1984314853271116, 0.2025782419255613,
    0.1984314853271116, 0.1861610000155622, 0.1662692058169939, 0.1395706779261543,
    0.1071592204671719, 0.0703660474881081, 0.0307532419961173};

double gl15(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < kGlPoints; ++i) sum += kGlWeights[i] * f(mid + half * kGlNodes[i]);
    return half * sum;
}

double adaptive_gl(const std::function<double(double)>& f, double a, double b, double whole,
                   double abs_tol, double rel_tol, int depth) {
    const double mid = 0.5 * (a + b);
    const double left = gl15(f, a, mid);
    const double right = gl15(f, mid, b);
    const double refined = left + right;
    const double err = std::abs(refined - whole);
    if (depth > 40 || err <= std::max(abs_tol, rel_tol * std::abs(refined))) return refined;
    return adaptive_gl(f, a, mid, left, 0.5 * abs_tol, rel_tol, depth + 1) +
           adaptive_gl(f, mid, b, right, 0.5 * abs_tol, rel_tol, depth + 1);
}

}  // namespace

double sector_density_quadrature(const arma::cx_mat& waveform, const SectorSpec& sector,
                                 double wavenumber, double abs_tol, double rel_tol) {
    sector.validate();
    const int n = static_cast<int>(waveform.n_rows);
    const arma::cx_mat covariance = waveform * waveform.t();
    auto integrand = [&](double theta) {
        const arma::cx_vec a = steering_vector(theta, n, wavenumber);
        return std::real(arma::as_scalar(a.t() * covariance * a)) * std::sin(theta);
    };
    const double whole = gl15(integrand, sector.theta_i, sector.theta_f);
    const double integral =
        adaptive_gl(integrand, sector.theta_i, sector.theta_f, whole, abs_tol, rel_tol, 0);
    return integral /
           (4.0 * kPi * sector.distance_m * sector.distance_m * sector.angular_width());
}

ExposureReport compliance_report(const arma::cx_mat& waveform, const UserPlacement& placement,
                                 const std::vector<SectorSpec>& sectors,
                                 const arma::vec& gamma_user, double wavenumber) {
    placement.validate();
    if (gamma_user.n_elem != placement.size())
        throw std::invalid_argument("gamma_user size must match the placement");

    ExposureReport report;
    for (arma::uword u = 0; u < placement.size(); ++u) {
        ExposureEntry entry;
        entry.entity = "user" + std::to_string(u + 1);
        entry.kind = "user";
        entry.value = user_power_density(waveform, placement.angles[u],
                                         placement.distances_m[u], wavenumber);
        entry.exact_value = entry.value;
        entry.threshold = gamma_user[u];
        entry.compliant = entry.value <= entry.threshold * (1.0 + 1e-6);
        report.total_user_exposure += entry.value;
        report.all_compliant = report.all_compliant && entry.compliant;
        report.entries.push_back(std::move(entry));
    }
    for (std::size_t a = 0; a < sectors.size(); ++a) {
        ExposureEntry entry;
        entry.entity = "sector" + std::to_string(a + 1);
        entry.kind = "sector";
        entry.value = sector_surrogate_density(waveform, sectors[a], wavenumber);
        entry.exact_value = sector_exact_density(waveform, sectors[a], wavenumber);
        entry.threshold = sectors[a].gamma_w_m2;
        entry.compliant = entry.value <= entry.threshold * (1.0 + 1e-6);
        report.all_compliant = report.all_compliant && entry.compliant;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

std::string ExposureReport::to_text() const {
    std::string out = "exposure_report\n";
    char line[256];
    for (const auto& e : entries) {
        std::snprintf(line, sizeof(line),
                      "%-8s %-6s value=%.10g W/m^2 threshold=%.10g compliant=%s exact=%.10g\n",
                      e.entity.c_str(), e.kind.c_str(), e.value, e.threshold,
                      e.compliant ? "yes" : "no", e.exact_value);
        out += line;
    }
    std::snprintf(line, sizeof(line), "total_user_exposure = %.10g W/m^2\n",
                  total_user_exposure);
    out += line;
    out += all_compliant ? "all_compliant = yes\n" : "all_compliant = no\n";
    return out;
}

std::string ExposureReport::to_csv() const {
    std::string out = "entity,kind,value_W_m2,threshold,compliant,exact_value_W_m2\n";
    char line[256];
    for (const auto& e : entries) {
        std::snprintf(line, sizeof(line), "%s,%s,%.12g,%.12g,%d,%.12g\n", e.entity.c_str(),
                      e.kind.c_str(), e.value, e.threshold, e.compliant ? 1 : 0,
                      e.exact_value);
        out += line;
    }
    return out;
}

}  // namespace radcom
