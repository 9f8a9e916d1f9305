// Copyright 2026 The moebius-optics Authors
// SPDX-License-Identifier: Apache-2.0

#include "moebius/refraction.hpp"

#include <cmath>
#include <stdexcept>

#include "moebius/constants.hpp"
#include "moebius/roots.hpp"

namespace moebius {

double vacuum_wavenumber(double omega) { return omega / constants::hbar_c; }

namespace {

double radians(double deg) { return deg * constants::pi / 180.0; }

void check_incidence(double omega, double theta_deg) {
    if (omega <= 0.0)
        throw std::domain_error("refraction: photon energy must be positive");
    if (theta_deg < 0.0 || theta_deg >= 90.0)
        throw std::domain_error("refraction: incidence angle must lie in [0, 90)");
}

} // namespace

IncidentWave::IncidentWave(Polarization pol, double omega_ev, double theta)
    : polarization(pol), omega(omega_ev), theta_deg(theta) {
    check_incidence(omega, theta_deg);
}

double IncidentWave::wavenumber() const { return vacuum_wavenumber(omega); }

double IncidentWave::tangential_k() const {
    return wavenumber() * std::sin(radians(theta_deg));
}

std::optional<double> transverse_wavevector(double omega, double theta_deg,
                                            const PermittivityTensor& eps,
                                            const PermeabilityTensor& mu) {
    check_incidence(omega, theta_deg);
    const double eps_y = eps.components(1, 1);
    const double eps_z = eps.components(2, 2);
    const double mu_xx = mu.components(0, 0);
    if (eps_y == 0.0)
        throw std::domain_error("transverse_wavevector: degenerate dispersion at eps_y = 0");

    const double k0 = vacuum_wavenumber(omega);
    const double k_tz = k0 * std::sin(radians(theta_deg));
    const double radicand = k0 * k0 * eps_z * mu_xx - eps_z * k_tz * k_tz / eps_y;
    if (radicand < 0.0) return std::nullopt;
    return -std::sqrt(radicand);
}

std::pair<double, double> poynting_h_polarized(double k_ty, double k_tz,
                                               const PermittivityTensor& eps, double omega) {
    const double eps_y = eps.components(1, 1);
    const double eps_z = eps.components(2, 2);
    if (eps_y == 0.0 || eps_z == 0.0)
        throw std::domain_error("poynting_h_polarized: singular medium");
    return {k_ty / (2.0 * omega * eps_z), k_tz / (2.0 * omega * eps_y)};
}

std::pair<double, double> poynting_e_polarized(double k_ty, double k_tz,
                                               const PermeabilityTensor& mu, double omega) {
    const double mu_xx = mu.components(0, 0);
    const double mu_yz = mu.components(1, 2);
    const double mu_1 = mu.eigenvalues[0];
    if (mu_1 == 0.0)
        throw std::domain_error("poynting_e_polarized: singular medium (mu_1 = 0)");
    return {(mu_yz * k_tz + mu_xx * k_ty) / (2.0 * omega * mu_1),
            (mu_xx * k_tz + mu_yz * k_ty) / (2.0 * omega * mu_1)};
}

RefractionSolution classify_refraction(const Medium& medium, const IncidentWave& wave) {
    const PermittivityTensor eps = medium.epsilon(wave.omega);
    const PermeabilityTensor mu = medium.mu(wave.omega);

    RefractionSolution out;
    out.omega = wave.omega;
    out.theta_deg = wave.theta_deg;
    out.k_tz = wave.tangential_k();

    const auto k_ty = transverse_wavevector(wave.omega, wave.theta_deg, eps, mu);
    if (!k_ty) return out; // evanescent

    out.k_ty = *k_ty;
    out.propagating = true;
    const auto s = (wave.polarization == Polarization::H)
                       ? poynting_h_polarized(out.k_ty, out.k_tz, eps, wave.omega)
                       : poynting_e_polarized(out.k_ty, out.k_tz, mu, wave.omega);
    out.s_ty = s.first;
    out.s_tz = s.second;
    out.classification = (out.s_tz < 0.0 && wave.theta_deg > 0.0) ? RefractionClass::negative
                                                                  : RefractionClass::positive;
    return out;
}

RefractionSolution classify_refraction(const Medium& medium, double omega,
                                       double theta_deg, Polarization pol) {
    return classify_refraction(medium, IncidentWave(pol, omega, theta_deg));
}

double negative_refraction_bandwidth(const Medium& medium, double theta_deg,
                                     Polarization pol, int grid_points, double edge_tol) {
    if (grid_points < 2)
        throw std::invalid_argument("negative_refraction_bandwidth: need at least 2 grid points");
    const auto window = medium.window();
    if (!window) return 0.0;

    auto is_negative = [&](double omega) {
        return classify_refraction(medium, omega, theta_deg, pol).classification ==
               RefractionClass::negative;
    };
    // Signed indicator so classification boundaries can be bisected.
    auto indicator = [&](double omega) { return is_negative(omega) ? -1.0 : 1.0; };

    const double lo = window->omega_low;
    const double hi = window->omega_high;
    const double step = (hi - lo) / (grid_points - 1);

    double measure = 0.0;
    double seg_start = lo;
    bool prev = is_negative(lo);
    for (int i = 1; i < grid_points; ++i) {
        const double omega = lo + i * step;
        const bool cur = is_negative(omega);
        if (cur == prev) continue;
        const double boundary =
            bisect_root(indicator, omega - step, omega, edge_tol).value_or(omega);
        if (prev)
            measure += boundary - seg_start;
        else
            seg_start = boundary;
        prev = cur;
    }
    if (prev) measure += hi - seg_start;
    return measure;
}

} // namespace moebius
