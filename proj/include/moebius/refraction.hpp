// Copyright 2026 The moebius-optics Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "moebius/response.hpp"

// Plane-wave refraction from vacuum into the Möbius medium. Geometry: the
// interface normal is ŷ with the medium on the S_ty < 0 side, the tangential
// direction is ẑ, and the incidence angle θ is measured from the normal, so
// k_tz = k_i sin θ ≥ 0 and k_tx = 0. Both polarizations share the dispersion
// relation ε_y k_ty² + ε_z k_tz² = (ω/ħc)² ε_y ε_z μ_xx.

namespace moebius {

enum class Polarization { H, E };

enum class RefractionClass { negative, positive, evanescent };

/// A linearly polarized plane wave arriving from vacuum. Construction
/// validates ω > 0 and 0 ≤ θ < 90°.
struct IncidentWave {
    IncidentWave(Polarization polarization, double omega_ev, double theta_deg);

    Polarization polarization;
    double omega;     // eV
    double theta_deg;

    /// Vacuum wave number ω/ħc. [rad/nm]
    double wavenumber() const;
    /// Tangential component k_iz = (ω/ħc) sin θ, conserved across the
    /// interface. [rad/nm]
    double tangential_k() const;
};

/// Transmitted plane-wave solution. Poynting components are in normalized
/// flux units: unit transmitted field amplitude, vacuum impedance suppressed;
/// only signs and ratios are meaningful.
struct RefractionSolution {
    double omega = 0.0;      // eV
    double theta_deg = 0.0;
    double k_ty = 0.0;       // rad/nm (0 when evanescent)
    double k_tz = 0.0;       // rad/nm
    double s_ty = 0.0;
    double s_tz = 0.0;
    bool propagating = false;
    RefractionClass classification = RefractionClass::evanescent;
};

/// Vacuum wave number ω/ħc. [rad/nm]
double vacuum_wavenumber(double omega);

/// Transverse wave vector component of the transmitted wave, negative branch
/// (the branch that carries energy into the medium). Returns nullopt when
/// the radicand is negative (evanescent). Throws std::domain_error when
/// ε_y = 0 degenerates the dispersion relation.
std::optional<double> transverse_wavevector(double omega, double theta_deg,
                                            const PermittivityTensor& eps,
                                            const PermeabilityTensor& mu);

/// Poynting vector (S_ty, S_tz) of an H-polarized transmitted wave:
///   S_ty = k_ty/(2ω ε_z),  S_tz = k_tz/(2ω ε_y).
/// Throws std::domain_error when ε_y or ε_z vanishes.
std::pair<double, double> poynting_h_polarized(double k_ty, double k_tz,
                                               const PermittivityTensor& eps, double omega);

/// Poynting vector of an E-polarized transmitted wave:
///   S_ty = (μ_yz k_tz + μ_xx k_ty)/(2ω μ₁),
///   S_tz = (μ_xx k_tz + μ_yz k_ty)/(2ω μ₁).
/// Throws std::domain_error when μ₁ vanishes.
std::pair<double, double> poynting_e_polarized(double k_ty, double k_tz,
                                               const PermeabilityTensor& mu, double omega);

/// Full pipeline: medium tensors at ω, dispersion solution, Poynting vector,
/// classification. Negative refraction means a propagating wave with
/// S_tz < 0 at θ > 0 (grazing flux at normal incidence is classified
/// positive).
RefractionSolution classify_refraction(const Medium& medium, const IncidentWave& wave);

/// Convenience overload; requires 0 ≤ θ < 90 and ω > 0.
RefractionSolution classify_refraction(const Medium& medium, double omega,
                                       double theta_deg, Polarization pol);

/// Measure (in eV) of the photon energies inside the negative-permittivity
/// window whose classification is negative for the given polarization and
/// angle. Scans a uniform grid and refines every classification boundary by
/// bisection. Returns 0 when the medium has no window.
double negative_refraction_bandwidth(const Medium& medium, double theta_deg,
                                     Polarization pol, int grid_points = 2001,
                                     double edge_tol = 1e-12);

} // namespace moebius
