// Copyright 2026 The moebius-optics Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <span>
#include <vector>

#include "moebius/ring_model.hpp"

namespace moebius {

/// How the scalar electric response is summed over resonances.
///   full     — every allowed transition contributes.
///   two_term — only the two lowest resonance groups contribute; this is the
///              closed-form approximation used for the analytic window edges.
enum class Approximation { full, two_term };

/// Linewidth, molecular volume and evaluation mode of the linear response.
struct ResponseParams {
    double gamma = 0.0;      // linewidth [eV]
    double v0 = 0.0;         // volume per molecule [nm³]
    bool local_field = false;
    Approximation approximation = Approximation::full;

    /// Defaults for a given ring: γ = ħ/τ with τ in ns (4 ns standard) and
    /// v0 = 2π(R+W)²W.
    static ResponseParams for_ring(const MoebiusRing& ring, double lifetime_ns = 4.0);

    void validate() const; // throws std::invalid_argument
};

/// Converts an excited-state lifetime to a linewidth: γ = ħ/τ. [eV]
double linewidth_from_lifetime(double lifetime_ns);

/// Lumped coupling constant C = e²R²/(2ε₀v₀) of the in-plane dipole
/// response. [eV]
double coupling_constant(const MoebiusRing& ring, const ResponseParams& params);

/// One resonance term of the scalar response with its frequency-independent
/// weight n_i e²R²/(4(n_f+1)ε₀v₀). [eV]
struct ResponseTerm {
    Transition transition;
    double prefactor; // eV

    /// Real dispersive value of this term at a photon energy.
    double value(double omega, const ResponseParams& params) const;
};

/// Weight of a single transition's response term. [eV]
double response_prefactor(const Transition& t, const ResponseParams& params);

/// The resonance terms of a transition set, in the transitions' order.
std::vector<ResponseTerm> response_terms(std::span<const Transition> transitions,
                                         const ResponseParams& params);

/// Real dispersive response of one transition at photon energy omega:
///   prefactor · Δω/(Δω² + γ²),  Δω = ω − Δ_fi.
/// Regular at Δω = 0 (returns 0 there) and odd in the detuning.
double transition_response(const Transition& t, double omega, const ResponseParams& params);

/// Scalar electric response η′(ω): the in-plane permittivity is 1 − η′.
/// Honors params.approximation.
double total_electric_response(double omega, std::span<const Transition> transitions,
                               const ResponseParams& params);

/// Scalar magnetic response β(ω) = Σ α² · (transition response).
double total_magnetic_response(double omega, std::span<const Transition> transitions,
                               const ResponseParams& params);

/// Signed sum that assembles the antisymmetric part of the permeability;
/// vanishes identically because mirror transitions are exactly degenerate.
double magnetic_response_asymmetry(double omega, std::span<const Transition> transitions,
                                   const ResponseParams& params);

/// Relative permittivity at a photon energy. Diagonal with
/// ε_xx = ε_yy and ε_zz = 1 in both modes.
struct PermittivityTensor {
    double omega = 0.0;
    Eigen::Matrix3d components = Eigen::Matrix3d::Identity();
    std::array<double, 3> eigenvalues{1.0, 1.0, 1.0}; // {ε_x, ε_y, ε_z}
};

/// Relative permeability at a photon energy. Couples the y and z axes:
/// diag(1−β, 1−β, 1−β) with +β at (y,z)/(z,y); eigenvalues {1−2β, 1−β, 1}.
struct PermeabilityTensor {
    double omega = 0.0;
    Eigen::Matrix3d components = Eigen::Matrix3d::Identity();
    double beta = 0.0;
    std::array<double, 3> eigenvalues{1.0, 1.0, 1.0}; // {μ₁, μ₂, μ₃}
};

/// Assembles the permittivity tensor from the complex dipole elements of the
/// allowed transitions (the off-diagonal parts cancel by degeneracy; they are
/// summed, not forced to zero). In local-field mode the Clausius–Mossotti
/// correction is applied; throws std::domain_error at its η′ = −3 pole.
PermittivityTensor epsilon_tensor(double omega, const MoebiusRing& ring,
                                  std::span<const Transition> transitions,
                                  const ResponseParams& params);

/// Assembles the permeability tensor from the magnetic coupling phases and
/// checks numerically that the antisymmetric (imaginary) part cancels.
PermeabilityTensor mu_tensor(double omega, const MoebiusRing& ring,
                             std::span<const Transition> transitions,
                             const ResponseParams& params);

/// Photon-energy interval with negative in-plane permittivity.
struct NegativeWindow {
    double omega_low;  // eV
    double omega_high; // eV
    double bandwidth;  // eV
};

/// Locates the negative-permittivity window between the two lowest resonance
/// frequencies by bracketed bisection of the edge condition (η′ = 1 bare,
/// η′ = 3/2 with local field). Candidate roots outside the inter-resonance
/// interval are never searched, so far-detuned solutions of the same edge
/// equation are rejected structurally. Returns nullopt when the response
/// never reaches the threshold (e.g. overdamped linewidth).
std::optional<NegativeWindow>
negative_permittivity_window(std::span<const Transition> transitions,
                             const ResponseParams& params, double tol = 1e-12);

/// Ring + transitions + response parameters: everything needed to evaluate
/// the medium at a photon energy.
struct Medium {
    MoebiusRing ring;
    std::vector<Transition> transitions;
    ResponseParams params;

    /// Ground-state medium: spectrum filled with 2N electrons.
    static Medium create(const MoebiusRing& ring, const ResponseParams& params);

    PermittivityTensor epsilon(double omega) const {
        return epsilon_tensor(omega, ring, transitions, params);
    }
    PermeabilityTensor mu(double omega) const {
        return mu_tensor(omega, ring, transitions, params);
    }
    std::optional<NegativeWindow> window() const {
        return negative_permittivity_window(transitions, params);
    }
};

} // namespace moebius
