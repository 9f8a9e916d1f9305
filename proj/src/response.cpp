// Copyright 2026 The moebius-optics Authors
// SPDX-License-Identifier: Apache-2.0

#include "moebius/response.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "moebius/constants.hpp"
#include "moebius/roots.hpp"

namespace moebius {

double linewidth_from_lifetime(double lifetime_ns) {
    if (lifetime_ns <= 0.0)
        throw std::invalid_argument("linewidth_from_lifetime: lifetime must be positive");
    return constants::hbar_ev_s / (lifetime_ns * 1e-9);
}

ResponseParams ResponseParams::for_ring(const MoebiusRing& ring, double lifetime_ns) {
    const double rw = ring.ring_radius() + ring.atom_radius();
    ResponseParams p;
    p.gamma = linewidth_from_lifetime(lifetime_ns);
    p.v0 = 2.0 * constants::pi * rw * rw * ring.atom_radius();
    return p;
}

void ResponseParams::validate() const {
    if (gamma <= 0.0) throw std::invalid_argument("ResponseParams: gamma must be positive");
    if (v0 <= 0.0) throw std::invalid_argument("ResponseParams: v0 must be positive");
}

double coupling_constant(const MoebiusRing& ring, const ResponseParams& params) {
    params.validate();
    const double r = ring.ring_radius();
    return 2.0 * constants::pi * constants::coulomb * r * r / params.v0;
}

double response_prefactor(const Transition& t, const ResponseParams& params) {
    // n_i e² d² / ((n_f+1) ε₀ v₀) with d = R/2 in units of e·nm; the Coulomb
    // constant carries e²/(4πε₀).
    const double d = t.electric_strength;
    return 4.0 * constants::pi * constants::coulomb * d * d * t.n_initial /
           ((t.n_final + 1) * params.v0);
}

namespace {

// Δω/(Δω² + γ²): the regularized dispersive line shape, odd in Δω.
double line_shape(double detuning, double gamma) {
    return detuning / (detuning * detuning + gamma * gamma);
}

// In two_term mode only transitions in the two lowest frequency groups count.
double two_term_cutoff(std::span<const Transition> transitions) {
    double f1 = std::numeric_limits<double>::infinity();
    double f2 = std::numeric_limits<double>::infinity();
    for (const auto& t : transitions) {
        if (t.frequency < f1) {
            if (f1 < f2) f2 = f1;
            f1 = t.frequency;
        } else if (t.frequency > f1 && t.frequency < f2) {
            f2 = t.frequency;
        }
    }
    return f2;
}

bool term_active(const Transition& t, double cutoff, const ResponseParams& params) {
    return params.approximation == Approximation::full || t.frequency <= cutoff;
}

} // namespace

double transition_response(const Transition& t, double omega, const ResponseParams& params) {
    return response_prefactor(t, params) * line_shape(omega - t.frequency, params.gamma);
}

double ResponseTerm::value(double omega, const ResponseParams& params) const {
    return prefactor * line_shape(omega - transition.frequency, params.gamma);
}

std::vector<ResponseTerm> response_terms(std::span<const Transition> transitions,
                                         const ResponseParams& params) {
    params.validate();
    std::vector<ResponseTerm> out;
    out.reserve(transitions.size());
    for (const auto& t : transitions) out.push_back({t, response_prefactor(t, params)});
    return out;
}

double total_electric_response(double omega, std::span<const Transition> transitions,
                               const ResponseParams& params) {
    params.validate();
    const double cutoff = two_term_cutoff(transitions);
    double sum = 0.0;
    for (const auto& t : transitions)
        if (term_active(t, cutoff, params)) sum += transition_response(t, omega, params);
    return sum;
}

double total_magnetic_response(double omega, std::span<const Transition> transitions,
                               const ResponseParams& params) {
    params.validate();
    double sum = 0.0;
    for (const auto& t : transitions)
        sum += t.magnetic_coupling * t.magnetic_coupling * transition_response(t, omega, params);
    return sum;
}

double magnetic_response_asymmetry(double omega, std::span<const Transition> transitions,
                                   const ResponseParams& params) {
    params.validate();
    double sum = 0.0;
    for (const auto& t : transitions) {
        // Cyclic step direction decides the sign of the circular phase.
        const int span = t.final_state.m - t.initial.m;
        const double dir = (span == 1 || span < -1) ? 1.0 : -1.0;
        sum += dir * t.magnetic_coupling * t.magnetic_coupling *
               transition_response(t, omega, params);
    }
    return sum;
}

namespace {

using Matrix3cd = Eigen::Matrix3cd;
using Matrix3d = Eigen::Matrix3d;

// Clausius–Mossotti correction: the bare tensor 1 + G (G the molecular
// polarizability density) becomes 1 + (1 − G/3)⁻¹ G once the field each
// molecule sees includes the polarization of its neighbors.
Matrix3d local_field_correct(const Matrix3d& bare) {
    const Matrix3d g = bare - Matrix3d::Identity();
    const Matrix3d lhs = Matrix3d::Identity() - g / 3.0;
    Eigen::FullPivLU<Matrix3d> lu(lhs);
    if (!lu.isInvertible())
        throw std::domain_error("local field correction: singular response (pole of the "
                                "Clausius-Mossotti denominator)");
    const Matrix3d out = Matrix3d::Identity() + lu.solve(g);
    if (!out.allFinite())
        throw std::domain_error("local field correction: non-finite response");
    return out;
}

// Unit-magnitude phase vector of the magnetic coupling for a given band and
// cyclic step direction; the outer product v v† spreads β over the tensor.
Eigen::Vector3cd magnetic_phase_vector(Band band, int dir) {
    using namespace std::complex_literals;
    if (band == Band::up)
        return dir > 0 ? Eigen::Vector3cd(1i, 1.0, -1.0) : Eigen::Vector3cd(1i, -1.0, 1.0);
    return dir > 0 ? Eigen::Vector3cd(1i, 1.0, -1.0) : Eigen::Vector3cd(-1i, 1.0, -1.0);
}

} // namespace

PermittivityTensor epsilon_tensor(double omega, const MoebiusRing& ring,
                                  std::span<const Transition> transitions,
                                  const ResponseParams& params) {
    params.validate();
    const double cutoff = two_term_cutoff(transitions);

    Matrix3cd acc = Matrix3cd::Zero();
    for (const auto& t : transitions) {
        if (!term_active(t, cutoff, params)) continue;
        const auto dipole = electric_dipole_element(ring, t.initial, t.final_state);
        Eigen::Vector3cd d(dipole[0], dipole[1], dipole[2]);
        const double weight = 4.0 * constants::pi * constants::coulomb * t.n_initial /
                              ((t.n_final + 1) * params.v0) *
                              line_shape(omega - t.frequency, params.gamma);
        acc += weight * (d * d.adjoint());
    }
    // Mirror-degenerate transitions cancel the imaginary off-diagonal parts
    // exactly; anything left signals a broken degeneracy.
    if (acc.imag().cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, acc.real().cwiseAbs().maxCoeff()))
        throw std::runtime_error("epsilon_tensor: off-diagonal response failed to cancel");

    PermittivityTensor out;
    out.omega = omega;
    out.components = Matrix3d::Identity() - acc.real();
    if (params.local_field) {
        // Pole of the in-plane correction at η' = -3.
        const double eta = acc.real()(0, 0);
        if (std::fabs(3.0 + eta) < 1e-9)
            throw std::domain_error("epsilon_tensor: singular local-field response "
                                    "(Clausius-Mossotti pole at eta' = -3)");
        out.components = local_field_correct(out.components);
    }
    out.eigenvalues = {out.components(0, 0), out.components(1, 1), out.components(2, 2)};
    return out;
}

PermeabilityTensor mu_tensor(double omega, const MoebiusRing& /*ring*/,
                             std::span<const Transition> transitions,
                             const ResponseParams& params) {
    params.validate();

    Matrix3cd acc = Matrix3cd::Zero();
    double beta = 0.0;
    for (const auto& t : transitions) {
        const int span = t.final_state.m - t.initial.m;
        const int dir = (span == 1 || span < -1) ? 1 : -1;
        const Eigen::Vector3cd v = magnetic_phase_vector(t.initial.sigma, dir);
        const double weight = t.magnetic_coupling * t.magnetic_coupling *
                              transition_response(t, omega, params);
        acc += weight * (v * v.adjoint());
        beta += weight;
    }
    if (acc.imag().cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, std::fabs(beta)))
        throw std::runtime_error("mu_tensor: antisymmetric response failed to cancel");

    PermeabilityTensor out;
    out.omega = omega;
    out.beta = beta;
    out.components = Matrix3d::Identity() - acc.real();
    if (params.local_field) {
        out.components = local_field_correct(out.components);
        // Same eigenvectors as the bare tensor; eigenvalues follow from the
        // scalar correction g → g/(1 − g/3) applied to {−2β, −β, 0}.
        out.eigenvalues = {(3.0 - 4.0 * beta) / (3.0 + 2.0 * beta),
                           (3.0 - 2.0 * beta) / (3.0 + beta), 1.0};
    } else {
        out.eigenvalues = {1.0 - 2.0 * beta, 1.0 - beta, 1.0};
    }
    return out;
}

std::optional<NegativeWindow>
negative_permittivity_window(std::span<const Transition> transitions,
                             const ResponseParams& params, double tol) {
    params.validate();
    if (transitions.empty()) return std::nullopt;

    // The window opens at the lowest resonance and closes before the next
    // one; hunt for the edge condition only inside that interval.
    double f1 = std::numeric_limits<double>::infinity();
    double f2 = std::numeric_limits<double>::infinity();
    for (const auto& t : transitions) {
        if (t.frequency < f1) {
            if (f1 < f2) f2 = f1;
            f1 = t.frequency;
        } else if (t.frequency > f1 && t.frequency < f2) {
            f2 = t.frequency;
        }
    }
    if (!std::isfinite(f2)) return std::nullopt;

    const double threshold = params.local_field ? 1.5 : 1.0;
    auto edge = [&](double omega) {
        return threshold - total_electric_response(omega, transitions, params);
    };

    const double guard = 10.0 * params.gamma;
    const double mid = 0.5 * (f1 + f2);
    if (f1 + guard >= mid) return std::nullopt;

    // Lower edge: the response crosses the threshold within a few linewidths
    // above the resonance (at the resonance itself the resonant term is zero
    // and the tails dominate with negative sign).
    auto low = bisect_root(edge, f1, f1 + guard, tol);
    if (!low) return std::nullopt;

    // Upper edge: between the guard band and the next resonance.
    auto high = bisect_root(edge, f1 + guard, mid, tol);
    if (!high) high = bisect_root(edge, mid, f2 - guard, tol);
    if (!high || *high <= *low) return std::nullopt;

    return NegativeWindow{*low, *high, *high - *low};
}

Medium Medium::create(const MoebiusRing& ring, const ResponseParams& params) {
    auto spectrum = fill_electrons(ring, build_spectrum(ring), 2 * ring.n());
    return Medium{ring, allowed_transitions(ring, spectrum), params};
}

} // namespace moebius
