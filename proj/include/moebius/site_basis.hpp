// Copyright 2026 The moebius-optics Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "moebius/ring_model.hpp"

// Brute-force site-basis model of the Möbius ring. It knows nothing about
// the analytic bands: the Hamiltonian is assembled bond by bond and
// diagonalized densely, and eigenvectors are labeled by momentum using the
// twisted translation symmetry of the ring. Everything in here exists to
// cross-check the closed-form spectrum and dipole elements.

namespace moebius {

/// 2N×2N single-electron Hamiltonian in the site basis
/// (a_0..a_{N-1}, b_0..b_{N-1}).
class SiteBasisModel {
public:
    explicit SiteBasisModel(const MoebiusRing& ring);

    int dimension() const { return static_cast<int>(hamiltonian_.rows()); }
    const Eigen::MatrixXd& hamiltonian() const { return hamiltonian_; }
    const MoebiusRing& ring() const { return ring_; }

    /// Site positions as rows, same basis order as the Hamiltonian. [nm]
    const Eigen::Matrix<double, Eigen::Dynamic, 3>& positions() const { return positions_; }

    /// Permutation matrix of the one-site twisted translation
    /// a_j → a_{j+1}, b_j → b_{j+1} with a_{N-1} → b_0 and b_{N-1} → a_0.
    /// Commutes with the Hamiltonian.
    Eigen::MatrixXd twisted_shift() const;

private:
    MoebiusRing ring_;
    Eigen::MatrixXd hamiltonian_;
    Eigen::Matrix<double, Eigen::Dynamic, 3> positions_;
};

/// Dense-diagonalization spectrum, ascending. [eV]
std::vector<double> site_oracle_spectrum(const SiteBasisModel& model);

/// A numeric eigenvector carrying the (m, σ) label recovered from the
/// twisted-translation eigenphase.
struct LabeledMode {
    BandState state;
    double energy;
    Eigen::VectorXcd vector;
};

/// Simultaneous eigenbasis of the Hamiltonian and the twisted translation.
/// Degenerate energy clusters are split by diagonalizing the restriction of
/// the shift operator; the eigenphase θ identifies the band (integer θ/δ →
/// down, half-integer → up) and the momentum index. Sorted by (band, m).
std::vector<LabeledMode> site_oracle_eigenbasis(const SiteBasisModel& model);

/// Matrix element ⟨u|(−e r̂)|v⟩ of the dipole operator between two numeric
/// modes, using the diagonal position ansatz. [e·nm]
std::array<std::complex<double>, 3>
site_oracle_dipole(const SiteBasisModel& model, const LabeledMode& u, const LabeledMode& v);

} // namespace moebius
