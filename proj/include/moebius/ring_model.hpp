// Copyright 2026 The moebius-optics Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <complex>
#include <vector>

namespace moebius {

/// Pseudo-spin label of the two sub-bands produced by untwisting the
/// Möbius boundary condition.
enum class Band { up, down };

/// Momentum/pseudo-spin label of a single-electron orbital. The momentum is
/// k = m·δ with δ = 2π/N and m restricted to one Brillouin zone of N
/// consecutive integers (m ∈ {-5,…,6} for N = 12).
struct BandState {
    int m;
    Band sigma;
};

/// Geometry and hopping parameters of a double-ring Möbius molecule with 2N
/// atoms. The two sub-rings are joined end to end, which twists the boundary
/// condition (site N of sub-ring a is site 0 of sub-ring b and vice versa).
///
/// Units: lengths nm, hopping energies eV.
class MoebiusRing {
public:
    /// Builds a ring, defaulting the major radius to R = N·W/π when
    /// ring_radius <= 0. Throws std::invalid_argument on bad parameters
    /// (requires N >= 3, W > 0, V > 0, xi > 0).
    MoebiusRing(int n_sites_per_ring, double atom_radius_nm,
                double inter_ring_hop_ev, double intra_ring_hop_ev,
                double ring_radius_nm = 0.0);

    /// Benzene-like reference molecule: N = 12, W = 0.077 nm,
    /// V = ξ = 3.6 eV, R = N·W/π.
    static MoebiusRing standard();

    int n() const { return n_; }
    double atom_radius() const { return atom_radius_; }   // W [nm]
    double ring_radius() const { return ring_radius_; }   // R [nm]
    double inter_ring_hop() const { return inter_hop_; }  // V [eV]
    double intra_ring_hop() const { return intra_hop_; }  // ξ [eV]

    /// Momentum quantum δ = 2π/N [rad]; δ·N = 2π to machine precision.
    double delta() const { return delta_; }

    /// Azimuth of site j, φ_j = j·δ.
    double site_azimuth(int j) const { return j * delta_; }

    /// Canonical Brillouin zone bounds: m ∈ [m_min(), m_max()], N values.
    int m_min() const { return -((n_ - 1) / 2); }
    int m_max() const { return n_ / 2; }
    bool in_zone(int m) const { return m >= m_min() && m <= m_max(); }

    /// Maps an arbitrary integer momentum index into the canonical zone.
    int wrap_m(int m) const;

private:
    int n_;
    double atom_radius_;
    double ring_radius_;
    double inter_hop_;
    double intra_hop_;
    double delta_;
};

/// One orbital of the spectrum together with its electron count (0, 1 or 2).
struct SpectrumEntry {
    BandState state;
    double energy;  // eV
    int occupancy;
};

enum class Subring { a, b };

/// Nuclear position of site j on the given sub-ring:
///   x = (R ± W sin(φ_j/2)) cos φ_j,
///   y = (R ± W sin(φ_j/2)) sin φ_j,
///   z = ± W cos(φ_j/2),
/// with + for sub-ring a and − for sub-ring b. [nm]
std::array<double, 3> site_position(const MoebiusRing& ring, int j, Subring s);

/// An optically allowed intra-band transition (same pseudo-spin, momentum
/// step of one zone unit, positive frequency, initial state non-empty and
/// final state not fully filled).
struct Transition {
    BandState initial;
    BandState final_state;
    int n_initial;            // electrons in the initial orbital (1 or 2)
    int n_final;              // electrons in the final orbital (0 or 1)
    double frequency;         // eV
    double electric_strength; // |d| per in-plane component = e·R/2 [e·nm]
    double magnetic_coupling; // dimensionless magnetic/electric ratio
};

/// Band dispersion: E↑(m) = V − 2ξ cos(mδ − δ/2), E↓(m) = −V − 2ξ cos(mδ).
/// Throws std::domain_error for m outside the canonical zone.
double band_energy(const MoebiusRing& ring, BandState state);

/// All 2N orbitals, occupancies zeroed. Down band first, ascending m.
std::vector<SpectrumEntry> build_spectrum(const MoebiusRing& ring);

/// Distributes n_electrons over the spectrum: orbitals are ordered by
/// (energy, |m|, m >= 0 first, down band first) and filled two at a time;
/// a degenerate frontier multiplet that cannot be fully paired is first
/// given one electron per orbital. Throws std::domain_error unless
/// 0 <= n_electrons <= 4N.
std::vector<SpectrumEntry> fill_electrons(const MoebiusRing& ring,
                                          std::vector<SpectrumEntry> spectrum,
                                          int n_electrons);

/// Enumerates the allowed intra-band transitions of a filled spectrum,
/// sorted by (frequency, band, initial m). For the standard ring at
/// half filling this is six transitions in three frequency-degenerate pairs.
std::vector<Transition> allowed_transitions(const MoebiusRing& ring,
                                            const std::vector<SpectrumEntry>& spectrum);

/// Electric transition dipole d_if = ⟨i|(−e r̂)|f⟩ between two states of the
/// same band [e·nm]. Zero vector unless the momentum step is ±1 (cyclically),
/// in which case the in-plane components have magnitude eR/2 with circular
/// phase structure and the z component vanishes. Different bands are not
/// handled here and raise std::domain_error.
std::array<std::complex<double>, 3>
electric_dipole_element(const MoebiusRing& ring, BandState initial, BandState final_state);

/// Dimensionless ratio of the magnetic to the electric coupling strength for
/// a momentum-step-one transition,
///   α = W²ξ/(4ħcR) · [cos(...) − cos(...)],
/// with the cosine bracket depending on band and step direction. Throws
/// std::domain_error unless the states are in the same band one step apart.
double magnetic_coupling(const MoebiusRing& ring, BandState initial, BandState final_state);

} // namespace moebius
