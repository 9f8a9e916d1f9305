// Copyright 2026 The moebius-optics Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <numbers>

// Physical constants in the eV/nm unit system used throughout the library.
// Energies are eV, lengths nm, wave vectors rad/nm; frequencies are photon
// energies (the reduced Planck constant is absorbed everywhere except when
// converting a lifetime to a linewidth).

namespace moebius::constants {

/// ħc [eV·nm] (CODATA 2018).
inline constexpr double hbar_c = 197.3269804;

/// Coulomb constant e²/(4πε₀) [eV·nm] (CODATA 2018).
inline constexpr double coulomb = 1.4399645;

/// ħ [eV·s], used for lifetime → linewidth conversion γ = ħ/τ.
inline constexpr double hbar_ev_s = 6.582119569e-16;

inline constexpr double pi = std::numbers::pi_v<double>;

} // namespace moebius::constants
