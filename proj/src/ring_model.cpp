// Copyright 2026 The moebius-optics Authors
// SPDX-License-Identifier: Apache-2.0

#include "moebius/ring_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "moebius/constants.hpp"

namespace moebius {

namespace {

// cos over |arg| so that symmetric momentum labels produce bitwise-identical
// energies; the degeneracy of mirror transitions then cancels exactly in the
// response tensors instead of to rounding error.
double even_cos(double x) { return std::cos(std::fabs(x)); }

int band_rank(Band b) { return b == Band::down ? 0 : 1; }

} // namespace

MoebiusRing::MoebiusRing(int n_sites_per_ring, double atom_radius_nm,
                         double inter_ring_hop_ev, double intra_ring_hop_ev,
                         double ring_radius_nm)
    : n_(n_sites_per_ring),
      atom_radius_(atom_radius_nm),
      inter_hop_(inter_ring_hop_ev),
      intra_hop_(intra_ring_hop_ev) {
    if (n_ < 3)
        throw std::invalid_argument("MoebiusRing: need at least 3 sites per sub-ring");
    if (atom_radius_ <= 0.0)
        throw std::invalid_argument("MoebiusRing: atom radius must be positive");
    if (inter_hop_ <= 0.0 || intra_hop_ <= 0.0)
        throw std::invalid_argument("MoebiusRing: hopping energies must be positive");
    ring_radius_ = ring_radius_nm > 0.0 ? ring_radius_nm
                                        : n_ * atom_radius_ / constants::pi;
    delta_ = 2.0 * constants::pi / n_;
}

MoebiusRing MoebiusRing::standard() { return MoebiusRing(12, 0.077, 3.6, 3.6); }

int MoebiusRing::wrap_m(int m) const {
    int span = m - m_min();
    span %= n_;
    if (span < 0) span += n_;
    return span + m_min();
}

std::array<double, 3> site_position(const MoebiusRing& ring, int j, Subring s) {
    const double phi = ring.site_azimuth(j);
    const double sign = (s == Subring::a) ? 1.0 : -1.0;
    const double rho = ring.ring_radius() + sign * ring.atom_radius() * std::sin(phi / 2.0);
    return {rho * std::cos(phi), rho * std::sin(phi),
            sign * ring.atom_radius() * std::cos(phi / 2.0)};
}

double band_energy(const MoebiusRing& ring, BandState state) {
    if (!ring.in_zone(state.m))
        throw std::domain_error("band_energy: momentum index outside the Brillouin zone");
    const double d = ring.delta();
    if (state.sigma == Band::up)
        return ring.inter_ring_hop() - 2.0 * ring.intra_ring_hop() * even_cos((state.m - 0.5) * d);
    return -ring.inter_ring_hop() - 2.0 * ring.intra_ring_hop() * even_cos(state.m * d);
}

std::vector<SpectrumEntry> build_spectrum(const MoebiusRing& ring) {
    std::vector<SpectrumEntry> out;
    out.reserve(2 * ring.n());
    for (Band b : {Band::down, Band::up})
        for (int m = ring.m_min(); m <= ring.m_max(); ++m) {
            BandState s{m, b};
            out.push_back({s, band_energy(ring, s), 0});
        }
    return out;
}

std::vector<SpectrumEntry> fill_electrons(const MoebiusRing& ring,
                                          std::vector<SpectrumEntry> spectrum,
                                          int n_electrons) {
    if (n_electrons < 0 || n_electrons > 4 * ring.n())
        throw std::domain_error("fill_electrons: electron count outside [0, 4N]");

    for (auto& e : spectrum) e.occupancy = 0;

    std::vector<SpectrumEntry*> order;
    order.reserve(spectrum.size());
    for (auto& e : spectrum) order.push_back(&e);
    std::sort(order.begin(), order.end(), [](const SpectrumEntry* a, const SpectrumEntry* b) {
        if (a->energy != b->energy) return a->energy < b->energy;
        if (std::abs(a->state.m) != std::abs(b->state.m))
            return std::abs(a->state.m) < std::abs(b->state.m);
        if ((a->state.m < 0) != (b->state.m < 0)) return b->state.m < 0;
        return band_rank(a->state.sigma) < band_rank(b->state.sigma);
    });

    // Degenerate multiplets are filled as a unit: pair up electrons while a
    // whole multiplet can be doubly occupied, otherwise spread single
    // electrons across it first (Hund-like frontier filling).
    constexpr double kDegeneracyTol = 1e-9; // eV
    int remaining = n_electrons;
    std::size_t i = 0;
    while (remaining > 0 && i < order.size()) {
        std::size_t j = i + 1;
        while (j < order.size() && std::fabs(order[j]->energy - order[i]->energy) <= kDegeneracyTol)
            ++j;
        const int size = static_cast<int>(j - i);
        if (remaining >= 2 * size) {
            for (std::size_t k = i; k < j; ++k) order[k]->occupancy = 2;
            remaining -= 2 * size;
        } else {
            int singles = std::min(remaining, size);
            for (int k = 0; k < singles; ++k) order[i + k]->occupancy = 1;
            remaining -= singles;
            for (int k = 0; remaining > 0 && k < size; ++k, --remaining)
                order[i + k]->occupancy = 2;
        }
        i = j;
    }
    return spectrum;
}

std::vector<Transition> allowed_transitions(const MoebiusRing& ring,
                                            const std::vector<SpectrumEntry>& spectrum) {
    auto find = [&](BandState s) -> const SpectrumEntry* {
        for (const auto& e : spectrum)
            if (e.state.m == s.m && e.state.sigma == s.sigma) return &e;
        return nullptr;
    };

    std::vector<Transition> out;
    for (const auto& from : spectrum) {
        if (from.occupancy < 1) continue; // initial state must be non-empty
        for (int step : {+1, -1}) {
            BandState to{ring.wrap_m(from.state.m + step), from.state.sigma};
            const SpectrumEntry* target = find(to);
            if (!target || target->occupancy > 1) continue; // final not fully filled
            const double freq = target->energy - from.energy;
            if (freq <= 0.0) continue;
            out.push_back({from.state, to, from.occupancy, target->occupancy, freq,
                           ring.ring_radius() / 2.0,
                           magnetic_coupling(ring, from.state, to)});
        }
    }
    std::sort(out.begin(), out.end(), [](const Transition& a, const Transition& b) {
        if (a.frequency != b.frequency) return a.frequency < b.frequency;
        if (a.initial.sigma != b.initial.sigma)
            return band_rank(a.initial.sigma) < band_rank(b.initial.sigma);
        return a.initial.m > b.initial.m;
    });
    return out;
}

namespace {

// Cyclic momentum step from `initial` to `final`: +1, -1, or 0 when the pair
// is not one zone unit apart.
int unit_step(const MoebiusRing& ring, int m_from, int m_to) {
    if (ring.wrap_m(m_from + 1) == m_to) return +1;
    if (ring.wrap_m(m_from - 1) == m_to) return -1;
    return 0;
}

} // namespace

std::array<std::complex<double>, 3>
electric_dipole_element(const MoebiusRing& ring, BandState initial, BandState final_state) {
    if (initial.sigma != final_state.sigma)
        throw std::domain_error("electric_dipole_element: states must belong to the same band");
    if (!ring.in_zone(initial.m) || !ring.in_zone(final_state.m))
        throw std::domain_error("electric_dipole_element: momentum index outside the Brillouin zone");
    const int step = unit_step(ring, initial.m, final_state.m);
    if (step == 0) return {0.0, 0.0, 0.0};
    // d = -e⟨i|r̂|f⟩ = (-eR/2)(x̂ ∓ i ŷ) for a step of ±δ, identical for both
    // bands; the circulating charge couples only in-plane.
    const double c = -ring.ring_radius() / 2.0;
    return {std::complex<double>(c, 0.0),
            std::complex<double>(0.0, step > 0 ? -c : c), 0.0};
}

double magnetic_coupling(const MoebiusRing& ring, BandState initial, BandState final_state) {
    if (initial.sigma != final_state.sigma)
        throw std::domain_error("magnetic_coupling: states must belong to the same band");
    if (!ring.in_zone(initial.m) || !ring.in_zone(final_state.m))
        throw std::domain_error("magnetic_coupling: momentum index outside the Brillouin zone");
    const int step = unit_step(ring, initial.m, final_state.m);
    if (step == 0)
        throw std::domain_error("magnetic_coupling: defined only for unit momentum steps");

    const double d = ring.delta();
    const double m = initial.m;
    double bracket;
    if (initial.sigma == Band::up) {
        bracket = (step > 0) ? even_cos((m - 1.0) * d) - even_cos((m + 1.0) * d)
                             : even_cos((m - 2.0) * d) - even_cos(m * d);
    } else {
        bracket = (step > 0) ? even_cos((m - 0.5) * d) - even_cos((m + 1.5) * d)
                             : even_cos((m - 1.5) * d) - even_cos((m + 0.5) * d);
    }
    const double scale = ring.atom_radius() * ring.atom_radius() * ring.intra_ring_hop() /
                         (4.0 * constants::hbar_c * ring.ring_radius());
    return scale * bracket;
}

} // namespace moebius
