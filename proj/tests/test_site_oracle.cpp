// Copyright 2026 The moebius-optics Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <utility>

#include "moebius/ring_model.hpp"
#include "moebius/site_basis.hpp"

using namespace moebius;

namespace {

std::vector<double> analytic_spectrum(const MoebiusRing& ring) {
    std::vector<double> out;
    for (const auto& e : build_spectrum(ring)) out.push_back(e.energy);
    std::sort(out.begin(), out.end());
    return out;
}

void check_spectra_match(const MoebiusRing& ring, double tol) {
    const auto numeric = site_oracle_spectrum(SiteBasisModel(ring));
    const auto analytic = analytic_spectrum(ring);
    REQUIRE(numeric.size() == analytic.size());
    for (std::size_t i = 0; i < numeric.size(); ++i)
        CHECK(std::fabs(numeric[i] - analytic[i]) < tol);
}

} // namespace

TEST_CASE("site Hamiltonian structure") {
    const MoebiusRing ring = MoebiusRing::standard();
    const SiteBasisModel model(ring);
    const auto& h = model.hamiltonian();
    REQUIRE(model.dimension() == 24);

    CHECK(h.isApprox(h.transpose()));
    CHECK(h.diagonal().cwiseAbs().maxCoeff() == 0.0); // homonuclear: zero site energies

    // Möbius closure bonds
    CHECK(h(11, 12) == doctest::Approx(-3.6));
    CHECK(h(23, 0) == doctest::Approx(-3.6));
    // rungs and intra-ring bonds
    CHECK(h(0, 12) == doctest::Approx(-3.6));
    CHECK(h(3, 4) == doctest::Approx(-3.6));

    // the twisted shift commutes with the Hamiltonian
    const Eigen::MatrixXd s = model.twisted_shift();
    CHECK((h * s - s * h).cwiseAbs().maxCoeff() == 0.0);
    CHECK((s * s.transpose() - Eigen::MatrixXd::Identity(24, 24)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("dense spectrum matches the closed-form bands") {
    SUBCASE("standard ring") {
        const MoebiusRing ring = MoebiusRing::standard();
        check_spectra_match(ring, 1e-10);
        CHECK(site_oracle_spectrum(SiteBasisModel(ring)).front() ==
              doctest::Approx(-10.8).epsilon(1e-12));
    }

    SUBCASE("decoupled rungs (xi -> 0)") {
        // keep xi positive but negligible: spectrum collapses onto ±V
        const MoebiusRing ring(12, 0.077, 3.6, 1e-13);
        for (double e : site_oracle_spectrum(SiteBasisModel(ring)))
            CHECK(std::fabs(std::fabs(e) - 3.6) < 1e-10);
    }

    SUBCASE("weak inter-ring coupling keeps the twisted closure") {
        const MoebiusRing ring(12, 0.077, 1e-13, 3.6);
        check_spectra_match(ring, 1e-10);
    }

    SUBCASE("randomized sizes and hoppings") {
        std::mt19937 rng(20260808);
        std::uniform_int_distribution<int> n_dist(4, 16);
        std::uniform_real_distribution<double> hop_dist(0.05, 10.0);
        for (int trial = 0; trial < 50; ++trial) {
            const MoebiusRing ring(n_dist(rng), 0.077, hop_dist(rng), hop_dist(rng));
            check_spectra_match(ring, 1e-10);
        }
    }
}

TEST_CASE("momentum labeling reproduces the band assignment") {
    const MoebiusRing ring = MoebiusRing::standard();
    const SiteBasisModel model(ring);
    const auto modes = site_oracle_eigenbasis(model);
    REQUIRE(modes.size() == 24);

    // every (m, sigma) label appears exactly once and carries the band energy
    std::set<std::pair<int, int>> seen;
    for (const auto& mode : modes) {
        seen.insert({mode.state.m, mode.state.sigma == Band::up ? 1 : 0});
        CHECK(std::fabs(mode.energy - band_energy(ring, mode.state)) < 1e-10);

        // labeled vectors stay eigenvectors of the Hamiltonian
        const Eigen::VectorXcd residual =
            model.hamiltonian() * mode.vector - mode.energy * mode.vector;
        CHECK(residual.cwiseAbs().maxCoeff() < 1e-10);
    }
    CHECK(seen.size() == 24);
}

TEST_CASE("numeric dipole elements against the closed form") {
    const MoebiusRing ring = MoebiusRing::standard();
    const SiteBasisModel model(ring);
    const auto modes = site_oracle_eigenbasis(model);
    const double half_r = ring.ring_radius() / 2;

    for (const auto& u : modes) {
        for (const auto& v : modes) {
            if (u.state.sigma != v.state.sigma) continue;
            const auto d = site_oracle_dipole(model, u, v);
            const int span = std::abs(u.state.m - v.state.m);
            const bool unit_step = span == 1 || span == ring.n() - 1;
            if (unit_step) {
                CHECK(std::fabs(std::abs(d[0]) - half_r) < 1e-10);
                CHECK(std::fabs(std::abs(d[1]) - half_r) < 1e-10);
                CHECK(std::abs(d[2]) < 1e-12);
            } else {
                // selection rule: all components vanish for larger steps
                CHECK(std::abs(d[0]) < 1e-12);
                CHECK(std::abs(d[1]) < 1e-12);
                CHECK(std::abs(d[2]) < 1e-12);
            }
        }
    }
}

TEST_CASE("closed-form dipole matches the numeric oracle element by element") {
    const MoebiusRing ring = MoebiusRing::standard();
    const SiteBasisModel model(ring);
    const auto modes = site_oracle_eigenbasis(model);

    for (const auto& u : modes) {
        for (const auto& v : modes) {
            if (u.state.sigma != v.state.sigma) continue;
            const auto numeric = site_oracle_dipole(model, u, v);
            const auto closed = electric_dipole_element(ring, u.state, v.state);
            // numeric eigenvectors carry arbitrary phases, so compare moduli
            for (int c = 0; c < 3; ++c)
                CHECK(std::fabs(std::abs(numeric[c]) - std::abs(closed[c])) < 1e-10);
        }
    }
}
