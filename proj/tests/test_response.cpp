// Copyright 2026 The moebius-optics Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "moebius/constants.hpp"
#include "moebius/response.hpp"

using namespace moebius;

namespace {

Medium standard_medium() {
    const MoebiusRing ring = MoebiusRing::standard();
    return Medium::create(ring, ResponseParams::for_ring(ring));
}

// Reference resonance frequencies of the standard medium, lowest first.
struct Resonances {
    double low;  // down-band frontier pair
    double mid;  // up-band pair
    double high; // inner down-band pair
};

Resonances resonances(const Medium& medium) {
    std::set<double> freqs;
    for (const auto& t : medium.transitions) freqs.insert(t.frequency);
    REQUIRE(freqs.size() == 3);
    auto it = freqs.begin();
    Resonances r{};
    r.low = *it++;
    r.mid = *it++;
    r.high = *it;
    return r;
}

// Volume that pins the lumped coupling constant to a chosen value.
double volume_for_coupling(const MoebiusRing& ring, double c) {
    const double r = ring.ring_radius();
    return 2.0 * constants::pi * constants::coulomb * r * r / c;
}

} // namespace

TEST_CASE("response parameter defaults") {
    const MoebiusRing ring = MoebiusRing::standard();
    const ResponseParams params = ResponseParams::for_ring(ring);

    // gamma = hbar / (4 ns)
    CHECK(params.gamma == doctest::Approx(1.645529892e-7).epsilon(1e-9));
    // v0 = 2π (R+W)² W
    const double rw = ring.ring_radius() + ring.atom_radius();
    CHECK(params.v0 == doctest::Approx(2 * constants::pi * rw * rw * ring.atom_radius())
                           .epsilon(1e-15));

    CHECK_THROWS_AS(linewidth_from_lifetime(0.0), std::invalid_argument);
    ResponseParams bad = params;
    bad.v0 = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("lumped coupling constant near 11.4 eV") {
    const Medium medium = standard_medium();
    const double c = coupling_constant(medium.ring, medium.params);
    CHECK(std::fabs(c - 11.4) / 11.4 < 0.05);
}

TEST_CASE("single-transition response shape") {
    const Medium medium = standard_medium();
    const Transition& t = medium.transitions.front();
    const ResponseParams& params = medium.params;
    const double gamma = params.gamma;
    const double prefactor = response_prefactor(t, params);
    CHECK(prefactor > 0.0);

    SUBCASE("zero at resonance, extremum at one linewidth") {
        CHECK(transition_response(t, t.frequency, params) == 0.0);
        const double peak = transition_response(t, t.frequency + gamma, params);
        CHECK(peak == doctest::Approx(prefactor / (2 * gamma)).epsilon(1e-14));
        CHECK(transition_response(t, t.frequency + 0.5 * gamma, params) < peak);
        CHECK(transition_response(t, t.frequency + 2.0 * gamma, params) < peak);
    }

    SUBCASE("odd in the detuning") {
        // dyadic frequency and offsets keep ω ± d exact, so the parity of the
        // line shape shows up bitwise
        Transition synthetic = t;
        synthetic.frequency = 2.0;
        for (double d : {0.0009765625, 0.03125, 0.25, 1.0}) {
            const double plus = transition_response(synthetic, 2.0 + d, params);
            const double minus = transition_response(synthetic, 2.0 - d, params);
            CHECK(plus == -minus);
        }
    }
}

TEST_CASE("degenerate pairs contribute identically") {
    const Medium medium = standard_medium();
    const auto terms = response_terms(medium.transitions, medium.params);
    REQUIRE(terms.size() == 6);
    for (const auto& term : terms) CHECK(term.prefactor > 0.0);

    for (double omega : {2.0, 2.7, 3.0, 3.3, 5.0}) {
        std::map<double, std::vector<double>> by_freq;
        for (const auto& term : terms)
            by_freq[term.transition.frequency].push_back(term.value(omega, medium.params));
        REQUIRE(by_freq.size() == 3);
        for (const auto& [freq, values] : by_freq) {
            REQUIRE(values.size() == 2);
            CHECK(values[1] == values[0]); // bitwise
        }
    }
}

TEST_CASE("total response carries the 1-2-1 occupation structure") {
    const Medium medium = standard_medium();
    const Resonances res = resonances(medium);
    const double c = coupling_constant(medium.ring, medium.params);
    const double gamma = medium.params.gamma;

    auto line = [&](double d) { return d / (d * d + gamma * gamma); };

    for (double omega : {2.0, 2.70, 2.9, 3.4, 4.1}) {
        const double expected = c * (line(omega - res.low) + 2.0 * line(omega - res.mid) +
                                     line(omega - res.high));
        const double got = total_electric_response(omega, medium.transitions, medium.params);
        CHECK(got == doctest::Approx(expected).epsilon(1e-12));

        ResponseParams two = medium.params;
        two.approximation = Approximation::two_term;
        const double expected_two = c * (line(omega - res.low) + 2.0 * line(omega - res.mid));
        CHECK(total_electric_response(omega, medium.transitions, two) ==
              doctest::Approx(expected_two).epsilon(1e-12));
    }
}

TEST_CASE("two-term response hits unity at the reference edge") {
    // with the coupling pinned to 11.4 eV, the analytic upper edge of the
    // negative-permittivity window sits at 2.8305463 eV
    const MoebiusRing ring = MoebiusRing::standard();
    ResponseParams params = ResponseParams::for_ring(ring);
    params.v0 = volume_for_coupling(ring, 11.4);
    params.approximation = Approximation::two_term;
    const Medium medium = Medium::create(ring, params);

    const double eta = total_electric_response(2.8305463, medium.transitions, params);
    CHECK(std::fabs(eta - 1.0) < 1e-3);
}

TEST_CASE("overdamped response vanishes") {
    const MoebiusRing ring = MoebiusRing::standard();
    ResponseParams params = ResponseParams::for_ring(ring);
    params.gamma = 1e4;
    const Medium medium = Medium::create(ring, params);
    CHECK(std::fabs(total_electric_response(3.0, medium.transitions, params)) < 1e-5);
}

TEST_CASE("permittivity tensor structure") {
    const Medium medium = standard_medium();

    SUBCASE("no transitions gives the identity") {
        const auto eps = epsilon_tensor(2.5, medium.ring, {}, medium.params);
        CHECK(eps.components.isIdentity(0.0));
    }

    SUBCASE("diagonal, xx = yy, zz = 1, off-diagonals exactly zero") {
        for (double omega : {2.0, 2.64, 2.7, 3.0, 3.3, 6.0}) {
            const auto eps = medium.epsilon(omega);
            CHECK(eps.components(0, 0) == eps.components(1, 1));
            CHECK(eps.components(2, 2) == 1.0);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    if (i != j) CHECK(eps.components(i, j) == 0.0);
            const double eta =
                total_electric_response(omega, medium.transitions, medium.params);
            CHECK(eps.components(0, 0) == doctest::Approx(1.0 - eta).epsilon(1e-14));
        }
    }

    SUBCASE("far detuning approaches vacuum") {
        // the summed response decays like 4C/ω
        CHECK(std::fabs(medium.epsilon(1e4).components(0, 0) - 1.0) < 1e-2);
        CHECK(std::fabs(medium.epsilon(1e5).components(0, 0) - 1.0) < 1e-3);
    }
}

TEST_CASE("local-field correction") {
    const MoebiusRing ring = MoebiusRing::standard();
    ResponseParams bare = ResponseParams::for_ring(ring);
    ResponseParams local = bare;
    local.local_field = true;
    const Medium medium = Medium::create(ring, bare);

    SUBCASE("matches the closed form (3-2η')/(3+η')") {
        for (double omega : {2.0, 2.70, 3.0, 3.4}) {
            const double eta = total_electric_response(omega, medium.transitions, bare);
            const auto eps = epsilon_tensor(omega, ring, medium.transitions, local);
            CHECK(eps.components(0, 0) ==
                  doctest::Approx((3 - 2 * eta) / (3 + eta)).epsilon(1e-12));
            CHECK(eps.components(2, 2) == 1.0);
        }
    }

    SUBCASE("dilute limit converges to the bare tensor like 1/v0") {
        const double omega = 2.70;
        double previous_gap = 1e300;
        for (double scale : {1e2, 1e4, 1e6}) {
            ResponseParams thin_bare = bare;
            thin_bare.v0 = bare.v0 * scale;
            ResponseParams thin_local = thin_bare;
            thin_local.local_field = true;
            const double eta = total_electric_response(omega, medium.transitions, thin_bare);
            const auto b = epsilon_tensor(omega, ring, medium.transitions, thin_bare);
            const auto l = epsilon_tensor(omega, ring, medium.transitions, thin_local);
            const double gap = std::fabs(l.components(0, 0) - b.components(0, 0));
            // difference is η'²/(3+η') -> quadratic in 1/v0, so the
            // relative-to-susceptibility gap shrinks like 1/v0
            CHECK(gap == doctest::Approx(eta * eta / (3 + eta)).epsilon(1e-9));
            CHECK(gap / std::fabs(eta) < previous_gap);
            previous_gap = gap / std::fabs(eta);
        }
    }

    SUBCASE("pole reporting at eta' = -3") {
        // between the two lowest resonances the response sweeps from +inf to
        // -inf, so it crosses -3 exactly once, somewhere past the window edge
        const Resonances res = resonances(medium);
        const auto window = negative_permittivity_window(medium.transitions, bare);
        REQUIRE(window.has_value());
        double lo = window->omega_high; // η' = 1 here
        double hi = 0.5 * (res.low + res.mid);
        REQUIRE(total_electric_response(lo, medium.transitions, bare) > -3.0);
        REQUIRE(total_electric_response(hi, medium.transitions, bare) < -3.0);
        for (int i = 0; i < 200; ++i) {
            const double mid = 0.5 * (lo + hi);
            const double eta = total_electric_response(mid, medium.transitions, bare);
            (eta > -3.0 ? lo : hi) = mid;
        }
        // right on the pole the correction is flagged as singular
        CHECK_THROWS_AS(epsilon_tensor(lo, ring, medium.transitions, local),
                        std::domain_error);
        // a micro-eV away it is finite but enormous
        const double off_pole = lo - 2e-6;
        const double eta_near = total_electric_response(off_pole, medium.transitions, bare);
        CHECK(eta_near == doctest::Approx(-3.0).epsilon(1e-3));
        const auto eps = epsilon_tensor(off_pole, ring, medium.transitions, local);
        CHECK(std::isfinite(eps.components(0, 0)));
        CHECK(std::fabs(eps.components(0, 0)) > 1e3);
    }
}

TEST_CASE("permeability tensor structure") {
    const Medium medium = standard_medium();

    SUBCASE("assembly and eigenvalues") {
        for (double omega : {2.0, 2.70, 3.2, 3.2276717, 3.5, 4.0}) {
            const auto mu = medium.mu(omega);
            const double beta = mu.beta;
            CHECK(mu.components(0, 0) == doctest::Approx(1 - beta).epsilon(1e-14));
            CHECK(mu.components(1, 1) == doctest::Approx(1 - beta).epsilon(1e-14));
            CHECK(mu.components(2, 2) == doctest::Approx(1 - beta).epsilon(1e-14));
            CHECK(mu.components(1, 2) == doctest::Approx(beta).epsilon(1e-14));
            CHECK(mu.components(2, 1) == mu.components(1, 2));
            CHECK(mu.components(0, 1) == 0.0);
            CHECK(mu.components(0, 2) == 0.0);
            CHECK(mu.eigenvalues[0] == doctest::Approx(1 - 2 * beta).epsilon(1e-12));
            CHECK(mu.eigenvalues[1] == doctest::Approx(1 - beta).epsilon(1e-12));
            CHECK(mu.eigenvalues[2] == 1.0);

            // eigenvalues really are the tensor's eigenvalues
            Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(mu.components);
            std::array<double, 3> sorted{mu.eigenvalues[0], mu.eigenvalues[1], mu.eigenvalues[2]};
            std::sort(sorted.begin(), sorted.end());
            for (int i = 0; i < 3; ++i)
                CHECK(es.eigenvalues()(i) == doctest::Approx(sorted[i]).epsilon(1e-12));
        }
    }

    SUBCASE("local-field eigenvalues match the corrected components") {
        ResponseParams local = medium.params;
        local.local_field = true;
        for (double omega : {2.70, 3.2276716, 3.6000001}) {
            const auto mu = mu_tensor(omega, medium.ring, medium.transitions, local);
            Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(mu.components);
            std::array<double, 3> sorted{mu.eigenvalues[0], mu.eigenvalues[1],
                                         mu.eigenvalues[2]};
            std::sort(sorted.begin(), sorted.end());
            for (int i = 0; i < 3; ++i)
                CHECK(es.eigenvalues()(i) == doctest::Approx(sorted[i]).epsilon(1e-12));
        }
    }

    SUBCASE("antisymmetric part cancels identically") {
        std::mt19937 rng(7);
        std::uniform_real_distribution<double> omega_dist(2.0, 4.2);
        for (int i = 0; i < 100; ++i) {
            const double beta1 = magnetic_response_asymmetry(omega_dist(rng),
                                                             medium.transitions, medium.params);
            CHECK(std::fabs(beta1) <= 1e-15);
        }
    }

    SUBCASE("magnetic response stays small away from resonances") {
        const Resonances res = resonances(medium);
        std::mt19937 rng(11);
        std::uniform_real_distribution<double> omega_dist(2.0, 4.2);
        int tested = 0;
        while (tested < 200) {
            const double omega = omega_dist(rng);
            if (std::fabs(omega - res.low) < 1e-3 || std::fabs(omega - res.mid) < 1e-3 ||
                std::fabs(omega - res.high) < 1e-3)
                continue;
            ++tested;
            const double beta = total_magnetic_response(omega, medium.transitions, medium.params);
            CHECK(std::fabs(beta) < 1e-3);

            // triangle-inequality envelope from the per-transition terms
            double envelope = 0.0;
            double max_alpha_sq = 0.0;
            for (const auto& t : medium.transitions) {
                envelope += std::fabs(transition_response(t, omega, medium.params));
                max_alpha_sq = std::max(max_alpha_sq,
                                        t.magnetic_coupling * t.magnetic_coupling);
            }
            CHECK(std::fabs(beta) <= max_alpha_sq * envelope * (1 + 1e-14));
        }
    }
}

TEST_CASE("negative-permittivity window") {
    const Medium medium = standard_medium();
    const Resonances res = resonances(medium);

    SUBCASE("two-term bare window reproduces the analytic edges") {
        ResponseParams params = medium.params;
        params.approximation = Approximation::two_term;
        const auto window = negative_permittivity_window(medium.transitions, params);
        REQUIRE(window.has_value());
        CHECK(std::fabs(window->omega_low - 2.6353829) < 1e-3);
        CHECK(std::fabs(window->omega_high - 2.8305463) < 1e-3);
        CHECK(std::fabs(window->bandwidth - 0.1952) < 1e-3);

        // edges really solve η' = 1
        const double eta_high =
            total_electric_response(window->omega_high, medium.transitions, params);
        CHECK(std::fabs(eta_high - 1.0) < 1e-7);
    }

    SUBCASE("far root of the same edge equation is rejected by bracketing") {
        ResponseParams params = medium.params;
        params.approximation = Approximation::two_term;
        auto edge = [&](double omega) {
            return 1.0 - total_electric_response(omega, medium.transitions, params);
        };
        // a genuine root exists far above the resonances...
        CHECK(edge(30.0) < 0.0);
        CHECK(edge(45.0) > 0.0);
        // ...but the window never reports it
        const auto window = negative_permittivity_window(medium.transitions, params);
        REQUIRE(window.has_value());
        CHECK(window->omega_high < res.mid);
    }

    SUBCASE("pinning the coupling to 11.4 eV reproduces the quoted far root") {
        ResponseParams params = medium.params;
        params.approximation = Approximation::two_term;
        params.v0 = volume_for_coupling(medium.ring, 11.4);
        auto edge = [&](double omega) {
            return 1.0 - total_electric_response(omega, medium.transitions, params);
        };
        double lo = 30.0, hi = 45.0;
        for (int i = 0; i < 100; ++i) {
            const double mid = 0.5 * (lo + hi);
            (edge(mid) < 0.0 ? lo : hi) = mid;
        }
        CHECK(std::fabs(lo - 37.23251) < 1e-3);
    }

    SUBCASE("full three-term window is slightly narrower") {
        const auto window = medium.window();
        REQUIRE(window.has_value());
        CHECK(window->bandwidth > 0.15);
        CHECK(window->bandwidth < 0.20);

        ResponseParams two = medium.params;
        two.approximation = Approximation::two_term;
        const auto wide = negative_permittivity_window(medium.transitions, two);
        REQUIRE(wide.has_value());
        CHECK(window->bandwidth < wide->bandwidth);
    }

    SUBCASE("local-field edges solve η' = 3/2") {
        ResponseParams params = medium.params;
        params.local_field = true;
        const auto window = negative_permittivity_window(medium.transitions, params);
        REQUIRE(window.has_value());
        const double eta_high =
            total_electric_response(window->omega_high, medium.transitions, params);
        CHECK(std::fabs(eta_high - 1.5) < 1e-7);

        // right at the edge the corrected in-plane permittivity vanishes
        const auto edge_eps =
            epsilon_tensor(window->omega_high, medium.ring, medium.transitions, params);
        CHECK(std::fabs(edge_eps.components(0, 0)) < 1e-8);

        // inside the window the corrected in-plane permittivity is negative
        const double inside = 0.5 * (window->omega_low + window->omega_high);
        const auto eps = epsilon_tensor(inside, medium.ring, medium.transitions, params);
        CHECK(eps.components(0, 0) < 0.0);
    }

    SUBCASE("overdamped medium has no window") {
        ResponseParams params = medium.params;
        params.gamma = 10.0;
        CHECK(!negative_permittivity_window(medium.transitions, params).has_value());
    }

    SUBCASE("no transitions, no window") {
        CHECK(!negative_permittivity_window({}, medium.params).has_value());
    }
}
