// Copyright 2026 The moebius-optics Authors
// SPDX-License-Identifier: Apache-2.0

#include "moebius/site_basis.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

#include "moebius/constants.hpp"

namespace moebius {

SiteBasisModel::SiteBasisModel(const MoebiusRing& ring) : ring_(ring) {
    const int n = ring.n();
    const int dim = 2 * n;
    const double v = ring.inter_ring_hop();
    const double xi = ring.intra_ring_hop();

    hamiltonian_ = Eigen::MatrixXd::Zero(dim, dim);
    auto bond = [&](int p, int q, double t) {
        hamiltonian_(p, q) = -t;
        hamiltonian_(q, p) = -t;
    };
    for (int j = 0; j < n; ++j) {
        bond(j, n + j, v); // rung a_j — b_j
        if (j + 1 < n) {
            bond(j, j + 1, xi);         // a_j — a_{j+1}
            bond(n + j, n + j + 1, xi); // b_j — b_{j+1}
        }
    }
    // Möbius closure: a_N = b_0 and b_N = a_0.
    bond(n - 1, n, xi);         // a_{N-1} — b_0
    bond(2 * n - 1, 0, xi);     // b_{N-1} — a_0

    positions_.resize(dim, 3);
    for (int j = 0; j < n; ++j) {
        const auto ra = site_position(ring, j, Subring::a);
        const auto rb = site_position(ring, j, Subring::b);
        for (int c = 0; c < 3; ++c) {
            positions_(j, c) = ra[c];
            positions_(n + j, c) = rb[c];
        }
    }
}

Eigen::MatrixXd SiteBasisModel::twisted_shift() const {
    const int n = ring_.n();
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int j = 0; j + 1 < n; ++j) {
        s(j + 1, j) = 1.0;         // a_j → a_{j+1}
        s(n + j + 1, n + j) = 1.0; // b_j → b_{j+1}
    }
    s(n, n - 1) = 1.0;     // a_{N-1} → b_0
    s(0, 2 * n - 1) = 1.0; // b_{N-1} → a_0
    return s;
}

std::vector<double> site_oracle_spectrum(const SiteBasisModel& model) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(model.hamiltonian(),
                                                          Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("site_oracle_spectrum: eigensolver failed");
    const auto& ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

std::vector<LabeledMode> site_oracle_eigenbasis(const SiteBasisModel& model) {
    const MoebiusRing& ring = model.ring();
    const double delta = ring.delta();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(model.hamiltonian());
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("site_oracle_eigenbasis: eigensolver failed");
    const Eigen::VectorXd& energies = solver.eigenvalues();
    const Eigen::MatrixXd& vectors = solver.eigenvectors();
    const Eigen::MatrixXd shift = model.twisted_shift();

    const double scale = std::max(1.0, energies.cwiseAbs().maxCoeff());
    const double cluster_tol = 1e-8 * scale;

    std::vector<LabeledMode> modes;
    modes.reserve(model.dimension());

    int lo = 0;
    while (lo < model.dimension()) {
        int hi = lo + 1;
        while (hi < model.dimension() && energies(hi) - energies(hi - 1) <= cluster_tol) ++hi;
        const int size = hi - lo;

        // Restrict the shift to the degenerate subspace and split it there.
        // The restriction is orthogonal, so its eigenvalues are unit phases
        // and every simultaneous eigenvector has a definite momentum.
        Eigen::MatrixXd basis = vectors.middleCols(lo, size);
        Eigen::MatrixXcd block =
            (basis.transpose() * shift * basis).cast<std::complex<double>>();
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> block_solver(block);
        if (block_solver.info() != Eigen::Success)
            throw std::runtime_error("site_oracle_eigenbasis: shift block diagonalization failed");

        for (int u = 0; u < size; ++u) {
            const std::complex<double> phase = block_solver.eigenvalues()(u);
            if (std::fabs(std::abs(phase) - 1.0) > 1e-8)
                throw std::runtime_error("site_oracle_eigenbasis: shift eigenvalue off the unit circle");
            Eigen::VectorXcd w = basis * block_solver.eigenvectors().col(u);
            w.normalize();

            const double ratio = std::arg(phase) / delta;
            const double down_miss = std::fabs(ratio - std::round(ratio));
            const double up_miss = std::fabs(ratio + 0.5 - std::round(ratio + 0.5));
            BandState state{};
            if (down_miss <= up_miss) {
                state = {ring.wrap_m(static_cast<int>(std::lround(ratio))), Band::down};
                if (down_miss > 1e-6)
                    throw std::runtime_error("site_oracle_eigenbasis: ambiguous momentum phase");
            } else {
                state = {ring.wrap_m(static_cast<int>(std::lround(ratio + 0.5))), Band::up};
                if (up_miss > 1e-6)
                    throw std::runtime_error("site_oracle_eigenbasis: ambiguous momentum phase");
            }
            modes.push_back({state, energies(lo + u), std::move(w)});
        }
        lo = hi;
    }

    std::sort(modes.begin(), modes.end(), [](const LabeledMode& a, const LabeledMode& b) {
        if (a.state.sigma != b.state.sigma) return a.state.sigma == Band::down;
        return a.state.m < b.state.m;
    });
    return modes;
}

std::array<std::complex<double>, 3>
site_oracle_dipole(const SiteBasisModel& model, const LabeledMode& u, const LabeledMode& v) {
    std::array<std::complex<double>, 3> out{};
    for (int c = 0; c < 3; ++c) {
        std::complex<double> acc = 0.0;
        for (int s = 0; s < model.dimension(); ++s)
            acc += std::conj(u.vector(s)) * model.positions()(s, c) * v.vector(s);
        out[c] = -acc; // dipole of a unit negative charge
    }
    return out;
}

} // namespace moebius
