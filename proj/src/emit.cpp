// Copyright 2026 The moebius-optics Authors
// SPDX-License-Identifier: Apache-2.0

#include "moebius/emit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <variant>
#include <vector>

namespace moebius {

namespace {

using Value = std::variant<std::monostate, long long, double, std::string>;

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// One table per emitter; CSV gets a single header line, JSON an array of
// objects with the same field names.
class TableWriter {
public:
    TableWriter(std::ostream& os, OutputFormat format, std::vector<std::string> columns)
        : os_(os), format_(format), columns_(std::move(columns)) {
        if (format_ == OutputFormat::csv) {
            for (std::size_t i = 0; i < columns_.size(); ++i)
                os_ << (i ? "," : "") << columns_[i];
            os_ << "\n";
        } else {
            os_ << "[";
        }
    }

    void row(const std::vector<Value>& values) {
        if (format_ == OutputFormat::csv) {
            for (std::size_t i = 0; i < values.size(); ++i) {
                if (i) os_ << ",";
                os_ << cell(values[i], false);
            }
            os_ << "\n";
        } else {
            os_ << (first_row_ ? "\n" : ",\n");
            os_ << "  {";
            for (std::size_t i = 0; i < values.size(); ++i) {
                if (i) os_ << ", ";
                os_ << "\"" << columns_[i] << "\": " << cell(values[i], true);
            }
            os_ << "}";
            first_row_ = false;
        }
    }

    ~TableWriter() {
        if (format_ == OutputFormat::json) os_ << "\n]\n";
    }

private:
    static std::string cell(const Value& v, bool json) {
        if (std::holds_alternative<std::monostate>(v)) return json ? "null" : "nan";
        if (const auto* i = std::get_if<long long>(&v)) return std::to_string(*i);
        if (const auto* d = std::get_if<double>(&v)) return format_double(*d);
        const auto& s = std::get<std::string>(v);
        return json ? "\"" + s + "\"" : s;
    }

    std::ostream& os_;
    OutputFormat format_;
    std::vector<std::string> columns_;
    bool first_row_ = true;
};

// Anchor frequencies for the detuning columns: the lowest distinct
// transition frequency for permittivity scans, the next one for
// permeability scans.
std::pair<double, double> anchor_frequencies(const Medium& medium) {
    double f1 = std::numeric_limits<double>::infinity();
    double f2 = std::numeric_limits<double>::infinity();
    for (const auto& t : medium.transitions) {
        if (t.frequency < f1) {
            if (f1 < f2) f2 = f1;
            f1 = t.frequency;
        } else if (t.frequency > f1 && t.frequency < f2) {
            f2 = t.frequency;
        }
    }
    if (!std::isfinite(f1))
        throw std::invalid_argument(
            "scan: the configured ring has no allowed optical transitions");
    if (!std::isfinite(f2)) f2 = f1;
    return {f1, f2};
}

std::vector<double> linspace(double lo, double hi, int steps) {
    std::vector<double> out;
    out.reserve(steps);
    const double step = (hi - lo) / (steps - 1);
    for (int i = 0; i < steps; ++i)
        out.push_back(i + 1 == steps ? hi : lo + i * step);
    return out;
}

void refraction_row(TableWriter& table, const Medium& medium, double anchor, double omega,
                    double theta_deg, Polarization pol) {
    const RefractionSolution sol = classify_refraction(medium, omega, theta_deg, pol);
    table.row({omega, omega - anchor, theta_deg, sol.k_ty, sol.k_tz, sol.s_ty, sol.s_tz,
               to_string(sol.classification)});
}

const std::vector<std::string> kRefractionColumns = {
    "omega_ev", "detuning_ev", "theta_deg", "k_ty_rad_nm",
    "k_tz_rad_nm", "s_ty", "s_tz", "classification"};

} // namespace

void emit_spectrum(const RunConfig& cfg, std::ostream& os) {
    cfg.validate();
    const MoebiusRing ring = cfg.ring();
    auto spectrum = fill_electrons(ring, build_spectrum(ring), 2 * ring.n());
    std::sort(spectrum.begin(), spectrum.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
        if (a.energy != b.energy) return a.energy < b.energy;
        if (std::abs(a.state.m) != std::abs(b.state.m))
            return std::abs(a.state.m) < std::abs(b.state.m);
        if ((a.state.m < 0) != (b.state.m < 0)) return b.state.m < 0;
        return a.state.sigma == Band::down && b.state.sigma == Band::up;
    });

    TableWriter table(os, cfg.format, {"m", "sigma", "energy_ev", "occupancy"});
    for (const auto& e : spectrum)
        table.row({static_cast<long long>(e.state.m), to_string(e.state.sigma), e.energy,
                   static_cast<long long>(e.occupancy)});
}

void emit_transitions(const RunConfig& cfg, std::ostream& os) {
    cfg.validate();
    const Medium medium = cfg.medium();
    TableWriter table(os, cfg.format,
                      {"m_initial", "m_final", "sigma", "n_initial", "n_final", "frequency_ev",
                       "dipole_e_nm", "magnetic_coupling"});
    for (const auto& t : medium.transitions)
        table.row({static_cast<long long>(t.initial.m), static_cast<long long>(t.final_state.m),
                   to_string(t.initial.sigma), static_cast<long long>(t.n_initial),
                   static_cast<long long>(t.n_final), t.frequency, t.electric_strength,
                   t.magnetic_coupling});
}

void emit_epsilon(const RunConfig& cfg, std::ostream& os) {
    cfg.validate();
    const Medium medium = cfg.medium();
    const double anchor = anchor_frequencies(medium).first;
    const double lo = cfg.omega_min_ev.value_or(anchor - 0.1);
    const double hi = cfg.omega_max_ev.value_or(anchor + 0.3);

    TableWriter table(os, cfg.format, {"omega_ev", "detuning_ev", "eps_xx", "eps_zz"});
    for (double omega : linspace(lo, hi, cfg.steps)) {
        const PermittivityTensor eps = medium.epsilon(omega);
        table.row({omega, omega - anchor, eps.components(0, 0), eps.components(2, 2)});
    }
}

void emit_mu(const RunConfig& cfg, std::ostream& os) {
    cfg.validate();
    const Medium medium = cfg.medium();
    const double anchor = anchor_frequencies(medium).second;
    const double lo = cfg.omega_min_ev.value_or(anchor - 0.2);
    const double hi = cfg.omega_max_ev.value_or(anchor + 0.2);

    TableWriter table(os, cfg.format, {"omega_ev", "detuning_ev", "mu1", "mu2", "mu3"});
    for (double omega : linspace(lo, hi, cfg.steps)) {
        const PermeabilityTensor mu = medium.mu(omega);
        table.row({omega, omega - anchor, mu.eigenvalues[0], mu.eigenvalues[1], mu.eigenvalues[2]});
    }
}

void emit_window(const RunConfig& cfg, std::ostream& os, bool compare) {
    cfg.validate();
    TableWriter table(os, cfg.format,
                      {"local_field", "approximation", "found", "omega_low_ev", "omega_high_ev",
                       "bandwidth_ev"});
    auto one = [&](bool local, Approximation approx) {
        RunConfig variant = cfg;
        variant.local_field = local;
        variant.approximation = approx;
        const auto window = variant.medium().window();
        if (window)
            table.row({static_cast<long long>(local), to_string(approx), 1LL, window->omega_low,
                       window->omega_high, window->bandwidth});
        else
            table.row({static_cast<long long>(local), to_string(approx), 0LL, std::monostate{},
                       std::monostate{}, std::monostate{}});
    };
    if (compare) {
        for (bool local : {false, true})
            for (Approximation approx : {Approximation::full, Approximation::two_term})
                one(local, approx);
    } else {
        one(cfg.local_field, cfg.approximation);
    }
}

void emit_refract(const RunConfig& cfg, std::ostream& os) {
    cfg.validate();
    const Medium medium = cfg.medium();
    const auto [f1, f2] = anchor_frequencies(medium);
    const auto window = medium.window();
    const double omega = cfg.omega_min_ev.value_or(
        window ? 0.5 * (window->omega_low + window->omega_high) : 0.5 * (f1 + f2));

    TableWriter table(os, cfg.format, kRefractionColumns);
    refraction_row(table, medium, f1, omega, cfg.theta_deg, cfg.polarization);
}

void emit_sweep(const RunConfig& cfg, std::ostream& os) {
    cfg.validate();
    const Medium medium = cfg.medium();
    const auto [f1, f2] = anchor_frequencies(medium);
    const auto window = medium.window();
    const double lo = cfg.omega_min_ev.value_or(window ? window->omega_low : f1);
    const double hi = cfg.omega_max_ev.value_or(window ? window->omega_high : f2);

    std::vector<double> thetas = cfg.theta_steps == 1
                                     ? std::vector<double>{cfg.theta_min_deg}
                                     : linspace(cfg.theta_min_deg, cfg.theta_max_deg, cfg.theta_steps);

    TableWriter table(os, cfg.format, kRefractionColumns);
    for (double theta : thetas)
        for (double omega : linspace(lo, hi, cfg.steps))
            refraction_row(table, medium, f1, omega, theta, cfg.polarization);
}

} // namespace moebius
