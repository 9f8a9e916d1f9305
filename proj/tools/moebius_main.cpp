// Copyright 2026 The moebius-optics Authors
// SPDX-License-Identifier: Apache-2.0

// Batch CLI for the Möbius-medium response library. Subcommands emit
// tabular data (CSV or JSON) on stdout or into --out. Exit codes: 0 success,
// 1 usage/config error, 2 computation or I/O error.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "moebius/emit.hpp"

namespace {

struct Overrides {
    std::optional<std::string> config_path;
    std::optional<int> n;
    std::optional<double> v_ev, xi_ev, w_nm, r_nm;
    std::optional<double> lifetime_ns, gamma_ev, v0_nm3;
    bool local_field = false;
    std::optional<std::string> approx;
    std::optional<double> omega_min_ev, omega_max_ev;
    std::optional<int> steps;
    std::optional<double> theta_deg, theta_min_deg, theta_max_deg;
    std::optional<int> theta_steps;
    std::optional<std::string> pol, format, out;
};

void add_shared_options(CLI::App& app, Overrides& o) {
    app.add_option("--config", o.config_path, "JSON config file (flags override it)");
    app.add_option("--n", o.n, "sites per sub-ring");
    app.add_option("--v-ev", o.v_ev, "inter-ring hopping [eV]");
    app.add_option("--xi-ev", o.xi_ev, "intra-ring hopping [eV]");
    app.add_option("--w-nm", o.w_nm, "atom radius [nm]");
    app.add_option("--r-nm", o.r_nm, "ring radius [nm] (default N*W/pi)");
    app.add_option("--lifetime-ns", o.lifetime_ns, "excited-state lifetime [ns]");
    app.add_option("--gamma-ev", o.gamma_ev, "linewidth [eV] (overrides lifetime)");
    app.add_option("--v0-nm3", o.v0_nm3, "molecular volume [nm^3]");
    app.add_flag("--local-field", o.local_field, "apply the local-field correction");
    app.add_option("--approx", o.approx, "response sum: full or two-term")
        ->check(CLI::IsMember({"full", "two-term", "two_term"}));
    app.add_option("--omega-min-ev", o.omega_min_ev, "scan start / evaluation energy [eV]");
    app.add_option("--omega-max-ev", o.omega_max_ev, "scan end [eV]");
    app.add_option("--steps", o.steps, "energy grid points");
    app.add_option("--theta-deg", o.theta_deg, "incidence angle [deg]");
    app.add_option("--theta-min-deg", o.theta_min_deg, "sweep: first angle [deg]");
    app.add_option("--theta-max-deg", o.theta_max_deg, "sweep: last angle [deg]");
    app.add_option("--theta-steps", o.theta_steps, "sweep: angle grid points");
    app.add_option("--pol", o.pol, "polarization: H or E")->check(CLI::IsMember({"H", "E"}));
    app.add_option("--format", o.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", o.out, "output file (default stdout)");
}

// defaults < config file < flags
moebius::RunConfig resolve(const Overrides& o) {
    moebius::RunConfig cfg;
    if (o.config_path) cfg = moebius::apply_config_file(std::move(cfg), *o.config_path);
    if (o.n) cfg.n = *o.n;
    if (o.v_ev) cfg.v_ev = *o.v_ev;
    if (o.xi_ev) cfg.xi_ev = *o.xi_ev;
    if (o.w_nm) cfg.w_nm = *o.w_nm;
    if (o.r_nm) cfg.r_nm = *o.r_nm;
    if (o.lifetime_ns) cfg.lifetime_ns = *o.lifetime_ns;
    if (o.gamma_ev) cfg.gamma_ev = *o.gamma_ev;
    if (o.v0_nm3) cfg.v0_nm3 = *o.v0_nm3;
    if (o.local_field) cfg.local_field = true;
    if (o.approx) cfg.approximation = moebius::approximation_from_string(*o.approx);
    if (o.omega_min_ev) cfg.omega_min_ev = *o.omega_min_ev;
    if (o.omega_max_ev) cfg.omega_max_ev = *o.omega_max_ev;
    if (o.steps) cfg.steps = *o.steps;
    if (o.theta_deg) cfg.theta_deg = *o.theta_deg;
    if (o.theta_min_deg) cfg.theta_min_deg = *o.theta_min_deg;
    if (o.theta_max_deg) cfg.theta_max_deg = *o.theta_max_deg;
    if (o.theta_steps) cfg.theta_steps = *o.theta_steps;
    if (o.pol) cfg.polarization = moebius::polarization_from_string(*o.pol);
    if (o.format) cfg.format = moebius::format_from_string(*o.format);
    if (o.out) cfg.out_path = *o.out;
    cfg.validate();
    return cfg;
}

int run(const moebius::RunConfig& cfg,
        const std::function<void(const moebius::RunConfig&, std::ostream&)>& emit) {
    if (cfg.out_path.empty()) {
        emit(cfg, std::cout);
        return 0;
    }
    std::ofstream out(cfg.out_path);
    if (!out) {
        std::cerr << "error: cannot open output file '" << cfg.out_path << "'\n";
        return 2;
    }
    emit(cfg, out);
    if (!out) {
        std::cerr << "error: write to '" << cfg.out_path << "' failed\n";
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Electromagnetic response and refraction of a Möbius-ring molecular medium"};
    app.require_subcommand(1);
    app.fallthrough();

    Overrides o;
    add_shared_options(app, o);

    auto* spectrum = app.add_subcommand("spectrum", "tight-binding spectrum and filling");
    auto* transitions = app.add_subcommand("transitions", "allowed intra-band transitions");
    auto* epsilon = app.add_subcommand("epsilon", "permittivity scan");
    auto* mu = app.add_subcommand("mu", "permeability eigenvalue scan");
    auto* window = app.add_subcommand("window", "negative-permittivity window");
    bool compare = false;
    window->add_flag("--compare", compare, "all four bare/local x full/two-term combinations");
    auto* refract = app.add_subcommand("refract", "single-point refraction solution");
    auto* sweep = app.add_subcommand("sweep", "refraction over an (omega, theta) grid");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 1;
    }

    try {
        const moebius::RunConfig cfg = resolve(o);
        using moebius::RunConfig;
        if (spectrum->parsed()) return run(cfg, moebius::emit_spectrum);
        if (transitions->parsed()) return run(cfg, moebius::emit_transitions);
        if (epsilon->parsed()) return run(cfg, moebius::emit_epsilon);
        if (mu->parsed()) return run(cfg, moebius::emit_mu);
        if (window->parsed())
            return run(cfg, [&](const RunConfig& c, std::ostream& os) {
                moebius::emit_window(c, os, compare);
            });
        if (refract->parsed()) return run(cfg, moebius::emit_refract);
        if (sweep->parsed()) return run(cfg, moebius::emit_sweep);
        std::cerr << "error: no subcommand selected\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
