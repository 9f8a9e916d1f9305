// Copyright 2026 The moebius-optics Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include "moebius/refraction.hpp"
#include "moebius/response.hpp"

namespace moebius {

enum class OutputFormat { csv, json };

/// Every knob of a run. Defaults are the standard molecule (N = 12,
/// W = 0.077 nm, V = ξ = 3.6 eV, R = N·W/π, τ = 4 ns). Optional fields fall
/// back to values derived from the ring. Precedence when assembling a run:
/// command-line flags > config file > these defaults.
struct RunConfig {
    // ring
    int n = 12;
    double w_nm = 0.077;
    double v_ev = 3.6;
    double xi_ev = 3.6;
    std::optional<double> r_nm;

    // response
    double lifetime_ns = 4.0;
    std::optional<double> gamma_ev; // overrides the lifetime when set
    std::optional<double> v0_nm3;
    bool local_field = false;
    Approximation approximation = Approximation::full;

    // scans
    std::optional<double> omega_min_ev;
    std::optional<double> omega_max_ev;
    int steps = 2001;
    double theta_deg = 30.0;
    double theta_min_deg = 5.0;
    double theta_max_deg = 85.0;
    int theta_steps = 17;
    Polarization polarization = Polarization::H;

    // output
    OutputFormat format = OutputFormat::csv;
    std::string out_path; // empty → stdout

    MoebiusRing ring() const;
    ResponseParams response(const MoebiusRing& ring) const;
    Medium medium() const;

    /// Checks scan-range sanity; throws std::invalid_argument.
    void validate() const;
};

/// Parses a JSON config document (fields mirror RunConfig member names) on
/// top of `base`. Unknown keys are rejected. Throws std::invalid_argument on
/// malformed input.
RunConfig apply_config_json(RunConfig base, const std::string& json_text);

/// Reads and applies a JSON config file. Throws std::runtime_error when the
/// file cannot be read.
RunConfig apply_config_file(RunConfig base, const std::string& path);

std::string to_string(Approximation a);
std::string to_string(Polarization p);
std::string to_string(OutputFormat f);
std::string to_string(RefractionClass c);
std::string to_string(Band b);

Approximation approximation_from_string(const std::string& s);
Polarization polarization_from_string(const std::string& s);
OutputFormat format_from_string(const std::string& s);

} // namespace moebius
