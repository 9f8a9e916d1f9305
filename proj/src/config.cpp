// Copyright 2026 The moebius-optics Authors
// SPDX-License-Identifier: Apache-2.0

#include "moebius/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace moebius {

MoebiusRing RunConfig::ring() const {
    return MoebiusRing(n, w_nm, v_ev, xi_ev, r_nm.value_or(0.0));
}

ResponseParams RunConfig::response(const MoebiusRing& r) const {
    ResponseParams p = ResponseParams::for_ring(r, lifetime_ns);
    if (gamma_ev) p.gamma = *gamma_ev;
    if (v0_nm3) p.v0 = *v0_nm3;
    p.local_field = local_field;
    p.approximation = approximation;
    p.validate();
    return p;
}

Medium RunConfig::medium() const {
    const MoebiusRing r = ring();
    return Medium::create(r, response(r));
}

void RunConfig::validate() const {
    if (omega_min_ev && omega_max_ev && !(*omega_min_ev < *omega_max_ev))
        throw std::invalid_argument("config: omega_min_ev must be below omega_max_ev");
    if (steps < 2) throw std::invalid_argument("config: steps must be at least 2");
    if (theta_deg < 0.0 || theta_deg >= 90.0)
        throw std::invalid_argument("config: theta_deg must lie in [0, 90)");
    if (theta_steps < 1) throw std::invalid_argument("config: theta_steps must be positive");
    if (theta_min_deg > theta_max_deg)
        throw std::invalid_argument("config: theta_min_deg must not exceed theta_max_deg");
}

std::string to_string(Approximation a) {
    return a == Approximation::full ? "full" : "two_term";
}
std::string to_string(Polarization p) { return p == Polarization::H ? "H" : "E"; }
std::string to_string(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }
std::string to_string(RefractionClass c) {
    switch (c) {
        case RefractionClass::negative: return "negative";
        case RefractionClass::positive: return "positive";
        default: return "evanescent";
    }
}
std::string to_string(Band b) { return b == Band::up ? "up" : "down"; }

Approximation approximation_from_string(const std::string& s) {
    if (s == "full") return Approximation::full;
    if (s == "two_term" || s == "two-term") return Approximation::two_term;
    throw std::invalid_argument("config: approximation must be 'full' or 'two-term'");
}

Polarization polarization_from_string(const std::string& s) {
    if (s == "H" || s == "h") return Polarization::H;
    if (s == "E" || s == "e") return Polarization::E;
    throw std::invalid_argument("config: polarization must be 'H' or 'E'");
}

OutputFormat format_from_string(const std::string& s) {
    if (s == "csv") return OutputFormat::csv;
    if (s == "json") return OutputFormat::json;
    throw std::invalid_argument("config: format must be 'csv' or 'json'");
}

RunConfig apply_config_json(RunConfig cfg, const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("config: document must be a JSON object");

    try {
        for (const auto& [key, value] : doc.items()) {
            if (key == "n") cfg.n = value.get<int>();
            else if (key == "w_nm") cfg.w_nm = value.get<double>();
            else if (key == "v_ev") cfg.v_ev = value.get<double>();
            else if (key == "xi_ev") cfg.xi_ev = value.get<double>();
            else if (key == "r_nm") cfg.r_nm = value.get<double>();
            else if (key == "lifetime_ns") cfg.lifetime_ns = value.get<double>();
            else if (key == "gamma_ev") cfg.gamma_ev = value.get<double>();
            else if (key == "v0_nm3") cfg.v0_nm3 = value.get<double>();
            else if (key == "local_field") cfg.local_field = value.get<bool>();
            else if (key == "approximation")
                cfg.approximation = approximation_from_string(value.get<std::string>());
            else if (key == "omega_min_ev") cfg.omega_min_ev = value.get<double>();
            else if (key == "omega_max_ev") cfg.omega_max_ev = value.get<double>();
            else if (key == "steps") cfg.steps = value.get<int>();
            else if (key == "theta_deg") cfg.theta_deg = value.get<double>();
            else if (key == "theta_min_deg") cfg.theta_min_deg = value.get<double>();
            else if (key == "theta_max_deg") cfg.theta_max_deg = value.get<double>();
            else if (key == "theta_steps") cfg.theta_steps = value.get<int>();
            else if (key == "polarization")
                cfg.polarization = polarization_from_string(value.get<std::string>());
            else if (key == "format") cfg.format = format_from_string(value.get<std::string>());
            else if (key == "out") cfg.out_path = value.get<std::string>();
            else throw std::invalid_argument("config: unknown key '" + key + "'");
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("config: bad field type: ") + e.what());
    }
    return cfg;
}

RunConfig apply_config_file(RunConfig cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return apply_config_json(std::move(cfg), buffer.str());
}

} // namespace moebius
