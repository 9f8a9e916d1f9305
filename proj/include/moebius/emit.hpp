// Copyright 2026 The moebius-optics Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>

#include "moebius/config.hpp"

// Figure-data emitters behind the CLI subcommands. Every row holds the
// inputs it was computed from, so any row can be re-derived by calling the
// library with the row's own omega/theta values. Output is deterministic:
// fixed column order, 17-significant-digit decimal floats.

namespace moebius {

void emit_spectrum(const RunConfig& cfg, std::ostream& os);
void emit_transitions(const RunConfig& cfg, std::ostream& os);
void emit_epsilon(const RunConfig& cfg, std::ostream& os);
void emit_mu(const RunConfig& cfg, std::ostream& os);
void emit_window(const RunConfig& cfg, std::ostream& os, bool compare = false);
void emit_refract(const RunConfig& cfg, std::ostream& os);
void emit_sweep(const RunConfig& cfg, std::ostream& os);

} // namespace moebius
