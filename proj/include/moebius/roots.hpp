// Copyright 2026 The moebius-optics Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <optional>

namespace moebius {

/// Bisection on a bracketing interval. Returns the midpoint of the final
/// bracket once it is narrower than tol (absolute, in the argument), or
/// nullopt when [lo, hi] does not actually bracket a sign change.
template <typename F>
std::optional<double> bisect_root(F&& f, double lo, double hi, double tol) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (std::signbit(flo) == std::signbit(fhi)) return std::nullopt;

    // 200 halvings take any physical bracket below double resolution.
    for (int i = 0; i < 200 && hi - lo > tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break; // bracket at machine resolution
        const double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if (std::signbit(fmid) == std::signbit(flo)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace moebius
