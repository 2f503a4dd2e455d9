#pragma once

#include <cstddef>
#include <vector>

#include "betaplane/errors.hpp"

namespace betaplane {

// Composite-Simpson weights for m+1 uniform nodes with spacing h.
// Odd interval counts get a 3/8 tail; a single interval falls back to the
// trapezoid rule.
inline std::vector<double> simpson_weights(std::size_t m, double h) {
    std::vector<double> w(m + 1, 0.0);
    if (m == 0) return w;
    if (m == 1) {
        w[0] = w[1] = 0.5 * h;
        return w;
    }
    const std::size_t simpson_end = (m % 2 == 0) ? m : m - 3;
    if (simpson_end >= 2) {
        w[0] += h / 3.0;
        w[simpson_end] += h / 3.0;
        for (std::size_t i = 1; i < simpson_end; ++i)
            w[i] += (i % 2 == 1) ? 4.0 * h / 3.0 : 2.0 * h / 3.0;
    }
    if (m % 2 == 1) {
        if (m == 1) return w; // handled above
        // 3/8 rule on the last three intervals
        w[m - 3] += 3.0 * h / 8.0;
        w[m - 2] += 9.0 * h / 8.0;
        w[m - 1] += 9.0 * h / 8.0;
        w[m] += 3.0 * h / 8.0;
    }
    return w;
}

// Verifies that a time grid is uniform starting at t0; returns the spacing.
inline double uniform_spacing(const std::vector<double>& t, double rel_tol = 1e-9) {
    if (t.size() < 2) throw ConfigError("quadrature: need at least two nodes");
    const double h = t[1] - t[0];
    if (!(h > 0.0)) throw ConfigError("quadrature: nodes must increase");
    for (std::size_t i = 1; i + 1 < t.size(); ++i) {
        const double hi = t[i + 1] - t[i];
        if (std::abs(hi - h) > rel_tol * std::max(std::abs(h), 1.0))
            throw ConfigError("quadrature: non-uniform time grid");
    }
    return h;
}

} // namespace betaplane
