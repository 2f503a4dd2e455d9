#pragma once

#include <cstdint>

#include "betaplane/field.hpp"

namespace betaplane {

// Built-in initial-data families. gaussian(mass=1, width=2*sqrt(t)) matches
// the Gauss kernel G_t.
RealField gaussian_bump(const GridSpec& g, double mass, double width,
                        double cx = 0.0, double cy = 0.0);

// Mean-zero dipole: amplitude * (x1-cx)/width * exp(-|x-c|^2/width^2).
RealField dipole(const GridSpec& g, double amplitude, double width,
                 double cx = 0.0, double cy = 0.0);

// Radial annular bump amplitude * exp(-(r-radius)^2/width^2); the nonlinear
// term vanishes identically on radial data.
RealField radial_ring(const GridSpec& g, double amplitude, double radius,
                      double width);

// Mean-zero random field with spectrum supported on k_lo <= |k| <= k_hi
// (integer radius), scaled to ||f||_{L^2} = amplitude. Reproducible across
// platforms: mt19937_64 with an explicit Box-Muller transform.
RealField random_band_limited(const GridSpec& g, std::uint64_t seed, int k_lo,
                              int k_hi, double amplitude);

} // namespace betaplane
