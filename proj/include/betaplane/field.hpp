#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "betaplane/grid.hpp"

namespace betaplane {

using complex = std::complex<double>;

// Physical-space samples, row-major, values[iy*n + ix] at
// x = (x1(ix), x2(iy)).
struct RealField {
    GridSpec grid;
    std::vector<double> values;

    explicit RealField(const GridSpec& g) : grid(g), values(g.size(), 0.0) {}
    RealField(const GridSpec& g, std::vector<double> v)
        : grid(g), values(std::move(v)) {}
};

// Fourier coefficients normalized to approximate the continuum transform
// F f(xi) = \int f(x) e^{-i x.xi} dx.  Storage in FFT order per axis.
struct SpectralField {
    GridSpec grid;
    std::vector<complex> coeffs;

    explicit SpectralField(const GridSpec& g) : grid(g), coeffs(g.size(), complex(0.0)) {}
    SpectralField(const GridSpec& g, std::vector<complex> c)
        : grid(g), coeffs(std::move(c)) {}
};

struct VelocityPair {
    RealField u1;
    RealField u2;
};

inline bool all_finite(const RealField& f) {
    for (double v : f.values)
        if (!std::isfinite(v)) return false;
    return true;
}

inline bool all_finite(const SpectralField& f) {
    for (const complex& c : f.coeffs)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    return true;
}

} // namespace betaplane
