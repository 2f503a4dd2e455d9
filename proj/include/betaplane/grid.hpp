#pragma once

#include <cstddef>
#include <cstdint>

#include "betaplane/errors.hpp"

namespace betaplane {

// Periodic computational box [-L/2, L/2)^2 sampled on an n x n lattice.
// Physical points:  x_i = (L/n)*i - L/2, i = 0..n-1 per axis.
// Frequencies:      xi  = (2*pi/L)*k with integer k in [-n/2, n/2).
// Spectral storage follows FFT order per axis: k = 0,1,..,n/2-1,-n/2,..,-1.
class GridSpec {
public:
    GridSpec(std::size_t n, double box_length)
        : n_(n), box_length_(box_length) {
        if (n < 8 || (n & (n - 1)) != 0)
            throw ConfigError("grid: n must be a power of two and >= 8");
        if (!(box_length > 0.0))
            throw ConfigError("grid: box_length must be positive");
    }

    std::size_t n() const { return n_; }
    double box_length() const { return box_length_; }
    std::size_t size() const { return n_ * n_; }

    double dx() const { return box_length_ / static_cast<double>(n_); }
    double cell_area() const { return dx() * dx(); }
    double dxi() const { return 6.283185307179586476925286766559 / box_length_; }

    // Signed integer wavenumber for a storage index along one axis.
    int wave_index(std::size_t i) const {
        return i < n_ / 2 ? static_cast<int>(i)
                          : static_cast<int>(i) - static_cast<int>(n_);
    }

    double frequency(std::size_t i) const { return dxi() * wave_index(i); }
    double x_coord(std::size_t i) const {
        return dx() * static_cast<double>(i) - 0.5 * box_length_;
    }

    // Row-major flat index; ix is the x1 (fastest) axis.
    std::size_t index(std::size_t iy, std::size_t ix) const { return iy * n_ + ix; }

    bool operator==(const GridSpec&) const = default;

private:
    std::size_t n_;
    double box_length_;
};

} // namespace betaplane
