#include "betaplane/initial_data.hpp"

#include <cmath>
#include <random>

#include "betaplane/fft.hpp"
#include "betaplane/norms.hpp"

namespace betaplane {

namespace {

template <class F>
RealField sample(const GridSpec& g, const F& f) {
    RealField out(g);
    const std::size_t n = g.n();
    for (std::size_t iy = 0; iy < n; ++iy) {
        const double y = g.x_coord(iy);
        for (std::size_t ix = 0; ix < n; ++ix)
            out.values[iy * n + ix] = f(g.x_coord(ix), y);
    }
    return out;
}

} // namespace

RealField gaussian_bump(const GridSpec& g, double mass, double width, double cx,
                        double cy) {
    if (!(width > 0.0)) throw ConfigError("gaussian_bump: width must be positive");
    const double inv_w2 = 1.0 / (width * width);
    const double amp = mass * inv_w2 / 3.14159265358979323846;
    return sample(g, [&](double x, double y) {
        const double dx = x - cx, dy = y - cy;
        return amp * std::exp(-(dx * dx + dy * dy) * inv_w2);
    });
}

RealField dipole(const GridSpec& g, double amplitude, double width, double cx,
                 double cy) {
    if (!(width > 0.0)) throw ConfigError("dipole: width must be positive");
    const double inv_w2 = 1.0 / (width * width);
    return sample(g, [&](double x, double y) {
        const double dx = x - cx, dy = y - cy;
        return amplitude * dx / width * std::exp(-(dx * dx + dy * dy) * inv_w2);
    });
}

RealField radial_ring(const GridSpec& g, double amplitude, double radius,
                      double width) {
    if (!(width > 0.0)) throw ConfigError("radial_ring: width must be positive");
    const double inv_w2 = 1.0 / (width * width);
    return sample(g, [&](double x, double y) {
        const double r = std::hypot(x, y);
        const double d = r - radius;
        return amplitude * std::exp(-d * d * inv_w2);
    });
}

RealField random_band_limited(const GridSpec& g, std::uint64_t seed, int k_lo,
                              int k_hi, double amplitude) {
    if (k_lo < 1 || k_hi < k_lo)
        throw ConfigError("random_band_limited: need 1 <= k_lo <= k_hi");
    if (k_hi >= static_cast<int>(g.n() / 2))
        throw ConfigError("random_band_limited: band exceeds the lattice");
    std::mt19937_64 rng(seed);
    auto uniform = [&rng]() {
        // top 53 bits -> [0, 1); implementation-independent
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };
    auto gauss = [&]() {
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * 3.14159265358979323846 * u2);
    };

    const std::size_t n = g.n();
    SpectralField F(g);
    auto at = [&](int kx, int ky) -> complex& {
        const std::size_t ix = static_cast<std::size_t>(kx >= 0 ? kx : static_cast<int>(n) + kx);
        const std::size_t iy = static_cast<std::size_t>(ky >= 0 ? ky : static_cast<int>(n) + ky);
        return F.coeffs[iy * n + ix];
    };
    // fill the upper half-plane (plus the positive kx half-axis) in a fixed
    // lattice order, mirroring conjugates
    for (int ky = -k_hi; ky <= k_hi; ++ky) {
        for (int kx = -k_hi; kx <= k_hi; ++kx) {
            const double kr = std::hypot(static_cast<double>(kx), static_cast<double>(ky));
            if (kr < k_lo || kr > k_hi) continue;
            if (ky < 0 || (ky == 0 && kx <= 0)) continue;
            const complex c(gauss(), gauss());
            at(kx, ky) = c;
            at(-kx, -ky) = std::conj(c);
        }
    }
    RealField f = inverse_transform_nocheck(F);
    const double l2 = lebesgue_norm(f, 2.0);
    if (l2 > 0.0) {
        const double s = amplitude / l2;
        for (double& v : f.values) v *= s;
    }
    return f;
}

} // namespace betaplane
