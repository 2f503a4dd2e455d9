#include "betaplane/norms.hpp"

#include <cmath>
#include <iostream>
#include <limits>

#include "betaplane/fft.hpp"
#include "betaplane/kernels.hpp"
#include "betaplane/symbols.hpp"

namespace betaplane {

double lebesgue_norm(const RealField& f, double p) {
    if (std::isinf(p)) return kernels::max_abs(std::span<const double>(f.values));
    if (!(p >= 1.0)) throw ConfigError("lebesgue_norm: p must be >= 1");
    const double cell = f.grid.cell_area();
    if (p == 1.0) return cell * kernels::sum_abs(f.values);
    if (p == 2.0) return std::sqrt(cell * kernels::reduce_sum(f.values.size(), [&](std::size_t i) {
                      return f.values[i] * f.values[i];
                  }));
    const double s = kernels::sum_abs_pow(f.values, p);
    return std::pow(cell * s, 1.0 / p);
}

double sobolev_norm(const SpectralField& f, double s, double a) {
    if (!(a >= 2.0) && !std::isinf(a))
        throw ConfigError("sobolev_norm: a must be >= 2 or inf");
    SpectralField g = apply_symbol(f, riesz_symbol(f.grid, s));
    return lebesgue_norm(inverse_transform_nocheck(g), a);
}

double sobolev_norm(const RealField& f, double s, double a) {
    return sobolev_norm(forward_transform(f), s, a);
}

double besov_norm(const SpectralField& f, double s, double p, double r,
                  const LPBank& bank, double warn_threshold) {
    if (!(p >= 1.0) && !std::isinf(p)) throw ConfigError("besov_norm: p must be >= 1");
    if (!(r >= 1.0) && !std::isinf(r)) throw ConfigError("besov_norm: r must be >= 1");
    const double gap = lp_coverage_gap(f, bank);
    if (gap > warn_threshold)
        std::cerr << "besov_norm: warning: fraction " << gap
                  << " of spectral mass lies outside the bank's dyadic range ["
                  << bank.k_min << ", " << bank.k_max << "]\n";
    double acc = 0.0;
    double worst = 0.0;
    for (int k = bank.k_min; k <= bank.k_max; ++k) {
        const double block_lp = lebesgue_norm(inverse_transform_nocheck(lp_project(f, k, bank)), p);
        const double term = std::pow(2.0, s * k) * block_lp;
        if (std::isinf(r))
            worst = std::max(worst, term);
        else
            acc += std::pow(term, r);
    }
    return std::isinf(r) ? worst : std::pow(acc, 1.0 / r);
}

double besov_norm(const RealField& f, double s, double p, double r,
                  const LPBank& bank, double warn_threshold) {
    return besov_norm(forward_transform(f), s, p, r, bank, warn_threshold);
}

double l2_norm_spectral(const SpectralField& f) {
    return std::sqrt(kernels::sum_abs2(std::span<const complex>(f.coeffs))) / f.grid.box_length();
}

double hdot_norm_spectral(const SpectralField& f, double s) {
    const std::size_t n = f.grid.n();
    const double sum = kernels::reduce_sum(f.grid.size(), [&](std::size_t idx) {
        const std::size_t iy = idx / n, ix = idx % n;
        const double x1 = f.grid.frequency(ix);
        const double x2 = f.grid.frequency(iy);
        const double xi2 = x1 * x1 + x2 * x2;
        if (xi2 == 0.0) return 0.0;
        return std::pow(xi2, s) * std::norm(f.coeffs[idx]);
    });
    return std::sqrt(sum) / f.grid.box_length();
}

double dissipation_rate(const SpectralField& f) {
    const std::size_t n = f.grid.n();
    const double sum = kernels::reduce_sum(f.grid.size(), [&](std::size_t idx) {
        const std::size_t iy = idx / n, ix = idx % n;
        const double x1 = f.grid.frequency(ix);
        const double x2 = f.grid.frequency(iy);
        return (x1 * x1 + x2 * x2) * std::norm(f.coeffs[idx]);
    });
    return sum / (f.grid.box_length() * f.grid.box_length());
}

double inner_product(const RealField& f, const RealField& g) {
    if (!(f.grid == g.grid)) throw ConfigError("inner_product: grid mismatch");
    return f.grid.cell_area() * kernels::dot(f.values, g.values);
}

double sup_norm_oversampled(const SpectralField& f) {
    const std::size_t n = f.grid.n();
    const std::size_t m = 2 * n;
    // Zero-pad the spectrum onto a 2n lattice; Nyquist split keeps the
    // interpolant real and mass-consistent.
    std::vector<complex> padded(m * m, complex(0.0));
    auto dst = [&](int kx, int ky) -> complex& {
        const std::size_t ix = kx >= 0 ? static_cast<std::size_t>(kx)
                                       : m + static_cast<std::size_t>(kx);
        const std::size_t iy = ky >= 0 ? static_cast<std::size_t>(ky)
                                       : m + static_cast<std::size_t>(ky);
        return padded[iy * m + ix];
    };
    const int half = static_cast<int>(n / 2);
    for (std::size_t iy = 0; iy < n; ++iy) {
        const int ky = f.grid.wave_index(iy);
        for (std::size_t ix = 0; ix < n; ++ix) {
            const int kx = f.grid.wave_index(ix);
            complex c = f.coeffs[iy * n + ix];
            const bool nx = kx == -half, ny = ky == -half;
            if (nx && ny) {
                dst(-half, -half) += 0.25 * c;
                dst(half, -half) += 0.25 * c;
                dst(-half, half) += 0.25 * c;
                dst(half, half) += 0.25 * c;
            } else if (nx) {
                dst(-half, ky) += 0.5 * c;
                dst(half, ky) += 0.5 * c;
            } else if (ny) {
                dst(kx, -half) += 0.5 * c;
                dst(kx, half) += 0.5 * c;
            } else {
                dst(kx, ky) = c;
            }
        }
    }
    GridSpec fine(m, f.grid.box_length());
    SpectralField F(fine, std::move(padded));
    RealField fr = inverse_transform_nocheck(F);
    return kernels::max_abs(std::span<const double>(fr.values));
}

} // namespace betaplane
