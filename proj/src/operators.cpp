#include "betaplane/operators.hpp"

#include <cmath>
#include <iostream>

#include "betaplane/fft.hpp"
#include "betaplane/kernels.hpp"

namespace betaplane {

namespace {

template <class Op>
RealField via_spectrum(const RealField& w, const Op& op) {
    return inverse_transform_nocheck(op(forward_transform(w)));
}

} // namespace

SpectralField heat_propagate(const SpectralField& w, double t) {
    if (t < 0.0) throw ConfigError("heat_propagate: t must be nonnegative");
    return apply_symbol(w, heat_symbol(w.grid, t));
}

RealField heat_propagate(const RealField& w, double t) {
    return via_spectrum(w, [t](const SpectralField& f) { return heat_propagate(f, t); });
}

SpectralField rossby_propagate(const SpectralField& w, double beta, double t) {
    return apply_symbol(w, rossby_symbol(w.grid, beta * t));
}

RealField rossby_propagate(const RealField& w, double beta, double t) {
    return via_spectrum(w, [beta, t](const SpectralField& f) {
        return rossby_propagate(f, beta, t);
    });
}

SpectralField semigroup_propagate(const SpectralField& w, const SemigroupParams& p) {
    return apply_symbol(w, semigroup_symbol(w.grid, p));
}

RealField semigroup_propagate(const RealField& w, const SemigroupParams& p) {
    return via_spectrum(w, [&p](const SpectralField& f) { return semigroup_propagate(f, p); });
}

VelocityPair biot_savart(const SpectralField& w) {
    const GridSpec& g = w.grid;
    const std::size_t n = g.n();
    SpectralField u1(g), u2(g);
    const int half = static_cast<int>(n / 2);
#pragma omp parallel for schedule(static)
    for (long long iy = 0; iy < static_cast<long long>(n); ++iy) {
        const int ky = g.wave_index(static_cast<std::size_t>(iy));
        const double x2 = g.dxi() * ky;
        for (std::size_t ix = 0; ix < n; ++ix) {
            const int kx = g.wave_index(ix);
            if (kx == 0 && ky == 0) continue;
            const double x1 = g.dxi() * kx;
            const double inv = 1.0 / (x1 * x1 + x2 * x2);
            const std::size_t idx = static_cast<std::size_t>(iy) * n + ix;
            const complex c = w.coeffs[idx];
            // Nyquist lines carry no sign partner; zero the odd factors there.
            const double d2 = (ky == -half) ? 0.0 : x2;
            const double d1 = (kx == -half) ? 0.0 : x1;
            u1.coeffs[idx] = complex(0.0, d2 * inv) * c;
            u2.coeffs[idx] = complex(0.0, -d1 * inv) * c;
        }
    }
    return VelocityPair{inverse_transform_nocheck(u1), inverse_transform_nocheck(u2)};
}

VelocityPair biot_savart(const RealField& w) {
    return biot_savart(forward_transform(w));
}

SpectralField nonlinear_term(const SpectralField& w) {
    const GridSpec& g = w.grid;
    const std::size_t n = g.n();
    VelocityPair u = biot_savart(w);
    RealField wr = inverse_transform_nocheck(w);

    RealField p1(g), p2(g);
    kernels::multiply(std::span<const double>(u.u1.values),
                      std::span<const double>(wr.values), std::span<double>(p1.values));
    kernels::multiply(std::span<const double>(u.u2.values),
                      std::span<const double>(wr.values), std::span<double>(p2.values));

    SpectralField P1 = forward_transform(p1);
    SpectralField P2 = forward_transform(p2);

    SpectralField out(g);
    const int cutoff = static_cast<int>(n / 3);
    const int half = static_cast<int>(n / 2);
#pragma omp parallel for schedule(static)
    for (long long iy = 0; iy < static_cast<long long>(n); ++iy) {
        const int ky = g.wave_index(static_cast<std::size_t>(iy));
        if (std::abs(ky) > cutoff) continue;
        const double d2 = (ky == -half) ? 0.0 : g.dxi() * ky;
        for (std::size_t ix = 0; ix < n; ++ix) {
            const int kx = g.wave_index(ix);
            if (std::abs(kx) > cutoff) continue;
            const double d1 = (kx == -half) ? 0.0 : g.dxi() * kx;
            const std::size_t idx = static_cast<std::size_t>(iy) * n + ix;
            out.coeffs[idx] = complex(0.0, d1) * P1.coeffs[idx] + complex(0.0, d2) * P2.coeffs[idx];
        }
    }
    out.coeffs[0] = complex(0.0); // divergence form: exact zero mean
    return out;
}

Symbol kernel_K_symbol(const GridSpec& g, double beta, double t) {
    if (!(t > 0.0)) throw ConfigError("kernel_K: t must be positive");
    return semigroup_symbol(g, SemigroupParams{beta, t});
}

Symbol kernel_K_symbol_selfsimilar(const GridSpec& g, double beta, double t) {
    if (!(t > 0.0)) throw ConfigError("kernel_K: t must be positive");
    Symbol s(g);
    const std::size_t n = g.n();
    const double rt = std::sqrt(t);
    const double bt32 = std::pow(t, 1.5) * beta;
    const int half = static_cast<int>(n / 2);
    for (std::size_t iy = 0; iy < n; ++iy) {
        const int ky = g.wave_index(iy);
        const double e2 = rt * g.dxi() * ky;
        for (std::size_t ix = 0; ix < n; ++ix) {
            const int kx = g.wave_index(ix);
            const double e1 = rt * g.dxi() * kx;
            const double decay = std::exp(-(e1 * e1 + e2 * e2));
            complex v(decay, 0.0);
            if (!(kx == 0 && ky == 0) && kx != -half) {
                const double theta = bt32 * e1 / (e1 * e1 + e2 * e2);
                v = decay * complex(std::cos(theta), std::sin(theta));
            }
            s.values[iy * n + ix] = v;
        }
    }
    return s;
}

RealField kernel_K(const GridSpec& g, double beta, double t) {
    Symbol s = kernel_K_symbol(g, beta, t);
    SpectralField F(g, std::move(s.values));
    return inverse_transform_nocheck(F);
}

RealField gauss_kernel(const GridSpec& g, double t) {
    if (!(t > 0.0)) throw ConfigError("gauss_kernel: t must be positive");
    if (4.0 * std::sqrt(t) > 0.25 * g.box_length())
        std::cerr << "gauss_kernel: warning: kernel width 4*sqrt(t) exceeds L/4; "
                     "box truncation is not negligible\n";
    RealField f(g);
    const std::size_t n = g.n();
    const double inv4t = 1.0 / (4.0 * t);
    const double amp = inv4t / 3.14159265358979323846;
#pragma omp parallel for schedule(static)
    for (long long iy = 0; iy < static_cast<long long>(n); ++iy) {
        const double y = g.x_coord(static_cast<std::size_t>(iy));
        for (std::size_t ix = 0; ix < n; ++ix) {
            const double x = g.x_coord(ix);
            f.values[static_cast<std::size_t>(iy) * n + ix] =
                amp * std::exp(-(x * x + y * y) * inv4t);
        }
    }
    return f;
}

} // namespace betaplane
