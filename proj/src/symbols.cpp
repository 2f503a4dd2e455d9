#include "betaplane/symbols.hpp"

#include <cmath>

#include "betaplane/kernels.hpp"

namespace betaplane {

namespace {

template <class F>
Symbol build(const GridSpec& g, const F& f) {
    Symbol s(g);
    const std::size_t n = g.n();
#pragma omp parallel for schedule(static)
    for (long long iy = 0; iy < static_cast<long long>(n); ++iy) {
        const int ky = g.wave_index(static_cast<std::size_t>(iy));
        const double xi2 = g.dxi() * ky;
        for (std::size_t ix = 0; ix < n; ++ix) {
            const int kx = g.wave_index(ix);
            const double xi1 = g.dxi() * kx;
            s.values[static_cast<std::size_t>(iy) * n + ix] = f(kx, ky, xi1, xi2);
        }
    }
    return s;
}

inline bool nyquist1(const GridSpec& g, int kx) {
    return kx == -static_cast<int>(g.n() / 2);
}
inline bool nyquist2(const GridSpec& g, int ky) {
    return ky == -static_cast<int>(g.n() / 2);
}

} // namespace

Symbol identity_symbol(const GridSpec& g) {
    return build(g, [](int, int, double, double) { return complex(1.0); });
}

Symbol riesz_symbol(const GridSpec& g, double s) {
    return build(g, [s](int kx, int ky, double x1, double x2) {
        if (kx == 0 && ky == 0) return complex(0.0);
        return complex(std::pow(x1 * x1 + x2 * x2, 0.5 * s));
    });
}

Symbol heat_symbol(const GridSpec& g, double t) {
    if (t < 0.0) throw ConfigError("heat_symbol: t must be nonnegative");
    return build(g, [t](int, int, double x1, double x2) {
        return complex(std::exp(-t * (x1 * x1 + x2 * x2)));
    });
}

std::vector<double> rossby_phase(const GridSpec& g) {
    std::vector<double> phase(g.size(), 0.0);
    const std::size_t n = g.n();
    for (std::size_t iy = 0; iy < n; ++iy) {
        const int ky = g.wave_index(iy);
        const double x2 = g.dxi() * ky;
        for (std::size_t ix = 0; ix < n; ++ix) {
            const int kx = g.wave_index(ix);
            if ((kx == 0 && ky == 0) || nyquist1(g, kx)) continue;
            const double x1 = g.dxi() * kx;
            phase[iy * n + ix] = x1 / (x1 * x1 + x2 * x2);
        }
    }
    return phase;
}

Symbol rossby_symbol(const GridSpec& g, double beta_t) {
    return build(g, [&g, beta_t](int kx, int ky, double x1, double x2) {
        if ((kx == 0 && ky == 0) || nyquist1(g, kx)) return complex(1.0);
        const double theta = beta_t * x1 / (x1 * x1 + x2 * x2);
        return complex(std::cos(theta), std::sin(theta));
    });
}

Symbol semigroup_symbol(const GridSpec& g, const SemigroupParams& p) {
    if (p.t < 0.0) throw ConfigError("semigroup_symbol: t must be nonnegative");
    const double bt = p.beta * p.t;
    return build(g, [&g, &p, bt](int kx, int ky, double x1, double x2) {
        const double decay = std::exp(-p.t * (x1 * x1 + x2 * x2));
        if ((kx == 0 && ky == 0) || nyquist1(g, kx)) return complex(decay);
        const double theta = bt * x1 / (x1 * x1 + x2 * x2);
        return complex(decay * std::cos(theta), decay * std::sin(theta));
    });
}

Symbol l1_symbol(const GridSpec& g) {
    return build(g, [&g](int kx, int ky, double x1, double x2) {
        if ((kx == 0 && ky == 0) || nyquist1(g, kx)) return complex(0.0);
        return complex(0.0, x1 / (x1 * x1 + x2 * x2));
    });
}

Symbol derivative_symbol(const GridSpec& g, int axis) {
    if (axis != 1 && axis != 2) throw ConfigError("derivative_symbol: axis must be 1 or 2");
    return build(g, [&g, axis](int kx, int ky, double x1, double x2) {
        if (axis == 1) return nyquist1(g, kx) ? complex(0.0) : complex(0.0, x1);
        return nyquist2(g, ky) ? complex(0.0) : complex(0.0, x2);
    });
}

Symbol dealias_mask(const GridSpec& g) {
    const int cutoff = static_cast<int>(g.n() / 3);
    return build(g, [cutoff](int kx, int ky, double, double) {
        return (std::abs(kx) <= cutoff && std::abs(ky) <= cutoff) ? complex(1.0)
                                                                  : complex(0.0);
    });
}

SpectralField apply_symbol(const SpectralField& F, const Symbol& m) {
    if (!(F.grid == m.grid)) throw ConfigError("apply_symbol: grid mismatch");
    SpectralField out(F.grid);
    kernels::multiply(F.coeffs, m.values, out.coeffs);
    return out;
}

} // namespace betaplane
