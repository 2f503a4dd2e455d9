#include "betaplane/analysis.hpp"

#include <cmath>
#include <limits>

#include "betaplane/fft.hpp"
#include "betaplane/kernels.hpp"
#include "betaplane/norms.hpp"
#include "betaplane/operators.hpp"
#include "betaplane/quadrature.hpp"

namespace betaplane {

DecayFit fit_decay(std::span<const double> times, std::span<const double> norms,
                   double t_lo, double t_hi) {
    if (times.size() != norms.size())
        throw AnalysisError("fit_decay: times and norms differ in length");
    if (!(t_lo < t_hi)) throw AnalysisError("fit_decay: empty window");
    DecayFit fit;
    fit.t_lo = t_lo;
    fit.t_hi = t_hi;
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (times[i] < t_lo || times[i] > t_hi) continue;
        if (!(norms[i] > 0.0))
            throw AnalysisError("fit_decay: nonpositive norm inside the window");
        fit.times.push_back(times[i]);
        fit.norms.push_back(norms[i]);
    }
    if (fit.times.size() < 8)
        throw AnalysisError("fit_decay: need at least 8 samples inside the window");

    const std::size_t m = fit.times.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        mx += std::log(fit.times[i]);
        my += std::log(fit.norms[i]);
    }
    mx /= static_cast<double>(m);
    my /= static_cast<double>(m);
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double dx = std::log(fit.times[i]) - mx;
        const double dy = std::log(fit.norms[i]) - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    fit.slope = sxx > 0.0 ? sxy / sxx : 0.0;
    fit.intercept = my - fit.slope * mx;
    if (syy > 0.0) {
        double ss_res = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double r = (std::log(fit.norms[i]) - my) - fit.slope * (std::log(fit.times[i]) - mx);
            ss_res += r * r;
        }
        fit.r_squared = std::max(0.0, 1.0 - ss_res / syy);
    } else {
        fit.r_squared = 1.0; // constant data fit exactly by a flat line
    }
    return fit;
}

double asymptotic_deficit(const SpectralField& w_t, double mass, double beta,
                          double t, double s, double a) {
    if (!(t > 0.0)) throw AnalysisError("asymptotic_deficit: t must be positive");
    Symbol ker = kernel_K_symbol(w_t.grid, beta, t);
    SpectralField diff(w_t.grid);
    kernels::add_scaled(w_t.coeffs, complex(-mass), ker.values, diff.coeffs);
    return sobolev_norm(diff, s, a) / rate_M(s, a, beta, t);
}

StrichartzResult strichartz_quadrature(const SpectralField& f, double beta,
                                       double s, double p, double r,
                                       std::span<const double> t_grid) {
    if (beta == 0.0)
        throw AnalysisError("strichartz_quadrature: beta = 0 makes the estimate vacuous");
    if (!(r >= 2.0) || std::isinf(r))
        throw AnalysisError("strichartz_quadrature: r must lie in [2, inf)");
    std::vector<double> t(t_grid.begin(), t_grid.end());
    if (t.size() < 3 || t.front() != 0.0)
        throw AnalysisError("strichartz_quadrature: grid must cover [0, T]");
    const double T = t.back();
    if (!(T >= 10.0 * std::pow(std::abs(beta), -2.0 / 3.0)))
        throw AnalysisError("strichartz_quadrature: horizon below 10 |beta|^{-2/3}");
    const double h = uniform_spacing(t);
    const std::vector<double> w = simpson_weights(t.size() - 1, h);

    double acc = 0.0, tail = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        SpectralField g = semigroup_propagate(f, SemigroupParams{beta, t[i]});
        const double nv = sobolev_norm(g, s, p);
        const double term = w[i] * std::pow(nv, r);
        acc += term;
        if (t[i] >= 0.1 * T) tail += term;
    }
    StrichartzResult res;
    res.value = std::pow(acc, 1.0 / r);
    res.tail_fraction = acc > 0.0 ? tail / acc : 0.0;
    return res;
}

DispersiveScan dispersive_scan(const SpectralField& f, double beta,
                               std::span<const int> k_set,
                               std::span<const double> t_grid, const LPBank& bank) {
    if (beta == 0.0) throw AnalysisError("dispersive_scan: beta must be nonzero");
    DispersiveScan scan;
    scan.k_set.assign(k_set.begin(), k_set.end());
    scan.times.assign(t_grid.begin(), t_grid.end());
    scan.ratios.resize(scan.k_set.size() * scan.times.size(), 0.0);
    for (std::size_t ik = 0; ik < scan.k_set.size(); ++ik) {
        const int k = scan.k_set[ik];
        SpectralField block = lp_project(f, k, bank);
        const double l1 = lebesgue_norm(inverse_transform_nocheck(block), 1.0);
        if (!(l1 > 0.0))
            throw AnalysisError("dispersive_scan: vanishing block norm at k = " + std::to_string(k));
        const double denom = std::pow(2.0, 3.0 * k) * l1;
        for (std::size_t it = 0; it < scan.times.size(); ++it) {
            const double t = scan.times[it];
            if (!(t > 0.0)) throw AnalysisError("dispersive_scan: times must be positive");
            SpectralField g = apply_symbol(block, rossby_symbol(f.grid, beta * t));
            const double sup = lebesgue_norm(inverse_transform_nocheck(g),
                                             std::numeric_limits<double>::infinity());
            const double ratio = sup * std::abs(beta * t) / denom;
            scan.ratios[ik * scan.times.size() + it] = ratio;
            scan.sup = std::max(scan.sup, ratio);
        }
    }
    return scan;
}

BoundaryMassResult boundary_mass(const RealField& f) {
    const std::size_t n = f.grid.n();
    const double total = kernels::sum_abs(f.values);
    BoundaryMassResult res;
    if (total == 0.0) {
        res.degenerate = true;
        return res;
    }
    // inner region: central 80% per axis, i.e. |x_i| <= 0.4 L
    const double frame = kernels::reduce_sum(f.grid.size(), [&](std::size_t idx) {
        const std::size_t iy = idx / n, ix = idx % n;
        const double limit = 0.4 * f.grid.box_length();
        const bool inner = std::abs(f.grid.x_coord(ix)) <= limit &&
                           std::abs(f.grid.x_coord(iy)) <= limit;
        return inner ? 0.0 : std::abs(f.values[idx]);
    });
    res.fraction = frame / total;
    return res;
}

double DecayMonitor::observe(double tau, const SpectralField& w) {
    const double nv = sobolev_norm(w, s_, a_);
    const double normalized = nv / rate_M(s_, a_, beta_, tau);
    times_.push_back(tau);
    normalized_.push_back(normalized);
    sup_ = std::max(sup_, normalized);
    return normalized;
}

} // namespace betaplane
