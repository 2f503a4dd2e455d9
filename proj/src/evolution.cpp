#include "betaplane/evolution.hpp"

#include <cmath>

#include "betaplane/kernels.hpp"
#include "betaplane/norms.hpp"
#include "betaplane/operators.hpp"
#include "betaplane/quadrature.hpp"

namespace betaplane {

namespace {

// phi-functions phi_j(z) = (e^z - sum_{i<j} z^i/i!)/z^j. The closed forms
// cancel catastrophically near 0; below |z| = 0.5 a 20-term Taylor series
// keeps all three at ~1e-15 relative error.
struct Phis {
    complex p1, p2, p3;
};

Phis eval_phis(complex z) {
    if (std::abs(z) < 0.5) {
        complex p1(0.0), p2(0.0), p3(0.0);
        complex zj(1.0); // z^j
        double fact = 1.0; // j!
        for (int j = 0; j < 20; ++j) {
            const double f1 = fact * (j + 1);
            const double f2 = f1 * (j + 2);
            const double f3 = f2 * (j + 3);
            p1 += zj / f1;
            p2 += zj / f2;
            p3 += zj / f3;
            zj *= z;
            fact = f1;
        }
        return {p1, p2, p3};
    }
    const complex ez = std::exp(z);
    const complex z2 = z * z;
    return {(ez - 1.0) / z, (ez - 1.0 - z) / z2, (ez - 1.0 - z - 0.5 * z2) / (z2 * z)};
}

// Per-mode linear symbol c = -|xi|^2 + i beta xi1/|xi|^2 (Nyquist-safe).
std::vector<complex> linear_symbol(const GridSpec& g, double beta) {
    std::vector<complex> c(g.size());
    const std::vector<double> phase = rossby_phase(g);
    const std::size_t n = g.n();
    for (std::size_t iy = 0; iy < n; ++iy) {
        const double x2 = g.frequency(iy);
        for (std::size_t ix = 0; ix < n; ++ix) {
            const double x1 = g.frequency(ix);
            const std::size_t idx = iy * n + ix;
            c[idx] = complex(-(x1 * x1 + x2 * x2), beta * phase[idx]);
        }
    }
    return c;
}

struct EtdTables {
    std::vector<complex> E, E2, Q, F1, F2, F3;
};

EtdTables make_tables(const GridSpec& g, double beta, double h, Scheme scheme) {
    EtdTables tb;
    const std::vector<complex> c = linear_symbol(g, beta);
    const std::size_t m = c.size();
    tb.E.resize(m);
    tb.Q.resize(m);
    if (scheme == Scheme::ETDRK4) {
        tb.E2.resize(m);
        tb.F1.resize(m);
        tb.F2.resize(m);
        tb.F3.resize(m);
    }
#pragma omp parallel for schedule(static)
    for (long long ii = 0; ii < static_cast<long long>(m); ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        const complex z = h * c[i];
        tb.E[i] = std::exp(z);
        if (scheme == Scheme::ETDEuler) {
            tb.Q[i] = h * eval_phis(z).p1;
        } else {
            const complex zh = 0.5 * z;
            tb.E2[i] = std::exp(zh);
            tb.Q[i] = 0.5 * h * eval_phis(zh).p1;
            const Phis ph = eval_phis(z);
            tb.F1[i] = h * (ph.p1 - 3.0 * ph.p2 + 4.0 * ph.p3);
            tb.F2[i] = 2.0 * h * (ph.p2 - 2.0 * ph.p3);
            tb.F3[i] = h * (4.0 * ph.p3 - ph.p2);
        }
    }
    return tb;
}

void record_step(Trajectory& traj, double t, const SpectralField& w) {
    traj.step_times.push_back(t);
    traj.dissipation_series.push_back(dissipation_rate(w));
    traj.l2_series.push_back(l2_norm_spectral(w));
}

void check_finite(const SpectralField& w, double t) {
    const double m = kernels::max_abs(std::span<const complex>(w.coeffs));
    if (!std::isfinite(m))
        throw BlowUpError(t, "evolve: non-finite state at t = " + std::to_string(t));
}

} // namespace

void EvolveConfig::validate(const GridSpec& g) const {
    if (!(dt > 0.0)) throw ConfigError("evolve: dt must be positive");
    if (!(t_end >= dt)) throw ConfigError("evolve: t_end must be at least dt");
    if (save_every == 0) throw ConfigError("evolve: save_every must be positive");
    if (scheme == Scheme::ETDEuler) {
        const double ximax = g.dxi() * (g.n() / 2.0);
        const double lam = 2.0 * ximax * ximax;
        if (dt > 2.0 / lam)
            throw ConfigError("evolve: ETD-Euler stability guard dt <= 2/max|xi|^2 violated");
    }
    const double steps = t_end / dt;
    if (std::abs(steps - std::llround(steps)) > 1e-9 * std::max(steps, 1.0))
        throw ConfigError("evolve: t_end must be an integer multiple of dt");
}

Trajectory evolve(const SpectralField& w0, const EvolveConfig& cfg) {
    cfg.validate(w0.grid);
    if (!all_finite(w0)) throw ConfigError("evolve: non-finite initial data");

    const std::size_t nsteps = static_cast<std::size_t>(std::llround(cfg.t_end / cfg.dt));
    const GridSpec& g = w0.grid;

    SpectralField w = cfg.dealias ? apply_symbol(w0, dealias_mask(g)) : w0;

    const EtdTables tb = make_tables(g, cfg.beta, cfg.dt, cfg.scheme);

    Trajectory traj;
    traj.beta = cfg.beta;
    traj.dt = cfg.dt;
    traj.times.push_back(0.0);
    traj.snapshots.push_back(w);
    record_step(traj, 0.0, w);

    SpectralField a(g), b(g), cst(g), nw(g), na(g), nb(g), nc(g), tmp(g);

    double t = 0.0;
    auto N = [&](const SpectralField& f, SpectralField& out) {
        check_finite(f, t);
        SpectralField nl(g);
        try {
            nl = nonlinear_term(f);
        } catch (const ConfigError&) {
            // overflow inside the pseudo-spectral product
            throw BlowUpError(t, "evolve: non-finite stage product at t = " + std::to_string(t));
        }
        // equation reads d/dt w = (Delta + beta L1) w - div(u w)
        kernels::scale(std::span<complex>(nl.coeffs), -1.0);
        out.coeffs = std::move(nl.coeffs);
    };

    for (std::size_t step = 1; step <= nsteps; ++step) {
        t = static_cast<double>(step) * cfg.dt;
        if (cfg.scheme == Scheme::ETDEuler) {
            N(w, nw);
            kernels::stage(tb.E, w.coeffs, tb.Q, nw.coeffs, tmp.coeffs);
            std::swap(w.coeffs, tmp.coeffs);
        } else {
            N(w, nw);
            kernels::stage(tb.E2, w.coeffs, tb.Q, nw.coeffs, a.coeffs);
            N(a, na);
            kernels::stage(tb.E2, w.coeffs, tb.Q, na.coeffs, b.coeffs);
            N(b, nb);
            // c stage uses 2*N(b) - N(w)
            kernels::add_scaled(nb.coeffs, complex(-0.5), nw.coeffs, tmp.coeffs);
            kernels::scale(std::span<complex>(tmp.coeffs), 2.0);
            kernels::stage(tb.E2, a.coeffs, tb.Q, tmp.coeffs, cst.coeffs);
            N(cst, nc);
            // w <- E w + F1 N(w) + F2 (N(a)+N(b)) + F3 N(c)
            kernels::stage(tb.E, w.coeffs, tb.F1, nw.coeffs, tmp.coeffs);
            kernels::add_scaled(na.coeffs, complex(1.0), nb.coeffs, a.coeffs);
            kernels::stage(tb.F2, a.coeffs, tb.F3, nc.coeffs, b.coeffs);
            kernels::add_scaled(tmp.coeffs, complex(1.0), b.coeffs, w.coeffs);
        }
        check_finite(w, t);
        record_step(traj, t, w);
        if (step % cfg.save_every == 0 || step == nsteps) {
            traj.times.push_back(t);
            traj.snapshots.push_back(w);
        }
    }
    return traj;
}

Trajectory linear_trajectory(const SpectralField& w0, double beta,
                             std::span<const double> times) {
    if (times.empty()) throw ConfigError("linear_trajectory: empty time grid");
    Trajectory traj;
    traj.beta = beta;
    for (double t : times) {
        if (t < 0.0) throw ConfigError("linear_trajectory: negative time");
        SpectralField w = semigroup_propagate(w0, SemigroupParams{beta, t});
        traj.times.push_back(t);
        record_step(traj, t, w);
        traj.snapshots.push_back(std::move(w));
    }
    return traj;
}

EnergyLedger energy_check(const Trajectory& traj) {
    if (traj.step_times.size() != traj.dissipation_series.size() ||
        traj.step_times.size() < 2)
        throw ConfigError("energy_check: dissipation samples missing");
    const double h = uniform_spacing(traj.step_times);
    const std::vector<double> w = simpson_weights(traj.step_times.size() - 1, h);
    double integral = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i)
        integral += w[i] * traj.dissipation_series[i];
    EnergyLedger led;
    led.e0 = traj.l2_series.front() * traj.l2_series.front();
    led.e_t = traj.l2_series.back() * traj.l2_series.back();
    led.dissipated = 2.0 * integral;
    if (led.e0 == 0.0) {
        led.degenerate = true;
        led.residual = 0.0;
    } else {
        led.residual = std::abs(led.e_t + led.dissipated - led.e0) / led.e0;
    }
    return led;
}

double ynorm(const Trajectory& traj, double s, double p, double r) {
    if (!(r >= 1.0)) throw ConfigError("ynorm: r must be >= 1");
    if (traj.times.size() < 2) throw ConfigError("ynorm: need at least two snapshots");
    const double h = uniform_spacing(traj.times);
    const std::vector<double> w = simpson_weights(traj.times.size() - 1, h);
    double acc = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double nv = sobolev_norm(traj.snapshots[i], s, p);
        acc += w[i] * std::pow(nv, r);
    }
    return std::pow(acc, 1.0 / r);
}

} // namespace betaplane
