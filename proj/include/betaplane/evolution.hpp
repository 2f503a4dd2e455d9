#pragma once

#include <span>

#include "betaplane/symbols.hpp"

namespace betaplane {

enum class Scheme { ETDRK4, ETDEuler };

struct EvolveConfig {
    double beta = 0.0;
    double dt = 1e-3;
    double t_end = 1.0;
    Scheme scheme = Scheme::ETDRK4;
    std::size_t save_every = 1; // snapshot stride in steps
    bool dealias = true;

    void validate(const GridSpec& g) const;
};

// A run's record: saved snapshots plus per-step scalar series. The
// dissipation series is sampled at every step, not only at saved steps.
struct Trajectory {
    double beta = 0.0;
    double dt = 0.0; // 0 when the time grid is not a uniform step grid
    std::vector<double> times;              // saved times, starting at 0
    std::vector<SpectralField> snapshots;   // spectra at saved times
    std::vector<double> step_times;         // every step, including t = 0
    std::vector<double> dissipation_series; // ||grad w(tau)||_2^2 per step
    std::vector<double> l2_series;          // ||w(tau)||_2 per step

    const GridSpec& grid() const { return snapshots.front().grid; }
};

struct EnergyLedger {
    double e0 = 0.0;         // ||w(0)||_2^2
    double e_t = 0.0;        // ||w(t_end)||_2^2
    double dissipated = 0.0; // 2 * integral of ||grad w||_2^2
    double residual = 0.0;   // |e_t + dissipated - e0| / e0
    bool degenerate = false; // e0 == 0
};

// Integrate the vorticity equation with the exact linear propagator and ETD
// stages for the nonlinearity. Aborts with BlowUpError (offending time
// attached) if the state goes non-finite.
Trajectory evolve(const SpectralField& w0, const EvolveConfig& cfg);

// Exact linear flow T_beta(t) w0 sampled at the given times (each multiplier
// built independently; no step accumulation).
Trajectory linear_trajectory(const SpectralField& w0, double beta,
                             std::span<const double> times);

// Energy identity bookkeeping over the step grid.
EnergyLedger energy_check(const Trajectory& traj);

// Discrete L^r-in-time norm of the spatial W^{s,p} seminorm over the saved
// snapshots (composite Simpson on the uniform snapshot grid). r >= 1.
double ynorm(const Trajectory& traj, double s, double p, double r);

} // namespace betaplane
