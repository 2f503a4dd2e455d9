#pragma once

#include <span>

#include "betaplane/exponents.hpp"
#include "betaplane/littlewood_paley.hpp"

namespace betaplane {

// Least-squares fit of log(norm) against log(t) inside a window.
struct DecayFit {
    double t_lo = 0.0, t_hi = 0.0;
    std::vector<double> times, norms; // the samples inside the window
    double slope = 0.0, intercept = 0.0, r_squared = 1.0;
    double predicted_early = 0.0, predicted_late = 0.0;
};

// Requires >= 8 samples inside [t_lo, t_hi], all norms positive there.
DecayFit fit_decay(std::span<const double> times, std::span<const double> norms,
                   double t_lo, double t_hi);

// M_{s,a}(t)^{-1} ||w_t - mass * K_{beta,t}||_{W^{s,a}}. t > 0.
double asymptotic_deficit(const SpectralField& w_t, double mass, double beta,
                          double t, double s, double a);

struct StrichartzResult {
    double value = 0.0;         // discrete L^r-in-time of ||T(t) f||_{W^{s,p}}
    double tail_fraction = 0.0; // share of the integral from t in [T/10, T]
};

// Composite Simpson over a uniform t_grid covering [0, T], T >= 10|beta|^{-2/3}.
// beta != 0, r in [2, inf).
StrichartzResult strichartz_quadrature(const SpectralField& f, double beta,
                                       double s, double p, double r,
                                       std::span<const double> t_grid);

// Normalized dispersive ratios of the pure Rossby group on dyadic blocks:
// ratio(k,t) = ||e^{t beta L1} P_k f||_inf * |beta t| / (2^{3k} ||P_k f||_1).
struct DispersiveScan {
    std::vector<int> k_set;
    std::vector<double> times;
    std::vector<double> ratios; // row-major: ratios[ik * times.size() + it]
    double sup = 0.0;

    double at(std::size_t ik, std::size_t it) const { return ratios[ik * times.size() + it]; }
};

DispersiveScan dispersive_scan(const SpectralField& f, double beta,
                               std::span<const int> k_set,
                               std::span<const double> t_grid, const LPBank& bank);

struct BoundaryMassResult {
    double fraction = 0.0; // share of int |f| on the outer 10% frame
    bool degenerate = false;
};

BoundaryMassResult boundary_mass(const RealField& f);

// Running supremum of M_{s,a}(tau)^{-1} ||w(tau)||_{W^{s,a}}.
class DecayMonitor {
public:
    DecayMonitor(double s, double a, double beta) : s_(s), a_(a), beta_(beta) {}

    double observe(double tau, const SpectralField& w);

    double supremum() const { return sup_; }
    const std::vector<double>& times() const { return times_; }
    const std::vector<double>& normalized() const { return normalized_; }

private:
    double s_, a_, beta_;
    double sup_ = 0.0;
    std::vector<double> times_, normalized_;
};

} // namespace betaplane
