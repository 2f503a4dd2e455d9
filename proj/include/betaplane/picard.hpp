#pragma once

#include "betaplane/evolution.hpp"
#include "betaplane/exponents.hpp"

namespace betaplane {

// Record of a Picard iteration run in the space-time norms
//   Y1 = L^{r1}([0,t_end]; W^{-1+delta,p1}),
//   Y2 = L^{r2}([0,t_end]; W^{delta,p2}),
// with the contraction metric
//   d(w,v) = |beta|^{-(1/3)(1+delta-2/p1-2/r1)} ||w-v||_{Y1}
//          + |beta|^{-(1/3)(2+delta-2/p2-2/r2)} ||w-v||_{Y2}.
struct PicardReport {
    ExponentTuple exponents;
    int iterate_count = 0;   // number of iterates computed, including the linear one
    double dt = 0.0;
    double t_end = 0.0;
    std::vector<double> y1_norms;           // per iterate 0..N
    std::vector<double> y2_norms;           // per iterate 0..N
    std::vector<double> d_distances;        // d(w^{n}, w^{n-1}), n = 1..N
    std::vector<double> contraction_ratios; // d_{n+1}/d_n
    bool contractive = true;                // false when divergence aborted the run
};

struct PicardResult {
    PicardReport report;
    SpectralField final_iterate; // last iterate at t_end
};

// Iterates the Duhamel map
//   Phi(w)(t) = T_beta(t) w0 - int_0^t T_beta(t - tau) div(u(tau) w(tau)) dtau
// on a uniform step grid; the semigroup factor at each quadrature node is
// applied exactly, composite Simpson supplies the weights. Iterate 0 is the
// linear solution. Aborts (flagging the report non-contractive) when the
// d-distance grows by more than 10x between consecutive iterates.
//
// iterations >= 2; beta != 0; exponents must pass the global well-posedness
// checks. zero_nonlinearity replaces div(u w) by 0 (every iterate is then the
// linear solution).
PicardResult picard_solve(const SpectralField& w0, double beta,
                          const ExponentTuple& exponents, double t_end,
                          int iterations, double dt,
                          bool zero_nonlinearity = false);

} // namespace betaplane
