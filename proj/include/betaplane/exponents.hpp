#pragma once

#include "betaplane/field.hpp"

namespace betaplane {

// Admissibility data A = (delta, p1, r1, p2, r2).
struct ExponentTuple {
    double delta = 0.0;
    double p1 = 3.0;
    double r1 = 6.0;
    double p2 = 3.0;
    double r2 = 4.0;
};

// One evaluated inequality: ok under the boundary rule, and the signed slack
// (positive = satisfied with room). Non-strict comparisons tolerate
// violations below 1e-12; strict ones reject slack below 1e-12.
struct Ineq {
    bool ok = false;
    double slack = 0.0;
};

struct AdmissibilityReport {
    // global well-posedness hypotheses
    Ineq delta_strict;    // delta < min{2/p1, 2/p2}
    Ineq product_bound;   // max{1-1/p1, 1-1/p2} <= 1/p1 + 1/p2 - delta/2
    Ineq r1_lower;        // max{...} <= 1/r1
    Ineq r1_upper;        // 1/r1 <= min{...}
    Ineq r2_lower;        // lower bound of the 1/r2 sandwich
    Ineq r2_upper;
    bool r2_branch_strict = false; // true when the r2 > 2 branch applied
    Ineq r2_window_lower; // (1/2)(1-2/p2) vs 1/r2 (or 1/2 in the r2 = 2 branch)
    Ineq r2_window_upper;
    // smoothing / regularity hypotheses
    Ineq reg_r1; // 1/r1 < 1/2 - 1/p1 + delta/2
    Ineq reg_r2; // 1/r2 < 1 - 1/p2 + delta/2
    // decay/asymptotics hypotheses
    Ineq decay_delta;    // delta < 1/13
    Ineq decay_extra;    // 1/2 - 1/p + delta/2 - (3/2)(1-2/p) < 1/r1
    bool p_canonical = false; // p1 = p2 with 1/p = 1/3 + delta/6

    bool thm1_1 = false;
    bool thm1_2 = false;
    bool thm1_3 = false;
};

// Evaluates every inequality exactly as written (strict vs non-strict
// preserved). Throws ConfigError for tuples outside the type ranges
// 0 <= delta <= 1/5, 2 < p1, p2, r1 < inf, 2 <= r2 < inf.
AdmissibilityReport check_admissible(const ExponentTuple& a);

// The canonical exponent 1/p = 1/3 + delta/6, delta in [0, 1/5].
double canonical_p(double delta);

// Left side of the smallness condition:
// |beta|^{-delta/3} ||w0||_{H^{-1+delta}} + |beta|^{-(1+delta)/3} ||w0||_{H^delta}
// with spectral homogeneous Sobolev norms. Requires beta != 0; warns to
// stderr when w0 is not mean-zero.
double smallness_value(const SpectralField& w0, double beta, double delta);

// Reference decay rate M_{s,a}(t) = t^{-s/2-1+1/a} min{1, |beta|^{-1+2/a}
// t^{-(3/2)(1-2/a)}}; a = inf allowed; t > 0.
double rate_M(double s, double a, double beta, double t);

// N_s(t) = t^{-s/2-1+2/p} min{1, |beta|^{-1+2/p} t^{-(3/2)(1-2/p)}}; t > 0.
double rate_N(double s, double p, double beta, double t);

// The |beta| exponent -(1/3)(2/r + 2/p - 1 - s) of the space-time estimate.
double strichartz_exponent(double s, double p, double r);

struct RatePrediction {
    double s = 0.0;
    double a = 2.0;
    double beta = 0.0;
    double early_exponent = 0.0; // -s/2 - 1 + 1/a
    double late_exponent = 0.0;  // early - (3/2)(1 - 2/a)
    double crossover_time = 0.0; // |beta|^{-2/3}

    static RatePrediction make(double s, double a, double beta);
};

} // namespace betaplane
