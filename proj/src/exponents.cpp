#include "betaplane/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>

#include "betaplane/norms.hpp"

namespace betaplane {

namespace {

constexpr double boundary_tol = 1e-12;

// lhs <= rhs, boundary slack below 1e-12 accepted
Ineq nonstrict(double lhs, double rhs) {
    const double slack = rhs - lhs;
    return {slack >= -boundary_tol, slack};
}

// lhs < rhs, slack below 1e-12 rejected
Ineq strict(double lhs, double rhs) {
    const double slack = rhs - lhs;
    return {slack > boundary_tol, slack};
}

} // namespace

AdmissibilityReport check_admissible(const ExponentTuple& a) {
    const auto in_open = [](double v, double lo) { return v > lo + boundary_tol; };
    if (!(a.delta >= -boundary_tol && a.delta <= 0.2 + boundary_tol))
        throw ConfigError("exponents: delta must lie in [0, 1/5]");
    if (!in_open(a.p1, 2.0) || !in_open(a.p2, 2.0) || !in_open(a.r1, 2.0))
        throw ConfigError("exponents: p1, p2, r1 must lie in (2, inf)");
    if (!(a.r2 >= 2.0 - boundary_tol))
        throw ConfigError("exponents: r2 must lie in [2, inf)");
    if (!std::isfinite(a.p1) || !std::isfinite(a.p2) || !std::isfinite(a.r1) ||
        !std::isfinite(a.r2))
        throw ConfigError("exponents: exponents must be finite");

    const double ip1 = 1.0 / a.p1, ip2 = 1.0 / a.p2;
    const double ir1 = 1.0 / a.r1, ir2 = 1.0 / a.r2;
    const double d = a.delta;

    AdmissibilityReport rep;
    rep.delta_strict = strict(d, std::min(2.0 * ip1, 2.0 * ip2));
    rep.product_bound = nonstrict(std::max(1.0 - ip1, 1.0 - ip2), ip1 + ip2 - 0.5 * d);

    const double r1_lo = std::max(0.5 - ip1 + 0.5 * d - 1.5 * (1.0 - 2.0 * ip2),
                                  0.5 * (1.0 - 2.0 * ip1));
    const double r1_hi = std::min(0.5 - ip1 + 0.5 * d, 1.25 * (1.0 - 2.0 * ip1));
    rep.r1_lower = nonstrict(r1_lo, ir1);
    rep.r1_upper = nonstrict(ir1, r1_hi);

    rep.r2_lower = nonstrict(1.0 - ip2 + 0.5 * d - 1.5 * (1.0 - 2.0 * ip1), ir2);
    rep.r2_upper = nonstrict(ir2, 1.0 - ip2 + 0.5 * d);

    rep.r2_branch_strict = a.r2 > 2.0 + boundary_tol;
    if (rep.r2_branch_strict) {
        rep.r2_window_lower = nonstrict(0.5 * (1.0 - 2.0 * ip2), ir2);
        rep.r2_window_upper = nonstrict(ir2, 1.25 * (1.0 - 2.0 * ip2));
    } else {
        rep.r2_window_lower = strict(0.5 * (1.0 - 2.0 * ip2), 0.5);
        rep.r2_window_upper = strict(0.5, 1.25 * (1.0 - 2.0 * ip2));
    }

    rep.thm1_1 = rep.delta_strict.ok && rep.product_bound.ok && rep.r1_lower.ok &&
                 rep.r1_upper.ok && rep.r2_lower.ok && rep.r2_upper.ok &&
                 rep.r2_window_lower.ok && rep.r2_window_upper.ok;

    rep.reg_r1 = strict(ir1, 0.5 - ip1 + 0.5 * d);
    rep.reg_r2 = strict(ir2, 1.0 - ip2 + 0.5 * d);
    rep.thm1_2 = rep.thm1_1 && rep.reg_r1.ok && rep.reg_r2.ok;

    rep.decay_delta = strict(d, 1.0 / 13.0);
    rep.decay_extra = strict(0.5 - ip1 + 0.5 * d - 1.5 * (1.0 - 2.0 * ip1), ir1);
    rep.p_canonical = std::abs(ip1 - ip2) <= boundary_tol &&
                      std::abs(ip1 - (1.0 / 3.0 + d / 6.0)) <= boundary_tol;
    rep.thm1_3 = rep.thm1_2 && rep.decay_delta.ok && rep.decay_extra.ok && rep.p_canonical;
    return rep;
}

double canonical_p(double delta) {
    if (!(delta >= 0.0 && delta <= 0.2))
        throw ConfigError("canonical_p: delta must lie in [0, 1/5]");
    return 1.0 / (1.0 / 3.0 + delta / 6.0);
}

double smallness_value(const SpectralField& w0, double beta, double delta) {
    if (beta == 0.0) throw ConfigError("smallness_value: beta must be nonzero");
    const double mean = std::abs(w0.coeffs[0]) /
                        (w0.grid.box_length() * w0.grid.box_length());
    const double scale = hdot_norm_spectral(w0, 0.0);
    if (mean > 1e-10 * std::max(scale, 1e-300))
        std::cerr << "smallness_value: warning: data is not mean-zero; the "
                     "H^{-1+delta} proxy excludes the mean mode\n";
    const double ab = std::abs(beta);
    return std::pow(ab, -delta / 3.0) * hdot_norm_spectral(w0, -1.0 + delta) +
           std::pow(ab, -(1.0 + delta) / 3.0) * hdot_norm_spectral(w0, delta);
}

double rate_M(double s, double a, double beta, double t) {
    if (!(t > 0.0)) throw ConfigError("rate_M: t must be positive");
    if (!(a >= 2.0) && !std::isinf(a)) throw ConfigError("rate_M: a must be >= 2 or inf");
    const double inv_a = std::isinf(a) ? 0.0 : 1.0 / a;
    const double head = std::pow(t, -0.5 * s - 1.0 + inv_a);
    const double expo = -1.0 + 2.0 * inv_a;
    double disp;
    if (expo == 0.0)
        disp = 1.0;
    else if (beta == 0.0)
        disp = std::numeric_limits<double>::infinity();
    else
        disp = std::pow(std::abs(beta), expo) * std::pow(t, -1.5 * (1.0 - 2.0 * inv_a));
    return head * std::min(1.0, disp);
}

double rate_N(double s, double p, double beta, double t) {
    if (!(t > 0.0)) throw ConfigError("rate_N: t must be positive");
    const double ip = std::isinf(p) ? 0.0 : 1.0 / p;
    const double head = std::pow(t, -0.5 * s - 1.0 + 2.0 * ip);
    const double expo = -1.0 + 2.0 * ip;
    double disp;
    if (expo == 0.0)
        disp = 1.0;
    else if (beta == 0.0)
        disp = std::numeric_limits<double>::infinity();
    else
        disp = std::pow(std::abs(beta), expo) * std::pow(t, -1.5 * (1.0 - 2.0 * ip));
    return head * std::min(1.0, disp);
}

double strichartz_exponent(double s, double p, double r) {
    const double ip = std::isinf(p) ? 0.0 : 1.0 / p;
    const double ir = std::isinf(r) ? 0.0 : 1.0 / r;
    return -(2.0 * ir + 2.0 * ip - 1.0 - s) / 3.0;
}

RatePrediction RatePrediction::make(double s, double a, double beta) {
    RatePrediction rp;
    rp.s = s;
    rp.a = a;
    rp.beta = beta;
    const double inv_a = std::isinf(a) ? 0.0 : 1.0 / a;
    rp.early_exponent = -0.5 * s - 1.0 + inv_a;
    rp.late_exponent = rp.early_exponent - 1.5 * (1.0 - 2.0 * inv_a);
    rp.crossover_time = beta == 0.0 ? std::numeric_limits<double>::infinity()
                                    : std::pow(std::abs(beta), -2.0 / 3.0);
    return rp;
}

} // namespace betaplane
