#pragma once

#include "betaplane/field.hpp"

namespace betaplane {

// Dyadic projection bank. Block k localizes to the annulus 2^k*[3/4, 8/3]
// with the smooth bump
//   psi(rho) = exp(-1/((rho-3/4)(8/3-rho))) on (3/4, 8/3), else 0,
//   phi_k(xi) = psi(2^{-k}|xi|) / sum_j psi(2^{-j}|xi|),
// normalized over all integers j, so sum_k phi_k(xi) = 1 at every xi != 0
// whose contributing blocks lie inside the bank range.
struct LPBank {
    GridSpec grid;
    int k_min;
    int k_max;
    std::vector<std::vector<double>> phi; // one lattice array per k

    // Default dyadic range [ceil(log2(2pi/L) - 1), floor(log2(pi n/L) + 1)].
    static LPBank make(const GridSpec& g);
    static LPBank make(const GridSpec& g, int k_min, int k_max);

    const std::vector<double>& block(int k) const;
    bool in_range(int k) const { return k >= k_min && k <= k_max; }
};

double lp_bump(double rho);

// P_k f: multiply by phi_k. Throws ConfigError for out-of-range k.
SpectralField lp_project(const SpectralField& f, int k, const LPBank& bank);

// Fraction of spectral mass (sum |f_hat|^2) outside the bank's covered
// annuli; used for the besov_norm coverage warning.
double lp_coverage_gap(const SpectralField& f, const LPBank& bank);

} // namespace betaplane
