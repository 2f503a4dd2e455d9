#pragma once

#include "betaplane/field.hpp"

namespace betaplane {

// A Fourier multiplier sampled on the grid's frequency lattice. Singular
// symbols carry an explicit finite value at xi = 0 (zero for homogeneous
// symbols; they leave the mean untouched).
//
// Nyquist convention: symbols odd in xi_i are zeroed on the k_i = -n/2 line,
// and the Rossby group takes phase 0 there. Those modes have no sign-paired
// partner on an even lattice, so anything else breaks Hermitian symmetry.
struct Symbol {
    GridSpec grid;
    std::vector<complex> values;

    explicit Symbol(const GridSpec& g) : grid(g), values(g.size(), complex(0.0)) {}
};

struct SemigroupParams {
    double beta = 0.0;
    double t = 0.0;
};

Symbol identity_symbol(const GridSpec& g);

// |xi|^s, exactly 0 at xi = 0 for every s.
Symbol riesz_symbol(const GridSpec& g, double s);

// exp(-t |xi|^2); 1 at the zero mode (mean preserved). Requires t >= 0.
Symbol heat_symbol(const GridSpec& g, double t);

// exp(i * beta_t * xi1/|xi|^2): the Rossby group e^{t beta L1} with the
// combined parameter beta_t = beta*t, so the (beta, t) -> beta*t dependence
// is exact. Unit modulus everywhere; zero mode (and Nyquist line) fixed.
Symbol rossby_symbol(const GridSpec& g, double beta_t);

// exp(-t|xi|^2 + i t beta xi1/|xi|^2), the propagator T_beta(t). t >= 0.
Symbol semigroup_symbol(const GridSpec& g, const SemigroupParams& p);

// i xi1/|xi|^2 (the operator L1), zero at the zero mode and Nyquist line.
Symbol l1_symbol(const GridSpec& g);

// i xi_axis (axis 1 or 2), Nyquist-safe.
Symbol derivative_symbol(const GridSpec& g, int axis);

// 2/3-rule mask: 1 where max(|k1|,|k2|) <= n/3, else 0.
Symbol dealias_mask(const GridSpec& g);

// xi1/|xi|^2 as a real lattice function (0 at zero mode and k1 Nyquist line).
std::vector<double> rossby_phase(const GridSpec& g);

// Pointwise product on the lattice; throws ConfigError on grid mismatch.
SpectralField apply_symbol(const SpectralField& F, const Symbol& m);

} // namespace betaplane
