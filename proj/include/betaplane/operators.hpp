#pragma once

#include "betaplane/symbols.hpp"

namespace betaplane {

// Heat flow e^{t Delta}. Mean preserved exactly; t >= 0.
SpectralField heat_propagate(const SpectralField& w, double t);
RealField heat_propagate(const RealField& w, double t);

// Rossby group e^{t beta L1}; unitary on L^2, defined for any real t.
SpectralField rossby_propagate(const SpectralField& w, double beta, double t);
RealField rossby_propagate(const RealField& w, double beta, double t);

// Full propagator T_beta(t) = e^{t(Delta + beta L1)}; t >= 0.
SpectralField semigroup_propagate(const SpectralField& w, const SemigroupParams& p);
RealField semigroup_propagate(const RealField& w, const SemigroupParams& p);

// Velocity from vorticity: u1_hat = +i xi2/|xi|^2 w_hat,
// u2_hat = -i xi1/|xi|^2 w_hat (zero mode 0). Divergence-free, and
// i xi1 u2_hat - i xi2 u1_hat recovers w_hat off the zero mode.
VelocityPair biot_savart(const SpectralField& w);
VelocityPair biot_savart(const RealField& w);

// div(u w), computed pseudo-spectrally with 2/3-rule dealiasing applied once
// after the physical-space product. Zero mode of the output is exactly 0.
SpectralField nonlinear_term(const SpectralField& w);

// Integral kernel of T_beta(t): multiplier e^{-t|xi|^2} e^{i t beta xi1/|xi|^2}
// built directly on the lattice. Mass 1; reduces to the Gauss kernel at
// beta = 0. Requires t > 0.
RealField kernel_K(const GridSpec& g, double beta, double t);
Symbol kernel_K_symbol(const GridSpec& g, double beta, double t);

// The same multiplier assembled through the self-similar form
//   t^{-1} (e^{t^{3/2} beta L1} G_1)(t^{-1/2} x),
// i.e. by substituting eta = sqrt(t) xi into e^{-|eta|^2} e^{i t^{3/2} beta
// eta1/|eta|^2}. Agrees with kernel_K_symbol to roundoff; kept as the
// independent algebraic route for the identity test.
Symbol kernel_K_symbol_selfsimilar(const GridSpec& g, double beta, double t);

// Gauss kernel G_t(x) = (4 pi t)^{-1} exp(-|x|^2/(4t)) sampled in physical
// space. Requires t > 0; warns to stderr when 4 sqrt(t) > L/4.
RealField gauss_kernel(const GridSpec& g, double t);

} // namespace betaplane
