#pragma once

#include "betaplane/field.hpp"
#include "betaplane/littlewood_paley.hpp"

namespace betaplane {

// ||f||_{L^p} with cell-area quadrature weight (L/n)^2; p = inf is the grid
// maximum of |f|. Requires p >= 1.
double lebesgue_norm(const RealField& f, double p);

// Homogeneous Sobolev norm ||f||_{W^{s,a}}: Riesz symbol |xi|^s applied in
// Fourier space, then the L^a norm of the inverse transform. Requires a >= 2.
// The zero mode is excluded (riesz_symbol stores 0 there), so for s = 0 this
// is the L^a norm of the mean-free part.
double sobolev_norm(const SpectralField& f, double s, double a);
double sobolev_norm(const RealField& f, double s, double a);

// Homogeneous Besov norm over the bank's finite dyadic range:
// || (2^{sk} ||P_k f||_{L^p})_k ||_{l^r}; r = inf is the max over k.
// Emits a warning to stderr if spectral mass outside the covered annuli
// exceeds warn_threshold of the total.
double besov_norm(const SpectralField& f, double s, double p, double r,
                  const LPBank& bank, double warn_threshold = 1e-10);
double besov_norm(const RealField& f, double s, double p, double r,
                  const LPBank& bank, double warn_threshold = 1e-10);

// Plancherel L^2 norm from the spectrum: (L^{-2} sum |f_hat|^2)^{1/2}.
double l2_norm_spectral(const SpectralField& f);

// Spectral homogeneous H^s seminorm (L^{-2} sum |xi|^{2s} |f_hat|^2)^{1/2}.
double hdot_norm_spectral(const SpectralField& f, double s);

// ||grad f||_{L^2}^2 evaluated spectrally; the energy-ledger dissipation
// sample.
double dissipation_rate(const SpectralField& f);

// Discrete inner product (L/n)^2 sum f g.
double inner_product(const RealField& f, const RealField& g);

// Grid maximum of |f| after 2x zero-padded spectral oversampling.
double sup_norm_oversampled(const SpectralField& f);

} // namespace betaplane
