#pragma once

#include "betaplane/field.hpp"

namespace betaplane {

// Forward transform with continuum normalization:
//   coeff(k) = (L/n)^2 * (-1)^{k1+k2} * DFT[f](k)
// so that coeff(k) approximates \int f(x) e^{-i x.xi_k} dx on the centered box.
// Throws ConfigError on non-finite input.
SpectralField forward_transform(const RealField& f);

// Inverse transform. Checks Hermitian symmetry to 1e-10 (relative to the
// largest coefficient) and throws ConfigError on violation.
RealField inverse_transform(const SpectralField& F);

// Inverse without the symmetry check, for internal paths where symmetry holds
// by construction.
RealField inverse_transform_nocheck(const SpectralField& F);

// Largest Hermitian-symmetry defect |c(-k) - conj(c(k))|, absolute.
double hermitian_defect(const SpectralField& F);

namespace fft_detail {
// Raw unnormalized c2c transforms used by norms.hpp oversampling and the
// transform implementations. sign = -1 forward, +1 backward.
void execute_c2c(std::size_t n, complex* in, complex* out, int sign);
} // namespace fft_detail

} // namespace betaplane
