// Copyright (c) the hardyleray developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#ifndef HARDYLERAY_FOURIER_HPP
#define HARDYLERAY_FOURIER_HPP

#include <Eigen/Dense>
#include <complex>

namespace hardyleray {

// Discrete realization of the unitary-style transform
//   w(lambda) = (2 pi)^{-1/2} \int v(t) e^{-i lambda t} dt
// on a uniform grid of nt samples with spacing dt:
//   w_j = (dt / sqrt(2 pi)) sum_m v_m e^{-2 pi i j m / nt},
//   lambda_j = 2 pi jtilde / (nt dt),  dlambda = 2 pi / (nt dt).
// With this scaling  sum |v_m|^2 dt = sum |w_j|^2 dlambda  holds exactly,
// and d/dt corresponds to multiplication by i lambda_j (the ambiguous
// Nyquist bin is zeroed in the derivative multipliers).

/// Unnormalized in-place complex DFT, length must be a power of two.
void dft_forward(std::complex<double>* data, int n);
void dft_inverse(std::complex<double>* data, int n);  // unnormalized (no 1/n)

/// Frequencies lambda_j in FFT order; the Nyquist bin carries +pi/dt.
Eigen::VectorXd fft_frequencies(int nt, double dt);

/// i-lambda multipliers for spectral differentiation, Nyquist zeroed.
Eigen::VectorXcd fft_derivative_multipliers(int nt, double dt);

/// Column-wise forward transform of a real field (nt x m), scaled so the
/// Plancherel identity above is exact.
Eigen::MatrixXcd fft_forward_columns(const Eigen::MatrixXd& v, double dt);

/// Column-wise inverse; returns the real part (imaginary residue of a
/// Hermitian-symmetric input is at rounding level).
Eigen::MatrixXd fft_inverse_columns_real(const Eigen::MatrixXcd& w, double dt);

/// d/dt column-wise via the spectral multiplier.
Eigen::MatrixXd dt_derivative_columns(const Eigen::MatrixXd& v, double dt);

}  // namespace hardyleray

#endif  // HARDYLERAY_FOURIER_HPP
