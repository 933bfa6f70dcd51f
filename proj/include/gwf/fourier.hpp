#pragma once

#include "gwf/grid.hpp"

#include <span>

namespace gwf {

/// Riemann-sum Fourier transform
///   u^(xi_k) = sum_j u(x_j) exp(-i <x_j, xi_k>) h^d
/// on the dual grid (spacing 2*pi/L, half width pi/h). Backed by FFTW.
SampledDistribution fourier_transform(const SampledDistribution& u);

/// Inverse of fourier_transform: takes samples on a dual grid and returns
///   f(x_m) = (2*pi)^-d sum_k v(xi_k) exp(i <x_m, xi_k>) (2*pi/L)^d
/// on the grid whose dual is v.grid.
SampledDistribution inverse_fourier_transform(const SampledDistribution& v);

/// The same Riemann sum as fourier_transform, but evaluated at the points
/// of `target` read as frequencies. Direct summation; used where the
/// output must live on an arbitrary grid (e.g. the quarter-period
/// propagator, which maps a grid to itself).
SampledDistribution fourier_transform_on(const SampledDistribution& u, const Grid& target);

namespace detail {

/// In-place centered DFT on an n^dim block:
///   out_k = sum_j in_j exp(sign * 2*pi*i (j - n/2)(k - n/2) / n)
/// with sign = -1 (forward) or +1 (backward). No scaling. Thread-safe.
void centered_dft(int dim, std::size_t n, std::span<cplx> data, int sign);

}  // namespace detail

}  // namespace gwf
