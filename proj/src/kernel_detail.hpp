#pragma once

// Per-point building blocks shared by the serial and OpenMP kernels, so
// that both produce bit-identical results point by point.

#include "gwf/grid.hpp"
#include "gwf/stft.hpp"

#include <cmath>
#include <vector>

namespace gwf::kernels::detail {

/// exp(-i x_j xi) for every grid coordinate x_j.
inline std::vector<cplx> phase_row(const Grid& g, double xi) {
  std::vector<cplx> out(g.n);
  for (std::size_t j = 0; j < g.n; ++j) {
    const double a = g.coord(j) * xi;
    out[j] = cplx(std::cos(a), -std::sin(a));
  }
  return out;
}

/// 1-D Gaussian factor of a separable window, including the normalization
/// (pi lambda^2)^(-1/4) for one axis.
inline std::vector<double> gaussian_row(const Grid& g, double lambda, double center) {
  const double norm = std::pow(kPi * lambda * lambda, -0.25);
  std::vector<double> out(g.n);
  for (std::size_t j = 0; j < g.n; ++j) {
    const double y = (g.coord(j) - center) / lambda;
    out[j] = norm * std::exp(-0.5 * y * y);
  }
  return out;
}

/// V_psi u(z) by direct summation with a fixed (row-major) order.
inline cplx stft_point(const SampledDistribution& u, const Window& w, const PhasePoint& z) {
  const Grid& g = u.grid;
  const double cell = g.cell_volume();
  if (g.dim == 1) {
    const auto e = phase_row(g, z.xi[0]);
    std::vector<double> psi = w.compact() ? w.sampled(g, z.x) : gaussian_row(g, w.width(), z.x[0]);
    cplx acc = 0.0;
    for (std::size_t j = 0; j < g.n; ++j) {
      if (u.samples[j] == cplx(0.0)) continue;
      acc += u.samples[j] * psi[j] * e[j];
    }
    return acc * cell;
  }
  const std::size_t n = g.n;
  const auto e1 = phase_row(g, z.xi[0]);
  const auto e2 = phase_row(g, z.xi[1]);
  cplx acc = 0.0;
  if (!w.compact()) {
    const auto g1 = gaussian_row(g, w.width(), z.x[0]);
    const auto g2 = gaussian_row(g, w.width(), z.x[1]);
    for (std::size_t j1 = 0; j1 < n; ++j1) {
      cplx row = 0.0;
      for (std::size_t j2 = 0; j2 < n; ++j2) {
        const cplx& v = u.samples[j1 * n + j2];
        if (v == cplx(0.0)) continue;
        row += v * g2[j2] * e2[j2];
      }
      acc += row * g1[j1] * e1[j1];
    }
  } else {
    const auto psi = w.sampled(g, z.x);
    for (std::size_t j1 = 0; j1 < n; ++j1) {
      cplx row = 0.0;
      for (std::size_t j2 = 0; j2 < n; ++j2) {
        const cplx& v = u.samples[j1 * n + j2];
        if (v == cplx(0.0)) continue;
        row += v * psi[j1 * n + j2] * e2[j2];
      }
      acc += row * e1[j1];
    }
  }
  return acc * cell;
}

/// sum_j u(x_j) exp(-i <x_j, xi>) h^d by direct summation (separable in 2-D).
inline cplx dft_point(const SampledDistribution& u, const double* xi) {
  const Grid& g = u.grid;
  const double cell = g.cell_volume();
  if (g.dim == 1) {
    const auto e = phase_row(g, xi[0]);
    cplx acc = 0.0;
    for (std::size_t j = 0; j < g.n; ++j) {
      if (u.samples[j] == cplx(0.0)) continue;
      acc += u.samples[j] * e[j];
    }
    return acc * cell;
  }
  const std::size_t n = g.n;
  const auto e1 = phase_row(g, xi[0]);
  const auto e2 = phase_row(g, xi[1]);
  cplx acc = 0.0;
  for (std::size_t j1 = 0; j1 < n; ++j1) {
    cplx row = 0.0;
    for (std::size_t j2 = 0; j2 < n; ++j2) {
      const cplx& v = u.samples[j1 * n + j2];
      if (v == cplx(0.0)) continue;
      row += v * e2[j2];
    }
    acc += row * e1[j1];
  }
  return acc * cell;
}

/// Coordinates of dual-grid sample `k` (row-major) written to xi[0..dim).
inline void dual_coords(const Grid& dual, std::size_t k, double* xi) {
  if (dual.dim == 1) {
    xi[0] = dual.coord(k);
  } else {
    xi[0] = dual.coord(k / dual.n);
    xi[1] = dual.coord(k % dual.n);
  }
}

}  // namespace gwf::kernels::detail
