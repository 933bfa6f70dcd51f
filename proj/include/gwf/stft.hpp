#pragma once

#include "gwf/grid.hpp"

#include <iosfwd>
#include <span>
#include <vector>

namespace gwf {

/// Dilated Gaussian window psi(y) = (pi lambda^2)^(-d/4) exp(-|y|^2 / (2 lambda^2)),
/// unit L2 norm. The compact variant multiplies by a smooth radial cutoff
/// that equals 1 for |y| <= 4 lambda and vanishes for |y| >= 6 lambda; it
/// stands in for the C_c^infty windows of the classical wave front set.
class Window {
 public:
  explicit Window(double width, bool compact = false);

  static Window gaussian(double width) { return Window(width, false); }
  static Window compact_gaussian(double width) { return Window(width, true); }

  double width() const { return width_; }
  bool compact() const { return compact_; }

  /// psi at a point y of R^d, d = y.size().
  double value(std::span<const double> y) const;

  /// psi(x_j - center) for every grid point x_j, row-major.
  std::vector<double> sampled(const Grid& g, std::span<const double> center) const;

  /// Throws std::invalid_argument unless 4h <= lambda <= L/8 on `g`.
  void check_resolvable(const Grid& g) const;

 private:
  double width_;
  bool compact_;
};

/// Phase-space point z = (x, xi).
struct PhasePoint {
  std::vector<double> x;
  std::vector<double> xi;
};

/// V_psi u(x, xi) = (u, M_xi T_x psi) by direct grid summation
///   sum_j u(x_j) psi(x_j - x) exp(-i <x_j, xi>) h^d.
cplx stft_at(const SampledDistribution& u, const Window& window, const PhasePoint& z);

/// V_psi u(x, .) on the whole dual grid, computed as the Fourier transform
/// of u * T_x psi. Returned samples live on u.grid.dual().
SampledDistribution stft_slice(const SampledDistribution& u, const Window& window,
                               std::span<const double> x);

/// Phase-space quadrature of the STFT inversion formula
///   u = (2 pi)^-d  int V_psi u(x, xi) M_xi T_x psi dx dxi.
/// Window centers run over every `position_stride`-th grid point (0 picks
/// the coarsest stride with spacing <= lambda/2); the frequency integral
/// uses the full dual grid. Throws std::runtime_error when the position
/// lattice is too coarse to resolve the window.
SampledDistribution moyal_reconstruct(const SampledDistribution& u, const Window& window,
                                      std::size_t position_stride = 0);

/// CSV dump of V_psi u on the rectangular phase-space lattice
/// positions x positions-grid frequencies. Columns: x..., xi..., re, im, abs.
void write_stft_csv(std::ostream& os, const SampledDistribution& u, const Window& window,
                    std::span<const double> positions, std::span<const double> frequencies);

}  // namespace gwf
