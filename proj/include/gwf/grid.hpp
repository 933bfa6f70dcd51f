#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace gwf {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Centered uniform grid on [-L/2, L/2)^dim with n points per axis.
///
/// Sample j on an axis sits at x_j = -L/2 + j*h with h = L/n, so the
/// origin is the sample with index n/2. The frequency (dual) grid of a
/// Grid is again a Grid, with spacing 2*pi/L and half width pi/h.
struct Grid {
  int dim = 1;
  std::size_t n = 0;
  double half_width = 0.0;

  double length() const { return 2.0 * half_width; }
  double spacing() const { return length() / static_cast<double>(n); }
  std::size_t size() const { return dim == 1 ? n : n * n; }
  double coord(std::size_t j) const {
    return -half_width + static_cast<double>(j) * spacing();
  }
  /// Index of the origin along each axis.
  std::size_t center() const { return n / 2; }
  /// Cell volume h^dim used by all Riemann sums.
  double cell_volume() const {
    const double h = spacing();
    return dim == 1 ? h : h * h;
  }
  /// Largest frequency represented on the dual grid, pi/h.
  double nyquist() const { return kPi / spacing(); }
  Grid dual() const { return Grid{dim, n, nyquist()}; }

  bool operator==(const Grid&) const = default;
};

/// Validated constructor; throws std::invalid_argument on bad input.
Grid make_grid(int dim, std::size_t n, double half_width);

/// Throws std::invalid_argument unless `g` satisfies the Grid invariants.
void validate(const Grid& g);

enum class SampleKind { function, singular_spike };

/// Samples of a tempered distribution on a Grid, stored row-major
/// (index = j1 * n + j2 in two dimensions).
///
/// Spikes use the discrete delta convention: unit mass at a grid point
/// is a sample of amplitude 1/h^dim.
struct SampledDistribution {
  Grid grid;
  std::vector<cplx> samples;
  SampleKind kind = SampleKind::function;
  std::string label;

  /// Discrete L2 norm, (sum |u_j|^2 h^d)^(1/2).
  double l2_norm() const;
};

void validate(const SampledDistribution& u);

/// Relative discrete L2 distance ||a - b|| / ||b||.
double relative_l2_error(const SampledDistribution& a, const SampledDistribution& b);

/// u(-x) on the same grid (index j -> (n - j) mod n per axis).
SampledDistribution reflect(const SampledDistribution& u);

}  // namespace gwf
