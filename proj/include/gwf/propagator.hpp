#pragma once

#include "gwf/catalog.hpp"
#include "gwf/grid.hpp"
#include "gwf/wavefront.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace gwf {

/// Hermite functions h_0..h_{n_max} sampled on one axis of a grid; 2-D
/// bases are tensor products h_{k1}(x1) h_{k2}(x2).
struct HermiteBasis {
  Grid grid;
  unsigned n_max = 0;
  /// table(k, j) = h_k(x_j).
  Eigen::MatrixXd table;
  /// max |G - I| for the quadrature Gram matrix G = table table^T h.
  double gram_error = 0.0;
};

/// Largest order accepted at the grid edge.
inline constexpr double kHermiteEdgeValue = 1e-4;
inline constexpr double kGramTolerance = 1e-8;

/// Largest N <= n/4 with |h_N(-L/2)| <= kHermiteEdgeValue: every basis
/// function has decayed before the grid boundary.
unsigned default_hermite_order(const Grid& g);

/// Throws std::invalid_argument if n_max > n/4 and std::runtime_error if
/// the Gram error exceeds kGramTolerance. n_max = 0 selects the default.
HermiteBasis make_hermite_basis(const Grid& g, unsigned n_max = 0);

/// Coefficients c_k = (u, h_k), flat with index k (d = 1) or
/// k1 (n_max + 1) + k2 (d = 2).
struct HermiteExpansion {
  int dim = 1;
  unsigned n_max = 0;
  std::vector<cplx> coeffs;
  /// ||u - P u|| / ||u|| for the projection P onto the basis span.
  double truncation_error = 0.0;

  double norm() const;
};

HermiteExpansion hermite_coefficients(const SampledDistribution& u, const HermiteBasis& basis);

/// sum_k c_k h_k on the basis grid.
SampledDistribution hermite_synthesis(const HermiteExpansion& c, const HermiteBasis& basis);

/// Multiplies c_k by exp(-i t (2|k| + d)), |k| = k1 + k2.
HermiteExpansion evolve_coefficients(const HermiteExpansion& c, double t);

struct PropagatedState {
  SampledDistribution state;
  double t = 0.0;
  double truncation_error = 0.0;
  /// Non-empty when truncation_error exceeds 0.01.
  std::string warning;
};

/// e^{-t q^w} u for q = i(|x|^2 + |xi|^2), q^w = i(|x|^2 - Laplacian).
PropagatedState harmonic_propagate(const SampledDistribution& u, double t, const HermiteBasis& basis);

/// Exact evolution at special times, up to a global unimodular factor:
/// t = k pi/2 gives u for even k and u(-x) for odd k (quarter = false);
/// t = (2k + 1) pi/4 gives (2 pi)^{-d/2} u^ evaluated on u's own grid,
/// reflected for odd k (quarter = true).
SampledDistribution special_time_operator(const SampledDistribution& u, int k, bool quarter);

/// Largest r with r^2/2 + 8 r/sqrt(2) <= n_max. For the unit Gaussian
/// window, |V h_k(z)|^2 is a Poisson weight in k with mean |z|^2/2, so inside
/// this radius the orders cut off by truncation lie eight standard deviations
/// away and the STFT of a truncated expansion matches the untruncated one far
/// below the detector floor.
double hermite_resolved_radius(unsigned n_max);

struct DetectorParams {
  double lambda = 1.0;
  /// A zero r_max or x_cap is replaced by hermite_resolved_radius(n_max)
  /// (x_cap also bounded by L/2).
  RaySampling sampling;
  double n_thresh = kDefaultThreshold;
  /// Hausdorff tolerance; <= 0 selects two angular steps.
  double ang_tol = 0.0;
  /// Angle to {0} x S^{d-1} below which a direction counts against
  /// smoothness; <= 0 selects one angular step.
  double smooth_tol = 0.0;
};

struct VerificationReport {
  double t = 0.0;
  DirectionSet predicted_dirs;
  DirectionSet detected_dirs;
  double hausdorff_angle = 0.0;
  bool smooth_expected = false;
  bool smooth_detected = false;
  double truncation_error = 0.0;
  double ang_tol = 0.0;
  double smooth_tol = 0.0;
  unsigned n_max = 0;
  bool passed = false;
  WavefrontReport detector;
};

/// Propagates u0, detects WF_G and compares with the flow applied to the
/// ground truth. Passes when the Hausdorff angle is within ang_tol and, for
/// t off (pi/2)Z, no detected direction lies within smooth_tol of
/// {0} x S^{d-1}.
VerificationReport verify_propagation(const CatalogEntry& u0, double t, const DetectorParams& params,
                                      const HermiteBasis& basis);

/// True when t is an integer multiple of pi/2 up to a relative 1e-9, which
/// admits times typed with ten significant digits.
bool on_half_period_lattice(double t);

}  // namespace gwf
