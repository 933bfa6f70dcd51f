#pragma once

#include "gwf/geometry.hpp"
#include "gwf/grid.hpp"
#include "gwf/stft.hpp"

#include <string>
#include <vector>

namespace gwf {

/// Directions and radial shells at which decay is measured.
///
/// Directions form an angular grid with step 2*pi/n_dirs: the circle in
/// (x, xi) for d = 1, the frequency circle for Sigma and classical reports
/// in d = 2, and for the 2-D phase sphere S^3 a grid in (alpha, phi, theta)
/// with (x, xi) = (sin(alpha) e^{i phi}, cos(alpha) e^{i theta}), alpha in
/// multiples of the step. Shells are [r_k, r_{k+1}) with r_k = r_min rho^k.
///
/// Phase space is cut to the box |x_i| <= x_cap, |xi_i| <= 0.9 pi/(2h); each
/// direction uses the shells below the point where its ray leaves the box,
/// the last one truncated at that point.
struct RaySampling {
  /// 0 selects 32 for d = 1 and 16 for d = 2.
  std::size_t n_dirs = 0;
  double r_min = 3.0;
  double rho = 1.15;
  /// Extra radial cap; 0 means only the box applies.
  double r_max = 0.0;
  /// Bound on |x_i|; 0 selects 0.9 L/2 when u vanishes outside the central
  /// box [-L/4, L/4]^d and 0.9 L/4 otherwise.
  double x_cap = 0.0;
  /// 2-D phase sphere only: window centers sit on every position_stride-th
  /// grid point (0 = auto), and a lattice point counts for a direction when
  /// it lies within cone_fraction angular steps of it.
  std::size_t position_stride = 0;
  double cone_fraction = 0.25;
};

/// Fitted decay of |V| (or |u^|) along one direction.
struct DecayProfile {
  Direction direction;
  /// Geometric shell centers and the largest modulus seen in each shell's
  /// conic cell; empty shells are omitted.
  std::vector<double> radii;
  std::vector<double> values;
  /// s in log|V| ~ c - s log r over the upper half of the shells.
  double slope = 0.0;
  /// Root-mean-square residual of that fit.
  double residual = 0.0;
  bool floor_hit = false;
  /// Fewer than four usable shells: the direction is left unclassified.
  bool degenerate = false;
  /// Number of leading entries of radii/values excluded from the fit.
  std::size_t fit_begin = 0;
};

enum class ReportKind { gabor, sigma, classical };

std::string to_string(ReportKind kind);

struct WavefrontParams {
  std::size_t n_dirs = 0;
  double r_min = 0.0;
  double r_max = 0.0;
  double rho = 0.0;
  double n_thresh = 0.0;
  /// Window width; 0 for Sigma (no window).
  double lambda = 0.0;
};

struct WavefrontReport {
  ReportKind kind = ReportKind::gabor;
  /// Directions with slope <= n_thresh that did not hit the numeric floor.
  DirectionSet singular_dirs;
  /// Subset of singular_dirs with no flagged neighbor (likely noise).
  DirectionSet isolated;
  std::vector<DecayProfile> profiles;
  WavefrontParams params;
  /// Angular grid step in radians.
  double angular_step = 0.0;
  /// x0 for the classical kind, empty otherwise.
  std::vector<double> base_point;
  /// u vanishes (relative 1e-12) outside the central box [-L/4, L/4]^d.
  bool compact_support = false;
  /// Count of degenerate profiles.
  std::size_t degenerate_count = 0;
};

inline constexpr double kDefaultThreshold = 2.5;
/// Values below this fraction of the a-priori bound ||u|| ||psi|| (or
/// ||u||_1 for u^) are treated as rounding noise.
inline constexpr double kNumericFloor = 1e-14;
inline constexpr std::size_t kMinFitPoints = 4;

/// Gabor wave front set: decay of |V_psi u| along rays of R^{2d}.
WavefrontReport estimate_gabor_wf(const SampledDistribution& u, const Window& window,
                                  const RaySampling& sampling, double n_thresh = kDefaultThreshold);

/// Sigma(u): decay of |u^| along rays of R^d.
WavefrontReport estimate_sigma(const SampledDistribution& u, const RaySampling& sampling,
                               double n_thresh = kDefaultThreshold);

/// Classical wave front set over x0: decay of xi -> |V_phi u(x0, xi)|. The
/// window must be compact (Window::compact_gaussian).
WavefrontReport estimate_classical_wf(const SampledDistribution& u, const Window& window,
                                      std::span<const double> x0, const RaySampling& sampling,
                                      double n_thresh = kDefaultThreshold);

/// Re-applies the threshold to existing profiles (no new transforms).
WavefrontReport reclassify(const WavefrontReport& report, double n_thresh);

enum class ComparisonStatus { pass, fail, rejected };

std::string to_string(ComparisonStatus status);

struct ComparisonResult {
  ComparisonStatus status = ComparisonStatus::fail;
  /// Largest angle between a Gabor singular direction and {0} x R^d.
  double x_extent_angle = 0.0;
  /// Hausdorff angle between normalized xi-parts of the Gabor directions
  /// and the Sigma directions.
  double hausdorff = 0.0;
  double ang_tol = 0.0;
  std::string message;

  bool passed() const { return status == ComparisonStatus::pass; }
};

/// Checks WF_G(u) = {0} x Sigma(u) for compactly supported u. ang_tol <= 0
/// selects two angular steps of the Gabor report. Returns `rejected` when
/// either report saw u reaching outside the central box.
ComparisonResult check_main_theorem(const WavefrontReport& gabor, const WavefrontReport& sigma,
                                    double ang_tol = 0.0);

/// True iff no Gabor singular direction lies within ang_tol of {0} x S^{d-1}
/// (ang_tol <= 0 selects one angular step).
bool schwartz_direction_test(const WavefrontReport& report, double ang_tol = 0.0);

/// Angle between neighboring directions of a report's grid.
double angular_step(std::size_t n_dirs);

/// True when u vanishes (relative 1e-12) outside [-L/4, L/4]^d.
bool supported_in_central_box(const SampledDistribution& u);

}  // namespace gwf
