#include "gwf/propagator.hpp"

#include "gwf/fourier.hpp"
#include "gwf/hermite.hpp"
#include "gwf/kernels.hpp"
#include "gwf/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gwf {

namespace {

std::vector<double> axis_coords(const Grid& g) {
  std::vector<double> x(g.n);
  for (std::size_t j = 0; j < g.n; ++j) x[j] = g.coord(j);
  return x;
}

void check_grid(const SampledDistribution& u, const HermiteBasis& basis) {
  validate(u);
  if (!(u.grid == basis.grid)) throw std::invalid_argument("Hermite basis built for a different grid");
}

// Maps rows of an n x n block through `f`, which takes and returns vectors.
template <class F>
Eigen::MatrixXcd map_rows(const Eigen::MatrixXcd& m, Eigen::Index out_cols, F&& f) {
  Eigen::MatrixXcd out(m.rows(), out_cols);
  for (Eigen::Index r = 0; r < m.rows(); ++r) out.row(r) = f(Eigen::VectorXcd(m.row(r).transpose())).transpose();
  return out;
}

}  // namespace

double HermiteExpansion::norm() const {
  double s = 0.0;
  for (const cplx& c : coeffs) s += std::norm(c);
  return std::sqrt(s);
}

unsigned default_hermite_order(const Grid& g) {
  validate(g);
  const auto cap = static_cast<unsigned>(g.n / 4);
  const Eigen::MatrixXd edge = hermite_table(cap, std::vector<double>{-g.half_width});
  unsigned best = 0;
  for (unsigned k = 0; k <= cap; ++k) {
    if (std::abs(edge(k, 0)) > kHermiteEdgeValue) break;
    best = k;
  }
  return best;
}

HermiteBasis make_hermite_basis(const Grid& g, unsigned n_max) {
  validate(g);
  if (n_max == 0) n_max = default_hermite_order(g);
  if (n_max > g.n / 4) throw std::invalid_argument("n_max must not exceed n/4");
  HermiteBasis basis;
  basis.grid = g;
  basis.n_max = n_max;
  basis.table = hermite_table(n_max, axis_coords(g));
  const Eigen::MatrixXd gram = basis.table * basis.table.transpose() * g.spacing();
  basis.gram_error = (gram - Eigen::MatrixXd::Identity(n_max + 1, n_max + 1)).cwiseAbs().maxCoeff();
  if (basis.gram_error > kGramTolerance) {
    throw std::runtime_error("Hermite basis is not orthonormal on this grid (Gram error " +
                             std::to_string(basis.gram_error) + "); lower n_max");
  }
  return basis;
}

HermiteExpansion hermite_coefficients(const SampledDistribution& u, const HermiteBasis& basis) {
  check_grid(u, basis);
  const Grid& g = u.grid;
  const double h = g.spacing();
  const auto n = static_cast<Eigen::Index>(g.n);
  const auto m = static_cast<Eigen::Index>(basis.n_max + 1);
  HermiteExpansion out;
  out.dim = g.dim;
  out.n_max = basis.n_max;
  if (g.dim == 1) {
    const Eigen::VectorXcd x = Eigen::Map<const Eigen::VectorXcd>(u.samples.data(), n) * h;
    const Eigen::VectorXcd c = kernels::omp::apply_rows(basis.table, x);
    out.coeffs.assign(c.data(), c.data() + c.size());
  } else {
    // Row-major samples: row j1 holds x2 varying.
    const Eigen::MatrixXcd U =
        Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(u.samples.data(), n, n);
    auto analyze = [&](const Eigen::VectorXcd& v) { return kernels::omp::apply_rows(basis.table, v * h); };
    const Eigen::MatrixXcd a = map_rows(U, m, analyze);                         // (j1, k2)
    const Eigen::MatrixXcd c = map_rows(a.transpose(), m, analyze).transpose();  // (k1, k2)
    out.coeffs.resize(static_cast<std::size_t>(m * m));
    for (Eigen::Index k1 = 0; k1 < m; ++k1) {
      for (Eigen::Index k2 = 0; k2 < m; ++k2) out.coeffs[static_cast<std::size_t>(k1 * m + k2)] = c(k1, k2);
    }
  }
  const double total = u.l2_norm();
  if (total > 0.0) {
    SampledDistribution residual = hermite_synthesis(out, basis);
    for (std::size_t j = 0; j < residual.samples.size(); ++j) residual.samples[j] = u.samples[j] - residual.samples[j];
    out.truncation_error = std::clamp(residual.l2_norm() / total, 0.0, 1.0);
  }
  return out;
}

SampledDistribution hermite_synthesis(const HermiteExpansion& c, const HermiteBasis& basis) {
  const Grid& g = basis.grid;
  if (c.dim != g.dim || c.n_max != basis.n_max) throw std::invalid_argument("expansion does not match basis");
  const auto n = static_cast<Eigen::Index>(g.n);
  const auto m = static_cast<Eigen::Index>(basis.n_max + 1);
  SampledDistribution out;
  out.grid = g;
  out.label = "hermite synthesis";
  if (g.dim == 1) {
    const Eigen::VectorXcd v =
        kernels::omp::apply_columns(basis.table, Eigen::Map<const Eigen::VectorXcd>(c.coeffs.data(), m));
    out.samples.assign(v.data(), v.data() + v.size());
    return out;
  }
  const Eigen::MatrixXcd C =
      Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(c.coeffs.data(), m, m);
  auto synth = [&](const Eigen::VectorXcd& v) { return kernels::omp::apply_columns(basis.table, v); };
  const Eigen::MatrixXcd a = map_rows(C, n, synth);                         // (k1, j2)
  const Eigen::MatrixXcd U = map_rows(a.transpose(), n, synth).transpose();  // (j1, j2)
  out.samples.resize(static_cast<std::size_t>(n * n));
  for (Eigen::Index j1 = 0; j1 < n; ++j1) {
    for (Eigen::Index j2 = 0; j2 < n; ++j2) out.samples[static_cast<std::size_t>(j1 * n + j2)] = U(j1, j2);
  }
  return out;
}

HermiteExpansion evolve_coefficients(const HermiteExpansion& c, double t) {
  HermiteExpansion out = c;
  const std::size_t m = c.n_max + 1;
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
    const std::size_t order = c.dim == 1 ? i : i / m + i % m;
    const double energy = 2.0 * static_cast<double>(order) + c.dim;
    out.coeffs[i] = c.coeffs[i] * std::polar(1.0, -t * energy);
  }
  return out;
}

PropagatedState harmonic_propagate(const SampledDistribution& u, double t, const HermiteBasis& basis) {
  if (!std::isfinite(t)) throw std::invalid_argument("t must be finite");
  const HermiteExpansion c = hermite_coefficients(u, basis);
  PropagatedState out;
  out.state = hermite_synthesis(evolve_coefficients(c, t), basis);
  out.state.label = u.label;
  out.t = t;
  out.truncation_error = c.truncation_error;
  if (c.truncation_error > 0.01) {
    out.warning = "truncation error " + std::to_string(c.truncation_error) + " exceeds 0.01";
  }
  return out;
}

SampledDistribution special_time_operator(const SampledDistribution& u, int k, bool quarter) {
  validate(u);
  const bool odd = k % 2 != 0;
  if (!quarter) return odd ? reflect(u) : u;
  SampledDistribution v = fourier_transform_on(u, u.grid);
  const double scale = std::pow(2.0 * kPi, -0.5 * u.grid.dim);
  for (cplx& s : v.samples) s *= scale;
  v.kind = SampleKind::function;
  v.label = u.label;
  return odd ? reflect(v) : v;
}

double hermite_resolved_radius(unsigned n_max) {
  constexpr double kSpread = 8.0;
  const double b = std::sqrt(2.0) * kSpread;
  return 0.5 * (-b + std::sqrt(b * b + 8.0 * static_cast<double>(n_max)));
}

bool on_half_period_lattice(double t) {
  const double q = t / (0.5 * kPi);
  return std::abs(q - std::round(q)) <= 1e-9 * std::max(1.0, std::abs(q));
}

VerificationReport verify_propagation(const CatalogEntry& u0, double t, const DetectorParams& params,
                                      const HermiteBasis& basis) {
  const PropagatedState p = harmonic_propagate(u0.dist, t, basis);
  RaySampling sampling = params.sampling;
  const double resolved = hermite_resolved_radius(basis.n_max);
  if (sampling.r_max == 0.0) sampling.r_max = resolved;
  if (sampling.x_cap == 0.0) sampling.x_cap = std::min(resolved, basis.grid.half_width);

  VerificationReport r;
  r.t = t;
  r.n_max = basis.n_max;
  r.truncation_error = p.truncation_error;
  r.detector = estimate_gabor_wf(p.state, Window::gaussian(params.lambda), sampling, params.n_thresh);
  r.ang_tol = params.ang_tol > 0.0 ? params.ang_tol : 2.0 * r.detector.angular_step;
  r.detected_dirs = r.detector.singular_dirs;
  r.predicted_dirs = propagate_wf_set(harmonic_oscillator(u0.dist.grid.dim), t, u0.truth.gabor_wf_dirs);
  r.hausdorff_angle = hausdorff_angle(r.detected_dirs, r.predicted_dirs);
  r.smooth_expected = !on_half_period_lattice(t);
  r.smooth_tol = params.smooth_tol > 0.0 ? params.smooth_tol : r.detector.angular_step;
  r.smooth_detected = schwartz_direction_test(r.detector, r.smooth_tol);
  r.passed = r.hausdorff_angle <= r.ang_tol + 1e-9 && (!r.smooth_expected || r.smooth_detected);
  return r;
}

}  // namespace gwf
