#include "gwf/wavefront.hpp"

#include "gwf/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gwf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Grid directions are compared against multiples of the angular step; the
// slack absorbs the rounding of atan2 on exactly representable cases.
constexpr double kAngleSlack = 1e-9;

struct PhaseBox {
  double x_cap = 0.0;
  double xi_cap = 0.0;
  double r_max = kInf;
};

// The 2-D grid on S^3 holds about n_dirs^3 / 8 directions, so it gets the
// coarser default.
std::size_t default_dirs(int dim) { return dim == 1 ? 32 : 16; }

// Window centers may roam the whole grid when u lives in the central box,
// since u times the window then never reaches the grid edge; otherwise they
// stay in the central box.
PhaseBox phase_box(const Grid& g, const RaySampling& s, bool compact) {
  PhaseBox box;
  box.x_cap = s.x_cap > 0.0 ? s.x_cap : 0.9 * g.length() / (compact ? 2.0 : 4.0);
  box.xi_cap = 0.9 * kPi / (2.0 * g.spacing());
  if (s.r_max > 0.0) box.r_max = s.r_max;
  return box;
}

void validate_sampling(const Grid& g, const RaySampling& s, std::size_t n_dirs, std::size_t min_dirs,
                       double n_thresh) {
  if (!(n_thresh > 0.0) || !std::isfinite(n_thresh)) throw std::invalid_argument("n_thresh must be positive");
  if (!(s.r_min >= 1.0) || !std::isfinite(s.r_min)) throw std::invalid_argument("r_min must be >= 1");
  if (!(s.rho > 1.0) || !std::isfinite(s.rho)) throw std::invalid_argument("rho must be > 1");
  if (n_dirs < min_dirs) {
    throw std::invalid_argument("n_dirs must be at least " + std::to_string(min_dirs));
  }
  if (n_dirs % 4 != 0) throw std::invalid_argument("n_dirs must be a multiple of 4");
  if (s.x_cap < 0.0 || s.x_cap > g.half_width) throw std::invalid_argument("x_cap must lie in (0, L/2]");
  if (!(s.cone_fraction > 0.0) || s.cone_fraction > 0.5) {
    throw std::invalid_argument("cone_fraction must lie in (0, 0.5]");
  }
  const PhaseBox box = phase_box(g, s, true);
  if (s.r_max < 0.0 || s.r_max > std::hypot(box.x_cap, box.xi_cap) * std::sqrt(static_cast<double>(g.dim))) {
    throw std::invalid_argument("r_max exceeds the resolvable phase-space box");
  }
  if (s.r_max > 0.0 && s.r_max <= s.r_min) throw std::invalid_argument("r_max must exceed r_min");
}

// Largest r with r*w inside the box; w = (x-part, xi-part), either part may
// be empty.
double ray_cap(std::span<const double> x_part, std::span<const double> xi_part, const PhaseBox& box) {
  double cap = box.r_max;
  for (double c : x_part) {
    if (c != 0.0) cap = std::min(cap, box.x_cap / std::abs(c));
  }
  for (double c : xi_part) {
    if (c != 0.0) cap = std::min(cap, box.xi_cap / std::abs(c));
  }
  return cap;
}

// Shell boundaries r_min rho^k below `cap`, closed by `cap` itself.
std::vector<double> shell_edges(double r_min, double rho, double cap) {
  std::vector<double> edges;
  if (!(cap > r_min)) return edges;
  for (double r = r_min; r < cap * (1.0 - 1e-12); r *= rho) edges.push_back(r);
  edges.push_back(cap);
  return edges;
}

double snap(double v) { return std::abs(v) < 1e-15 ? 0.0 : v; }

Direction unit_angle(double theta) { return {snap(std::cos(theta)), snap(std::sin(theta))}; }

// Fits log v = c - s log r over the upper half of the shells. `values` holds
// the sup per shell, negative for empty shells.
DecayProfile fit_profile(Direction dir, const std::vector<double>& edges, const std::vector<double>& values,
                         double floor_value) {
  DecayProfile p;
  p.direction = std::move(dir);
  const std::size_t n_shells = edges.empty() ? 0 : edges.size() - 1;
  const std::size_t first_fit = n_shells / 2;
  std::vector<double> lx, ly;
  for (std::size_t k = 0; k < n_shells; ++k) {
    if (values[k] < 0.0) continue;
    if (k < first_fit) ++p.fit_begin;
    p.radii.push_back(std::sqrt(edges[k] * edges[k + 1]));
    p.values.push_back(values[k]);
    if (k >= first_fit) {
      if (!(values[k] >= floor_value) || values[k] == 0.0) p.floor_hit = true;
      lx.push_back(std::log(p.radii.back()));
      ly.push_back(values[k] > 0.0 ? std::log(values[k]) : 0.0);
    }
  }
  if (lx.size() < kMinFitPoints) {
    p.degenerate = true;
    p.floor_hit = false;
    return p;
  }
  if (p.floor_hit) return p;
  const auto m = static_cast<double>(lx.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  const double b = sxy / sxx;
  double ss = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double e = ly[i] - (my + b * (lx[i] - mx));
    ss += e * e;
  }
  p.slope = -b;
  p.residual = std::sqrt(ss / m);
  return p;
}

void classify(WavefrontReport& report) {
  report.singular_dirs.clear();
  report.isolated.clear();
  std::vector<std::size_t> flagged;
  for (std::size_t i = 0; i < report.profiles.size(); ++i) {
    const auto& p = report.profiles[i];
    if (!p.degenerate && !p.floor_hit && p.slope <= report.params.n_thresh) flagged.push_back(i);
  }
  // On S^0 there are no neighbors to merge with.
  const bool has_neighbors = report.profiles.size() > 2;
  const double reach = 1.5 * report.angular_step;
  for (std::size_t i : flagged) {
    const Direction& d = report.profiles[i].direction;
    report.singular_dirs.push_back(d);
    if (!has_neighbors) continue;
    bool lonely = true;
    for (std::size_t j : flagged) {
      if (j != i && angle_between(d, report.profiles[j].direction) <= reach) {
        lonely = false;
        break;
      }
    }
    if (lonely) report.isolated.push_back(d);
  }
  report.degenerate_count = 0;
  for (const auto& p : report.profiles) report.degenerate_count += p.degenerate ? 1 : 0;
  if (!report.profiles.empty() && report.degenerate_count == report.profiles.size()) {
    throw std::runtime_error("degenerate fit: no direction has at least 4 usable radii");
  }
}

double window_norm(const Window& w, const Grid& g) {
  const std::vector<double> center(static_cast<std::size_t>(g.dim), 0.0);
  double s = 0.0;
  for (double v : w.sampled(g, center)) s += v * v;
  return std::sqrt(s * g.cell_volume());
}

double l1_norm(const SampledDistribution& u) {
  double s = 0.0;
  for (const cplx& v : u.samples) s += std::abs(v);
  return s * u.grid.cell_volume();
}

// Radial sample spacing along exact rays, fine enough to resolve modulus
// variation on the window's x and xi scales.
double ray_step(double lambda) { return 0.1 * std::min(lambda, 1.0 / lambda); }

// Evaluates sup |f| per shell along each ray, where f is sampled at
// base + r * dir by `eval` on flat point lists.
struct RayPlan {
  std::vector<std::vector<double>> edges;
  std::vector<std::size_t> point_dir, point_shell;
  std::vector<double> radii;
};

RayPlan plan_rays(const std::vector<double>& caps, double r_min, double rho, double step) {
  RayPlan plan;
  plan.edges.reserve(caps.size());
  for (std::size_t i = 0; i < caps.size(); ++i) {
    plan.edges.push_back(shell_edges(r_min, rho, caps[i]));
    const auto& e = plan.edges.back();
    for (std::size_t k = 0; k + 1 < e.size(); ++k) {
      const double width = e[k + 1] - e[k];
      const auto m = std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil(width / step)));
      for (std::size_t q = 0; q <= m; ++q) {
        plan.point_dir.push_back(i);
        plan.point_shell.push_back(k);
        plan.radii.push_back(e[k] + width * static_cast<double>(q) / static_cast<double>(m));
      }
    }
  }
  return plan;
}

std::vector<std::vector<double>> shell_sup(const RayPlan& plan, const std::vector<cplx>& values) {
  std::vector<std::vector<double>> sup(plan.edges.size());
  for (std::size_t i = 0; i < plan.edges.size(); ++i) {
    sup[i].assign(plan.edges[i].empty() ? 0 : plan.edges[i].size() - 1, -1.0);
  }
  for (std::size_t p = 0; p < values.size(); ++p) {
    double& slot = sup[plan.point_dir[p]][plan.point_shell[p]];
    slot = std::max(slot, std::abs(values[p]));
  }
  return sup;
}

double largest_cap(const std::vector<double>& caps) {
  double m = 0.0;
  for (double c : caps) m = std::max(m, c);
  return m;
}

// Multiples of 4 keep each circle invariant under quarter turns, so the
// sphere grid is closed under J and under X -> -X.
std::size_t circle_count(double ideal) {
  return std::max<std::size_t>(1, 4 * static_cast<std::size_t>(std::lround(ideal / 4.0)));
}

// Grid on S^3 used for the 2-D phase space, organized by latitude alpha.
struct SphereGrid {
  double step = 0.0;
  std::vector<std::size_t> n_phi, n_theta, offset;
  DirectionSet dirs;

  explicit SphereGrid(std::size_t n_dirs) {
    step = 2.0 * kPi / static_cast<double>(n_dirs);
    const std::size_t levels = n_dirs / 4 + 1;
    for (std::size_t a = 0; a < levels; ++a) {
      const double alpha = static_cast<double>(a) * step;
      const double sa = snap(std::sin(alpha)), ca = snap(std::cos(alpha));
      const std::size_t np = circle_count(n_dirs * sa);
      const std::size_t nt = circle_count(n_dirs * ca);
      n_phi.push_back(np);
      n_theta.push_back(nt);
      offset.push_back(dirs.size());
      for (std::size_t i = 0; i < np; ++i) {
        const double phi = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(np);
        for (std::size_t j = 0; j < nt; ++j) {
          const double theta = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(nt);
          dirs.push_back({snap(sa * std::cos(phi)), snap(sa * std::sin(phi)), snap(ca * std::cos(theta)),
                          snap(ca * std::sin(theta))});
        }
      }
    }
  }

  static std::size_t nearest_index(double angle, std::size_t count) {
    if (count == 1) return 0;
    const double t = angle / (2.0 * kPi) * static_cast<double>(count);
    const auto i = static_cast<long long>(std::llround(t));
    const auto c = static_cast<long long>(count);
    return static_cast<std::size_t>(((i % c) + c) % c);
  }

  // Nearest grid direction to the unit vector z and its cosine, given the
  // latitude alpha = atan2(|z_x|, |z_xi|) and the in-plane angles of z_x and
  // z_xi (either is ignored on a circle of one point).
  std::pair<std::size_t, double> nearest(const double* z, double alpha, double phi, double theta) const {
    const auto a0 = static_cast<long long>(std::llround(alpha / step));
    std::size_t best = 0;
    double best_dot = -2.0;
    for (long long a = a0 - 1; a <= a0 + 1; ++a) {
      if (a < 0 || a >= static_cast<long long>(n_phi.size())) continue;
      const auto la = static_cast<std::size_t>(a);
      const std::size_t i = nearest_index(phi, n_phi[la]);
      const std::size_t j = nearest_index(theta, n_theta[la]);
      const std::size_t idx = offset[la] + i * n_theta[la] + j;
      const Direction& d = dirs[idx];
      const double dot = d[0] * z[0] + d[1] * z[1] + d[2] * z[2] + d[3] * z[3];
      if (dot > best_dot) {
        best_dot = dot;
        best = idx;
      }
    }
    return {best, best_dot};
  }
};

// Per-point coordinates of a 2-D plane sample: components, norm and angle.
struct PlanePoint {
  double c[2];
  double norm;
  double norm2;
  double angle;
};

PlanePoint plane_point(double a, double b) {
  const double n2 = a * a + b * b;
  return {{a, b}, std::sqrt(n2), n2, std::atan2(b, a)};
}

std::size_t auto_stride(const Grid& g, double lambda) {
  const double target = std::min(0.4, 0.75 * lambda);
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(target / g.spacing())));
}

WavefrontReport gabor_1d(const SampledDistribution& u, const Window& window, const RaySampling& s,
                         double n_thresh) {
  const Grid& g = u.grid;
  const std::size_t n_dirs = s.n_dirs ? s.n_dirs : default_dirs(g.dim);
  validate_sampling(g, s, n_dirs, 8, n_thresh);
  const PhaseBox box = phase_box(g, s, supported_in_central_box(u));

  DirectionSet dirs;
  std::vector<double> caps;
  for (std::size_t k = 0; k < n_dirs; ++k) {
    dirs.push_back(unit_angle(2.0 * kPi * static_cast<double>(k) / static_cast<double>(n_dirs)));
    caps.push_back(ray_cap(std::span<const double>(dirs.back().data(), 1),
                           std::span<const double>(dirs.back().data() + 1, 1), box));
  }
  const RayPlan plan = plan_rays(caps, s.r_min, s.rho, ray_step(window.width()));
  std::vector<PhasePoint> points(plan.radii.size());
  for (std::size_t p = 0; p < points.size(); ++p) {
    const Direction& d = dirs[plan.point_dir[p]];
    points[p] = PhasePoint{{plan.radii[p] * d[0]}, {plan.radii[p] * d[1]}};
  }
  const auto sup = shell_sup(plan, kernels::omp::stft_points(u, window, points));

  WavefrontReport report;
  report.kind = ReportKind::gabor;
  report.angular_step = angular_step(n_dirs);
  report.params = {n_dirs, s.r_min, largest_cap(caps), s.rho, n_thresh, window.width()};
  const double floor_value = kNumericFloor * u.l2_norm() * window_norm(window, g);
  for (std::size_t i = 0; i < n_dirs; ++i) {
    report.profiles.push_back(fit_profile(dirs[i], plan.edges[i], sup[i], floor_value));
  }
  return report;
}

WavefrontReport gabor_2d(const SampledDistribution& u, const Window& window, const RaySampling& s,
                         double n_thresh) {
  const Grid& g = u.grid;
  const std::size_t n_dirs = s.n_dirs ? s.n_dirs : default_dirs(g.dim);
  validate_sampling(g, s, n_dirs, 8, n_thresh);
  const PhaseBox box = phase_box(g, s, supported_in_central_box(u));
  const SphereGrid sphere(n_dirs);
  const std::size_t n_sphere = sphere.dirs.size();

  std::vector<double> caps(n_sphere);
  std::vector<std::vector<double>> edges(n_sphere);
  std::size_t max_shells = 0;
  for (std::size_t i = 0; i < n_sphere; ++i) {
    const Direction& d = sphere.dirs[i];
    caps[i] = ray_cap(std::span<const double>(d.data(), 2), std::span<const double>(d.data() + 2, 2), box);
    edges[i] = shell_edges(s.r_min, s.rho, caps[i]);
    if (!edges[i].empty()) max_shells = std::max(max_shells, edges[i].size() - 1);
  }

  kernels::PhaseLattice lattice;
  const std::size_t stride = s.position_stride ? s.position_stride : auto_stride(g, window.width());
  std::vector<double> axis;
  for (std::size_t j = 0; j < g.n; ++j) {
    const long long offset = static_cast<long long>(j) - static_cast<long long>(g.center());
    if (std::abs(g.coord(j)) <= box.x_cap && offset % static_cast<long long>(stride) == 0) {
      axis.push_back(g.coord(j));
    }
  }
  std::vector<PlanePoint> pos, freq;
  for (double a : axis) {
    for (double b : axis) {
      lattice.positions.push_back(a);
      lattice.positions.push_back(b);
      pos.push_back(plane_point(a, b));
    }
  }
  const Grid dual = g.dual();
  for (std::size_t k1 = 0; k1 < g.n; ++k1) {
    if (std::abs(dual.coord(k1)) > box.xi_cap) continue;
    for (std::size_t k2 = 0; k2 < g.n; ++k2) {
      if (std::abs(dual.coord(k2)) > box.xi_cap) continue;
      lattice.frequency_indices.push_back(k1 * g.n + k2);
      freq.push_back(plane_point(dual.coord(k1), dual.coord(k2)));
    }
  }

  const double cos_tol = std::cos(s.cone_fraction * sphere.step);
  const double log_rho = std::log(s.rho);
  const double r_min2 = s.r_min * s.r_min;
  const double cap2 = largest_cap(caps) * largest_cap(caps);
  const kernels::PhaseBinner binner = [&](std::size_t p, std::size_t f) -> std::ptrdiff_t {
    const PlanePoint& x = pos[p];
    const PlanePoint& xi = freq[f];
    const double r2 = x.norm2 + xi.norm2;
    if (r2 < r_min2 || r2 > cap2) return -1;
    const double r = std::sqrt(r2);
    const double z[4] = {x.c[0] / r, x.c[1] / r, xi.c[0] / r, xi.c[1] / r};
    const auto [dir, dot] = sphere.nearest(z, std::atan2(x.norm, xi.norm), x.angle, xi.angle);
    if (dot < cos_tol || r > caps[dir]) return -1;
    auto k = static_cast<std::ptrdiff_t>(std::floor(std::log(r / s.r_min) / log_rho));
    const auto& e = edges[dir];
    const auto shells = static_cast<std::ptrdiff_t>(e.size()) - 1;
    k = std::clamp<std::ptrdiff_t>(k, 0, shells - 1);
    if (r < e[static_cast<std::size_t>(k)] && k > 0) --k;
    if (k + 1 < shells && r >= e[static_cast<std::size_t>(k + 1)]) ++k;
    return static_cast<std::ptrdiff_t>(dir * max_shells) + k;
  };
  const auto best = kernels::omp::binned_modulus_max(u, window, lattice, binner, n_sphere * max_shells);

  WavefrontReport report;
  report.kind = ReportKind::gabor;
  report.angular_step = sphere.step;
  report.params = {n_dirs, s.r_min, largest_cap(caps), s.rho, n_thresh, window.width()};
  const double floor_value = kNumericFloor * u.l2_norm() * window_norm(window, g);
  for (std::size_t i = 0; i < n_sphere; ++i) {
    std::vector<double> values(best.begin() + static_cast<std::ptrdiff_t>(i * max_shells),
                               best.begin() + static_cast<std::ptrdiff_t>((i + 1) * max_shells));
    report.profiles.push_back(fit_profile(sphere.dirs[i], edges[i], values, floor_value));
  }
  return report;
}

DirectionSet frequency_directions(int dim, std::size_t n_dirs) {
  if (dim == 1) return {{1.0}, {-1.0}};
  DirectionSet dirs;
  for (std::size_t k = 0; k < n_dirs; ++k) {
    dirs.push_back(unit_angle(2.0 * kPi * static_cast<double>(k) / static_cast<double>(n_dirs)));
  }
  return dirs;
}

}  // namespace

std::string to_string(ReportKind kind) {
  switch (kind) {
    case ReportKind::gabor: return "gabor";
    case ReportKind::sigma: return "sigma";
    case ReportKind::classical: return "classical";
  }
  return "unknown";
}

std::string to_string(ComparisonStatus status) {
  switch (status) {
    case ComparisonStatus::pass: return "pass";
    case ComparisonStatus::fail: return "fail";
    case ComparisonStatus::rejected: return "rejected";
  }
  return "unknown";
}

double angular_step(std::size_t n_dirs) { return 2.0 * kPi / static_cast<double>(n_dirs); }

bool supported_in_central_box(const SampledDistribution& u) {
  const Grid& g = u.grid;
  const double quarter = g.length() / 4.0 + 1e-12 * g.length();
  double inside = 0.0, outside = 0.0;
  for (std::size_t idx = 0; idx < u.samples.size(); ++idx) {
    const std::size_t j1 = g.dim == 1 ? idx : idx / g.n;
    const std::size_t j2 = g.dim == 1 ? 0 : idx % g.n;
    bool out = std::abs(g.coord(j1)) > quarter;
    if (g.dim == 2) out = out || std::abs(g.coord(j2)) > quarter;
    double& slot = out ? outside : inside;
    slot = std::max(slot, std::abs(u.samples[idx]));
  }
  return outside <= 1e-12 * std::max(inside, outside);
}

WavefrontReport estimate_gabor_wf(const SampledDistribution& u, const Window& window,
                                  const RaySampling& sampling, double n_thresh) {
  validate(u);
  window.check_resolvable(u.grid);
  WavefrontReport report =
      u.grid.dim == 1 ? gabor_1d(u, window, sampling, n_thresh) : gabor_2d(u, window, sampling, n_thresh);
  report.compact_support = supported_in_central_box(u);
  classify(report);
  return report;
}

WavefrontReport estimate_sigma(const SampledDistribution& u, const RaySampling& sampling, double n_thresh) {
  validate(u);
  const Grid& g = u.grid;
  const std::size_t n_dirs = sampling.n_dirs ? sampling.n_dirs : default_dirs(g.dim);
  validate_sampling(g, sampling, n_dirs, 8, n_thresh);
  const PhaseBox box = phase_box(g, sampling, supported_in_central_box(u));
  const DirectionSet dirs = frequency_directions(g.dim, n_dirs);
  std::vector<double> caps;
  for (const auto& d : dirs) caps.push_back(ray_cap({}, d, box));

  const RayPlan plan = plan_rays(caps, sampling.r_min, sampling.rho, kPi / g.length());
  const auto d = static_cast<std::size_t>(g.dim);
  std::vector<double> freqs(plan.radii.size() * d);
  for (std::size_t p = 0; p < plan.radii.size(); ++p) {
    for (std::size_t a = 0; a < d; ++a) freqs[p * d + a] = plan.radii[p] * dirs[plan.point_dir[p]][a];
  }
  const auto sup = shell_sup(plan, kernels::omp::dft_points(u, freqs));

  WavefrontReport report;
  report.kind = ReportKind::sigma;
  report.angular_step = g.dim == 1 ? kPi : angular_step(n_dirs);
  report.params = {g.dim == 1 ? 2 : n_dirs, sampling.r_min, largest_cap(caps), sampling.rho, n_thresh, 0.0};
  const double floor_value = kNumericFloor * l1_norm(u);
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    report.profiles.push_back(fit_profile(dirs[i], plan.edges[i], sup[i], floor_value));
  }
  report.compact_support = supported_in_central_box(u);
  classify(report);
  return report;
}

WavefrontReport estimate_classical_wf(const SampledDistribution& u, const Window& window,
                                      std::span<const double> x0, const RaySampling& sampling,
                                      double n_thresh) {
  validate(u);
  const Grid& g = u.grid;
  if (!window.compact()) throw std::invalid_argument("classical wave front set needs a compact window");
  window.check_resolvable(g);
  if (x0.size() != static_cast<std::size_t>(g.dim)) throw std::invalid_argument("x0 has the wrong dimension");
  for (double c : x0) {
    if (!std::isfinite(c) || std::abs(c) >= g.half_width) throw std::invalid_argument("x0 lies outside the grid");
  }
  const std::size_t n_dirs = sampling.n_dirs ? sampling.n_dirs : default_dirs(g.dim);
  validate_sampling(g, sampling, n_dirs, 8, n_thresh);
  const PhaseBox box = phase_box(g, sampling, supported_in_central_box(u));
  const DirectionSet dirs = frequency_directions(g.dim, n_dirs);
  std::vector<double> caps;
  for (const auto& d : dirs) caps.push_back(ray_cap({}, d, box));

  const RayPlan plan = plan_rays(caps, sampling.r_min, sampling.rho, ray_step(window.width()));
  std::vector<PhasePoint> points(plan.radii.size());
  const std::vector<double> base(x0.begin(), x0.end());
  for (std::size_t p = 0; p < points.size(); ++p) {
    std::vector<double> xi(dirs[plan.point_dir[p]]);
    for (double& c : xi) c *= plan.radii[p];
    points[p] = PhasePoint{base, std::move(xi)};
  }
  const auto sup = shell_sup(plan, kernels::omp::stft_points(u, window, points));

  WavefrontReport report;
  report.kind = ReportKind::classical;
  report.base_point = base;
  report.angular_step = g.dim == 1 ? kPi : angular_step(n_dirs);
  report.params = {g.dim == 1 ? 2 : n_dirs, sampling.r_min, largest_cap(caps), sampling.rho, n_thresh,
                   window.width()};
  const double floor_value = kNumericFloor * u.l2_norm() * window_norm(window, g);
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    report.profiles.push_back(fit_profile(dirs[i], plan.edges[i], sup[i], floor_value));
  }
  report.compact_support = supported_in_central_box(u);
  classify(report);
  return report;
}

WavefrontReport reclassify(const WavefrontReport& report, double n_thresh) {
  if (!(n_thresh > 0.0) || !std::isfinite(n_thresh)) throw std::invalid_argument("n_thresh must be positive");
  WavefrontReport out = report;
  out.params.n_thresh = n_thresh;
  classify(out);
  return out;
}

ComparisonResult check_main_theorem(const WavefrontReport& gabor, const WavefrontReport& sigma, double ang_tol) {
  if (gabor.kind != ReportKind::gabor || sigma.kind != ReportKind::sigma) {
    throw std::invalid_argument("check_main_theorem expects a gabor and a sigma report");
  }
  ComparisonResult result;
  result.ang_tol = ang_tol > 0.0 ? ang_tol : 2.0 * gabor.angular_step;
  if (!gabor.compact_support || !sigma.compact_support) {
    result.status = ComparisonStatus::rejected;
    result.message = "not compactly supported: theorem check skipped";
    result.x_extent_angle = kInf;
    result.hausdorff = kInf;
    return result;
  }
  DirectionSet xi_parts;
  for (const auto& z : gabor.singular_dirs) {
    result.x_extent_angle = std::max(result.x_extent_angle, angle_to_frequency_axis(z));
    const std::size_t d = z.size() / 2;
    const std::span<const double> xi(z.data() + d, d);
    if (norm(xi) > 1e-12) xi_parts.push_back(normalized(xi));
  }
  result.hausdorff = hausdorff_angle(xi_parts, sigma.singular_dirs);
  const double limit = result.ang_tol + kAngleSlack;
  const bool ok = result.x_extent_angle <= limit && result.hausdorff <= limit;
  result.status = ok ? ComparisonStatus::pass : ComparisonStatus::fail;
  result.message = ok ? "WF_G matches {0} x Sigma" : "WF_G differs from {0} x Sigma";
  return result;
}

bool schwartz_direction_test(const WavefrontReport& report, double ang_tol) {
  const double tol = ang_tol > 0.0 ? ang_tol : report.angular_step;
  for (const auto& z : report.singular_dirs) {
    if (angle_to_frequency_axis(z) <= tol + kAngleSlack) return false;
  }
  return true;
}

}  // namespace gwf
