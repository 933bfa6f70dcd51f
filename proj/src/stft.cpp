#include "gwf/stft.hpp"

#include "gwf/fourier.hpp"
#include "gwf/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace gwf {

namespace {

// exp(-1/t) for t > 0, else 0: the usual C^infty building block.
double smooth_edge(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

// 1 on [0, 4], 0 on [6, inf), C^infty in between. Argument is |y| / lambda.
double cutoff(double s) {
  if (s <= 4.0) return 1.0;
  if (s >= 6.0) return 0.0;
  const double tau = (s - 4.0) / 2.0;
  const double a = smooth_edge(1.0 - tau);
  return a / (a + smooth_edge(tau));
}

}  // namespace

Window::Window(double width, bool compact) : width_(width), compact_(compact) {
  if (!(width > 0.0) || !std::isfinite(width)) {
    throw std::invalid_argument("window width must be positive and finite");
  }
}

double Window::value(std::span<const double> y) const {
  double r2 = 0.0;
  for (double c : y) r2 += c * c;
  const double d = static_cast<double>(y.size());
  const double psi = std::pow(kPi * width_ * width_, -d / 4.0) * std::exp(-r2 / (2.0 * width_ * width_));
  return compact_ ? psi * cutoff(std::sqrt(r2) / width_) : psi;
}

std::vector<double> Window::sampled(const Grid& g, std::span<const double> center) const {
  if (center.size() != static_cast<std::size_t>(g.dim)) {
    throw std::invalid_argument("window center dimension mismatch");
  }
  std::vector<double> out(g.size());
  if (g.dim == 1) {
    for (std::size_t j = 0; j < g.n; ++j) {
      const double y = g.coord(j) - center[0];
      out[j] = value(std::span<const double>(&y, 1));
    }
    return out;
  }
  double y[2];
  for (std::size_t j1 = 0; j1 < g.n; ++j1) {
    y[0] = g.coord(j1) - center[0];
    for (std::size_t j2 = 0; j2 < g.n; ++j2) {
      y[1] = g.coord(j2) - center[1];
      out[j1 * g.n + j2] = value(y);
    }
  }
  return out;
}

void Window::check_resolvable(const Grid& g) const {
  const double h = g.spacing();
  const double slack = 1e-12 * width_;
  if (width_ < 4.0 * h - slack || width_ > g.length() / 8.0 + slack) {
    throw std::invalid_argument("window width " + std::to_string(width_) +
                                " not resolvable: need 4h <= lambda <= L/8 with h = " +
                                std::to_string(h) + ", L = " + std::to_string(g.length()));
  }
}

cplx stft_at(const SampledDistribution& u, const Window& window, const PhasePoint& z) {
  validate(u);
  window.check_resolvable(u.grid);
  const auto d = static_cast<std::size_t>(u.grid.dim);
  if (z.x.size() != d || z.xi.size() != d) throw std::invalid_argument("phase point dimension mismatch");
  return kernels::omp::stft_points(u, window, std::span<const PhasePoint>(&z, 1))[0];
}

SampledDistribution stft_slice(const SampledDistribution& u, const Window& window,
                               std::span<const double> x) {
  validate(u);
  window.check_resolvable(u.grid);
  const auto psi = window.sampled(u.grid, x);
  SampledDistribution product = u;
  for (std::size_t j = 0; j < psi.size(); ++j) product.samples[j] *= psi[j];
  product.kind = SampleKind::function;
  auto out = fourier_transform(product);
  out.label = "V[" + u.label + "]";
  return out;
}

SampledDistribution moyal_reconstruct(const SampledDistribution& u, const Window& window,
                                      std::size_t position_stride) {
  validate(u);
  window.check_resolvable(u.grid);
  const Grid& g = u.grid;
  if (position_stride == 0) {
    position_stride = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::floor(0.5 * window.width() / g.spacing())));
  }
  const double step = static_cast<double>(position_stride) * g.spacing();
  // The position sum approximates int |psi(y - x)|^2 dx = 1; its aliasing
  // error is about 2 exp(-(pi lambda / step)^2).
  if (step > 0.5 * window.width()) {
    throw std::runtime_error("phase-space position lattice too coarse for window width");
  }
  std::vector<double> positions;
  if (g.dim == 1) {
    for (std::size_t j = 0; j < g.n; j += position_stride) positions.push_back(g.coord(j));
  } else {
    for (std::size_t j1 = 0; j1 < g.n; j1 += position_stride) {
      for (std::size_t j2 = 0; j2 < g.n; j2 += position_stride) {
        positions.push_back(g.coord(j1));
        positions.push_back(g.coord(j2));
      }
    }
  }
  const double position_cell = g.dim == 1 ? step : step * step;
  SampledDistribution out;
  out.grid = g;
  out.samples = kernels::omp::moyal_sum(u, window, positions, position_cell);
  out.kind = SampleKind::function;
  out.label = "moyal[" + u.label + "]";
  return out;
}

void write_stft_csv(std::ostream& os, const SampledDistribution& u, const Window& window,
                    std::span<const double> positions, std::span<const double> frequencies) {
  validate(u);
  const int d = u.grid.dim;
  std::vector<PhasePoint> points;
  if (d == 1) {
    for (double x : positions) {
      for (double xi : frequencies) points.push_back({{x}, {xi}});
    }
  } else {
    for (double x1 : positions) {
      for (double x2 : positions) {
        for (double k1 : frequencies) {
          for (double k2 : frequencies) points.push_back({{x1, x2}, {k1, k2}});
        }
      }
    }
  }
  const auto values = kernels::omp::stft_points(u, window, points);
  os << (d == 1 ? "x,xi,re,im,abs\n" : "x1,x2,xi1,xi2,re,im,abs\n");
  os.precision(17);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (double c : points[i].x) os << c << ',';
    for (double c : points[i].xi) os << c << ',';
    os << values[i].real() << ',' << values[i].imag() << ',' << std::abs(values[i]) << '\n';
  }
}

}  // namespace gwf
