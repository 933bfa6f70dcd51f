#include "gwf/kernels.hpp"

#include "kernel_detail.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gwf::kernels::serial {

std::vector<cplx> stft_points(const SampledDistribution& u, const Window& w,
                              std::span<const PhasePoint> points) {
  std::vector<cplx> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    out[i] = detail::stft_point(u, w, points[i]);
  }
  return out;
}

std::vector<double> binned_modulus_max(const SampledDistribution& u, const Window& w,
                                       const PhaseLattice& lattice, const PhaseBinner& bin,
                                       std::size_t n_bins) {
  const int d = u.grid.dim;
  const Grid dual = u.grid.dual();
  std::vector<double> best(n_bins, -1.0);
  const std::size_t n_pos = lattice.positions.size() / static_cast<std::size_t>(d);
  PhasePoint z{std::vector<double>(d), std::vector<double>(d)};
  for (std::size_t p = 0; p < n_pos; ++p) {
    std::copy_n(lattice.positions.begin() + static_cast<std::ptrdiff_t>(p * d), d, z.x.begin());
    for (std::size_t f = 0; f < lattice.frequency_indices.size(); ++f) {
      const std::ptrdiff_t b = bin(p, f);
      if (b < 0) continue;
      detail::dual_coords(dual, lattice.frequency_indices[f], z.xi.data());
      const double v = std::abs(detail::stft_point(u, w, z));
      best[static_cast<std::size_t>(b)] = std::max(best[static_cast<std::size_t>(b)], v);
    }
  }
  return best;
}

std::vector<cplx> dft_on_grid(const SampledDistribution& u, const Grid& target) {
  const Grid& g = u.grid;
  const std::size_t n = g.n;
  const std::size_t m = target.n;
  std::vector<cplx> out(target.size(), 0.0);
  if (g.dim == 1) {
    for (std::size_t k = 0; k < m; ++k) {
      const auto e = detail::phase_row(g, target.coord(k));
      cplx acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += u.samples[j] * e[j];
      out[k] = acc * g.cell_volume();
    }
    return out;
  }
  for (std::size_t k1 = 0; k1 < m; ++k1) {
    const auto e1 = detail::phase_row(g, target.coord(k1));
    for (std::size_t k2 = 0; k2 < m; ++k2) {
      const auto e2 = detail::phase_row(g, target.coord(k2));
      cplx acc = 0.0;
      for (std::size_t j1 = 0; j1 < n; ++j1) {
        cplx row = 0.0;
        for (std::size_t j2 = 0; j2 < n; ++j2) row += u.samples[j1 * n + j2] * e2[j2];
        acc += row * e1[j1];
      }
      out[k1 * m + k2] = acc * g.cell_volume();
    }
  }
  return out;
}

std::vector<cplx> dft_points(const SampledDistribution& u, std::span<const double> frequencies) {
  const auto d = static_cast<std::size_t>(u.grid.dim);
  std::vector<cplx> out(frequencies.size() / d);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = detail::dft_point(u, frequencies.data() + i * d);
  return out;
}

std::vector<cplx> moyal_sum(const SampledDistribution& u, const Window& w,
                            std::span<const double> positions, double position_cell) {
  const Grid& g = u.grid;
  const int d = g.dim;
  const Grid dual = g.dual();
  const double two_pi_d = d == 1 ? 2.0 * kPi : 4.0 * kPi * kPi;
  const double weight = position_cell * dual.cell_volume() / two_pi_d;
  const std::size_t n_pos = positions.size() / static_cast<std::size_t>(d);
  std::vector<cplx> out(g.size(), 0.0);
  PhasePoint z{std::vector<double>(d), std::vector<double>(d)};
  std::vector<cplx> slice(dual.size());
  std::vector<double> y(d), xi(d);
  for (std::size_t p = 0; p < n_pos; ++p) {
    std::copy_n(positions.begin() + static_cast<std::ptrdiff_t>(p * d), d, z.x.begin());
    for (std::size_t k = 0; k < dual.size(); ++k) {
      detail::dual_coords(dual, k, z.xi.data());
      slice[k] = detail::stft_point(u, w, z);
    }
    const auto psi = w.sampled(g, z.x);
    for (std::size_t m = 0; m < g.size(); ++m) {
      detail::dual_coords(g, m, y.data());
      cplx acc = 0.0;
      for (std::size_t k = 0; k < dual.size(); ++k) {
        detail::dual_coords(dual, k, xi.data());
        double phase = 0.0;
        for (int a = 0; a < d; ++a) phase += y[a] * xi[a];
        acc += slice[k] * cplx(std::cos(phase), std::sin(phase));
      }
      out[m] += acc * psi[m] * weight;
    }
  }
  return out;
}

Eigen::VectorXcd apply_rows(const Eigen::MatrixXd& table, const Eigen::VectorXcd& x) {
  if (table.cols() != x.size()) throw std::invalid_argument("apply_rows: size mismatch");
  Eigen::VectorXcd out(table.rows());
  for (Eigen::Index r = 0; r < table.rows(); ++r) {
    cplx acc = 0.0;
    for (Eigen::Index j = 0; j < table.cols(); ++j) acc += table(r, j) * x(j);
    out(r) = acc;
  }
  return out;
}

Eigen::VectorXcd apply_columns(const Eigen::MatrixXd& table, const Eigen::VectorXcd& c) {
  if (table.rows() != c.size()) throw std::invalid_argument("apply_columns: size mismatch");
  Eigen::VectorXcd out(table.cols());
  for (Eigen::Index j = 0; j < table.cols(); ++j) {
    cplx acc = 0.0;
    for (Eigen::Index r = 0; r < table.rows(); ++r) acc += table(r, j) * c(r);
    out(j) = acc;
  }
  return out;
}

}  // namespace gwf::kernels::serial
