#pragma once

// Data-parallel inner loops. Each kernel has a plain serial reference in
// gwf::kernels::serial and an OpenMP version in gwf::kernels::omp with the
// same signature. The serial versions use direct summation and are kept
// for tests and benchmarks; library code calls the omp versions.
//
// Within each output point the summation order is fixed, so omp results do
// not depend on the thread count or schedule.

#include "gwf/grid.hpp"
#include "gwf/stft.hpp"

#include <Eigen/Dense>

#include <functional>
#include <span>
#include <vector>

namespace gwf::kernels {

/// Maps lattice point (position p, frequency slot f) to a bin index, or -1
/// to drop it. p indexes PhaseLattice::positions in units of dim and f
/// indexes PhaseLattice::frequency_indices. Must be safe to call
/// concurrently.
using PhaseBinner = std::function<std::ptrdiff_t(std::size_t p, std::size_t f)>;

/// Window centers (flat, dim coordinates each) and the dual-grid indices
/// (flat row-major) whose |V| contributes to the bins. Bins that receive no
/// lattice point are reported as -1.
struct PhaseLattice {
  std::vector<double> positions;
  std::vector<std::size_t> frequency_indices;
};

namespace serial {

std::vector<cplx> stft_points(const SampledDistribution& u, const Window& w,
                              std::span<const PhasePoint> points);

std::vector<double> binned_modulus_max(const SampledDistribution& u, const Window& w,
                                       const PhaseLattice& lattice, const PhaseBinner& bin,
                                       std::size_t n_bins);

std::vector<cplx> dft_on_grid(const SampledDistribution& u, const Grid& target);

/// u^ at arbitrary frequencies (flat, dim coordinates each).
std::vector<cplx> dft_points(const SampledDistribution& u, std::span<const double> frequencies);

std::vector<cplx> moyal_sum(const SampledDistribution& u, const Window& w,
                            std::span<const double> positions, double position_cell);

/// rows(table) x n  times  n-vector. Used for Hermite analysis (with the
/// quadrature weight folded into `x`) and, transposed, for synthesis.
Eigen::VectorXcd apply_rows(const Eigen::MatrixXd& table, const Eigen::VectorXcd& x);
Eigen::VectorXcd apply_columns(const Eigen::MatrixXd& table, const Eigen::VectorXcd& c);

}  // namespace serial

namespace omp {

std::vector<cplx> stft_points(const SampledDistribution& u, const Window& w,
                              std::span<const PhasePoint> points);

std::vector<double> binned_modulus_max(const SampledDistribution& u, const Window& w,
                                       const PhaseLattice& lattice, const PhaseBinner& bin,
                                       std::size_t n_bins);

std::vector<cplx> dft_on_grid(const SampledDistribution& u, const Grid& target);

std::vector<cplx> dft_points(const SampledDistribution& u, std::span<const double> frequencies);

std::vector<cplx> moyal_sum(const SampledDistribution& u, const Window& w,
                            std::span<const double> positions, double position_cell);

Eigen::VectorXcd apply_rows(const Eigen::MatrixXd& table, const Eigen::VectorXcd& x);
Eigen::VectorXcd apply_columns(const Eigen::MatrixXd& table, const Eigen::VectorXcd& c);

}  // namespace omp

}  // namespace gwf::kernels
