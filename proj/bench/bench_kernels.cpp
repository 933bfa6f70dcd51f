// Serial reference kernels against their OpenMP counterparts on the
// acceptance grid (d = 1: n = 1024, L = 40; d = 2: n = 256, L = 20).

#include "gwf/catalog.hpp"
#include "gwf/hermite.hpp"
#include "gwf/kernels.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace gwf;

const SampledDistribution& box_1d() {
  static const SampledDistribution u = catalog_entry("box", {}, make_grid(1, 1024, 20.0)).dist;
  return u;
}

const SampledDistribution& box_2d() {
  static const SampledDistribution u = catalog_entry("box2d", {}, make_grid(2, 256, 10.0)).dist;
  return u;
}

std::vector<PhasePoint> phase_points(int dim, std::size_t count) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> x(-5.0, 5.0), xi(-30.0, 30.0);
  std::vector<PhasePoint> pts(count);
  for (auto& p : pts) {
    for (int i = 0; i < dim; ++i) {
      p.x.push_back(x(rng));
      p.xi.push_back(xi(rng));
    }
  }
  return pts;
}

template <auto Kernel>
void stft_points(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const SampledDistribution& u = dim == 1 ? box_1d() : box_2d();
  const auto pts = phase_points(dim, dim == 1 ? 4096 : 64);
  const Window w = Window::gaussian(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(u, w, pts));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pts.size()));
}

template <auto Kernel>
void dft_on_grid(benchmark::State& state) {
  const SampledDistribution& u = box_1d();
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(u, u.grid.dual()));
}

template <auto Kernel>
void binned_max(benchmark::State& state) {
  const SampledDistribution& u = box_1d();
  const Grid& g = u.grid;
  kernels::PhaseLattice lattice;
  for (std::size_t j = 0; j < g.n; j += 16) lattice.positions.push_back(g.coord(j));
  for (std::size_t k = 0; k < g.n; ++k) lattice.frequency_indices.push_back(k);
  const kernels::PhaseBinner bin = [](std::size_t p, std::size_t f) -> std::ptrdiff_t {
    return static_cast<std::ptrdiff_t>((p * 7 + f) % 64);
  };
  const Window w = Window::gaussian(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(u, w, lattice, bin, 64));
}

template <auto Kernel>
void moyal_sum(benchmark::State& state) {
  const SampledDistribution& u = box_1d();
  const Grid& g = u.grid;
  std::vector<double> positions;
  for (std::size_t j = 0; j < g.n; j += 12) positions.push_back(g.coord(j));
  const Window w = Window::gaussian(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(u, w, positions, 12.0 * g.spacing()));
}

template <auto Kernel>
void hermite_analysis(benchmark::State& state) {
  const SampledDistribution& u = box_1d();
  const Grid& g = u.grid;
  std::vector<double> xs(g.n);
  for (std::size_t j = 0; j < g.n; ++j) xs[j] = g.coord(j);
  const Eigen::MatrixXd table = hermite_table(171, xs);
  const Eigen::VectorXcd x = Eigen::Map<const Eigen::VectorXcd>(u.samples.data(), static_cast<Eigen::Index>(g.n));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(table, x));
}

BENCHMARK(stft_points<kernels::serial::stft_points>)->Name("stft_points/serial")->Arg(1)->Arg(2);
BENCHMARK(stft_points<kernels::omp::stft_points>)->Name("stft_points/omp")->Arg(1)->Arg(2);
BENCHMARK(dft_on_grid<kernels::serial::dft_on_grid>)->Name("dft_on_grid/serial");
BENCHMARK(dft_on_grid<kernels::omp::dft_on_grid>)->Name("dft_on_grid/omp");
BENCHMARK(binned_max<kernels::serial::binned_modulus_max>)->Name("binned_modulus_max/serial");
BENCHMARK(binned_max<kernels::omp::binned_modulus_max>)->Name("binned_modulus_max/omp");
BENCHMARK(moyal_sum<kernels::serial::moyal_sum>)->Name("moyal_sum/serial");
BENCHMARK(moyal_sum<kernels::omp::moyal_sum>)->Name("moyal_sum/omp");
BENCHMARK(hermite_analysis<kernels::serial::apply_rows>)->Name("apply_rows/serial");
BENCHMARK(hermite_analysis<kernels::omp::apply_rows>)->Name("apply_rows/omp");

}  // namespace

BENCHMARK_MAIN();
