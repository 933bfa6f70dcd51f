#include "gwf/fourier.hpp"

#include "gwf/kernels.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace gwf {

namespace detail {

namespace {

// FFTW's planner is not thread-safe; execution of an existing plan on new
// arrays is. Plans are created once per (dim, n, sign) and kept for the
// lifetime of the process.
fftw_plan plan_for(int dim, std::size_t n, int sign) {
  static std::mutex mutex;
  static std::map<std::tuple<int, std::size_t, int>, fftw_plan> plans;
  std::lock_guard<std::mutex> lock(mutex);
  const auto key = std::make_tuple(dim, n, sign);
  if (auto it = plans.find(key); it != plans.end()) return it->second;

  const std::size_t total = dim == 1 ? n : n * n;
  fftw_complex* scratch = fftw_alloc_complex(total);
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  const int fftw_sign = sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD;
  fftw_plan plan = dim == 1
      ? fftw_plan_dft_1d(static_cast<int>(n), scratch, scratch, fftw_sign, flags)
      : fftw_plan_dft_2d(static_cast<int>(n), static_cast<int>(n), scratch, scratch,
                         fftw_sign, flags);
  fftw_free(scratch);
  if (plan == nullptr) throw std::runtime_error("FFTW planning failed");
  plans.emplace(key, plan);
  return plan;
}

// (j - n/2)(k - n/2) 2pi/n = 2pi jk/n - pi (j + k) + pi n/2, and n/2 is even
// for every admissible n, so the centered transform is an ordinary DFT
// with a (-1)^j pre-twist and a (-1)^k post-twist.
void checkerboard(int dim, std::size_t n, std::span<cplx> data) {
  if (dim == 1) {
    for (std::size_t j = 1; j < n; j += 2) data[j] = -data[j];
    return;
  }
  for (std::size_t j1 = 0; j1 < n; ++j1) {
    for (std::size_t j2 = (j1 + 1) % 2; j2 < n; j2 += 2) {
      data[j1 * n + j2] = -data[j1 * n + j2];
    }
  }
}

}  // namespace

void centered_dft(int dim, std::size_t n, std::span<cplx> data, int sign) {
  if (data.size() != (dim == 1 ? n : n * n)) {
    throw std::invalid_argument("centered_dft: buffer size mismatch");
  }
  fftw_plan plan = plan_for(dim, n, sign);
  checkerboard(dim, n, data);
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(plan, buf, buf);
  checkerboard(dim, n, data);
}

}  // namespace detail

SampledDistribution fourier_transform(const SampledDistribution& u) {
  validate(u);
  SampledDistribution out;
  out.grid = u.grid.dual();
  out.samples = u.samples;
  out.kind = SampleKind::function;
  out.label = "F[" + u.label + "]";
  detail::centered_dft(u.grid.dim, u.grid.n, out.samples, -1);
  const double scale = u.grid.cell_volume();
  for (auto& v : out.samples) v *= scale;
  return out;
}

SampledDistribution inverse_fourier_transform(const SampledDistribution& v) {
  validate(v);
  SampledDistribution out;
  out.grid = v.grid.dual();
  out.samples = v.samples;
  out.kind = SampleKind::function;
  out.label = "Finv[" + v.label + "]";
  detail::centered_dft(v.grid.dim, v.grid.n, out.samples, +1);
  // (2 pi / L)^d / (2 pi)^d with L the length of the original grid.
  const double inv_len = 1.0 / out.grid.length();
  const double scale = v.grid.dim == 1 ? inv_len : inv_len * inv_len;
  for (auto& s : out.samples) s *= scale;
  return out;
}

SampledDistribution fourier_transform_on(const SampledDistribution& u, const Grid& target) {
  validate(u);
  validate(target);
  if (target.dim != u.grid.dim) throw std::invalid_argument("dimension mismatch");
  SampledDistribution out;
  out.grid = target;
  out.samples = kernels::omp::dft_on_grid(u, target);
  out.kind = SampleKind::function;
  out.label = "F[" + u.label + "]";
  return out;
}

}  // namespace gwf
