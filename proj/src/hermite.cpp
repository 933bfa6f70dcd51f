#include "gwf/hermite.hpp"

#include "gwf/grid.hpp"

#include <algorithm>
#include <cmath>

namespace gwf {

namespace {

// Fills h_0(x)..h_{n_max}(x) into out[0..n_max].
template <class Out>
void hermite_column(unsigned n_max, double x, Out&& out) {
  // Values are m * 2^e; m stays O(1) by renormalizing every step.
  const double log2_gauss = -0.5 * x * x / std::log(2.0);
  int e = static_cast<int>(std::floor(log2_gauss));
  double prev = 0.0;
  double cur = std::pow(kPi, -0.25) * std::exp2(log2_gauss - e);
  auto emit = [&](unsigned k, double m) { out(k, std::ldexp(m, e)); };
  emit(0, cur);
  for (unsigned k = 0; k < n_max; ++k) {
    const double next = std::sqrt(2.0 / (k + 1.0)) * x * cur - std::sqrt(k / (k + 1.0)) * prev;
    prev = cur;
    cur = next;
    int shift = 0;
    const double big = std::max(std::abs(cur), std::abs(prev));
    if (big > 0.0) std::frexp(big, &shift);
    if (shift != 0) {
      cur = std::ldexp(cur, -shift);
      prev = std::ldexp(prev, -shift);
      e += shift;
    }
    emit(k + 1, cur);
  }
}

}  // namespace

double hermite_function(unsigned n, double x) {
  double result = 0.0;
  hermite_column(n, x, [&](unsigned k, double v) {
    if (k == n) result = v;
  });
  return result;
}

Eigen::MatrixXd hermite_table(unsigned n_max, std::span<const double> x) {
  Eigen::MatrixXd table(n_max + 1, static_cast<Eigen::Index>(x.size()));
  for (std::size_t j = 0; j < x.size(); ++j) {
    const auto col = static_cast<Eigen::Index>(j);
    hermite_column(n_max, x[j], [&](unsigned k, double v) { table(k, col) = v; });
  }
  return table;
}

}  // namespace gwf
