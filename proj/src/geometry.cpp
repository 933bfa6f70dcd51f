#include "gwf/geometry.hpp"

#include "gwf/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gwf {

double norm(std::span<const double> v) {
  double acc = 0.0;
  for (double c : v) acc += c * c;
  return std::sqrt(acc);
}

Direction normalized(std::span<const double> v) {
  const double len = norm(v);
  if (!(len > 0.0)) throw std::invalid_argument("cannot normalize a zero vector");
  Direction out(v.begin(), v.end());
  for (double& c : out) c /= len;
  return out;
}

double angle_between(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("angle_between: dimension mismatch");
  // atan2 of |a x b| and a.b stays accurate for nearly parallel vectors.
  double dot = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
  double cross2 = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const double w = a[i] * b[j] - a[j] * b[i];
      cross2 += w * w;
    }
  }
  return std::atan2(std::sqrt(cross2), dot);
}

double directed_hausdorff_angle(const DirectionSet& a, const DirectionSet& b) {
  if (a.empty()) return 0.0;
  if (b.empty()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (const auto& p : a) {
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& q : b) nearest = std::min(nearest, angle_between(p, q));
    worst = std::max(worst, nearest);
  }
  return worst;
}

double hausdorff_angle(const DirectionSet& a, const DirectionSet& b) {
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
  return std::max(directed_hausdorff_angle(a, b), directed_hausdorff_angle(b, a));
}

double angle_to_frequency_axis(std::span<const double> z) {
  if (z.size() % 2 != 0) throw std::invalid_argument("phase-space vector must have even length");
  const std::size_t d = z.size() / 2;
  return std::atan2(norm(z.first(d)), norm(z.subspan(d)));
}

DirectionSet circle_directions(std::size_t count) {
  DirectionSet out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double t = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(count);
    out.push_back({std::cos(t), std::sin(t)});
  }
  return out;
}

DirectionSet embed_frequency(const DirectionSet& dirs) {
  DirectionSet out;
  out.reserve(dirs.size());
  for (const auto& v : dirs) {
    Direction z(2 * v.size(), 0.0);
    std::copy(v.begin(), v.end(), z.begin() + static_cast<std::ptrdiff_t>(v.size()));
    out.push_back(std::move(z));
  }
  return out;
}

}  // namespace gwf
