#pragma once

#include <span>
#include <vector>

namespace gwf {

/// Unit vector; generator of a ray in a conic set.
using Direction = std::vector<double>;
/// Finite list of cone generators.
using DirectionSet = std::vector<Direction>;

double norm(std::span<const double> v);
Direction normalized(std::span<const double> v);

/// Angle between two nonzero vectors in [0, pi].
double angle_between(std::span<const double> a, std::span<const double> b);

/// Symmetric angular Hausdorff distance. Zero for two empty sets, +inf
/// when exactly one set is empty.
double hausdorff_angle(const DirectionSet& a, const DirectionSet& b);

/// One-sided: max over a of the angle to the nearest member of b.
double directed_hausdorff_angle(const DirectionSet& a, const DirectionSet& b);

/// Phase-space direction (x, xi) in R^{2d}: the angle between it and the
/// frequency subspace {0} x R^d, i.e. atan2(|x|, |xi|).
double angle_to_frequency_axis(std::span<const double> z);

/// `count` equally spaced unit vectors (cos t, sin t), t = 2 pi k / count.
DirectionSet circle_directions(std::size_t count);

/// Embeds unit vectors of R^d as (0, v) in R^{2d}.
DirectionSet embed_frequency(const DirectionSet& dirs);

}  // namespace gwf
