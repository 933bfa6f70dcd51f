#pragma once

#include "gwf/geometry.hpp"
#include "gwf/grid.hpp"

#include <map>
#include <string>
#include <vector>

namespace gwf {

/// Analytic wave front data of a catalog distribution.
struct GroundTruth {
  /// Generators of the conic Gabor wave front set, unit vectors in R^{2d}.
  DirectionSet gabor_wf_dirs;
  /// Generators of Sigma(u), unit vectors in R^d. Meaningful only when
  /// sigma_defined (compactly supported or Schwartz u).
  DirectionSet sigma_dirs;
  bool sigma_defined = true;
  /// Radius of a ball containing supp u; +inf when not compactly supported.
  double support_radius = 0.0;
  bool is_schwartz = false;

  bool compactly_supported() const;
};

using CatalogParams = std::map<std::string, double>;

struct CatalogInfo {
  std::string name;
  CatalogParams defaults;
  std::vector<int> dims;
  std::string description;
};

struct CatalogEntry {
  std::string name;
  CatalogParams params;
  SampledDistribution dist;
  GroundTruth truth;
};

/// All named test distributions, in a fixed order.
const std::vector<CatalogInfo>& catalog();

/// Catalog metadata by name; throws std::invalid_argument if unknown.
const CatalogInfo& catalog_info(const std::string& name);

/// Samples the named distribution on `grid` together with its ground truth.
/// Parameters not given fall back to the catalog defaults. Throws
/// std::invalid_argument for unknown names, unknown or invalid parameters,
/// unsupported dimensions, and supports reaching beyond [-L/4, L/4]^d.
CatalogEntry catalog_entry(const std::string& name, const CatalogParams& params, const Grid& grid);

/// Number of generators used for full circles in 2-D ground truths.
inline constexpr std::size_t kCircleGenerators = 360;

}  // namespace gwf
