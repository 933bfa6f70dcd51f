#include "gwf/catalog.hpp"
#include "gwf/fourier.hpp"
#include "gwf/kernels.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

namespace gwf {
namespace {

Grid line() { return make_grid(1, 1024, 20.0); }
Grid plane() { return make_grid(2, 256, 10.0); }

double max_abs(const std::vector<cplx>& v) {
  double m = 0.0;
  for (const cplx& c : v) m = std::max(m, std::abs(c));
  return m;
}

TEST(Grid, SpacingAndSize) {
  const Grid g = line();
  EXPECT_DOUBLE_EQ(g.spacing(), 0.0390625);
  EXPECT_EQ(g.size(), 1024u);
  EXPECT_DOUBLE_EQ(g.coord(0), -20.0);
  EXPECT_DOUBLE_EQ(g.coord(g.center()), 0.0);
  EXPECT_EQ(plane().size(), 65536u);
}

TEST(Grid, RejectsBadInput) {
  EXPECT_THROW(make_grid(1, 1000, 20.0), std::invalid_argument);
  EXPECT_THROW(make_grid(1, 8, 20.0), std::invalid_argument);
  EXPECT_THROW(make_grid(1, 1024, 0.0), std::invalid_argument);
  EXPECT_THROW(make_grid(1, 1024, -1.0), std::invalid_argument);
  EXPECT_THROW(make_grid(3, 64, 1.0), std::invalid_argument);
}

TEST(Grid, DualOfDualIsOriginal) {
  const Grid g = line();
  const Grid dd = g.dual().dual();
  EXPECT_EQ(dd.n, g.n);
  EXPECT_NEAR(dd.half_width, g.half_width, 1e-12);
  EXPECT_NEAR(g.dual().spacing(), 2.0 * kPi / g.length(), 1e-15);
}

TEST(Grid, ReflectMapsIndexToNegative) {
  const Grid g = line();
  SampledDistribution u{g, std::vector<cplx>(g.size()), SampleKind::function, "ramp"};
  for (std::size_t j = 0; j < g.n; ++j) u.samples[j] = g.coord(j);
  const SampledDistribution r = reflect(u);
  for (std::size_t j = 1; j < g.n; ++j) EXPECT_DOUBLE_EQ(r.samples[j].real(), -g.coord(j));
}

TEST(Catalog, ListsAllEntries) {
  std::set<std::string> names;
  for (const auto& info : catalog()) names.insert(info.name);
  for (const char* n : {"dirac", "dirac_derivative", "gaussian", "hermite", "box", "chirp", "line_delta_2d", "box2d",
                        "bump"}) {
    EXPECT_TRUE(names.contains(n)) << n;
  }
  EXPECT_GE(names.size(), 9u);
}

TEST(Catalog, DiracIsUnitSpike) {
  const Grid g = line();
  const CatalogEntry e = catalog_entry("dirac", {}, g);
  EXPECT_EQ(e.dist.kind, SampleKind::singular_spike);
  EXPECT_DOUBLE_EQ(e.dist.samples[g.center()].real(), 1.0 / g.spacing());
  double mass = 0.0;
  for (const cplx& s : e.dist.samples) mass += s.real() * g.spacing();
  EXPECT_NEAR(mass, 1.0, 1e-14);
  ASSERT_EQ(e.truth.gabor_wf_dirs.size(), 2u);
  EXPECT_EQ(e.truth.gabor_wf_dirs[0], (Direction{0.0, 1.0}));
  EXPECT_EQ(e.truth.gabor_wf_dirs[1], (Direction{0.0, -1.0}));
  EXPECT_EQ(e.truth.sigma_dirs, (DirectionSet{{1.0}, {-1.0}}));
}

TEST(Catalog, GaussianIsNormalizedAndSchwartz) {
  const Grid g = line();
  const CatalogEntry e = catalog_entry("gaussian", {}, g);
  EXPECT_NEAR(e.dist.l2_norm(), 1.0, 1e-12);
  const double x = g.coord(600);
  EXPECT_NEAR(e.dist.samples[600].real(), std::exp(-x * x / 2.0) / std::pow(kPi, 0.25), 1e-15);
  EXPECT_TRUE(e.truth.is_schwartz);
  EXPECT_TRUE(e.truth.gabor_wf_dirs.empty());
  EXPECT_TRUE(e.truth.sigma_dirs.empty());
}

TEST(Catalog, LineDeltaGroundTruth) {
  const CatalogEntry e = catalog_entry("line_delta_2d", {}, plane());
  EXPECT_EQ(e.truth.sigma_dirs, (DirectionSet{{1.0, 0.0}, {-1.0, 0.0}}));
  EXPECT_EQ(e.truth.gabor_wf_dirs, (DirectionSet{{0.0, 0.0, 1.0, 0.0}, {0.0, 0.0, -1.0, 0.0}}));
}

TEST(Catalog, ChirpHasNoSigma) {
  const CatalogEntry e = catalog_entry("chirp", {}, line());
  EXPECT_FALSE(e.truth.sigma_defined);
  EXPECT_FALSE(e.truth.compactly_supported());
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(e.truth.gabor_wf_dirs[0][0], r, 1e-15);
  EXPECT_NEAR(e.truth.gabor_wf_dirs[0][1], r, 1e-15);
}

// Main theorem encoded in data: compact entries have WF_G = {0} x Sigma, and
// Schwartz entries have both sets empty.
TEST(Catalog, GroundTruthInvariants) {
  for (const auto& info : catalog()) {
    for (int dim : info.dims) {
      const CatalogEntry e = catalog_entry(info.name, {}, dim == 1 ? line() : plane());
      SCOPED_TRACE(info.name + " d=" + std::to_string(dim));
      if (e.truth.compactly_supported()) {
        EXPECT_EQ(e.truth.gabor_wf_dirs, embed_frequency(e.truth.sigma_dirs));
      }
      EXPECT_EQ(e.truth.is_schwartz, e.truth.gabor_wf_dirs.empty() && e.truth.sigma_dirs.empty());
      for (const auto& d : e.truth.gabor_wf_dirs) EXPECT_NEAR(norm(d), 1.0, 1e-12);
    }
  }
}

TEST(Catalog, RejectsInvalidRequests) {
  EXPECT_THROW(catalog_entry("nope", {}, line()), std::invalid_argument);
  EXPECT_THROW(catalog_entry("box", {{"a", 15.0}}, line()), std::invalid_argument);
  EXPECT_THROW(catalog_entry("box", {{"b", 1.0}}, line()), std::invalid_argument);
  EXPECT_THROW(catalog_entry("box2d", {}, line()), std::invalid_argument);
  EXPECT_THROW(catalog_entry("hermite", {{"order", 1.5}}, line()), std::invalid_argument);
  EXPECT_THROW(catalog_entry("dirac_derivative", {{"k", 0}}, line()), std::invalid_argument);
  EXPECT_THROW(catalog_entry("gaussian", {{"sigma", -1.0}}, line()), std::invalid_argument);
}

TEST(Catalog, BumpIsSmoothAndCompact) {
  const Grid g = line();
  const CatalogEntry e = catalog_entry("bump", {}, g);
  const double radius = e.params.at("radius");
  for (std::size_t j = 0; j < g.n; ++j) {
    if (std::abs(g.coord(j)) >= radius) {
      EXPECT_EQ(e.dist.samples[j], cplx(0.0));
    }
  }
  EXPECT_GT(e.dist.samples[g.center()].real(), 0.0);
  EXPECT_TRUE(e.truth.gabor_wf_dirs.empty());
  EXPECT_TRUE(e.truth.compactly_supported());
}

TEST(Fourier, DiracIsConstantOne) {
  const SampledDistribution f = fourier_transform(catalog_entry("dirac", {}, line()).dist);
  for (const cplx& v : f.samples) EXPECT_NEAR(std::abs(v - cplx(1.0)), 0.0, 1e-10);
}

TEST(Fourier, GaussianClosedForm) {
  const SampledDistribution f = fourier_transform(catalog_entry("gaussian", {}, line()).dist);
  const double peak = std::pow(kPi, -0.25) * std::sqrt(2.0 * kPi);
  double err = 0.0;
  for (std::size_t k = 0; k < f.grid.n; ++k) {
    const double xi = f.grid.coord(k);
    err = std::max(err, std::abs(f.samples[k] - cplx(peak * std::exp(-xi * xi / 2.0))));
  }
  EXPECT_LE(err / peak, 1e-8);
}

// The sampled indicator has 2m+1 unit samples, so its Riemann sum is the
// Dirichlet kernel h sin((2m+1) xi h/2) / sin(xi h/2).
TEST(Fourier, BoxMatchesDirichletKernel) {
  const Grid g = line();
  const CatalogEntry e = catalog_entry("box", {}, g);
  std::size_t count = 0;
  for (const cplx& s : e.dist.samples) count += s.real() > 0.5 ? 1 : 0;
  const double h = g.spacing();
  const SampledDistribution f = fourier_transform(e.dist);
  for (std::size_t k = 0; k < g.n; ++k) {
    const double xi = f.grid.coord(k);
    const double expected = std::abs(xi) < 1e-12 ? h * static_cast<double>(count)
                                                  : h * std::sin(static_cast<double>(count) * xi * h / 2.0) /
                                                        std::sin(xi * h / 2.0);
    EXPECT_NEAR(std::abs(f.samples[k] - cplx(expected)), 0.0, 1e-10) << "xi=" << xi;
  }
}

// Against the continuum 2 sin(xi)/xi the sampled box differs by its O(h)
// endpoint offset; the tolerance is the mass of one cell.
TEST(Fourier, BoxApproachesContinuumTransform) {
  const Grid g = line();
  const SampledDistribution f = fourier_transform(catalog_entry("box", {}, g).dist);
  const double cap = kPi / (2.0 * g.spacing());
  for (std::size_t k = 0; k < g.n; ++k) {
    const double xi = f.grid.coord(k);
    if (std::abs(xi) > cap) continue;
    const double expected = std::abs(xi) < 1e-12 ? 2.0 : 2.0 * std::sin(xi) / xi;
    EXPECT_LE(std::abs(f.samples[k] - cplx(expected)), g.spacing()) << "xi=" << xi;
  }
}

TEST(Fourier, Parseval) {
  for (const char* name : {"gaussian", "hermite", "box", "chirp", "bump"}) {
    const SampledDistribution u = catalog_entry(name, {}, line()).dist;
    const double lhs = std::pow(fourier_transform(u).l2_norm(), 2);
    const double rhs = 2.0 * kPi * std::pow(u.l2_norm(), 2);
    EXPECT_NEAR(lhs / rhs, 1.0, 1e-8) << name;
  }
  const SampledDistribution u = catalog_entry("gaussian", {}, plane()).dist;
  EXPECT_NEAR(std::pow(fourier_transform(u).l2_norm(), 2) / (4.0 * kPi * kPi), 1.0, 1e-8);
}

TEST(Fourier, DoubleTransformIsScaledReflection) {
  for (const char* name : {"gaussian", "hermite", "bump"}) {
    const SampledDistribution u = catalog_entry(name, {}, line()).dist;
    SampledDistribution ff = fourier_transform(fourier_transform(u));
    for (cplx& v : ff.samples) v /= 2.0 * kPi;
    ff.grid = u.grid;
    EXPECT_LE(relative_l2_error(ff, reflect(u)), 1e-8) << name;
  }
}

TEST(Fourier, InverseUndoesForward) {
  const SampledDistribution u = catalog_entry("hermite", {}, line()).dist;
  SampledDistribution back = inverse_fourier_transform(fourier_transform(u));
  back.grid = u.grid;
  EXPECT_LE(relative_l2_error(back, u), 1e-12);
}

TEST(Fourier, FftMatchesDirectSum) {
  const Grid g = make_grid(1, 64, 4.0);
  SampledDistribution u{g, std::vector<cplx>(g.size()), SampleKind::function, "mixed"};
  for (std::size_t j = 0; j < g.n; ++j) u.samples[j] = cplx(std::cos(0.3 * j), std::sin(1.7 * j * j));
  const SampledDistribution fast = fourier_transform(u);
  const auto direct = kernels::serial::dft_on_grid(u, g.dual());
  for (std::size_t k = 0; k < g.n; ++k) EXPECT_NEAR(std::abs(fast.samples[k] - direct[k]), 0.0, 1e-12);
  const Grid g2 = make_grid(2, 16, 2.0);
  SampledDistribution v{g2, std::vector<cplx>(g2.size()), SampleKind::function, "mixed"};
  for (std::size_t j = 0; j < g2.size(); ++j) v.samples[j] = cplx(std::sin(0.1 * j), 0.5 * std::cos(0.7 * j));
  const SampledDistribution fast2 = fourier_transform(v);
  const auto direct2 = kernels::serial::dft_on_grid(v, g2.dual());
  EXPECT_LE(max_abs(direct2), 10.0);
  for (std::size_t k = 0; k < g2.size(); ++k) EXPECT_NEAR(std::abs(fast2.samples[k] - direct2[k]), 0.0, 1e-12);
}

}  // namespace
}  // namespace gwf
