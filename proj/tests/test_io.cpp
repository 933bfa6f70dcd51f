#include "gwf/io.hpp"

#include <gtest/gtest.h>

#include <cstring>
#include <sstream>

namespace gwf {
namespace {

TEST(Gwf1, HeaderLayout) {
  const auto u = catalog_entry("box", {}, make_grid(1, 64, 4.0)).dist;
  std::ostringstream os;
  write_gwf1(os, u);
  const std::string bytes = os.str();
  ASSERT_EQ(bytes.size(), 32u + 8u * 64u);
  EXPECT_EQ(bytes.substr(0, 4), "GWF1");
  std::uint32_t dim = 0, n = 0, zero = 1;
  double length = 0.0;
  std::memcpy(&dim, bytes.data() + 4, 4);
  std::memcpy(&n, bytes.data() + 8, 4);
  std::memcpy(&zero, bytes.data() + 12, 4);
  std::memcpy(&length, bytes.data() + 16, 8);
  EXPECT_EQ(dim, 1u);
  EXPECT_EQ(n, 64u);
  EXPECT_EQ(zero, 0u);
  EXPECT_EQ(length, 8.0);
  for (int i = 24; i < 32; ++i) EXPECT_EQ(bytes[i], '\0');
}

TEST(Gwf1, RoundTripAtSinglePrecision) {
  for (int dim : {1, 2}) {
    const auto u = catalog_entry("gaussian", {}, make_grid(dim, 32, 4.0)).dist;
    SampledDistribution v = u;
    for (std::size_t j = 0; j < v.samples.size(); ++j) v.samples[j] *= std::exp(cplx(0.0, 0.1 * j));
    std::stringstream ss;
    write_gwf1(ss, v);
    const SampledDistribution back = read_gwf1(ss);
    EXPECT_EQ(back.grid, v.grid);
    ASSERT_EQ(back.samples.size(), v.samples.size());
    for (std::size_t j = 0; j < v.samples.size(); ++j) {
      EXPECT_EQ(back.samples[j].real(), static_cast<float>(v.samples[j].real()));
      EXPECT_EQ(back.samples[j].imag(), static_cast<float>(v.samples[j].imag()));
    }
  }
}

TEST(Gwf1, RejectsMalformedStreams) {
  std::istringstream bad_magic("GWF2xxxxxxxxxxxxxxxxxxxxxxxxxxxx");
  EXPECT_THROW(read_gwf1(bad_magic), std::runtime_error);
  const auto u = catalog_entry("gaussian", {}, make_grid(1, 32, 4.0)).dist;
  std::ostringstream os;
  write_gwf1(os, u);
  std::istringstream truncated(os.str().substr(0, 100));
  EXPECT_THROW(read_gwf1(truncated), std::runtime_error);
  std::string header = os.str();
  header[8] = 3;
  std::istringstream bad_n(header);
  EXPECT_THROW(read_gwf1(bad_n), std::runtime_error);
}

TEST(Json, ReportShapes) {
  const auto e = catalog_entry("dirac", {}, make_grid(1, 1024, 20.0));
  const WavefrontReport r = estimate_gabor_wf(e.dist, Window::gaussian(1.0), RaySampling{});
  const Json j = to_json(r);
  EXPECT_EQ(j["kind"], "gabor");
  EXPECT_EQ(j["params"]["n_dirs"], 32);
  EXPECT_EQ(j["profiles"].size(), 32u);
  EXPECT_TRUE(j["singular_dirs"].is_array());
  EXPECT_FALSE(j.contains("base_point"));
  const Json ej = to_json(e);
  EXPECT_EQ(ej["name"], "dirac");
  EXPECT_EQ(ej["grid"]["n"], 1024);
  EXPECT_EQ(ej["ground_truth"]["gabor_wf_dirs"].size(), 2u);
  const auto chirp = catalog_entry("chirp", {}, make_grid(1, 1024, 20.0));
  EXPECT_TRUE(to_json(chirp)["ground_truth"]["sigma_dirs"].is_null());
  EXPECT_TRUE(to_json(chirp)["ground_truth"]["support_radius"].is_null());
}

TEST(Json, DumpIsStableAndNullsInfinity) {
  ComparisonResult c;
  c.status = ComparisonStatus::rejected;
  c.hausdorff = std::numeric_limits<double>::infinity();
  const std::string s = dump(to_json(c));
  EXPECT_EQ(s.back(), '\n');
  EXPECT_NE(s.find("\"hausdorff_angle\": null"), std::string::npos);
  EXPECT_EQ(s, dump(to_json(c)));
  EXPECT_LT(s.find("status"), s.find("message"));
}

TEST(Json, HamiltonianRoundTrip) {
  Eigen::MatrixXcd Q(2, 2);
  Q << cplx(1.0, 0.5), cplx(0.0, 0.2), cplx(0.0, 0.2), cplx(2.0, 0.0);
  const QuadraticHamiltonian q = make_hamiltonian(Q);
  const QuadraticHamiltonian back = hamiltonian_from_json(to_json(q));
  EXPECT_EQ(back.dim, 1);
  EXPECT_EQ(back.Q, Q);
  const Json real_only = Json::parse(R"({"dim": 1, "re": [[1, 0], [0, 1]]})");
  EXPECT_EQ(hamiltonian_from_json(real_only).Q, Eigen::MatrixXcd::Identity(2, 2));
}

TEST(Json, HamiltonianErrors) {
  for (const char* text : {R"([])", R"({"re": [[1, 0], [0, 1]]})", R"({"dim": 3, "re": []})",
                           R"({"dim": 1, "re": [[1, 0]]})", R"({"dim": 1, "re": [[1, 0], [0]]})",
                           R"({"dim": 1, "re": [[1, "x"], [0, 1]]})", R"({"dim": 1, "re": [[1, 2], [0, 1]]})",
                           R"({"dim": 1, "re": [[-1, 0], [0, 1]]})", R"({"dim": 1.5, "re": [[1, 0], [0, 1]]})"}) {
    EXPECT_THROW(hamiltonian_from_json(Json::parse(text)), std::invalid_argument) << text;
  }
}

TEST(Json, SingularSpaceAsRows) {
  const SingularSpace s = singular_space(harmonic_oscillator(1));
  const Json j = to_json(s);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0], Json::array({1.0, 0.0}));
}

TEST(Csv, ProfileRows) {
  WavefrontReport r;
  DecayProfile p;
  p.direction = {1.0, 0.0};
  p.radii = {3.0, 4.0};
  p.values = {0.5, 0.25};
  r.profiles = {p, p};
  std::ostringstream os;
  write_profiles_csv(os, r);
  EXPECT_EQ(os.str(), "dir_index,r,abs_V\n0,3,0.5\n0,4,0.25\n1,3,0.5\n1,4,0.25\n");
}

}  // namespace
}  // namespace gwf
