#include "gwf/io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace gwf {

namespace {

// Non-finite doubles become null (JSON has no infinity).
Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json profile_json(const DecayProfile& p) {
  Json j;
  j["dir"] = p.direction;
  j["slope"] = number(p.slope);
  j["residual"] = number(p.residual);
  j["floor_hit"] = p.floor_hit;
  j["degenerate"] = p.degenerate;
  return j;
}

Json params_json(const CatalogParams& params) {
  Json j = Json::object();
  for (const auto& [k, v] : params) j[k] = v;
  return j;
}

Json matrix_rows(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

Eigen::MatrixXd read_matrix(const Json& j, Eigen::Index n, const char* key) {
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument(std::string("Q JSON: '") + key + "' must be a " + std::to_string(n) + "x" +
                                std::to_string(n) + " array");
  }
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const Json& row = j[key][static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
      throw std::invalid_argument(std::string("Q JSON: row of '") + key + "' has the wrong length");
    }
    for (Eigen::Index c = 0; c < n; ++c) {
      const Json& v = row[static_cast<std::size_t>(c)];
      if (!v.is_number()) throw std::invalid_argument(std::string("Q JSON: non-numeric entry in '") + key + "'");
      m(r, c) = v.get<double>();
    }
  }
  return m;
}

template <class T>
void put_le(std::ostream& os, T v) {
  auto bytes = std::bit_cast<std::array<char, sizeof(T)>>(v);
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  os.write(bytes.data(), bytes.size());
}

template <class T>
T get_le(std::istream& is) {
  std::array<char, sizeof(T)> bytes{};
  if (!is.read(bytes.data(), bytes.size())) throw std::runtime_error("GWF1: truncated stream");
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  return std::bit_cast<T>(bytes);
}

}  // namespace

Json to_json(const DirectionSet& dirs) {
  Json j = Json::array();
  for (const auto& d : dirs) j.push_back(d);
  return j;
}

Json to_json(const WavefrontReport& report) {
  Json j;
  j["kind"] = to_string(report.kind);
  j["params"] = {{"n_dirs", report.params.n_dirs},     {"r_min", report.params.r_min},
                 {"r_max", report.params.r_max},       {"rho", report.params.rho},
                 {"n_thresh", report.params.n_thresh}, {"lambda", report.params.lambda}};
  if (report.kind == ReportKind::classical) j["base_point"] = report.base_point;
  j["angular_step"] = report.angular_step;
  j["compact_support"] = report.compact_support;
  j["degenerate_count"] = report.degenerate_count;
  Json profiles = Json::array();
  for (const auto& p : report.profiles) profiles.push_back(profile_json(p));
  j["profiles"] = profiles;
  j["singular_dirs"] = to_json(report.singular_dirs);
  j["isolated"] = to_json(report.isolated);
  return j;
}

Json to_json(const ComparisonResult& result) {
  return {{"status", to_string(result.status)},
          {"x_extent_angle", number(result.x_extent_angle)},
          {"hausdorff_angle", number(result.hausdorff)},
          {"ang_tol", result.ang_tol},
          {"message", result.message}};
}

Json to_json(const VerificationReport& report) {
  return {{"t", report.t},
          {"predicted_dirs", to_json(report.predicted_dirs)},
          {"detected_dirs", to_json(report.detected_dirs)},
          {"hausdorff_angle", number(report.hausdorff_angle)},
          {"smooth_expected", report.smooth_expected},
          {"smooth_detected", report.smooth_detected},
          {"truncation_error", report.truncation_error},
          {"ang_tol", report.ang_tol},
          {"smooth_tol", report.smooth_tol},
          {"n_max", report.n_max},
          {"passed", report.passed}};
}

Json to_json(const CatalogEntry& entry) {
  const Grid& g = entry.dist.grid;
  return {{"name", entry.name},
          {"params", params_json(entry.params)},
          {"grid", {{"dim", g.dim}, {"n", g.n}, {"half_width", g.half_width}}},
          {"ground_truth",
           {{"gabor_wf_dirs", to_json(entry.truth.gabor_wf_dirs)},
            {"sigma_dirs", entry.truth.sigma_defined ? to_json(entry.truth.sigma_dirs) : Json(nullptr)},
            {"support_radius", number(entry.truth.support_radius)},
            {"is_schwartz", entry.truth.is_schwartz}}}};
}

Json to_json(const CatalogInfo& info) {
  return {{"name", info.name}, {"params", params_json(info.defaults)}, {"dims", info.dims},
          {"description", info.description}};
}

Json to_json(const SingularSpace& space) {
  Json basis = Json::array();
  for (Eigen::Index c = 0; c < space.basis.cols(); ++c) {
    Json v = Json::array();
    for (Eigen::Index r = 0; r < space.basis.rows(); ++r) v.push_back(space.basis(r, c));
    basis.push_back(v);
  }
  return basis;
}

Json to_json(const QuadraticHamiltonian& q) {
  return {{"dim", q.dim}, {"re", matrix_rows(q.Q.real())}, {"im", matrix_rows(q.Q.imag())}};
}

QuadraticHamiltonian hamiltonian_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer()) {
    throw std::invalid_argument("Q JSON: expected an object with integer 'dim'");
  }
  const int dim = j["dim"].get<int>();
  if (dim != 1 && dim != 2) throw std::invalid_argument("Q JSON: dim must be 1 or 2");
  const Eigen::Index n = 2 * dim;
  const Eigen::MatrixXd re = read_matrix(j, n, "re");
  const Eigen::MatrixXd im = j.contains("im") ? read_matrix(j, n, "im") : Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXcd Q(n, n);
  Q.real() = re;
  Q.imag() = im;
  return make_hamiltonian(Q);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_profiles_csv(std::ostream& os, const WavefrontReport& report) {
  os << "dir_index,r,abs_V\n";
  char line[96];
  for (std::size_t i = 0; i < report.profiles.size(); ++i) {
    const auto& p = report.profiles[i];
    for (std::size_t k = 0; k < p.radii.size(); ++k) {
      std::snprintf(line, sizeof line, "%zu,%.17g,%.17g\n", i, p.radii[k], p.values[k]);
      os << line;
    }
  }
}

void write_gwf1(std::ostream& os, const SampledDistribution& u) {
  validate(u);
  os.write("GWF1", 4);
  put_le<std::uint32_t>(os, static_cast<std::uint32_t>(u.grid.dim));
  put_le<std::uint32_t>(os, static_cast<std::uint32_t>(u.grid.n));
  put_le<std::uint32_t>(os, 0);
  put_le<double>(os, u.grid.length());
  put_le<std::uint64_t>(os, 0);
  for (const cplx& s : u.samples) {
    put_le<float>(os, static_cast<float>(s.real()));
    put_le<float>(os, static_cast<float>(s.imag()));
  }
  if (!os) throw std::runtime_error("GWF1: write failed");
}

SampledDistribution read_gwf1(std::istream& is) {
  char magic[4];
  if (!is.read(magic, 4) || std::memcmp(magic, "GWF1", 4) != 0) throw std::runtime_error("GWF1: bad magic");
  const auto dim = get_le<std::uint32_t>(is);
  const auto n = get_le<std::uint32_t>(is);
  get_le<std::uint32_t>(is);
  const auto length = get_le<double>(is);
  get_le<std::uint64_t>(is);
  SampledDistribution u;
  try {
    u.grid = make_grid(static_cast<int>(dim), n, 0.5 * length);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("GWF1: bad header: ") + e.what());
  }
  u.samples.resize(u.grid.size());
  for (cplx& s : u.samples) {
    const float re = get_le<float>(is);
    const float im = get_le<float>(is);
    s = cplx(re, im);
  }
  u.label = "gwf1";
  return u;
}

}  // namespace gwf
