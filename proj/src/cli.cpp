#include "gwf/cli.hpp"

#include "gwf/catalog.hpp"
#include "gwf/io.hpp"
#include "gwf/propagator.hpp"
#include "gwf/symplectic.hpp"
#include "gwf/wavefront.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gwf {

namespace {

namespace fs = std::filesystem;

// Raised for problems with the inputs a user controls; maps to kExitUsage.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GridOptions {
  int dim = 0;
  std::size_t n = 0;
  double length = 0.0;
  std::vector<std::string> params;
};

struct DetectorOptions {
  double lambda = 1.0;
  std::size_t n_dirs = 0;
  double r_min = 3.0;
  double r_max = 0.0;
  double rho = 1.15;
  double x_cap = 0.0;
  std::size_t stride = 0;
  double n_thresh = kDefaultThreshold;
  double ang_tol = 0.0;
};

struct OutputOptions {
  std::string dir;
  bool dump_samples = false;
};

void add_grid_options(CLI::App* cmd, GridOptions& o) {
  cmd->add_option("--dim", o.dim, "Dimension 1 or 2 (default: the entry's first supported dimension)")
      ->check(CLI::IsMember({1, 2}));
  cmd->add_option("--n", o.n, "Samples per axis (default 1024 for d = 1, 256 for d = 2)");
  cmd->add_option("--L", o.length, "Grid length L (default 40 for d = 1, 20 for d = 2)");
  cmd->add_option("--param", o.params, "Catalog parameter as key=value; repeatable");
}

void add_detector_options(CLI::App* cmd, DetectorOptions& o) {
  cmd->add_option("--lambda", o.lambda, "Gaussian window width");
  cmd->add_option("--n-dirs", o.n_dirs, "Angular resolution (0 = 32 for d = 1, 16 for d = 2)");
  cmd->add_option("--r-min", o.r_min, "Innermost shell radius");
  cmd->add_option("--r-max", o.r_max, "Extra radial cap (0 = box only)");
  cmd->add_option("--rho", o.rho, "Shell growth factor");
  cmd->add_option("--x-cap", o.x_cap, "Bound on window centers (0 = automatic)");
  cmd->add_option("--stride", o.stride, "2-D window center stride in samples (0 = automatic)");
  cmd->add_option("--n-thresh", o.n_thresh, "Slope at or below which a direction is singular");
  cmd->add_option("--ang-tol", o.ang_tol, "Angular tolerance in radians (0 = two angular steps)");
}

void add_output_options(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--out", o.dir, "Directory for JSON, CSV and sample files");
  cmd->add_flag("--dump-samples", o.dump_samples, "Also write the samples as GWF1 binaries (needs --out)");
}

CatalogParams parse_params(const std::vector<std::string>& items) {
  CatalogParams params;
  for (const std::string& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw ConfigError("--param expects key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string text = item.substr(eq + 1);
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size()) throw ConfigError("--param " + key + ": '" + text + "' is not a number");
    params[key] = value;
  }
  return params;
}

CatalogEntry load_entry(const std::string& name, const GridOptions& o) {
  const CatalogInfo& info = catalog_info(name);
  const int dim = o.dim ? o.dim : info.dims.front();
  const std::size_t n = o.n ? o.n : (dim == 1 ? 1024 : 256);
  const double length = o.length > 0.0 ? o.length : (dim == 1 ? 40.0 : 20.0);
  return catalog_entry(name, parse_params(o.params), make_grid(dim, n, 0.5 * length));
}

RaySampling sampling_from(const DetectorOptions& o) {
  RaySampling s;
  s.n_dirs = o.n_dirs;
  s.r_min = o.r_min;
  s.r_max = o.r_max;
  s.rho = o.rho;
  s.x_cap = o.x_cap;
  s.position_stride = o.stride;
  return s;
}

void check_output_options(const OutputOptions& o) {
  if (o.dump_samples && o.dir.empty()) throw ConfigError("--dump-samples needs --out DIR");
  if (o.dir.empty()) return;
  std::error_code ec;
  fs::create_directories(o.dir, ec);
  if (ec || !fs::is_directory(o.dir)) throw ConfigError("cannot create output directory '" + o.dir + "'");
}

std::ofstream open_output(const OutputOptions& o, const std::string& file, bool binary = false) {
  const fs::path path = fs::path(o.dir) / file;
  std::ofstream os(path, binary ? std::ios::binary : std::ios::out);
  if (!os) throw ConfigError("cannot write '" + path.string() + "'");
  return os;
}

void write_text(const OutputOptions& o, const std::string& file, const std::string& text) {
  auto os = open_output(o, file);
  os << text;
}

void write_csv(const OutputOptions& o, const std::string& file, const WavefrontReport& report) {
  auto os = open_output(o, file);
  write_profiles_csv(os, report);
}

void write_samples(const OutputOptions& o, const std::string& file, const SampledDistribution& u) {
  auto os = open_output(o, file, true);
  write_gwf1(os, u);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string fmt_dir(const Direction& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ", ";
    s += fmt(d[i] == 0.0 ? 0.0 : d[i]);
  }
  return s + ")";
}

void print_dirs(std::ostream& out, const DirectionSet& dirs) {
  for (const auto& d : dirs) out << "  " << fmt_dir(d) << "\n";
}

void print_report(std::ostream& out, const WavefrontReport& r) {
  out << to_string(r.kind) << ": " << r.singular_dirs.size() << " singular direction(s), angular step "
      << fmt(r.angular_step) << " rad";
  if (r.kind == ReportKind::classical) out << ", base point " << fmt_dir(r.base_point);
  out << "\n";
  print_dirs(out, r.singular_dirs);
}

std::string grid_line(const CatalogEntry& e) {
  const Grid& g = e.dist.grid;
  return e.name + " (d = " + std::to_string(g.dim) + ", n = " + std::to_string(g.n) + ", L = " + fmt(g.length()) +
         ")";
}

Json truth_summary(const CatalogEntry& e) {
  return to_json(e)["ground_truth"];
}

int cmd_catalog_list(bool as_json, std::ostream& out) {
  Json list = Json::array();
  for (const CatalogInfo& info : catalog()) {
    const int dim = info.dims.front();
    const CatalogEntry e = catalog_entry(info.name, {}, make_grid(dim, dim == 1 ? 1024 : 256, dim == 1 ? 20.0 : 10.0));
    Json j = to_json(info);
    j["ground_truth"] = truth_summary(e);
    list.push_back(j);
  }
  if (as_json) {
    out << dump(list);
    return kExitOk;
  }
  char line[256];
  std::snprintf(line, sizeof line, "%-18s %-6s %-8s %-10s %s\n", "name", "dims", "compact", "wf_gens", "params");
  out << line;
  for (const Json& j : list) {
    std::string dims;
    for (const auto& d : j["dims"]) dims += (dims.empty() ? "" : ",") + std::to_string(d.get<int>());
    std::string params;
    for (const auto& [k, v] : j["params"].items()) params += (params.empty() ? "" : " ") + k + "=" + fmt(v.get<double>());
    const bool compact = !j["ground_truth"]["support_radius"].is_null();
    std::snprintf(line, sizeof line, "%-18s %-6s %-8s %-10zu %s\n", j["name"].get<std::string>().c_str(),
                  dims.c_str(), compact ? "yes" : "no", j["ground_truth"]["gabor_wf_dirs"].size(),
                  params.empty() ? "-" : params.c_str());
    out << line;
  }
  return kExitOk;
}

int cmd_catalog_show(const std::string& name, const GridOptions& grid, std::ostream& out) {
  out << dump(to_json(load_entry(name, grid)));
  return kExitOk;
}

struct AnalyzeOptions {
  std::string name;
  GridOptions grid;
  DetectorOptions detector;
  OutputOptions output;
  std::vector<double> x0;
  double classical_width = 0.0;
};

int cmd_analyze(const AnalyzeOptions& o, std::ostream& out, std::ostream& err) {
  check_output_options(o.output);
  const CatalogEntry e = load_entry(o.name, o.grid);
  const RaySampling sampling = sampling_from(o.detector);
  const Window window = Window::gaussian(o.detector.lambda);
  window.check_resolvable(e.dist.grid);

  Json doc;
  doc["command"] = "analyze";
  doc["entry"] = to_json(e);
  Json warnings = Json::array();
  int code = kExitOk;

  out << grid_line(e) << "\n";
  const WavefrontReport gabor = estimate_gabor_wf(e.dist, window, sampling, o.detector.n_thresh);
  print_report(out, gabor);
  doc["gabor"] = to_json(gabor);

  std::optional<WavefrontReport> sigma;
  if (e.truth.compactly_supported() || e.truth.is_schwartz) {
    sigma = estimate_sigma(e.dist, sampling, o.detector.n_thresh);
    print_report(out, *sigma);
    doc["sigma"] = to_json(*sigma);
    const ComparisonResult cmp = check_main_theorem(gabor, *sigma, o.detector.ang_tol);
    doc["theorem"] = to_json(cmp);
    if (cmp.status == ComparisonStatus::rejected) {
      const std::string w = "theorem check skipped: " + cmp.message;
      err << "warning: " << w << "\n";
      warnings.push_back(w);
    } else {
      out << "theorem check: " << to_string(cmp.status) << " (x-extent " << fmt(cmp.x_extent_angle) << ", hausdorff "
          << fmt(cmp.hausdorff) << ", tol " << fmt(cmp.ang_tol) << ")\n";
      if (!cmp.passed()) code = kExitVerificationFailure;
    }
  } else {
    const std::string w = "not compactly supported: theorem check skipped";
    err << "warning: " << w << "\n";
    warnings.push_back(w);
    doc["sigma"] = nullptr;
    doc["theorem"] = nullptr;
  }

  std::optional<WavefrontReport> classical;
  if (!o.x0.empty()) {
    if (static_cast<int>(o.x0.size()) != e.dist.grid.dim) throw ConfigError("--x0 needs one value per dimension");
    const double width = o.classical_width > 0.0 ? o.classical_width : 4.0 * e.dist.grid.spacing();
    const Window local = Window::compact_gaussian(width);
    local.check_resolvable(e.dist.grid);
    classical = estimate_classical_wf(e.dist, local, o.x0, sampling, o.detector.n_thresh);
    print_report(out, *classical);
    doc["classical"] = to_json(*classical);
  }
  doc["warnings"] = warnings;

  if (!o.output.dir.empty()) {
    write_text(o.output, "analyze.json", dump(doc));
    write_csv(o.output, "profiles_gabor.csv", gabor);
    if (sigma) write_csv(o.output, "profiles_sigma.csv", *sigma);
    if (classical) write_csv(o.output, "profiles_classical.csv", *classical);
    if (o.output.dump_samples) write_samples(o.output, "samples.gwf1", e.dist);
  }
  return code;
}

struct PropagateOptions {
  std::string name;
  GridOptions grid;
  DetectorOptions detector;
  OutputOptions output;
  double t = 0.0;
  unsigned n_max = 0;
  double smooth_tol = 0.0;
};

int cmd_propagate(const PropagateOptions& o, std::ostream& out, std::ostream& err) {
  check_output_options(o.output);
  const CatalogEntry e = load_entry(o.name, o.grid);
  Window::gaussian(o.detector.lambda).check_resolvable(e.dist.grid);
  const HermiteBasis basis = make_hermite_basis(e.dist.grid, o.n_max);

  DetectorParams params;
  params.lambda = o.detector.lambda;
  params.sampling = sampling_from(o.detector);
  params.n_thresh = o.detector.n_thresh;
  params.ang_tol = o.detector.ang_tol;
  params.smooth_tol = o.smooth_tol;
  const VerificationReport r = verify_propagation(e, o.t, params, basis);

  Json warnings = Json::array();
  if (r.truncation_error > 0.01) {
    const std::string w = "truncation error " + fmt(r.truncation_error) + " exceeds 0.01 at n_max " +
                          std::to_string(r.n_max) + "; the propagated state is the projection onto the basis";
    err << "warning: " << w << "\n";
    warnings.push_back(w);
  }

  out << grid_line(e) << ", t = " << fmt(o.t) << ", n_max = " << r.n_max << "\n";
  out << "predicted: " << r.predicted_dirs.size() << " direction(s)\n";
  print_dirs(out, r.predicted_dirs);
  out << "detected: " << r.detected_dirs.size() << " direction(s)\n";
  print_dirs(out, r.detected_dirs);
  out << "hausdorff " << fmt(r.hausdorff_angle) << " (tol " << fmt(r.ang_tol) << ")";
  if (r.smooth_expected) out << ", smoothness " << (r.smooth_detected ? "detected" : "not detected");
  out << "\npropagation check: " << (r.passed ? "pass" : "fail") << "\n";

  if (!o.output.dir.empty()) {
    Json doc;
    doc["command"] = "propagate";
    doc["entry"] = to_json(e);
    doc["verification"] = to_json(r);
    doc["detector"] = to_json(r.detector);
    doc["warnings"] = warnings;
    write_text(o.output, "propagate.json", dump(doc));
    write_csv(o.output, "profiles_gabor.csv", r.detector);
    if (o.output.dump_samples) {
      write_samples(o.output, "samples.gwf1", e.dist);
      write_samples(o.output, "propagated.gwf1", harmonic_propagate(e.dist, o.t, basis).state);
    }
  }
  return r.passed ? kExitOk : kExitVerificationFailure;
}

struct SingularOptions {
  std::string q_file;
  double tol = kNullSpaceTol;
  OutputOptions output;
};

int cmd_singular_space(const SingularOptions& o, std::ostream& out, std::ostream& err) {
  check_output_options(o.output);
  if (o.output.dump_samples) throw ConfigError("--dump-samples does not apply to singular-space");
  if (!(o.tol > 0.0)) throw ConfigError("--tol must be positive");
  std::ifstream is(o.q_file);
  if (!is) throw ConfigError("cannot read '" + o.q_file + "'");
  QuadraticHamiltonian q;
  try {
    q = hamiltonian_from_json(Json::parse(is));
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("Q JSON: ") + e.what());
  }

  const SingularSpace s = singular_space(q, o.tol);
  const bool bracket = poisson_bracket_vanishes(q, o.tol);
  Json doc;
  doc["hamiltonian"] = to_json(q);
  doc["tol"] = o.tol;
  doc["dimension"] = s.dimension();
  doc["basis"] = to_json(s);
  doc["poisson_bracket_vanishes"] = bracket;
  if (bracket) {
    const SingularSpace k = ker_re_f(q, o.tol);
    doc["ker_re_f"] = to_json(k);
    doc["ker_re_f_distance"] = subspace_distance(s.basis, k.basis);
  } else {
    doc["ker_re_f"] = nullptr;
    doc["ker_re_f_distance"] = nullptr;
  }

  out << "singular space: dimension " << s.dimension() << " in R^" << 2 * q.dim << "\n";
  for (Eigen::Index c = 0; c < s.basis.cols(); ++c) {
    Direction v(s.basis.col(c).data(), s.basis.col(c).data() + s.basis.rows());
    out << "  " << fmt_dir(v) << "\n";
  }
  out << "poisson bracket vanishes: " << (bracket ? "yes" : "no") << "\n";
  if (bracket) out << "distance to Ker Re F: " << fmt(doc["ker_re_f_distance"].get<double>()) << "\n";
  if (!o.output.dir.empty()) write_text(o.output, "singular_space.json", dump(doc));
  (void)err;
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gabor and classical wave front sets of sampled distributions"};
  app.name("gwf");
  app.require_subcommand(1);

  auto* catalog_cmd = app.add_subcommand("catalog", "List or show the built-in test distributions");
  catalog_cmd->require_subcommand(1);
  bool list_json = false;
  auto* list_cmd = catalog_cmd->add_subcommand("list", "Names, parameters and ground-truth summaries");
  list_cmd->add_flag("--json", list_json, "Machine-readable array");
  std::string show_name;
  GridOptions show_grid;
  auto* show_cmd = catalog_cmd->add_subcommand("show", "Parameters and ground truth of one entry as JSON");
  show_cmd->add_option("name", show_name, "Catalog entry")->required();
  add_grid_options(show_cmd, show_grid);

  AnalyzeOptions analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Estimate WF_G and Sigma and check WF_G = {0} x Sigma");
  analyze_cmd->add_option("name", analyze.name, "Catalog entry")->required();
  add_grid_options(analyze_cmd, analyze.grid);
  add_detector_options(analyze_cmd, analyze.detector);
  add_output_options(analyze_cmd, analyze.output);
  analyze_cmd->add_option("--x0", analyze.x0, "Base point for the classical wave front set");
  analyze_cmd->add_option("--classical-width", analyze.classical_width,
                          "Width of the compact classical window (0 = 4h)");

  PropagateOptions propagate;
  auto* propagate_cmd = app.add_subcommand("propagate", "Evolve under the harmonic oscillator and verify WF_G");
  propagate_cmd->add_option("name", propagate.name, "Catalog entry")->required();
  propagate_cmd->add_option("--t", propagate.t, "Time")->required();
  propagate_cmd->add_option("--n-max", propagate.n_max, "Highest Hermite order (0 = automatic)");
  propagate_cmd->add_option("--smooth-tol", propagate.smooth_tol,
                            "Angle to the frequency axis that counts against smoothness (0 = one step)");
  add_grid_options(propagate_cmd, propagate.grid);
  add_detector_options(propagate_cmd, propagate.detector);
  add_output_options(propagate_cmd, propagate.output);

  SingularOptions singular;
  auto* singular_cmd = app.add_subcommand("singular-space", "Singular space of a quadratic Hamiltonian");
  singular_cmd->add_option("q_file", singular.q_file, "JSON {dim, re, im}")->required();
  singular_cmd->add_option("--tol", singular.tol, "Relative singular value cutoff");
  add_output_options(singular_cmd, singular.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*list_cmd) return cmd_catalog_list(list_json, out);
    if (*show_cmd) return cmd_catalog_show(show_name, show_grid, out);
    if (*analyze_cmd) return cmd_analyze(analyze, out, err);
    if (*propagate_cmd) return cmd_propagate(propagate, out, err);
    if (*singular_cmd) return cmd_singular_space(singular, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return kExitUsage;
}

}  // namespace gwf
