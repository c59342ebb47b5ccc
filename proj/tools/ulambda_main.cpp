// Command-line front end: loads FunctionSpec JSON, runs the module
// operations, and emits deterministic JSON/CSV reports.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "ulambda/extremal.hpp"
#include "ulambda/families.hpp"
#include "ulambda/json_io.hpp"
#include "ulambda/meromorphic.hpp"
#include "ulambda/oracles.hpp"
#include "ulambda/report.hpp"
#include "ulambda/transforms.hpp"

namespace {

using ulambda::Complex;
using ulambda::Json;

constexpr int kExitOk = 0;
constexpr int kExitAcceptanceFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

ulambda::FunctionSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open spec file: " + path);
  Json j;
  in >> j;
  return ulambda::spec_from_json(j);
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  Json j;
  in >> j;
  return j;
}

// Option values shared by the subcommands; a JSON config file can provide
// defaults, explicit flags win.
struct Options {
  std::string spec_path;
  std::string config_path;
  std::string out_path;
  std::string format = "json";
  double lambda = 0.5;
  std::vector<double> mu{0.0, 0.0};
  std::vector<double> alpha{1.0, 0.0};
  double p = 2.0;
  int n = 0;
  double r = 0.5;
  int order = ulambda::kDefaultOrder;
  int nodes = 2048;
  double rmax = 0.999;
  int grid_radii = 24;
  int grid_angles = 720;
  double tol = 1e-6;
  int resolution = 512;
  int sign = 0;  // 0 = both
  long budget = 1000000;
  unsigned seed = ulambda::kDefaultReportSeed;
};

const std::set<std::string> kConfigKeys = {
    "spec",   "out",         "format",      "lambda", "mu",   "alpha",      "p",
    "n",      "r",           "order",       "nodes",  "rmax", "grid-radii", "grid-angles",
    "tol",    "resolution",  "sign",        "budget", "seed"};

void apply_config(Options& opt, const CLI::App& cmd) {
  if (opt.config_path.empty()) return;
  const Json cfg = load_json(opt.config_path);
  if (!cfg.is_object()) throw std::invalid_argument("config must be a JSON object");
  for (const auto& [key, value] : cfg.items()) {
    if (!kConfigKeys.count(key)) throw std::invalid_argument("unknown config key: " + key);
    // Flags win over config values.
    const std::string flag = "--" + key;
    const CLI::Option* o = cmd.get_option_no_throw(flag);
    if (o != nullptr && o->count() > 0) continue;
    if (key == "spec") opt.spec_path = value.get<std::string>();
    else if (key == "out") opt.out_path = value.get<std::string>();
    else if (key == "format") opt.format = value.get<std::string>();
    else if (key == "lambda") opt.lambda = value.get<double>();
    else if (key == "mu") opt.mu = value.get<std::vector<double>>();
    else if (key == "alpha") opt.alpha = value.get<std::vector<double>>();
    else if (key == "p") opt.p = value.get<double>();
    else if (key == "n") opt.n = value.get<int>();
    else if (key == "r") opt.r = value.get<double>();
    else if (key == "order") opt.order = value.get<int>();
    else if (key == "nodes") opt.nodes = value.get<int>();
    else if (key == "rmax") opt.rmax = value.get<double>();
    else if (key == "grid-radii") opt.grid_radii = value.get<int>();
    else if (key == "grid-angles") opt.grid_angles = value.get<int>();
    else if (key == "tol") opt.tol = value.get<double>();
    else if (key == "resolution") opt.resolution = value.get<int>();
    else if (key == "sign") opt.sign = value.get<int>();
    else if (key == "budget") opt.budget = value.get<long>();
    else if (key == "seed") opt.seed = value.get<unsigned>();
  }
}

Complex to_complex(const std::vector<double>& v) {
  if (v.size() != 2) throw std::invalid_argument("expected two floats: re im");
  return {v[0], v[1]};
}

ulambda::DiskGrid make_grid(const Options& opt) {
  ulambda::DiskGrid g;
  g.radii = opt.grid_radii;
  g.angles = opt.grid_angles;
  g.r_max = opt.rmax;
  return g;
}

int run_deviation(const Options& opt) {
  const auto spec = load_spec(opt.spec_path);
  const auto rep = ulambda::u_deviation(spec, opt.lambda, make_grid(opt), opt.tol);
  write_output(dump(ulambda::to_json(rep)), opt.out_path);
  return kExitOk;
}

int run_mean(const Options& opt) {
  const auto spec = load_spec(opt.spec_path);
  const auto rep = ulambda::integral_mean(spec, opt.n, opt.p, opt.r, opt.nodes);
  const double bound =
      ulambda::integral_mean(ulambda::FunctionSpec::k_lambda(opt.lambda), opt.n, opt.p, opt.r,
                             opt.nodes)
          .value;
  if (opt.format == "csv") {
    std::ostringstream csv;
    csv << "family,lambda,n,p,r,value,bound,gap\n";
    csv << spec.kind_name() << ',' << format_double(opt.lambda) << ',' << rep.n << ','
        << format_double(rep.p) << ',' << format_double(rep.r) << ','
        << format_double(rep.value) << ',' << format_double(bound) << ','
        << format_double(bound - rep.value) << '\n';
    write_output(csv.str(), opt.out_path);
  } else {
    Json j = ulambda::to_json(rep);
    j["family"] = spec.kind_name();
    j["bound"] = bound;
    j["gap"] = bound - rep.value;
    write_output(dump(j), opt.out_path);
  }
  return kExitOk;
}

int run_arclength(const Options& opt) {
  const auto spec = load_spec(opt.spec_path);
  const double value = ulambda::arc_length(spec, opt.r, opt.nodes);
  const double bound = ulambda::arc_length(ulambda::FunctionSpec::koebe(), opt.r, opt.nodes);
  Json j{{"value", value}, {"r", opt.r}, {"nodes", opt.nodes}, {"koebe", bound},
         {"gap", bound - value}};
  write_output(dump(j), opt.out_path);
  return kExitOk;
}

int run_norm(const Options& opt) {
  const Complex alpha = to_complex(opt.alpha);
  const double closed = ulambda::norm_J_klambda_closed(opt.lambda, alpha);
  const auto numeric =
      ulambda::transform_norm_numeric(ulambda::FunctionSpec::k_lambda(opt.lambda), alpha);
  Json j{{"closed", closed},
         {"numeric", numeric.value},
         {"gap", std::abs(closed - numeric.value)},
         {"argmax", numeric.argmax.real()},
         {"method", ulambda::norm_method_name(numeric.method)}};
  write_output(dump(j), opt.out_path);
  return kExitOk;
}

int run_fs(const Options& opt) {
  const Complex mu = to_complex(opt.mu);
  const double bound = ulambda::fs_bound(opt.lambda, mu);
  const double search = ulambda::fs_search(opt.lambda, mu, opt.resolution);
  Json j{{"bound", bound}, {"search", search}, {"gap", bound - search}};
  write_output(dump(j), opt.out_path);
  return kExitOk;
}

int run_star(const Options& opt) {
  const auto spec = load_spec(opt.spec_path);
  Json j;
  std::vector<int> signs;
  if (opt.sign == 0)
    signs = {1, -1};
  else
    signs = {opt.sign};
  for (int sign : signs) {
    const auto res = ulambda::star_dominance(spec, opt.lambda, opt.r, sign, opt.nodes);
    j[sign > 0 ? "plus" : "minus"] =
        Json{{"holds", res.holds}, {"max_violation", res.max_violation}};
  }
  write_output(dump(j), opt.out_path);
  return kExitOk;
}

int run_curve(const Options& opt) {
  std::ostringstream csv;
  csv << "theta,u,v\n";
  const int n = opt.grid_angles;
  for (int j = 1; j < n; ++j) {
    const double theta = 2.0 * 3.14159265358979323846 * j / n;
    const auto [u, v] = ulambda::phi_boundary(opt.lambda, theta);
    csv << format_double(theta) << ',' << format_double(u) << ',' << format_double(v) << '\n';
  }
  write_output(csv.str(), opt.out_path);
  return kExitOk;
}

int run_area(const Options& opt) {
  const Json in = load_json(opt.spec_path);
  ulambda::MeromorphicSeries g =
      in.contains("b") ? ulambda::meromorphic_from_json(in)
                       : ulambda::from_disk(
                             ulambda::series_of(ulambda::spec_from_json(in), opt.order),
                             opt.order);
  const auto bound = ulambda::coefficient_area_bound(g, opt.lambda);
  Json j{{"area", ulambda::area_omitted(g)},
         {"sum_n_bn2", bound.sum},
         {"bound_holds", bound.holds}};
  write_output(dump(j), opt.out_path);
  return kExitOk;
}

int run_coeffs(const Options& opt) {
  const auto spec = load_spec(opt.spec_path);
  const auto s = ulambda::series_of(spec, opt.order);
  Json j{{"max_ratio", ulambda::coeff_bound_check(s)}, {"series", ulambda::to_json(s)}};
  write_output(dump(j), opt.out_path);
  return kExitOk;
}

int run_extreme(const Options& opt) {
  const Json in = load_json(opt.spec_path);
  const ulambda::MeromorphicSeries g = ulambda::meromorphic_from_json(in);
  const auto dev = ulambda::m_deviation(g, opt.lambda);
  Json j{{"candidate", ulambda::is_extreme_candidate(g, opt.lambda, opt.tol)},
         {"deviation", ulambda::to_json(dev)}};
  write_output(dump(j), opt.out_path);
  return kExitOk;
}

int run_report(const Options& opt) {
  std::ostringstream lines;
  const auto results = ulambda::run_acceptance(lines, opt.seed);
  std::cout << lines.str();
  if (!opt.out_path.empty()) {
    Json arr = Json::array();
    for (const auto& r : results)
      arr.push_back(Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed},
                         {"detail", r.detail}});
    write_output(dump(Json{{"criteria", arr}, {"all_passed", ulambda::all_passed(results)}}),
                 opt.out_path);
  }
  return ulambda::all_passed(results) ? kExitOk : kExitAcceptanceFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for the function class U(lambda)"};
  app.require_subcommand(1);

  Options opt;
  std::string command;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", opt.config_path, "JSON config file mirroring the flags");
    cmd->add_option("--out", opt.out_path, "output file (default stdout)");
    cmd->add_option("--format", opt.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    return cmd;
  };

  auto* deviation = add_common(app.add_subcommand("deviation", "membership deviation report"));
  deviation->add_option("--spec", opt.spec_path, "FunctionSpec JSON file")->required();
  deviation->add_option("--lambda", opt.lambda, "class parameter");
  deviation->add_option("--rmax", opt.rmax, "outermost grid radius");
  deviation->add_option("--grid-radii", opt.grid_radii, "number of grid radii");
  deviation->add_option("--grid-angles", opt.grid_angles, "number of grid angles");
  deviation->add_option("--tol", opt.tol, "verdict tolerance");

  auto* mean = add_common(app.add_subcommand("mean", "circle mean of |f^(n)|^p"));
  mean->add_option("--spec", opt.spec_path)->required();
  mean->add_option("--lambda", opt.lambda, "comparison family parameter");
  mean->add_option("--n", opt.n, "derivative order");
  mean->add_option("--p", opt.p, "exponent");
  mean->add_option("--r", opt.r, "radius");
  mean->add_option("--nodes", opt.nodes, "quadrature nodes (power of 2)");

  auto* arclength = add_common(app.add_subcommand("arclength", "image arc length"));
  arclength->add_option("--spec", opt.spec_path)->required();
  arclength->add_option("--r", opt.r, "radius");
  arclength->add_option("--nodes", opt.nodes);

  auto* norm = add_common(app.add_subcommand("norm", "pre-Schwarzian norm of J_alpha[k_lambda]"));
  norm->add_option("--lambda", opt.lambda);
  norm->add_option("--alpha", opt.alpha, "complex alpha: re im")->expected(2);

  auto* fs = add_common(app.add_subcommand("fs", "Fekete-Szego bound and search"));
  fs->add_option("--lambda", opt.lambda);
  fs->add_option("--mu", opt.mu, "complex mu: re im")->expected(2);
  fs->add_option("--resolution", opt.resolution, "grid steps per parameter");

  auto* star = add_common(app.add_subcommand("star", "star-function dominance"));
  star->add_option("--spec", opt.spec_path)->required();
  star->add_option("--lambda", opt.lambda);
  star->add_option("--r", opt.r);
  star->add_option("--nodes", opt.nodes);
  star->add_option("--sign", opt.sign, "+1, -1, or 0 for both");

  auto* curve = add_common(app.add_subcommand("curve", "boundary curve samples (CSV)"));
  curve->add_option("--lambda", opt.lambda);
  curve->add_option("--grid-angles", opt.grid_angles, "sample count");

  auto* area = add_common(app.add_subcommand("area", "omitted-set area"));
  area->add_option("--spec", opt.spec_path, "MeromorphicSeries or FunctionSpec JSON")->required();
  area->add_option("--lambda", opt.lambda);
  area->add_option("--order", opt.order);

  auto* coeffs = add_common(app.add_subcommand("coeffs", "Taylor coefficients and |a_n|/n"));
  coeffs->add_option("--spec", opt.spec_path)->required();
  coeffs->add_option("--order", opt.order);

  auto* extreme = add_common(app.add_subcommand("extreme", "extreme-point candidate test"));
  extreme->add_option("--spec", opt.spec_path, "MeromorphicSeries JSON")->required();
  extreme->add_option("--lambda", opt.lambda);
  extreme->add_option("--tol", opt.tol);

  auto* report = add_common(app.add_subcommand("report", "run the full verification suite"));
  report->add_option("--seed", opt.seed, "sampling seed (verdict logic is unaffected)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    CLI::App* cmd = app.get_subcommands().front();
    apply_config(opt, *cmd);
    const std::string name = cmd->get_name();
    if (name == "deviation") return run_deviation(opt);
    if (name == "mean") return run_mean(opt);
    if (name == "arclength") return run_arclength(opt);
    if (name == "norm") return run_norm(opt);
    if (name == "fs") return run_fs(opt);
    if (name == "star") return run_star(opt);
    if (name == "curve") return run_curve(opt);
    if (name == "area") return run_area(opt);
    if (name == "coeffs") return run_coeffs(opt);
    if (name == "extreme") return run_extreme(opt);
    if (name == "report") return run_report(opt);
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
