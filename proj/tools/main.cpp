#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hardymeans/hardy.hpp"

namespace hm = hardymeans;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

/// Runtime knobs shared by all subcommands. Precedence: built-in defaults,
/// then the config file (HARDY_MEANS_CONFIG or --config), then flags.
struct RunConfig {
  hm::QuadratureConfig quad;
  hm::RootFindOptions root;
  double horizon = 1.0;
  int grid = 20000;
  std::string format = "csv";

  void validate() const {
    if (!(quad.tol > 0.0) || !(root.tol > 0.0)) {
      throw std::invalid_argument("config: tolerances must be positive");
    }
    if (quad.max_depth < 1 || root.max_iter < 1 || grid < 1) {
      throw std::invalid_argument(
          "config: max_depth, max_iter and grid must be at least 1");
    }
    if (!(quad.grading_ratio > 0.0) || !(quad.grading_ratio < 1.0)) {
      throw std::invalid_argument("config: grading_ratio must be in (0, 1)");
    }
    if (format != "csv" && format != "json") {
      throw std::invalid_argument("config: format must be csv or json");
    }
  }
};

std::string fmt15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

std::string read_all(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot open file: " + path);
  }
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void load_config_file(const std::string& path, RunConfig* cfg) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open config file: " + path);
  }
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = line;
    auto hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = s.find_last_not_of(" \t\r");
    s = s.substr(first, last - first + 1);
    auto eq = s.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config " + path + ":" +
                                  std::to_string(lineno) +
                                  ": expected key=value");
    }
    auto trim = [](std::string t) {
      auto b = t.find_first_not_of(" \t");
      auto e = t.find_last_not_of(" \t");
      return b == std::string::npos ? std::string()
                                    : t.substr(b, e - b + 1);
    };
    std::string key = trim(s.substr(0, eq));
    std::string val = trim(s.substr(eq + 1));
    auto as_double = [&](const std::string& v) {
      std::size_t pos = 0;
      double d = std::stod(v, &pos);
      if (pos != v.size()) {
        throw std::invalid_argument("config " + path + ": bad number for " +
                                    key + ": " + v);
      }
      return d;
    };
    if (key == "quad_tol") {
      cfg->quad.tol = as_double(val);
    } else if (key == "quad_max_depth") {
      cfg->quad.max_depth = static_cast<int>(as_double(val));
    } else if (key == "quad_grading_ratio") {
      cfg->quad.grading_ratio = as_double(val);
    } else if (key == "root_tol") {
      cfg->root.tol = as_double(val);
    } else if (key == "root_max_iter") {
      cfg->root.max_iter = static_cast<int>(as_double(val));
    } else if (key == "horizon") {
      cfg->horizon = as_double(val);
    } else if (key == "grid") {
      cfg->grid = static_cast<int>(as_double(val));
    } else if (key == "format") {
      cfg->format = val;
    } else {
      throw std::invalid_argument("config " + path + ": unknown key: " + key);
    }
  }
}

/// Mean descriptor shared by every subcommand: power <p>, gini <p> <q>,
/// concave-log, concave-power <p>.
struct MeanKind {
  enum class Tag { Power, Gini, ConcaveLog, ConcavePower } tag;
  double p = 0.0;
  double q = 0.0;
};

MeanKind parse_mean_kind(const std::string& name,
                         const std::vector<double>& params) {
  auto want = [&](std::size_t n) {
    if (params.size() != n) {
      throw std::invalid_argument("mean '" + name + "' takes " +
                                  std::to_string(n) + " parameter(s), got " +
                                  std::to_string(params.size()));
    }
  };
  if (name == "power") {
    want(1);
    return {MeanKind::Tag::Power, params[0], 0.0};
  }
  if (name == "gini") {
    want(2);
    return {MeanKind::Tag::Gini, params[0], params[1]};
  }
  if (name == "concave-log") {
    want(0);
    return {MeanKind::Tag::ConcaveLog, 0.0, 0.0};
  }
  if (name == "concave-power") {
    want(1);
    return {MeanKind::Tag::ConcavePower, params[0], 0.0};
  }
  throw std::invalid_argument(
      "unknown mean '" + name +
      "' (expected power, gini, concave-log or concave-power)");
}

std::function<double(double)> concave_shape(const MeanKind& kind) {
  if (kind.tag == MeanKind::Tag::ConcaveLog) {
    return [](double x) { return std::log(x); };
  }
  double p = kind.p;
  return [p](double x) { return (std::pow(x, p) - 1.0) / p; };
}

hm::WeightedMeanFn make_weighted_mean(const MeanKind& kind,
                                      const hm::RootFindOptions& root) {
  switch (kind.tag) {
    case MeanKind::Tag::Power:
      return hm::power_mean_fn(kind.p);
    case MeanKind::Tag::Gini:
      return hm::gini_mean_fn(kind.p, kind.q);
    case MeanKind::Tag::ConcaveLog:
    case MeanKind::Tag::ConcavePower:
      return hm::deviation_mean_fn(
          hm::DeviationSpec::ratio_concave(concave_shape(kind)), root);
  }
  throw std::logic_error("unreachable mean kind");
}

hm::IntegralMeanSpec make_integral_mean(const MeanKind& kind,
                                        const hm::RootFindOptions& root) {
  switch (kind.tag) {
    case MeanKind::Tag::Power:
      return hm::IntegralMeanSpec::power(kind.p);
    case MeanKind::Tag::Gini:
      return hm::IntegralMeanSpec::gini(kind.p, kind.q);
    case MeanKind::Tag::ConcaveLog:
    case MeanKind::Tag::ConcavePower:
      return hm::IntegralMeanSpec::deviation(
          hm::DeviationSpec::ratio_concave(concave_shape(kind)), root);
  }
  throw std::logic_error("unreachable mean kind");
}

hm::FunctionFamily parse_family(const std::string& name) {
  if (name == "const") return hm::FunctionFamily::Constant;
  if (name == "power-decay") return hm::FunctionFamily::PowerDecay;
  if (name == "exponential") return hm::FunctionFamily::Exponential;
  if (name == "step-profile") return hm::FunctionFamily::StepProfile;
  throw std::invalid_argument(
      "unknown family '" + name +
      "' (expected const, power-decay, exponential or step-profile)");
}

hm::FunctionHandle make_family_handle(hm::FunctionFamily family, double param,
                                      double s) {
  switch (family) {
    case hm::FunctionFamily::Constant:
      return hm::FunctionHandle::constant(param, s);
    case hm::FunctionFamily::PowerDecay:
      return hm::FunctionHandle::power_decay(param, s);
    case hm::FunctionFamily::Exponential:
      return hm::FunctionHandle::exponential(param, s);
    case hm::FunctionFamily::StepProfile:
      return hm::FunctionHandle::step_profile(
          static_cast<int>(std::lround(param)), s);
  }
  throw std::logic_error("unreachable family");
}

void print_value(const RunConfig& cfg, double v) {
  if (cfg.format == "json") {
    nlohmann::json j;
    j["value"] = v;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << fmt15(v) << "\n";
  }
}

const char* kCsvHeader =
    "mean_p,mean_q,family,param,s,grid,numerator,denominator,ratio,"
    "reference,margin,certified";

std::string csv_row(const hm::HardyReport& r) {
  std::ostringstream out;
  out << fmt15(r.mean_p) << ',' << fmt15(r.mean_q) << ',' << r.family << ','
      << fmt15(r.param) << ',' << fmt15(r.s) << ',' << r.grid << ','
      << fmt15(r.numerator) << ',' << fmt15(r.denominator) << ','
      << fmt15(r.ratio) << ',' << r.reference.str() << ','
      << fmt15(r.margin) << ',' << (r.certified ? 'Y' : 'N');
  return out.str();
}

nlohmann::json json_row(const hm::HardyReport& r) {
  nlohmann::json j;
  j["mean_p"] = r.mean_p;
  j["mean_q"] = r.mean_q;
  j["family"] = r.family;
  j["param"] = r.param;
  j["s"] = r.s;
  j["grid"] = r.grid;
  j["numerator"] = r.numerator;
  j["denominator"] = r.denominator;
  j["ratio"] = r.ratio;
  j["reference"] = r.reference.str();
  j["margin"] = r.margin;
  j["certified"] = r.certified;
  return j;
}

hm::HardyReport failed_row(const MeanKind& kind, const std::string& family,
                           double param, const RunConfig& cfg,
                           const hm::ExtendedReal& reference) {
  hm::HardyReport r;
  bool has_pq = kind.tag == MeanKind::Tag::Power ||
                kind.tag == MeanKind::Tag::Gini;
  r.mean_p = has_pq ? kind.p : kNaN;
  r.mean_q = has_pq ? kind.q : kNaN;
  r.family = family;
  r.param = param;
  r.s = cfg.horizon;
  r.grid = cfg.grid;
  r.numerator = kNaN;
  r.denominator = kNaN;
  r.ratio = kNaN;
  r.reference = reference;
  r.margin = kNaN;
  r.certified = false;
  return r;
}

void emit_reports(const RunConfig& cfg, const std::vector<hm::HardyReport>& rows,
                  const std::string& csv_path,
                  const std::optional<hm::ExtendedReal>& summary_reference) {
  double max_ratio = kNaN;
  for (const auto& r : rows) {
    if (std::isfinite(r.ratio) &&
        (std::isnan(max_ratio) || r.ratio > max_ratio)) {
      max_ratio = r.ratio;
    }
  }
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!csv_path.empty()) {
    file.open(csv_path);
    if (!file) {
      throw std::invalid_argument("cannot open output file: " + csv_path);
    }
    out = &file;
  }
  if (cfg.format == "json") {
    nlohmann::json j;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rows) j["rows"].push_back(json_row(r));
    j["max_ratio"] = max_ratio;
    if (summary_reference) j["reference"] = summary_reference->str();
    *out << j.dump() << "\n";
    return;
  }
  *out << kCsvHeader << "\n";
  for (const auto& r : rows) *out << csv_row(r) << "\n";
  *out << "# max_ratio=" << fmt15(max_ratio);
  if (summary_reference) *out << " reference=" << summary_reference->str();
  *out << "\n";
}

int run_mean(const RunConfig& cfg, const std::string& kind_name,
             const std::vector<double>& params,
             const std::vector<double>& entries, std::vector<double> weights) {
  MeanKind kind = parse_mean_kind(kind_name, params);
  if (weights.empty()) weights.assign(entries.size(), 1.0);
  hm::WeightedSample sample(entries, weights);
  double v = make_weighted_mean(kind, cfg.root)(sample);
  print_value(cfg, v);
  return 0;
}

int run_imean(const RunConfig& cfg, const std::string& kind_name,
              const std::vector<double>& params, const std::string& step_path,
              const std::string& family_name, double family_param,
              bool have_param, const std::vector<int>& envelope_cells) {
  MeanKind kind = parse_mean_kind(kind_name, params);
  if (step_path.empty() == family_name.empty()) {
    throw std::invalid_argument(
        "imean: give exactly one input, --step or --family");
  }
  hm::FunctionHandle f = [&]() {
    if (!step_path.empty()) {
      return hm::FunctionHandle::of_step(
          hm::StepFunction::from_json_text(read_all(step_path)));
    }
    if (!have_param) {
      throw std::invalid_argument("imean: --family requires --param");
    }
    return make_family_handle(parse_family(family_name), family_param,
                              cfg.horizon);
  }();

  if (!envelope_cells.empty()) {
    hm::WeightedMeanFn mean = make_weighted_mean(kind, cfg.root);
    std::ostringstream csv;
    nlohmann::json rows = nlohmann::json::array();
    csv << "cells,lower,upper,gap\n";
    for (int k : envelope_cells) {
      double lo = hm::integral_mean_of_step(mean, hm::lower_envelope(f, k));
      double hi = hm::integral_mean_of_step(mean, hm::upper_envelope(f, k));
      if (cfg.format == "json") {
        nlohmann::json j;
        j["cells"] = k;
        j["lower"] = lo;
        j["upper"] = hi;
        j["gap"] = hi - lo;
        rows.push_back(j);
      } else {
        csv << k << ',' << fmt15(lo) << ',' << fmt15(hi) << ','
            << fmt15(hi - lo) << "\n";
      }
    }
    if (cfg.format == "json") {
      std::cout << rows.dump() << "\n";
    } else {
      std::cout << csv.str();
    }
    return 0;
  }

  double v = make_integral_mean(kind, cfg.root).of_handle(f, cfg.quad);
  print_value(cfg, v);
  return 0;
}

int run_rearrange(const std::string& path) {
  hm::StepFunction f = hm::StepFunction::from_json_text(read_all(path));
  std::cout << hm::decreasing_rearrangement(f).to_json_text() << "\n";
  return 0;
}

int run_hardy(const RunConfig& cfg, const std::string& kind_name,
              const std::vector<double>& kind_params,
              const std::string& family_name,
              const std::vector<double>& family_params,
              const std::string& csv_path) {
  MeanKind kind = parse_mean_kind(kind_name, kind_params);
  hm::IntegralMeanSpec mean = make_integral_mean(kind, cfg.root);
  hm::FunctionFamily family = parse_family(family_name);
  hm::ExtendedReal reference = mean.reference_constant();
  if (kind.tag == MeanKind::Tag::ConcaveLog ||
      kind.tag == MeanKind::Tag::ConcavePower) {
    try {
      reference = hm::concave_deviation_hardy_constant(concave_shape(kind),
                                                       1e-10, cfg.quad);
    } catch (const std::runtime_error&) {
      reference = hm::ExtendedReal::unknown();
    }
  }
  std::vector<hm::HardyReport> rows;
  rows.reserve(family_params.size());
  for (double param : family_params) {
    try {
      hm::FunctionHandle f = make_family_handle(family, param, cfg.horizon);
      rows.push_back(
          hm::hardy_functional(mean, f, cfg.grid, cfg.quad, reference));
    } catch (const std::invalid_argument&) {
      rows.push_back(failed_row(kind, family_name, param, cfg, reference));
    } catch (const std::domain_error&) {
      rows.push_back(failed_row(kind, family_name, param, cfg, reference));
    } catch (const std::runtime_error&) {
      rows.push_back(failed_row(kind, family_name, param, cfg, reference));
    }
  }
  emit_reports(cfg, rows, csv_path, reference);
  return 0;
}

int run_sweep(const RunConfig& cfg, const std::vector<double>& p_list,
              const std::vector<double>& q_list,
              const std::string& family_name,
              const std::vector<double>& family_params,
              const std::string& csv_path) {
  hm::FunctionFamily family = parse_family(family_name);
  std::vector<hm::HardyReport> rows;
  rows.reserve(p_list.size() * q_list.size() * family_params.size());
  for (double p : p_list) {
    for (double q : q_list) {
      MeanKind kind{MeanKind::Tag::Gini, p, q};
      hm::IntegralMeanSpec mean = hm::IntegralMeanSpec::gini(p, q);
      hm::ExtendedReal reference = mean.reference_constant();
      for (double param : family_params) {
        try {
          hm::FunctionHandle f =
              make_family_handle(family, param, cfg.horizon);
          rows.push_back(hm::hardy_functional(mean, f, cfg.grid, cfg.quad));
        } catch (const std::invalid_argument&) {
          rows.push_back(failed_row(kind, family_name, param, cfg, reference));
        } catch (const std::domain_error&) {
          rows.push_back(failed_row(kind, family_name, param, cfg, reference));
        } catch (const std::runtime_error&) {
          rows.push_back(failed_row(kind, family_name, param, cfg, reference));
        }
      }
    }
  }
  emit_reports(cfg, rows, csv_path, std::nullopt);
  return 0;
}

int run_hardy_constant(const RunConfig& cfg, const std::string& kind_name,
                       const std::vector<double>& params, double tol) {
  MeanKind kind = parse_mean_kind(kind_name, params);
  hm::ExtendedReal c = [&]() {
    switch (kind.tag) {
      case MeanKind::Tag::Power:
        return hm::hardy_constant_power(kind.p);
      case MeanKind::Tag::Gini:
        return hm::hardy_constant_gini(kind.p, kind.q);
      case MeanKind::Tag::ConcaveLog:
      case MeanKind::Tag::ConcavePower:
        return hm::concave_deviation_hardy_constant(concave_shape(kind), tol,
                                                    cfg.quad);
    }
    throw std::logic_error("unreachable mean kind");
  }();
  if (cfg.format == "json") {
    nlohmann::json j;
    j["value"] = c.str();
    if (c.kind() == hm::ExtendedReal::Kind::Finite) j["finite"] = c.value();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << c.str() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;

  // The config file must be applied before CLI11 assigns flag values, so
  // flags win; find it by scanning, or from the environment.
  std::string config_path;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--config" && i + 1 < argc) {
      config_path = argv[i + 1];
    } else if (arg.rfind("--config=", 0) == 0) {
      config_path = arg.substr(9);
    }
  }
  if (config_path.empty()) {
    if (const char* env = std::getenv("HARDY_MEANS_CONFIG")) {
      config_path = env;
    }
  }
  try {
    if (!config_path.empty()) load_config_file(config_path, &cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "hardy-means: " << e.what() << "\n";
    return 2;
  }

  CLI::App app{
      "hardy-means: weighted and integral means, rearrangements, Hardy "
      "constants"};
  app.require_subcommand(1);
  std::string config_flag;
  app.add_option("--config", config_flag,
                 "config file (flat key=value); also HARDY_MEANS_CONFIG");
  app.add_option("--quad-tol", cfg.quad.tol, "quadrature tolerance");
  app.add_option("--quad-max-depth", cfg.quad.max_depth,
                 "quadrature refinement depth cap");
  app.add_option("--quad-grading-ratio", cfg.quad.grading_ratio,
                 "geometric grading ratio toward the left endpoint");
  app.add_option("--root-tol", cfg.root.tol, "root-finder tolerance");
  app.add_option("--root-max-iter", cfg.root.max_iter,
                 "root-finder iteration cap");
  app.add_option("-s,--horizon", cfg.horizon, "horizon s of [0, s)");
  app.add_option("--grid", cfg.grid, "outer grid points for hardy/sweep");
  app.add_option("--format", cfg.format, "output format: csv or json");

  auto* mean_cmd = app.add_subcommand("mean", "weighted mean of a sample");
  mean_cmd->fallthrough();
  std::string mean_kind;
  std::vector<double> mean_params, entries, weights;
  mean_cmd->add_option("kind", mean_kind, "power|gini|concave-log|concave-power")
      ->required();
  mean_cmd->add_option("params", mean_params, "mean parameters");
  mean_cmd->add_option("--entries", entries, "sample entries")
      ->required()
      ->delimiter(',');
  mean_cmd->add_option("--weights", weights, "sample weights (default: ones)")
      ->delimiter(',');

  auto* imean_cmd =
      app.add_subcommand("imean", "integral mean of a function on [0, s)");
  imean_cmd->fallthrough();
  std::string imean_kind, imean_step, imean_family;
  std::vector<double> imean_params;
  double imean_param = 0.0;
  std::vector<int> imean_envelopes;
  imean_cmd
      ->add_option("kind", imean_kind, "power|gini|concave-log|concave-power")
      ->required();
  imean_cmd->add_option("params", imean_params, "mean parameters");
  imean_cmd->add_option("--step", imean_step,
                        "step-function JSON path ('-' for stdin)");
  imean_cmd->add_option("--family", imean_family,
                        "const|power-decay|exponential|step-profile");
  auto* imean_param_opt =
      imean_cmd->add_option("--param", imean_param, "family parameter");
  imean_cmd
      ->add_option("--envelopes", imean_envelopes,
                   "cell counts; prints the envelope bracket table")
      ->delimiter(',');

  auto* rearrange_cmd = app.add_subcommand(
      "rearrange", "decreasing rearrangement of a step function");
  rearrange_cmd->fallthrough();
  std::string rearrange_path{"-"};
  rearrange_cmd->add_option("input", rearrange_path,
                            "step-function JSON path ('-' for stdin)");

  auto* hardy_cmd =
      app.add_subcommand("hardy", "Hardy ratios of a family under one mean");
  hardy_cmd->fallthrough();
  std::string hardy_kind, hardy_family, hardy_csv;
  std::vector<double> hardy_kind_params, hardy_params;
  hardy_cmd
      ->add_option("kind", hardy_kind, "power|gini|concave-log|concave-power")
      ->required();
  hardy_cmd->add_option("mean-params", hardy_kind_params, "mean parameters");
  hardy_cmd
      ->add_option("--family", hardy_family,
                   "const|power-decay|exponential|step-profile")
      ->required();
  hardy_cmd->add_option("--params", hardy_params, "family parameter list")
      ->required()
      ->delimiter(',');
  hardy_cmd->add_option("--csv", hardy_csv, "write rows to this file");

  auto* sweep_cmd = app.add_subcommand(
      "sweep", "Hardy ratios over a Gini (p, q) grid times a family");
  sweep_cmd->fallthrough();
  std::vector<double> sweep_p{0.5}, sweep_q{0.0}, sweep_params;
  std::string sweep_family, sweep_csv;
  sweep_cmd->add_option("--p-list", sweep_p, "Gini p values")->delimiter(',');
  sweep_cmd->add_option("--q-list", sweep_q, "Gini q values")->delimiter(',');
  sweep_cmd
      ->add_option("--family", sweep_family,
                   "const|power-decay|exponential|step-profile")
      ->required();
  sweep_cmd->add_option("--params", sweep_params, "family parameter list")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--csv", sweep_csv, "write rows to this file");

  auto* constant_cmd =
      app.add_subcommand("hardy-constant", "Hardy constant of a mean");
  constant_cmd->fallthrough();
  std::string constant_kind;
  std::vector<double> constant_params;
  double constant_tol = 1e-10;
  constant_cmd
      ->add_option("kind", constant_kind,
                   "power|gini|concave-log|concave-power")
      ->required();
  constant_cmd->add_option("params", constant_params, "mean parameters");
  constant_cmd->add_option("--tol", constant_tol,
                           "bisection tolerance for concave kinds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cfg.validate();
    if (app.got_subcommand(mean_cmd)) {
      return run_mean(cfg, mean_kind, mean_params, entries, weights);
    }
    if (app.got_subcommand(imean_cmd)) {
      return run_imean(cfg, imean_kind, imean_params, imean_step, imean_family,
                       imean_param, imean_param_opt->count() > 0,
                       imean_envelopes);
    }
    if (app.got_subcommand(rearrange_cmd)) {
      return run_rearrange(rearrange_path);
    }
    if (app.got_subcommand(hardy_cmd)) {
      return run_hardy(cfg, hardy_kind, hardy_kind_params, hardy_family,
                       hardy_params, hardy_csv);
    }
    if (app.got_subcommand(sweep_cmd)) {
      return run_sweep(cfg, sweep_p, sweep_q, sweep_family, sweep_params,
                       sweep_csv);
    }
    if (app.got_subcommand(constant_cmd)) {
      return run_hardy_constant(cfg, constant_kind, constant_params,
                                constant_tol);
    }
    std::cerr << "hardy-means: no subcommand\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "hardy-means: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "hardy-means: " << e.what() << "\n";
    return 2;
  } catch (const hm::integrability_error& e) {
    std::cerr << "hardy-means: " << e.what() << "\n";
    return 3;
  } catch (const std::runtime_error& e) {
    std::cerr << "hardy-means: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "hardy-means: internal error: " << e.what() << "\n";
    return 1;
  }
}
