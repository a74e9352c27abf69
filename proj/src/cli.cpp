// Copyright 2026 The skewlib Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "skewlib/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "skewlib/figures.hpp"
#include "skewlib/matrix_io.hpp"
#include "skewlib/skew_info.hpp"
#include "skewlib/theorems.hpp"

#ifndef SKEWLIB_VERSION
#define SKEWLIB_VERSION "0.0.0"
#endif

namespace skew::cli {

namespace {

using nlohmann::json;

/// Reads subcommand settings from a JSON file: {"verify": {"samples": 100}}.
/// Options given on the command line take precedence.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App* app, bool default_also, bool,
                        std::string) const override {
    json j;
    for (const CLI::Option* opt : app->get_options({})) {
      if (opt->get_lnames().empty() || !opt->get_configurable()) continue;
      const std::string name = opt->get_lnames()[0];
      if (opt->count() > 0)
        j[name] = opt->as<std::vector<std::string>>();
      else if (default_also && !opt->get_default_str().empty())
        j[name] = opt->get_default_str();
    }
    return j.dump(2);
  }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    json j;
    try {
      input >> j;
    } catch (const json::exception& e) {
      throw CLI::ConversionError(std::string("config file: ") + e.what());
    }
    std::vector<CLI::ConfigItem> items;
    collect(j, "", {}, items);
    return items;
  }

 private:
  static std::string scalar(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
  }

  static void collect(const json& j, const std::string& name,
                      std::vector<std::string> parents,
                      std::vector<CLI::ConfigItem>& items) {
    if (j.is_object()) {
      if (!name.empty()) parents.push_back(name);
      for (auto it = j.begin(); it != j.end(); ++it)
        collect(*it, it.key(), parents, items);
      return;
    }
    if (name.empty()) return;
    CLI::ConfigItem item;
    item.name = name;
    item.parents = std::move(parents);
    if (j.is_array()) {
      for (const auto& v : j) item.inputs.push_back(scalar(v));
    } else {
      item.inputs.push_back(scalar(j));
    }
    items.push_back(std::move(item));
  }
};

struct ComputeArgs {
  std::string state;
  std::vector<double> bloch;
  std::string obs = "sx";
  std::string obs2;
  std::string order = "wy";
  std::string format = "text";
  std::string out;
};

struct SweepSArgs {
  std::vector<double> purities{0.55, 0.7, 0.85, 1.0};
  std::vector<double> s_grid;
  double s_min = -20.0;
  double s_max = -0.25;
  int s_count = 80;
  std::string obs = "sx";
  std::string format = "csv";
  std::string out;
};

struct SweepBlochArgs {
  double theta = std::numbers::pi / 3.0;
  double phi = std::numbers::pi / 3.0;
  std::vector<double> radii;
  int r_count = 101;
  std::string obs = "sx";
  std::string obs2 = "sy";
  std::vector<std::string> orders{"qfi", "wy"};
  std::string format = "csv";
  std::string out;
};

struct VerifyArgs {
  std::string suite = "all";
  std::vector<int> dims;
  std::vector<std::string> orders;
  std::int64_t samples = 10000;
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
  std::string out;
};

json tool_json() { return {{"name", "skewlib"}, {"version", tool_version()}}; }

std::string header_line(const json& config) {
  return "# skewlib " + tool_version() + " " + config.dump() + "\n";
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::BadConfig, "cannot write '" + path + "'");
  file << text;
}

// Splits "wy,s=-2,w=0.9,min" into {"wy", "s=-2,w=0.9", "min"}: a "w=" piece
// belongs to the token before it.
std::vector<std::string> split_orders(const std::vector<std::string>& raw) {
  std::vector<std::string> tokens;
  for (const auto& item : raw) {
    std::stringstream ss(item);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
      if (piece.empty()) continue;
      if (piece.rfind("w=", 0) == 0 && !tokens.empty())
        tokens.back() += "," + piece;
      else
        tokens.push_back(piece);
    }
  }
  return tokens;
}

ComplexMatrix parse_observable(const std::string& text) {
  if (text == "sx") return pauli::x();
  if (text == "sy") return pauli::y();
  if (text == "sz") return pauli::z();
  if (text == "id") return pauli::identity();
  if (!text.empty() && text.find_first_not_of("IXYZ") == std::string::npos)
    return pauli::from_string(text);
  return read_matrix_file(text);
}

DensityMatrix parse_state(const ComputeArgs& a) {
  if (!a.bloch.empty()) {
    if (!a.state.empty())
      throw Error(ErrorCode::BadConfig, "give either --state or --bloch");
    return bloch_to_density({{a.bloch[0], a.bloch[1], a.bloch[2]}});
  }
  if (a.state.empty()) throw Error(ErrorCode::BadConfig, "a state is required");
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  if (a.state == "mixed34") {
    m(0, 0) = 0.75;
    m(1, 1) = 0.25;
  } else if (a.state == "maxmixed") {
    m(0, 0) = m(1, 1) = 0.5;
  } else if (a.state == "pure0") {
    m(0, 0) = 1.0;
  } else if (a.state == "pure1") {
    m(1, 1) = 1.0;
  } else if (a.state == "plus") {
    m.setConstant(0.5);
  } else {
    m = read_matrix_file(a.state);
  }
  return DensityMatrix::from_matrix(m);
}

int cmd_compute(const ComputeArgs& a, std::ostream& out) {
  const DensityMatrix rho = parse_state(a);
  const MeanOrder order = parse_order(a.order);
  const ComplexMatrix x = parse_observable(a.obs);

  std::vector<std::pair<std::string, double>> values;
  values.emplace_back("I(X)", skew_information(rho, order, x));
  values.emplace_back("V(X)", variance(rho, x));
  if (!a.obs2.empty()) {
    const ComplexMatrix y = parse_observable(a.obs2);
    const double ix = values[0].second;
    const double iy = skew_information(rho, order, y);
    const Complex z = zeta(rho, order, x, y);
    values.emplace_back("I(Y)", iy);
    values.emplace_back("V(Y)", variance(rho, y));
    values.emplace_back("Re_zeta", z.real());
    values.emplace_back("Im_zeta", z.imag());
    values.emplace_back("Im_zeta_trace", im_zeta(rho, x, y));
    values.emplace_back("product", ix * iy);
    values.emplace_back("lower_bound_rhs", lower_bound_rhs(rho, order, x, y));
    values.emplace_back("upper_bound_rhs", std::norm(z));
    values.emplace_back("corollary_lhs", corollary_lhs(rho, order, x, y));
    values.emplace_back("corollary_rhs", commutator_bound(rho, x, y));
  }

  json config = {{"command", "compute"}, {"order", order_token(order)},
                 {"obs", a.obs},         {"format", a.format}};
  if (!a.obs2.empty()) config["obs2"] = a.obs2;
  if (!a.bloch.empty()) config["bloch"] = a.bloch;
  else config["state"] = a.state;

  std::string text;
  if (a.format == "json") {
    json results = json::object();
    for (const auto& [k, v] : values) results[k] = v;
    text = json{{"tool", tool_json()}, {"config", config}, {"results", results}}
               .dump(2) + "\n";
  } else if (a.format == "csv") {
    text = header_line(config) + "quantity,value\n";
    for (const auto& [k, v] : values) text += k + "," + format_sig12(v) + "\n";
  } else {
    text = header_line(config) + "order = " + order_token(order) + "\n";
    for (const auto& [k, v] : values) text += k + " = " + format_sig12(v) + "\n";
  }
  emit(text, a.out, out);
  return kExitOk;
}

int cmd_sweep_s(const SweepSArgs& a, std::ostream& out) {
  PurityCurveConfig cfg;
  cfg.purities = a.purities;
  cfg.s_grid = a.s_grid.empty() ? linear_s_grid(a.s_min, a.s_max, a.s_count)
                                : a.s_grid;
  cfg.observable = parse_observable(a.obs);
  const auto rows = purity_curves(cfg);

  json config = {{"command", "sweep-s"}, {"purities", cfg.purities},
                 {"s_grid", cfg.s_grid}, {"obs", a.obs},
                 {"format", a.format}};
  std::string text;
  if (a.format == "json") {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"purity", r.purity}, {"s", r.s_label}, {"I_s", r.info}});
    text = json{{"tool", tool_json()}, {"config", config}, {"rows", arr}}.dump(2) +
           "\n";
  } else {
    text = header_line(config) + purity_curves_csv(rows);
  }
  emit(text, a.out, out);
  return kExitOk;
}

int cmd_sweep_bloch(const SweepBlochArgs& a, std::ostream& out) {
  BlochRayConfig cfg;
  cfg.theta = a.theta;
  cfg.phi = a.phi;
  cfg.radii = a.radii.empty() ? linear_radii(a.r_count) : a.radii;
  cfg.x = parse_observable(a.obs);
  cfg.y = parse_observable(a.obs2);
  cfg.orders.clear();
  std::vector<std::string> order_tokens;
  for (const auto& token : split_orders(a.orders)) {
    cfg.orders.push_back(parse_order(token));
    order_tokens.push_back(order_token(cfg.orders.back()));
  }
  const auto rows = bloch_ray(cfg);

  json config = {{"command", "sweep-bloch"}, {"theta", a.theta},
                 {"phi", a.phi},             {"radii", cfg.radii},
                 {"obs", a.obs},             {"obs2", a.obs2},
                 {"orders", order_tokens},   {"format", a.format}};
  std::string text;
  if (a.format == "json") {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"r", r.r},
                     {"order", r.order},
                     {"product", r.product},
                     {"corollary_lhs", r.corollary_lhs},
                     {"corollary_rhs", r.corollary_rhs},
                     {"lower_bound_rhs", r.lower_bound_rhs}});
    text = json{{"tool", tool_json()}, {"config", config}, {"rows", arr}}.dump(2) +
           "\n";
  } else {
    text = header_line(config) + bloch_ray_csv(rows);
  }
  emit(text, a.out, out);
  return kExitOk;
}

int thread_cap() {
  if (const char* env = std::getenv("SKEWLIB_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  return 0;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<Suite> suites;
  const bool all = a.suite == "all";
  if (all) {
    suites = cli_suites();
  } else {
    const auto s = suite_from_name(a.suite);
    if (!s || *s == Suite::PurityScaling)
      throw Error(ErrorCode::BadConfig, "unknown suite '" + a.suite + "'");
    suites = {*s};
  }

  std::vector<MeanOrder> orders;
  for (const auto& token : split_orders(a.orders)) orders.push_back(parse_order(token));
  if (orders.empty()) orders = default_order_chain();

  if (!a.out.empty()) std::filesystem::create_directories(a.out);

  int status = kExitOk;
  for (Suite suite : suites) {
    SweepConfig cfg;
    cfg.orders = orders;
    cfg.samples = a.samples;
    cfg.seed = a.seed;
    cfg.tolerance = a.tolerance;
    cfg.threads = thread_cap();
    const bool qubit = suite == Suite::Sandwich || suite == Suite::Corollary;
    if (qubit) {
      cfg.dims = all || a.dims.empty() ? std::vector<int>{2} : a.dims;
    } else if (suite == Suite::Search3d) {
      std::vector<int> big;
      for (int d : a.dims)
        if (d >= 3 || !all) big.push_back(d);
      cfg.dims = big.empty() ? std::vector<int>{3} : big;
    } else if (!a.dims.empty()) {
      cfg.dims = a.dims;
    }

    const SweepReport report = run_suite(suite, cfg);
    std::vector<std::string> order_tokens;
    for (const auto& o : cfg.orders) order_tokens.push_back(order_token(o));
    json doc = to_json(report);
    doc["tool"] = tool_json();
    doc["config"] = {{"suite", report.suite},     {"dims", cfg.dims},
                     {"orders", order_tokens},    {"samples", cfg.samples},
                     {"seed", cfg.seed},          {"tolerance", cfg.tolerance},
                     {"asserting", suite_asserts(suite)}};

    if (a.out.empty()) {
      out << doc.dump() << "\n";
    } else {
      const auto path = std::filesystem::path(a.out) / (report.suite + ".json");
      emit(doc.dump(2) + "\n", path.string(), out);
    }

    const char* verdict = !suite_asserts(suite) ? "report-only"
                          : report.violations == 0 ? "ok"
                                                   : "VIOLATED";
    err << report.suite << ": checked=" << report.checked
        << " violations=" << report.violations
        << " max_slack=" << format_sig12(report.max_slack) << " " << verdict
        << "\n";
    if (suite_asserts(suite) && report.violations > 0) status = kExitViolation;
  }
  return status;
}

}  // namespace

std::string tool_version() { return SKEWLIB_VERSION; }

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Generalized Wigner-Yanase skew information toolkit", "skewlib"};
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON file with per-command settings");
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Evaluate skew information for one state");
  c->add_option("--state", compute.state,
                "Preset (mixed34, maxmixed, pure0, pure1, plus) or JSON matrix file");
  c->add_option("--bloch", compute.bloch, "Bloch vector x,y,z")
      ->delimiter(',')
      ->expected(3);
  c->add_option("--obs", compute.obs, "sx|sy|sz|id, Pauli string, or JSON file")
      ->capture_default_str();
  c->add_option("--obs2", compute.obs2, "Second observable");
  c->add_option("--order", compute.order, "wy|qfi|min|s=<s>|wyd:w=<w>")
      ->capture_default_str();
  c->add_option("--format", compute.format)
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  c->add_option("--out", compute.out, "Output file (default stdout)");

  SweepSArgs sweep_s;
  auto* s = app.add_subcommand("sweep-s", "I^s versus s at fixed purities");
  s->add_option("--purities", sweep_s.purities)->delimiter(',')->capture_default_str();
  s->add_option("--s-grid", sweep_s.s_grid, "Explicit finite negative orders")
      ->delimiter(',');
  s->add_option("--s-min", sweep_s.s_min)->capture_default_str();
  s->add_option("--s-max", sweep_s.s_max)->capture_default_str();
  s->add_option("--s-count", sweep_s.s_count)->capture_default_str();
  s->add_option("--obs", sweep_s.obs)->capture_default_str();
  s->add_option("--format", sweep_s.format)
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  s->add_option("--out", sweep_s.out);

  SweepBlochArgs sweep_b;
  auto* b = app.add_subcommand("sweep-bloch", "Bound quantities along a Bloch ray");
  b->add_option("--theta", sweep_b.theta)->capture_default_str();
  b->add_option("--phi", sweep_b.phi)->capture_default_str();
  b->add_option("--radii", sweep_b.radii)->delimiter(',');
  b->add_option("--r-count", sweep_b.r_count)->capture_default_str();
  b->add_option("--obs", sweep_b.obs)->capture_default_str();
  b->add_option("--obs2", sweep_b.obs2)->capture_default_str();
  b->add_option("--orders", sweep_b.orders, "Comma-separated order tokens")
      ->capture_default_str();
  b->add_option("--format", sweep_b.format)
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  b->add_option("--out", sweep_b.out);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run randomized theorem sweeps");
  v->add_option("suite", verify.suite,
                "nonneg|monotone|variance|convexity|lower|sandwich|corollary|"
                "baselines|search3d|all")
      ->capture_default_str();
  v->add_option("--dims", verify.dims)->delimiter(',');
  v->add_option("--orders", verify.orders, "Comma-separated order tokens");
  v->add_option("--samples", verify.samples, "Samples per (dim, order) cell")
      ->capture_default_str();
  v->add_option("--seed", verify.seed)->capture_default_str();
  v->add_option("--tolerance", verify.tolerance)->capture_default_str();
  v->add_option("--out", verify.out, "Directory for <suite>.json reports");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c->parsed()) return cmd_compute(compute, out);
    if (s->parsed()) return cmd_sweep_s(sweep_s, out);
    if (b->parsed()) return cmd_sweep_bloch(sweep_b, out);
    if (v->parsed()) return cmd_verify(verify, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace skew::cli
