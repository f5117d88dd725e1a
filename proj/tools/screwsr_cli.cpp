#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "screwsr/screwsr.hpp"

using namespace screwsr;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

/// Usage or precondition problem; maps to exit code 2.
struct UsageError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

struct RunConfig
{
  std::string command;
  std::string group;
  bool octonion = false;
  bool space_form = false;
  int k = 1;
  int kappa = 0;
  std::optional<double> lambda;
  std::string lambda_grid;
  std::uint64_t seed = 1;
  std::optional<double> tol;
  double t_max = 5.0;
  int samples = 101;
  std::string out;
  std::string format = "json";
  std::string x_text;
  std::string y_text;
  bool commuting = false;
  bool inject_table_typo = false;
  int geodesic_specs = 100;
};

std::vector<double> parse_numbers(const std::string& text, const char* what)
{
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double d = 0.0;
    try {
      d = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError(std::string("cannot parse ") + what + " '" + text + "'");
    }
    if (used != item.size() && item.find_first_not_of(' ', used) != std::string::npos)
      throw UsageError(std::string("cannot parse ") + what + " '" + text + "'");
    v.push_back(d);
  }
  return v;
}

template <std::size_t N>
std::optional<std::array<double, N>> parse_vector(const std::string& text, const char* what)
{
  if (text.empty()) return std::nullopt;
  const auto v = parse_numbers(text, what);
  if (v.size() != N) throw UsageError(std::string(what) + " needs " + std::to_string(N) + " comma-separated values");
  std::array<double, N> a{};
  std::copy(v.begin(), v.end(), a.begin());
  return a;
}

/// --tol, then SCREWSR_TOL, then none.
std::optional<double> effective_tol(const RunConfig& cfg)
{
  if (cfg.tol) return cfg.tol;
  if (const char* env = std::getenv("SCREWSR_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) throw UsageError(std::string("invalid SCREWSR_TOL '") + env + "'");
    return v;
  }
  return std::nullopt;
}

std::vector<double> lambdas(const RunConfig& cfg)
{
  if (!cfg.lambda_grid.empty()) {
    if (cfg.lambda_grid == "default") return default_lambda_grid();
    return parse_numbers(cfg.lambda_grid, "--lambda-grid");
  }
  if (cfg.lambda) return {*cfg.lambda};
  return default_lambda_grid();
}

double single_lambda(const RunConfig& cfg)
{
  if (!cfg.lambda) throw UsageError("--lambda is required");
  return *cfg.lambda;
}

void require_one_model(const RunConfig& cfg)
{
  const int n = (cfg.group.empty() ? 0 : 1) + (cfg.octonion ? 1 : 0) + (cfg.space_form ? 1 : 0);
  if (n != 1) throw UsageError("choose exactly one of --group, --octonion, --space-form");
}

void emit(const RunConfig& cfg, const std::string& content, const std::string& summary)
{
  if (cfg.out.empty()) {
    std::cout << content;
  } else {
    write_text_file(cfg.out, content);
    std::cout << summary << "\n";
  }
}

// ---------------------------------------------------------------------------

int cmd_controllability(const RunConfig& cfg)
{
  require_one_model(cfg);
  json doc = report_envelope("controllability");
  json rows = json::array(), warnings = json::array();
  CsvTable csv({"system", "lambda", "dim_g", "dim_span", "predicted", "controllable", "consistent"});
  bool ok = true;
  auto add = [&](const ControllabilityReport& r, double lambda, json row) {
    ok = ok && r.consistent();
    rows.push_back(std::move(row));
    csv.add_row({r.system, format_number(lambda), std::to_string(r.dim_g), std::to_string(r.dim_span),
                 r.predicted ? "true" : "false", r.observed ? "true" : "false", r.consistent() ? "true" : "false"});
  };

  if (!cfg.group.empty()) {
    const CompactGroupId id = parse_group(cfg.group);
    require_curvature(cfg.k);
    for (double l : lambdas(cfg)) {
      const auto r = bracket_generating_rank(ScrewSystem{id, cfg.k, l});
      add(r, l, to_json(r));
    }
  } else if (cfg.octonion) {
    for (double l : lambdas(cfg)) {
      const auto r = octo_controllability(l);
      add(r.report, l, to_json(r));
    }
  } else {
    require_kappa(cfg.kappa);
    for (double l : lambdas(cfg)) {
      const auto s = space_form_report(cfg.kappa, l);
      // Consistency is judged against the computed rank; the alternative
      // predicate is reported alongside.
      ok = ok && s.report.observed == s.general_predicate && s.report.dim_span == s.kk_model_dim_span;
      if (s.alternative_predicate != s.report.observed)
        warnings.push_back("kappa=" + std::to_string(cfg.kappa) + " lambda=" + format_number(l) +
                           ": condition kappa^2 != lambda gives " +
                           (s.alternative_predicate ? "controllable" : "not controllable") + ", rank gives " +
                           (s.report.observed ? "controllable" : "not controllable"));
      rows.push_back(to_json(s));
      csv.add_row({s.report.system, format_number(l), std::to_string(s.report.dim_g),
                   std::to_string(s.report.dim_span), s.general_predicate ? "true" : "false",
                   s.report.observed ? "true" : "false", s.report.observed == s.general_predicate ? "true" : "false"});
    }
  }
  doc["rows"] = rows;
  doc["warnings"] = warnings;
  doc["passed"] = ok;
  for (const auto& w : warnings) std::cerr << "warning: " << w.get<std::string>() << "\n";
  for (const auto& w : warnings) csv.add_comment("warning: " + w.get<std::string>());
  emit(cfg, cfg.format == "csv" ? csv.str() : dump_json(doc),
       std::to_string(rows.size()) + " rows, " + (ok ? "consistent" : "INCONSISTENT"));
  return ok ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------

struct SampledCurve
{
  std::vector<double> times;
  std::vector<Mat> points;
};

std::string curve_csv(const SampledCurve& c, const json& certification)
{
  std::vector<std::string> header{"t"};
  const auto names = component_names(c.points.front());
  header.insert(header.end(), names.begin(), names.end());
  CsvTable csv(header);
  for (auto it = certification.begin(); it != certification.end(); ++it)
    csv.add_comment(it.key() + "=" + (it->is_number_float() ? format_number(it->get<double>()) : it->dump()));
  for (std::size_t i = 0; i < c.times.size(); ++i) {
    std::vector<std::string> row{format_number(c.times[i])};
    for (double v : flatten_components(c.points[i])) row.push_back(format_number(v));
    csv.add_row(std::move(row));
  }
  return csv.str();
}

json curve_json(const SampledCurve& c)
{
  json samples = json::array();
  for (std::size_t i = 0; i < c.times.size(); ++i)
    samples.push_back(json{{"t", c.times[i]}, {"point", matrix_to_json(c.points[i])}});
  return samples;
}

int finish_geodesic(const RunConfig& cfg, json doc, json cert, const SampledCurve& curve, bool ok)
{
  cert["passed"] = ok;
  doc["certification"] = cert;
  doc["samples"] = curve_json(curve);
  emit(cfg, cfg.format == "csv" ? curve_csv(curve, cert) : dump_json(doc),
       std::to_string(curve.times.size()) + " samples, certification " + (ok ? "passed" : "FAILED"));
  return ok ? kExitOk : kExitCheckFailed;
}

int geodesic_group(const RunConfig& cfg, double tol)
{
  const CompactGroupId id = parse_group(cfg.group);
  require_curvature(cfg.k);
  const ScrewSystem sys{id, cfg.k, single_lambda(cfg)};
  if (sys.on_degenerate_locus()) throw UsageError("hypothesis lambda^2 != k violated (" + sys.describe() + ")");
  GeodesicSpec spec = random_geodesic_spec(sys, cfg.seed);
  if (cfg.commuting) spec.Y = 0.5 * spec.X;

  const auto cert = certify_geodesic(spec, cfg.t_max, cfg.samples);
  const auto curve = sample_geodesic(spec, cfg.t_max, cfg.samples);
  const bool one_parameter = cert.bracket_norm <= 1e-12 && cert.subgroup_deviation <= 1e-10;
  const bool ok = cert.horizontality <= tol && cert.speed_deviation <= tol && cert.group_residual <= tol &&
                  cert.closed_form_residual <= tol;

  json doc = report_envelope("geodesic");
  doc["system"] = sys.describe();
  doc["seed"] = cfg.seed;
  doc["X"] = matrix_to_json(spec.X);
  doc["Y"] = matrix_to_json(spec.Y);
  json c = to_json(cert);
  c["tolerance"] = tol;
  c["one_parameter_subgroup"] = one_parameter;
  if (one_parameter) std::cerr << "note: [X, Y] = 0, the geodesic is the one-parameter subgroup exp(t(X + lambda L_X))\n";
  return finish_geodesic(cfg, doc, c, {curve.times, curve.points}, ok);
}

int geodesic_octonion(const RunConfig& cfg, double tol)
{
  const double lambda = single_lambda(cfg);
  if (lambda == 0.0) throw UsageError("hypothesis lambda != 0 violated");
  OctoGeodesicSpec spec = random_octo_spec(cfg.seed, lambda);
  if (const auto x = parse_vector<7>(cfg.x_text, "--x")) spec.x = *x;
  if (const auto y = parse_vector<7>(cfg.y_text, "--y")) spec.y = *y;
  if (cfg.commuting) spec.y = Vec7{};
  if (norm(spec.x) == 0.0) throw UsageError("hypothesis x != 0 violated");
  if (std::abs(dot(spec.x, spec.y)) > 1e-12 * std::max(1.0, norm(spec.x) * norm(spec.y)))
    throw UsageError("hypothesis x orthogonal to y violated");

  // gamma_{x,y}(t) = gamma_{x/|x|, y}(|x| t): the momentum is certified for the unit vector.
  const Vec7 xhat = (1.0 / norm(spec.x)) * spec.x;
  const auto m = certify_octo_momentum(xhat, spec.y, lambda);
  const MotionElement v0 = octo_left_log_derivative(spec, 0.0);
  const double velocity = norm(v0 - octo_lift(spec.x, lambda));

  SampledCurve curve;
  double horizontal = 0.0, speed = 0.0, group = 0.0;
  for (double t : uniform_times(cfg.t_max, cfg.samples)) {
    const Mat g = octo_geodesic(spec, t);
    const MotionElement v = octo_left_log_derivative(spec, t);
    horizontal = std::max(horizontal, octo_horizontality_residual(v, lambda));
    speed = std::max(speed, std::abs(norm(v.a) - norm(spec.x)));
    group = std::max(group, octo_group_residual(g));
    curve.times.push_back(t);
    curve.points.push_back(g);
  }
  const bool ok = m.max_residual() <= tol && velocity <= std::min(tol, 1e-10) && horizontal <= tol && speed <= tol &&
                  group <= tol;

  json doc = report_envelope("geodesic");
  doc["system"] = "R7 x| SO(7) lambda=" + format_number(lambda);
  doc["seed"] = cfg.seed;
  doc["x"] = spec.x;
  doc["y"] = spec.y;
  json c = to_json(m);
  c["initial_velocity_residual"] = velocity;
  c["horizontality"] = horizontal;
  c["speed_deviation"] = speed;
  c["group_residual"] = group;
  c["tolerance"] = tol;
  return finish_geodesic(cfg, doc, c, curve, ok);
}

int geodesic_space_form(const RunConfig& cfg, double tol)
{
  require_kappa(cfg.kappa);
  const double lambda = single_lambda(cfg);
  if (!space_form_condition(cfg.kappa, lambda))
    throw UsageError("hypothesis lambda^2 != kappa violated (kappa=" + std::to_string(cfg.kappa) +
                     " lambda=" + format_number(lambda) + ")");
  Rng rng(cfg.seed);
  Vec3 x{}, y{};
  for (auto& v : x) v = rng.uniform(-1, 1);
  for (auto& v : y) v = rng.uniform(-1, 1);
  if (const auto xv = parse_vector<3>(cfg.x_text, "--x")) x = *xv;
  if (const auto yv = parse_vector<3>(cfg.y_text, "--y")) y = *yv;
  if (cfg.commuting) y = {0.5 * x[0], 0.5 * x[1], 0.5 * x[2]};

  SampledCurve curve;
  double horizontal = 0.0, speed = 0.0, group = 0.0;
  const double xn = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
  for (double t : uniform_times(cfg.t_max, cfg.samples)) {
    const Mat g = space_form_geodesic(cfg.kappa, lambda, x, y, t);
    const Mat v = space_form_left_log_derivative(cfg.kappa, lambda, x, y, t);
    horizontal = std::max(horizontal, space_form_horizontality_residual(cfg.kappa, lambda, v));
    speed = std::max(speed, std::abs(std::sqrt(v(1, 0).w * v(1, 0).w + v(2, 0).w * v(2, 0).w + v(3, 0).w * v(3, 0).w) - xn));
    group = std::max(group, space_form_group_residual(cfg.kappa, g));
    curve.times.push_back(t);
    curve.points.push_back(g);
  }
  const auto cross = space_form_cross_model(cfg.kappa, lambda, x, y, cfg.t_max, cfg.samples);
  const double scale = std::max(1.0, xn * xn);
  const bool ok = horizontal <= tol * scale && speed <= tol * std::max(1.0, xn) && group <= tol * scale &&
                  cross.velocity <= std::max(tol, 1e-8) * scale && cross.adjoint_relative <= std::max(tol, 1e-8);

  json doc = report_envelope("geodesic");
  doc["system"] = "space form kappa=" + std::to_string(cfg.kappa) + " lambda=" + format_number(lambda);
  doc["seed"] = cfg.seed;
  doc["x"] = x;
  doc["y"] = y;
  json c{{"horizontality", horizontal},
         {"speed_deviation", speed},
         {"group_residual", group},
         {"cross_model_velocity", cross.velocity},
         {"cross_model_adjoint_relative", cross.adjoint_relative},
         {"tolerance", tol}};
  return finish_geodesic(cfg, doc, c, curve, ok);
}

int cmd_geodesic(const RunConfig& cfg)
{
  require_one_model(cfg);
  if (cfg.samples < 2) throw UsageError("--samples must be at least 2");
  if (!(cfg.t_max > 0.0)) throw UsageError("--t-max must be positive");
  const double tol = effective_tol(cfg).value_or(kDefaultTolerances.equality);
  if (!cfg.group.empty()) return geodesic_group(cfg, tol);
  if (cfg.octonion) return geodesic_octonion(cfg, tol);
  return geodesic_space_form(cfg, tol);
}

// ---------------------------------------------------------------------------

int cmd_verify_all(const RunConfig& cfg)
{
  VerifyOptions opts;
  opts.tol = effective_tol(cfg);
  opts.inject_table_typo = cfg.inject_table_typo;
  opts.seed = cfg.seed;
  opts.geodesic_specs = cfg.geodesic_specs;
  if (opts.geodesic_specs < 1) throw UsageError("--geodesic-specs must be positive");
  const VerifySummary s = run_verify_all(opts);

  for (const auto& c : s.checks) {
    std::cerr << (c.passed ? "PASS " : "FAIL ") << c.module << ": " << c.name << "  [" << format_number(c.value)
              << " <= " << format_number(c.bound) << "]";
    if (c.tolerance_bound) std::cerr << "  (tolerance-bound: passes at the default bound)";
    if (!c.detail.empty()) std::cerr << "  " << c.detail;
    std::cerr << "\n";
  }
  char seconds[32];
  std::snprintf(seconds, sizeof seconds, "%.1f", s.seconds);
  std::cerr << s.passed() << " passed, " << s.failed() << " failed in " << seconds << " s\n";

  json doc = report_envelope("verify-all");
  doc["seed"] = cfg.seed;
  if (opts.tol) doc["tolerance_override"] = *opts.tol;
  doc["table_typo_injected"] = opts.inject_table_typo;
  doc.update(to_json(s));
  CsvTable csv({"module", "name", "value", "bound", "passed", "tolerance_bound"});
  for (const auto& c : s.checks)
    csv.add_row({c.module, c.name, format_number(c.value), format_number(c.bound), c.passed ? "true" : "false",
                 c.tolerance_bound ? "true" : "false"});
  emit(cfg, cfg.format == "csv" ? csv.str() : dump_json(doc),
       std::to_string(s.passed()) + " passed, " + std::to_string(s.failed()) + " failed");
  return s.ok() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Screw-motion sub-Riemannian systems: controllability, geodesics and verification"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto model_options = [&](CLI::App* sub) {
    auto* group = sub->add_option("--group", cfg.group, "compact group, e.g. SU2, SO:3, Sp(2)");
    auto* octo = sub->add_flag("--octonion", cfg.octonion, "octonionic system on R^7 x| SO(7)");
    auto* sf = sub->add_flag("--space-form", cfg.space_form, "4 x 4 space-form model");
    group->excludes(octo)->excludes(sf);
    octo->excludes(sf);
    sub->add_option("--k", cfg.k, "curvature sign k in {1,-1,0}");
    sub->add_option("--kappa", cfg.kappa, "space-form curvature in {1,-1,0}");
  };
  auto output_options = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out, "output file (default: stdout)");
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--tol", cfg.tol, "tolerance override")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "random seed");
  };

  auto* ctrl = app.add_subcommand("controllability", "rank of the bracket-generating set");
  model_options(ctrl);
  output_options(ctrl);
  ctrl->add_option("--lambda", cfg.lambda, "pitch");
  ctrl->add_option("--lambda-grid", cfg.lambda_grid, "'default' or a comma-separated list");

  auto* geo = app.add_subcommand("geodesic", "sample and certify a geodesic");
  model_options(geo);
  output_options(geo);
  geo->add_option("--lambda", cfg.lambda, "pitch")->required();
  geo->add_option("--t-max", cfg.t_max, "end of the time grid");
  geo->add_option("--samples", cfg.samples, "number of grid points");
  geo->add_option("--x", cfg.x_text, "horizontal vector (comma-separated, octonion or space form)");
  geo->add_option("--y", cfg.y_text, "vertical vector (comma-separated, octonion or space form)");
  geo->add_flag("--commuting", cfg.commuting, "use a vertical part commuting with the horizontal one");

  auto* ver = app.add_subcommand("verify-all", "run every identity suite");
  output_options(ver);
  ver->add_option("--geodesic-specs", cfg.geodesic_specs, "seeded pairs per admissible (K, k, lambda)");
  ver->add_flag("--inject-table-typo", cfg.inject_table_typo)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (ctrl->parsed()) return cmd_controllability(cfg);
    if (geo->parsed()) return cmd_geodesic(cfg);
    return cmd_verify_all(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: precondition violated: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}
