#pragma once

// Command-line front end: `volume`, `ft` and `verify` subcommands.
//
// Every invocation emits one record (schema_version "1"):
//   { "schema_version", "command", "inputs": {...}, "exact": string|null,
//     "value": number|null, "diagnostics": {...} }
// `ft` adds "expression"; `verify` adds "checks": [{name, passed, detail}].
// Text mode prints the same record one field per line, numbers formatted
// exactly as in JSON.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 numerical non-convergence.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nball/nball.hpp"

namespace nball::cli {

inline constexpr const char* kSchemaVersion = "1";

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kNoConvergence = 3 };

using json = nlohmann::ordered_json;

inline json to_json(const DiagnosticValue& v) {
  return std::visit([](const auto& x) { return json(x); }, v);
}

inline json to_json(const Diagnostics& d) {
  json out = json::object();
  for (const auto& [key, value] : d) out[key] = to_json(value);
  return out;
}

inline json make_record(const std::string& command, json inputs) {
  json record = json::object();
  record["schema_version"] = kSchemaVersion;
  record["command"] = command;
  record["inputs"] = std::move(inputs);
  record["exact"] = nullptr;
  record["value"] = nullptr;
  record["diagnostics"] = json::object();
  return record;
}

inline void fill_report(json& record, const VolumeReport& report) {
  if (report.exact) record["exact"] = to_string(*report.exact);
  record["value"] = report.value;
  json diagnostics = to_json(report.diagnostics);
  diagnostics["method"] = to_string(report.method);
  record["diagnostics"] = std::move(diagnostics);
}

inline std::string text_scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

inline void print_text(std::ostream& out, const json& record) {
  for (const auto& [key, value] : record.items()) {
    if (key == "checks") {
      for (const auto& check : value) {
        out << (check["passed"].get<bool>() ? "PASS " : "FAIL ") << check["name"].get<std::string>()
            << "  " << check["detail"].get<std::string>() << "\n";
      }
    } else if (value.is_object()) {
      for (const auto& [sub, v] : value.items()) out << key << "." << sub << ": " << text_scalar(v) << "\n";
    } else if (!value.is_null()) {
      out << key << ": " << text_scalar(value) << "\n";
    }
  }
}

inline void emit(std::ostream& out, const json& record, const std::string& format) {
  if (format == "json") {
    out << record.dump(2) << "\n";
  } else {
    print_text(out, record);
  }
}

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline int integer_dimension(double dim, const std::string& method) {
  if (!(dim >= 1) || dim != std::floor(dim) || dim > 1000) {
    throw usage_error("--method " + method + " needs an integer dimension >= 1");
  }
  return static_cast<int>(dim);
}

// ---------------------------------------------------------------------------

struct VolumeArgs {
  std::optional<double> dim;
  std::string radius = "1";
  std::string method = "closed";
  std::vector<double> eps_list{1e-2, 1e-3, 1e-4};
  std::optional<double> truncation;
  double abs_tol = 1e-8;
  std::size_t max_subdivisions = 100000;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = MonteCarloConfig{}.seed;
  unsigned shards = 1;
  unsigned jobs = 1;
  std::string format = "text";
};

inline int run_volume(const VolumeArgs& a, std::ostream& out) {
  const Radius radius = Radius::parse(a.radius);
  json inputs = json::object();
  if (a.dim) inputs["dim"] = *a.dim;
  inputs["radius"] = a.radius;
  inputs["method"] = a.method;
  json record = make_record("volume", inputs);

  if (a.method == "infinite") {
    if (a.dim) throw usage_error("--method infinite takes no --dim");
    const InfiniteDimTrace t = volume_infinite_dim(radius);
    VolumeReport report = exact_report(INFINITY, radius, Method::infinite_dim, t.volume);
    report.diagnostics["regularized_product"] = to_string(t.regularized_product);
    report.diagnostics["integrand"] = to_string(t.integrand);
    report.diagnostics["limit"] = to_string(t.limit);
    report.diagnostics["zeta_at_zero"] = to_string(zeta_at_zero());
    fill_report(record, report);
    record["inputs"].erase("dim");
    emit(out, record, a.format);
    return kOk;
  }
  if (!a.dim) throw usage_error("--dim is required");
  const double dim = *a.dim;
  if (!std::isfinite(dim)) throw usage_error("--dim must be finite");

  if (a.method == "closed") {
    fill_report(record, volume_closed_form(dim, radius));
  } else if (a.method == "dist") {
    const int n = integer_dimension(dim, a.method);
    fill_report(record, exact_report(n, radius, Method::distributional, volume_distributional(n, radius)));
  } else if (a.method == "quad") {
    const int n = integer_dimension(dim, a.method);
    QuadratureConfig config;
    config.epsilons = a.eps_list;
    config.truncation = a.truncation;
    config.abs_tol = a.abs_tol;
    config.max_subdivisions = a.max_subdivisions;
    config.jobs = a.jobs;
    try {
      fill_report(record, volume_quadrature(n, config, radius));
    } catch (const convergence_error& e) {
      record["value"] = e.best_estimate();
      record["diagnostics"]["method"] = "quadrature";
      record["diagnostics"]["error"] = e.what();
      emit(out, record, a.format);
      return kNoConvergence;
    }
  } else if (a.method == "mc") {
    const int n = integer_dimension(dim, a.method);
    fill_report(record, volume_monte_carlo(n, radius, {a.samples, a.seed, a.shards}));
  }
  emit(out, record, a.format);
  return kOk;
}

// ---------------------------------------------------------------------------

inline int run_ft(double alpha, const std::string& format, std::ostream& out) {
  if (!std::isfinite(alpha)) throw usage_error("--alpha must be finite");
  json inputs = json::object();
  inputs["alpha"] = alpha;
  json record = make_record("ft", inputs);
  const DistExpr expr = ft_powerlaw(alpha);
  record["expression"] = to_string(expr);
  record["diagnostics"]["terms"] = static_cast<std::int64_t>(expr.terms().size());
  bool exact = true;
  for (const auto& t : expr.terms()) exact = exact && t.coefficient.is_exact();
  record["diagnostics"]["exact_coefficients"] = exact;
  emit(out, record, format);
  return kOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  int max_dim = 10;
  double tolerance = 1e-3;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = MonteCarloConfig{}.seed;
  unsigned jobs = 1;
  std::string format = "text";
};

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline std::vector<Check> verification_checks(const VerifyArgs& a) {
  std::vector<Check> checks;
  for (int n = 1; n <= a.max_dim; ++n) {
    const ExactValue dist = volume_distributional(n);
    const ExactValue closed = *volume_closed_form(n).exact;
    checks.push_back({"dist_equals_closed n=" + std::to_string(n), dist == closed,
                      to_string(dist) + " vs " + to_string(closed)});
  }
  QuadratureConfig quad;
  quad.jobs = a.jobs;
  for (int n = 1; n <= std::min(a.max_dim, 6); ++n) {
    const double closed = volume_closed_form(n).value;
    Check c{"quad_matches_closed n=" + std::to_string(n), false, ""};
    try {
      const double v = volume_quadrature(n, quad).value;
      const double rel = std::abs(v - closed) / closed;
      c.passed = rel <= a.tolerance;
      c.detail = "rel_err=" + format_double(rel) + " tol=" + format_double(a.tolerance);
    } catch (const convergence_error& e) {
      c.detail = e.what();
    }
    checks.push_back(c);
  }
  for (int n = 2; n <= std::min(a.max_dim, 8); ++n) {
    const double closed = volume_closed_form(n).value;
    const VolumeReport r = volume_monte_carlo(n, Radius(), {a.samples, a.seed, std::max(1u, a.jobs)});
    const double se = std::get<double>(r.diagnostics.at("stderr"));
    const double dev = std::abs(r.value - closed);
    checks.push_back({"mc_within_3sigma n=" + std::to_string(n), dev <= 3.0 * se,
                      "dev=" + format_double(dev) + " 3se=" + format_double(3.0 * se)});
  }
  {
    double worst = 0;
    for (int twice = 1; twice <= 31; twice += 2) {
      worst = std::max(worst, (appendix_identity(twice / 2.0) - ComplexValue(1.0)).abs());
    }
    checks.push_back({"appendix_identity", worst <= 1e-12, "max_dev=" + format_double(worst)});
  }
  {
    bool ok = double_factorial(-1) == 1 && double_factorial(-3) == -1 &&
              double_factorial(-5) == rational(1, 3);
    for (long long n = 1; n <= 19; n += 2) {
      const ExactRational sign = ((n - 1) / 2) % 2 == 0 ? 1 : -1;
      ok = ok && double_factorial(-n) * double_factorial(n) == sign * n;
    }
    checks.push_back({"double_factorial_identities", ok, "examples and reflection for odd n <= 19"});
  }
  {
    bool ok = true;
    for (int r : {1, 2, 10}) {
      const Radius radius{ExactRational(r)};
      ok = ok && volume_infinite_dim(radius).volume == *volume_closed_form(-1, radius).exact &&
           volume_infinite_dim(radius).volume == ExactValue(rational(1, r), -2);
    }
    checks.push_back({"infinite_dim_equals_closed_minus_one", ok, "r in {1, 2, 10}"});
  }
  return checks;
}

inline int run_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (a.max_dim < 1) throw usage_error("--max-dim must be >= 1");
  if (!(a.tolerance > 0)) throw usage_error("--tolerance must be positive");
  if (a.samples == 0) throw usage_error("--samples must be >= 1");
  json inputs = json::object();
  inputs["max_dim"] = a.max_dim;
  inputs["tolerance"] = a.tolerance;
  inputs["samples"] = a.samples;
  inputs["seed"] = a.seed;
  json record = make_record("verify", inputs);

  const std::vector<Check> checks = verification_checks(a);
  json list = json::array();
  std::int64_t failed = 0;
  for (const auto& c : checks) {
    list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    if (!c.passed) {
      ++failed;
      err << "failed: " << c.name << "\n";
    }
  }
  record["diagnostics"]["checks_total"] = static_cast<std::int64_t>(checks.size());
  record["diagnostics"]["checks_failed"] = failed;
  record["checks"] = std::move(list);
  emit(out, record, a.format);
  return failed == 0 ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------------------

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Volumes of n-balls through distributional Fourier transforms"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "json"};

  VolumeArgs volume;
  auto* vol = app.add_subcommand("volume", "Volume of the n-ball by a chosen method");
  vol->add_option("--dim", volume.dim, "Dimension n (real for --method closed)");
  vol->add_option("--radius", volume.radius, "Radius: integer, decimal or a/b")->capture_default_str();
  vol->add_option("--method", volume.method, "closed | dist | quad | mc | infinite")
      ->check(CLI::IsMember({"closed", "dist", "quad", "mc", "infinite"}))
      ->capture_default_str();
  vol->add_option("--eps-list", volume.eps_list, "Decreasing eps values (quad)")->delimiter(',');
  vol->add_option("--truncation", volume.truncation, "Truncation K (quad; default derived)");
  vol->add_option("--abs-tol", volume.abs_tol, "Absolute tolerance per eps (quad)")->capture_default_str();
  vol->add_option("--max-subdivisions", volume.max_subdivisions, "Bisection budget (quad)")
      ->capture_default_str();
  vol->add_option("--samples", volume.samples, "Sample count (mc)")->capture_default_str();
  vol->add_option("--seed", volume.seed, "Seed (mc)")->capture_default_str();
  vol->add_option("--shards", volume.shards, "Parallel shards (mc)")->capture_default_str();
  vol->add_option("--jobs", volume.jobs, "Worker threads (quad)")->capture_default_str();
  vol->add_option("--format", volume.format, "text | json")->check(CLI::IsMember(formats));

  double alpha = 0;
  std::string ft_format = "text";
  auto* ft = app.add_subcommand("ft", "Distributional Fourier transform of Pf x^alpha");
  ft->add_option("--alpha", alpha, "Exponent alpha")->required();
  ft->add_option("--format", ft_format, "text | json")->check(CLI::IsMember(formats));

  VerifyArgs verify;
  auto* ver = app.add_subcommand("verify", "Run the full cross-check matrix");
  ver->add_option("--max-dim", verify.max_dim, "Largest dimension checked")->capture_default_str();
  ver->add_option("--tolerance", verify.tolerance, "Relative tolerance for quadrature checks")
      ->capture_default_str();
  ver->add_option("--samples", verify.samples, "Monte Carlo samples")->capture_default_str();
  ver->add_option("--seed", verify.seed, "Monte Carlo seed")->capture_default_str();
  ver->add_option("--jobs", verify.jobs, "Worker threads")->capture_default_str();
  ver->add_option("--format", verify.format, "text | json")->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*vol) return run_volume(volume, out);
    if (*ft) return run_ft(alpha, ft_format, out);
    if (*ver) return run_verify(verify, out, err);
  } catch (const usage_error& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const unsupported_expression& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const convergence_error& e) {
    err << "no convergence: " << e.what() << "\n";
    return kNoConvergence;
  }
  return kUsage;
}

}  // namespace nball::cli
