// Command-line front end: global Jensen-gap bounds, weighted integral
// enclosures, and randomized verification campaigns with JSON reports.
//
// Exit codes: 0 = all checks pass, 1 = a mathematical property failed
// (witness in the report), 2 = input or usage error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cvxgap/cvxgap.hpp"

namespace {

using namespace cvxgap;

constexpr double kSnapTol = 1e-6;  // interval snap for fixed-domain kernels

Interval parse_interval(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw ParseError("interval must be 'a,b', got '" + text + "'");
  double a, b;
  if (!detail::parse_double(detail::trim(text.substr(0, comma)), a) ||
      !detail::parse_double(detail::trim(text.substr(comma + 1)), b))
    throw ParseError("interval endpoints must be numeric, got '" + text + "'");
  return Interval(a, b);
}

ConvexFunction build_function(const std::string& spec,
                              const std::optional<Interval>& interval,
                              bool require_convex) {
  auto need_interval = [&]() -> Interval {
    if (!interval) throw ParameterError("--interval a,b is required for --fn " + spec);
    return *interval;
  };
  if (spec == "square") return make_square(need_interval());
  if (spec == "exp") return make_exp(need_interval());
  if (spec == "neglog") return make_neglog(need_interval());
  if (spec.rfind("abs_shift:", 0) == 0) {
    double c;
    if (!detail::parse_double(spec.substr(10), c))
      throw ParseError("abs_shift expects a numeric shift, got '" + spec + "'");
    return make_abs_shift(need_interval(), c);
  }
  if (spec.rfind("quad_hinge:", 0) == 0) {
    double seed;
    if (!detail::parse_double(spec.substr(11), seed) || seed < 0)
      throw ParseError("quad_hinge expects a nonnegative seed, got '" + spec + "'");
    ConvexGeneratorSpec gen;
    gen.seed = static_cast<std::uint64_t>(seed);
    return generate_convex(gen, need_interval());
  }
  if (spec.rfind("file:", 0) == 0) {
    const std::string path = spec.substr(5);
    XYSamples samples = read_xy_csv(path);
    ConvexFunction f =
        make_piecewise_linear(std::move(samples.xs), std::move(samples.ys), spec);
    if (require_convex && f.certificate() != Certificate::ProvablyConvex)
      throw ConstraintError("'" + path + "' fails the nondecreasing-slope certificate");
    return f;
  }
  throw ParameterError("unknown function '" + spec +
                       "' (expected square|exp|abs_shift:<c>|neglog|quad_hinge:<seed>|file:<path>)");
}

bool is_fixed_domain_kernel(const std::string& name) {
  return name == "sine" || name == "sinpluscos";
}

Interval canonical_kernel_domain(const std::string& name) {
  return name == "sine" ? Interval(0, std::numbers::pi)
                        : Interval(0, std::numbers::pi / 2);
}

Kernel build_kernel(const std::string& name, const Interval& domain) {
  if (name == "uniform") return uniform_kernel(domain);
  if (name == "loglimit") return log_limit_kernel(domain);
  if (name == "sine") return sine_kernel(SineVariant::FullSine);
  if (name == "sinpluscos") return sine_kernel(SineVariant::SinPlusCos);
  if (name.rfind("power:", 0) == 0) {
    double alpha;
    if (!detail::parse_double(name.substr(6), alpha))
      throw ParseError("power kernel expects a numeric alpha, got '" + name + "'");
    return power_kernel(domain, alpha);
  }
  if (name.rfind("file:", 0) == 0) {
    XYSamples samples = read_xy_csv(name.substr(5));
    return kernel_from_samples(std::move(samples.xs), std::move(samples.ys), name);
  }
  throw ParameterError("unknown kernel '" + name +
                       "' (expected uniform|power:<alpha>|loglimit|sine|sinpluscos|file:<path>)");
}

void emit(const std::string& json, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << json << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ParseError("cannot open output file '" + out_path + "'");
  out << json << "\n";
}

struct CommonOpts {
  std::string fn;
  std::string interval_text;
  std::string out_path;
  double atol = 1e-9;
  double rtol = 1e-9;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool fn_required) {
  auto* fn = cmd->add_option("--fn", o.fn,
                             "square|exp|abs_shift:<c>|neglog|quad_hinge:<seed>|file:<path>");
  if (fn_required) fn->required();
  cmd->add_option("--interval", o.interval_text, "domain endpoints 'a,b'");
  cmd->add_option("--atol", o.atol, "absolute inequality slack");
  cmd->add_option("--rtol", o.rtol, "relative inequality slack");
  cmd->add_option("--out", o.out_path, "write the JSON report here instead of stdout");
}

std::optional<Interval> parse_optional_interval(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_interval(text);
}

int cmd_bounds(const CommonOpts& o, double tol_p) {
  const Tolerance tol{o.atol, o.rtol};
  const ConvexFunction f =
      build_function(o.fn, parse_optional_interval(o.interval_text), true);
  const BoundReport r = t_opt(f, tol_p);
  const bool dominance = tol.leq(r.t_opt, r.t_prime);
  JsonWriter w;
  w.begin_object();
  w.key("t_opt").value(r.t_opt);
  w.key("t_prime").value(r.t_prime);
  w.key("argmax_p").value(r.argmax_p);
  w.key("dominance").value(dominance);
  w.end_object();
  emit(w.str(), o.out_path);
  return dominance ? 0 : 1;
}

int cmd_enclose(const CommonOpts& o, const std::string& kernel_name, bool normalized) {
  const Tolerance tol{o.atol, o.rtol};
  std::optional<Interval> interval = parse_optional_interval(o.interval_text);

  if (is_fixed_domain_kernel(kernel_name)) {
    // these kernels live on a fixed interval; snap a near-miss request
    const Interval canon = canonical_kernel_domain(kernel_name);
    if (interval && (std::abs(interval->a() - canon.a()) > kSnapTol ||
                     std::abs(interval->b() - canon.b()) > kSnapTol))
      throw DomainMismatchError("kernel '" + kernel_name + "' is defined on [" +
                                std::to_string(canon.a()) + ", " + std::to_string(canon.b()) +
                                "]");
    if (o.fn.rfind("file:", 0) != 0) interval = canon;
  }

  const ConvexFunction f = build_function(o.fn, interval, true);
  const Kernel g = build_kernel(kernel_name, f.domain());
  Enclosure e = weighted_enclosure(f, g);
  const bool holds = e.holds(tol);
  if (normalized) e = e.normalized();
  JsonWriter w;
  w.begin_object();
  w.key("lower").value(e.lower);
  w.key("middle").value(e.middle);
  w.key("upper").value(e.upper);
  w.key("kernel_mass").value(e.kernel_mass);
  w.key("holds").value(holds);
  w.end_object();
  emit(w.str(), o.out_path);
  return holds ? 0 : 1;
}

int cmd_verify(const CommonOpts& o, const std::string& campaign_name, int count,
               std::uint64_t seed, int grid_n, int draws, int n_p) {
  CampaignConfig cfg;
  cfg.kind = campaign_from_name(campaign_name);
  cfg.count = count;
  cfg.seed = seed;
  cfg.tol = Tolerance{o.atol, o.rtol};
  cfg.grid_n = grid_n;
  cfg.draws = draws;
  cfg.n_p = n_p;
  if (!o.fn.empty())
    cfg.fn = build_function(o.fn, parse_optional_interval(o.interval_text), false);
  const CampaignOutcome outcome = run_campaign(cfg);
  emit(outcome.json, o.out_path);
  return outcome.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"convex gap functionals, global Jensen-gap bounds, and weighted integral enclosures"};
  app.require_subcommand(1);

  CommonOpts bounds_opts;
  double tol_p = 1e-10;
  CLI::App* bounds_cmd = app.add_subcommand("bounds", "global Jensen-gap bounds T and T'");
  add_common(bounds_cmd, bounds_opts, true);
  bounds_cmd->add_option("--tol-p", tol_p, "golden-section bracket tolerance");

  CommonOpts enclose_opts;
  std::string kernel_name;
  bool normalized = false;
  CLI::App* enclose_cmd =
      app.add_subcommand("enclose", "weighted integral enclosure for a kernel");
  add_common(enclose_cmd, enclose_opts, true);
  enclose_cmd->add_option("--kernel", kernel_name, "uniform|power:<alpha>|loglimit|sine|sinpluscos|file:<path>")
      ->required();
  enclose_cmd->add_flag("--normalized", normalized, "divide the chain by the kernel mass");

  CommonOpts verify_opts;
  std::string campaign_name;
  int count = 50;
  std::uint64_t seed = 0;
  int grid_n = 101, draws = 1000, n_p = 10000;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "randomized verification campaign with JSON report");
  verify_cmd->add_option("campaign", campaign_name, "prop-x|prop-z|lemma1|chain4|hh|remark3")
      ->required();
  add_common(verify_cmd, verify_opts, false);
  verify_cmd->add_option("--count", count, "number of generated functions");
  verify_cmd->add_option("--seed", seed, "campaign master seed");
  verify_cmd->add_option("--grid-n", grid_n, "grid resolution for scans");
  verify_cmd->add_option("--draws", draws, "random draws per function");
  verify_cmd->add_option("--n-p", n_p, "p-average resolution for hh");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (bounds_cmd->parsed()) return cmd_bounds(bounds_opts, tol_p);
    if (enclose_cmd->parsed()) return cmd_enclose(enclose_opts, kernel_name, normalized);
    return cmd_verify(verify_opts, campaign_name, count, seed, grid_n, draws, n_p);
  } catch (const CrossCheckError& e) {
    std::cerr << "{\"error\":\"" << e.what() << "\"}\n";
    return 1;
  } catch (const ConvergenceError& e) {
    std::cerr << "{\"error\":\"" << e.what() << "\"}\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "{\"error\":\"" << e.what() << "\"}\n";
    return 2;
  }
}
