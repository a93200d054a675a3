#ifndef HANKELND_CLI_HPP
#define HANKELND_CLI_HPP

// Command-line front end. run_cli takes the arguments after the program name
// and returns the exit status: 0 success, 1 failed verification, 2 usage or
// configuration error.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hankelnd/bessel.hpp"
#include "hankelnd/errors.hpp"
#include "hankelnd/hankel.hpp"
#include "hankelnd/io.hpp"
#include "hankelnd/tensor.hpp"
#include "hankelnd/verify.hpp"

namespace hankelnd {

struct CliConfig {
  std::string subcommand;
  std::string family = "bessel";
  std::string orders;
  std::optional<std::size_t> n;
  std::optional<double> radius;
  std::string scale;
  std::string point;
  std::string in;
  std::string out;
  std::string format = "csv";
  std::string suite = "all";
  std::optional<double> tol;
  std::uint64_t seed = 0;
  double order = 0.0;
  int count = 1;
  double c = -1.0;
  bool inverse = false;
};

namespace detail {

/// Thrown for any user-facing configuration problem; maps to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline int log_level() {
  const char* v = std::getenv("HANKEL_ND_LOG");
  if (!v) return 0;
  const std::string s(v);
  if (s == "debug" || s == "2") return 2;
  if (s == "info" || s == "1") return 1;
  return 0;
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(',', start);
    out.push_back(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

inline double to_number(const std::string& token, const char* what) {
  double v = 0.0;
  if (!parse_double(token, v)) throw ConfigError(std::string("bad number '") + token + "' in " + what);
  return v;
}

inline std::vector<double> number_list(const std::string& s, const char* what) {
  std::vector<double> out;
  for (const auto& t : split_list(s)) out.push_back(to_number(t, what));
  return out;
}

inline Family parse_family(const std::string& s) {
  for (Family f : {Family::bessel_first, Family::bessel_second, Family::spherical_first, Family::spherical_second,
                   Family::legendre}) {
    if (s == family_name(f)) return f;
  }
  throw ConfigError("unknown family '" + s + "'");
}

/// Orders as "nu1,nu2,..." or, for legendre, "l1:m1,l2:m2,...".
inline MultiOrder parse_orders(Family family, const std::string& s) {
  const auto tokens = split_list(s);
  if (tokens.empty()) throw ConfigError("--orders is required");
  if (family == Family::legendre) {
    std::vector<LegendreIndex> idx;
    for (const auto& t : tokens) {
      const auto colon = t.find(':');
      if (colon == std::string::npos) throw ConfigError("legendre orders are l:m, got '" + t + "'");
      const double l = to_number(t.substr(0, colon), "--orders");
      const double m = to_number(t.substr(colon + 1), "--orders");
      if (l != std::floor(l) || m != std::floor(m)) throw ConfigError("legendre l and m must be integers");
      idx.emplace_back(static_cast<int>(l), static_cast<int>(m));
    }
    return MultiOrder(idx);
  }
  std::vector<Order> o;
  for (double nu : number_list(s, "--orders")) o.emplace_back(nu);
  return MultiOrder(family, o);
}

inline std::vector<Order> radial_orders(const std::string& s) {
  std::vector<Order> o;
  for (double nu : number_list(s, "--orders")) o.emplace_back(nu);
  if (o.empty()) throw ConfigError("--orders is required");
  return o;
}

inline Format parse_format(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw ConfigError("unknown format '" + s + "'");
}

inline void emit(const SampledField& field, const CliConfig& cfg, std::ostream& out) {
  const Format format = parse_format(cfg.format);
  if (!cfg.out.empty()) {
    write_field(field, cfg.out, format);
  } else if (format == Format::csv) {
    write_csv(field, out);
  } else {
    write_json(field, out);
  }
}

/// Per-axis linear interpolation weights of `targets` within `axis`; values
/// outside the sampled range are clamped to the end samples.
struct Stencil {
  std::vector<std::size_t> lo;
  std::vector<double> w;
};

inline Stencil stencil(const std::vector<double>& axis, const std::vector<double>& targets) {
  Stencil s;
  for (double t : targets) {
    if (axis.size() == 1 || t <= axis.front()) {
      s.lo.push_back(0);
      s.w.push_back(0.0);
      continue;
    }
    if (t >= axis.back()) {
      s.lo.push_back(axis.size() - 2);
      s.w.push_back(1.0);
      continue;
    }
    const auto it = std::upper_bound(axis.begin(), axis.end(), t);
    const auto i = static_cast<std::size_t>(it - axis.begin()) - 1;
    s.lo.push_back(i);
    s.w.push_back((t - axis[i]) / (axis[i + 1] - axis[i]));
  }
  return s;
}

inline bool same_axes(const TensorGrid& a, const TensorGrid& b) {
  if (a.dims() != b.dims()) return false;
  for (std::size_t j = 0; j < a.dims(); ++j) {
    if (a.axis(j).size() != b.axis(j).size()) return false;
    const double tol = 1e-12 * std::max(1.0, std::abs(b.axis(j).back()));
    for (std::size_t i = 0; i < a.axis(j).size(); ++i) {
      if (std::abs(a.axis(j)[i] - b.axis(j)[i]) > tol) return false;
    }
  }
  return true;
}

/// Multilinear resampling of a profile onto `target`. A profile already on
/// the target grid is passed through unchanged.
inline SampledField resample(const SampledField& field, const TensorGrid& target) {
  const TensorGrid& src = field.grid();
  if (src.dims() != target.dims()) {
    throw ConfigError("input has " + std::to_string(src.dims()) + " coordinate columns but --orders gives " +
                      std::to_string(target.dims()));
  }
  if (same_axes(src, target)) return SampledField(target, field.values());
  std::vector<Stencil> st;
  for (std::size_t j = 0; j < src.dims(); ++j) st.push_back(stencil(src.axis(j), target.axis(j)));
  const auto strides = src.strides();
  const std::size_t dims = src.dims();
  std::vector<double> out(target.size());
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    const auto idx = target.unravel(flat);
    double total = 0.0;
    for (std::size_t corner = 0; corner < (std::size_t{1} << dims); ++corner) {
      double weight = 1.0;
      std::size_t at = 0;
      for (std::size_t j = 0; j < dims; ++j) {
        const bool upper = (corner >> j) & 1U;
        const double w = st[j].w[idx[j]];
        weight *= upper ? w : 1.0 - w;
        std::size_t i = st[j].lo[idx[j]] + (upper ? 1 : 0);
        i = std::min(i, src.axis(j).size() - 1);
        at += i * strides[j];
      }
      if (weight != 0.0) total += weight * field[at];
    }
    out[flat] = total;
  }
  return SampledField(target, std::move(out));
}

inline NDPlan plan_for(const std::vector<Order>& orders, std::size_t n, double radius) {
  if (n < 4) throw ConfigError("--n must be at least 4");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw ConfigError("--radius must be positive");
  return NDPlan(orders, n, radius);
}

inline int cmd_eval(const CliConfig& cfg, std::ostream& out) {
  const Family family = parse_family(cfg.family);
  const MultiOrder order = parse_orders(family, cfg.orders);
  const auto scale = number_list(cfg.scale, "--scale");
  if (!scale.empty() && scale.size() != order.size()) throw ConfigError("--scale length does not match --orders");
  if (!cfg.point.empty()) {
    const auto p = number_list(cfg.point, "--point");
    if (p.size() != order.size()) throw ConfigError("--point length does not match --orders");
    out << format_shortest(eval_product(order, p, scale)) << '\n';
    return 0;
  }
  const std::size_t n = cfg.n.value_or(32);
  if (n < 2) throw ConfigError("--n must be at least 2");
  std::vector<std::vector<double>> axes;
  for (std::size_t j = 0; j < order.size(); ++j) {
    if (family == Family::legendre) {
      axes.push_back(TensorGrid::linspace(-1.0, 1.0, n));
    } else {
      const double r = cfg.radius.value_or(10.0);
      if (!(r > 0.0)) throw ConfigError("--radius must be positive");
      axes.push_back(TensorGrid::linspace(r / static_cast<double>(n), r, n));
    }
  }
  emit(eval_on_grid(order, TensorGrid(axes), scale), cfg, out);
  return 0;
}

inline int cmd_zeros(const CliConfig& cfg, std::ostream& out) {
  if (cfg.count < 1) throw ConfigError("--count must be at least 1");
  for (double z : bessel_zeros(Order(cfg.order), cfg.count)) out << format_shortest(z) << '\n';
  return 0;
}

inline double largest_coordinate(const TensorGrid& g) {
  double r = 0.0;
  for (std::size_t j = 0; j < g.dims(); ++j) r = std::max(r, g.axis(j).back());
  return r;
}

inline int cmd_transform(const CliConfig& cfg, std::ostream& out, std::ostream& err, int verbosity) {
  if (cfg.in.empty()) throw ConfigError("transform needs --in");
  const SampledField input = read_profile(cfg.in);
  const auto orders = radial_orders(cfg.orders);
  const double radius = cfg.radius.value_or(largest_coordinate(input.grid()));
  const NDPlan plan = plan_for(orders, cfg.n.value_or(128), radius);
  const TensorGrid from = cfg.inverse ? plan.frequency_grid() : plan.sample_grid();
  const SampledField src = resample(input, from);
  if (verbosity >= 1) {
    err << "[hankel-nd] " << (cfg.inverse ? "inverse" : "forward") << " transform, " << plan.dims()
        << " axes, N=" << plan.axis(0).size() << " R=" << radius << '\n';
  }
  emit(cfg.inverse ? inverse_nd(plan, src) : forward_nd(plan, src), cfg, out);
  return 0;
}

/// Separable Helmholtz problem (sum_j L_j + c) u = rhs. The right-hand side is
/// --in, or exp(-|r|^2) by default. The residual summary evaluates
/// (sum_j L_j + c) u through the Fourier-Bessel series of u at the samples.
inline int cmd_solve(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto orders = radial_orders(cfg.orders);
  std::optional<SampledField> input;
  if (!cfg.in.empty()) input = read_profile(cfg.in);
  const double radius = cfg.radius.value_or(input ? largest_coordinate(input->grid()) : 12.0);
  const NDPlan plan = plan_for(orders, cfg.n.value_or(64), radius);
  const TensorGrid g = plan.sample_grid();
  SampledField rhs = [&] {
    if (input) return resample(*input, g);
    std::vector<double> v(g.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      double r2 = 0.0;
      for (double x : g.point(i)) r2 += x * x;
      v[i] = std::exp(-r2);
    }
    return SampledField(g, std::move(v));
  }();
  const SampledField u = solve_helmholtz_separable(plan, rhs, cfg.c);

  SampledField spectrum = forward_nd(plan, u);
  std::vector<double> applied = spectrum.values();
  for (std::size_t flat = 0; flat < applied.size(); ++flat) {
    double sum = 0.0;
    for (double k : spectrum.grid().point(flat)) sum += k * k;
    applied[flat] *= cfg.c - sum;
  }
  const SampledField lu = synthesize_nd(plan, SampledField(spectrum.grid(), std::move(applied)), g);
  double e = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    e = std::max(e, std::abs(lu[i] - rhs[i]));
    scale = std::max(scale, std::abs(rhs[i]));
  }
  emit(u, cfg, out);
  err << "residual max_abs=" << format_shortest(e) << " relative=" << format_shortest(scale > 0 ? e / scale : e)
      << '\n';
  return 0;
}

inline int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err, int verbosity) {
  VerifyConfig vc;
  vc.seed = cfg.seed;
  vc.n = cfg.n.value_or(128);
  vc.radius = cfg.radius.value_or(12.0);
  vc.tolerance = cfg.tol;
  if (vc.n < 4) throw ConfigError("--n must be at least 4");
  if (!(vc.radius > 0.0) || !std::isfinite(vc.radius)) throw ConfigError("--radius must be positive");
  if (vc.tolerance && !(*vc.tolerance > 0.0)) throw ConfigError("--tol must be positive");
  const std::vector<std::string> names = cfg.suite == "all" ? check_names() : split_list(cfg.suite);
  const auto known = check_names();
  for (const auto& n : names) {
    if (std::find(known.begin(), known.end(), n) == known.end()) throw ConfigError("unknown check '" + n + "'");
  }
  std::vector<CheckResult> results;
  for (const auto& n : names) {
    const auto t0 = std::chrono::steady_clock::now();
    results.push_back(run_check(n, vc));
    if (verbosity >= 1) {
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      err << "[hankel-nd] " << n << ": " << (results.back().pass ? "pass" : "FAIL") << " (" << ms << " ms)\n";
    }
  }
  const std::string report = report_json(vc, results).dump(2);
  if (!cfg.out.empty()) {
    std::ofstream f(cfg.out);
    if (!f) throw ConfigError("cannot open " + cfg.out + " for writing");
    f << report << '\n';
  } else {
    out << report << '\n';
  }
  return all_pass(results) ? 0 : 1;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Multivariate Bessel functions and Hankel transforms", "hankel-nd"};
  app.require_subcommand(1, 1);

  auto* eval = app.add_subcommand("eval", "Evaluate a product function at a point or on a grid");
  auto* zeros = app.add_subcommand("zeros", "List positive zeros of J_nu");
  auto* transform = app.add_subcommand("transform", "Discrete Hankel transform of a CSV profile");
  auto* verify = app.add_subcommand("verify", "Run the verification checks and print a JSON report");
  auto* solve = app.add_subcommand("solve", "Separable Helmholtz solve by transform-space division");

  const std::vector<std::string> families = {"bessel", "bessel2", "spherical", "spherical2", "legendre"};
  eval->add_option("--family", cfg.family, "Function family")->check(CLI::IsMember(families));
  for (auto* sub : {eval, transform, solve}) {
    sub->add_option("--orders", cfg.orders, "Comma-separated orders (l:m tokens for legendre)")->required();
  }
  eval->add_option("--scale", cfg.scale, "Comma-separated per-axis scales k_j");
  eval->add_option("--point", cfg.point, "Comma-separated evaluation point");
  for (auto* sub : {eval, transform, verify, solve}) sub->add_option("--n", cfg.n, "Points per axis");
  for (auto* sub : {eval, transform, verify, solve}) sub->add_option("--radius", cfg.radius, "Radius R per axis");
  for (auto* sub : {transform, solve}) sub->add_option("--in", cfg.in, "Input CSV profile x_1,...,x_n,value");
  for (auto* sub : {eval, transform, verify, solve}) sub->add_option("--out", cfg.out, "Output path (default stdout)");
  for (auto* sub : {eval, transform, solve}) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  }
  transform->add_flag("--inverse", cfg.inverse, "Input is a spectrum on the frequency grid");
  zeros->add_option("--order", cfg.order, "Order nu >= 0");
  zeros->add_option("--count", cfg.count, "Number of zeros");
  verify->add_option("--suite", cfg.suite, "'all' or a comma-separated list of check names");
  verify->add_option("--tol", cfg.tol, "Tolerance replacing the per-check defaults");
  verify->add_option("--seed", cfg.seed, "Seed for the randomized checks");
  solve->add_option("--c", cfg.c, "Constant c in (sum L_j + c) u = rhs");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  const int verbosity = detail::log_level();
  try {
    if (*eval) return detail::cmd_eval(cfg, out);
    if (*zeros) return detail::cmd_zeros(cfg, out);
    if (*transform) return detail::cmd_transform(cfg, out, err, verbosity);
    if (*solve) return detail::cmd_solve(cfg, out, err);
    return detail::cmd_verify(cfg, out, err, verbosity);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace hankelnd

#endif  // HANKELND_CLI_HPP
