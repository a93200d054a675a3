#ifndef HANKELND_VERIFY_HPP
#define HANKELND_VERIFY_HPP

// Named numerical checks of the identities the library implements. Each
// check returns a normalized residual compared against a tolerance.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "hankelnd/bessel.hpp"
#include "hankelnd/errors.hpp"
#include "hankelnd/hankel.hpp"
#include "hankelnd/operators.hpp"
#include "hankelnd/tensor.hpp"

namespace hankelnd {

struct VerifyConfig {
  std::uint64_t seed = 0;
  std::size_t n = 128;   // transform size for the plan-based checks
  double radius = 12.0;  // transform radius for the plan-based checks
  std::optional<double> tolerance;  // replaces every overridable tolerance
};

struct CheckResult {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string error;  // set when the check threw
};

namespace detail {

inline const double kCylOrders[] = {0.0, 0.5, 1.0, 2.0, 3.7};

inline std::vector<double> ode_grid() {
  std::vector<double> x;
  for (int i = 1; i <= 200; ++i) x.push_back(40.0 * i / 200.0);
  return x;
}

inline MultiOrder multi(Family family, const std::vector<double>& nus) {
  std::vector<Order> o;
  for (double nu : nus) o.emplace_back(nu);
  return MultiOrder(family, o);
}

// u'' from u' = (nu/x) u - u_{nu+1}, differentiated once more. Holds for J, Y,
// j and y alike and does not touch the differential equation.
inline double recurrence_second(double nu, double x, const EvalResult& u, const EvalResult& next) {
  return -next.first_derivative - nu / (x * x) * u.value + nu / x * u.first_derivative;
}

inline double check_eq1() {
  double worst = 0.0;
  for (double nu : kCylOrders) {
    for (double x : ode_grid()) {
      const std::pair<EvalResult, EvalResult> cyl[] = {{bessel_j(Order(nu), x), bessel_j(Order(nu + 1), x)},
                                                       {bessel_y(Order(nu), x), bessel_y(Order(nu + 1), x)}};
      for (const auto& [u, next] : cyl) {
        const double d2 = recurrence_second(nu, x, u, next);
        const double res = x * x * d2 + x * u.first_derivative + (x * x - nu * nu) * u.value;
        worst = std::max(worst, std::abs(res) / std::max(1.0, std::abs(u.value) * x * x));
      }
      const std::pair<EvalResult, EvalResult> sph[] = {{spherical_j(Order(nu), x), spherical_j(Order(nu + 1), x)},
                                                       {spherical_y(Order(nu), x), spherical_y(Order(nu + 1), x)}};
      for (const auto& [u, next] : sph) {
        const double d2 = recurrence_second(nu, x, u, next);
        const double res = x * x * d2 + 2.0 * x * u.first_derivative + (x * x - nu * (nu + 1.0)) * u.value;
        worst = std::max(worst, std::abs(res) / std::max(1.0, std::abs(u.value) * x * x));
      }
    }
  }
  // Legendre: u'' by Richardson-extrapolated central differences of u'.
  const double h = 1e-4;
  for (int l = 0; l <= 6; ++l) {
    for (int m = 0; m <= l; ++m) {
      const LegendreIndex idx(l, m);
      auto d1 = [&](double t) { return assoc_legendre(idx, t).first_derivative; };
      for (int i = 0; i <= 90; ++i) {
        const double x = -0.9 + 0.02 * i;
        const auto u = assoc_legendre(idx, x);
        const double c1 = (d1(x + h) - d1(x - h)) / (2 * h);
        const double c2 = (d1(x + h / 2) - d1(x - h / 2)) / h;
        const double d2 = (4 * c2 - c1) / 3;
        const double s = 1.0 - x * x;
        const double res = s * d2 - 2.0 * x * u.first_derivative + (l * (l + 1.0) - m * m / s) * u.value;
        const double scale = std::max({1.0, std::abs(u.value) * l * (l + 1.0), std::abs(u.value) * m * m / s});
        worst = std::max(worst, std::abs(res) / scale);
      }
    }
  }
  return worst;
}

inline const double kPairOrders[] = {0.0, 1.0, 2.0, 0.5};

inline double scaled_residual(Equation eq, const MultiOrder& order, const TensorGrid& grid) {
  const SampledField r = residual(eq, order, grid);
  double worst = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double u = eval_product(order, grid.point(i));
    worst = std::max(worst, std::abs(r[i]) / std::max(1.0, std::abs(u)));
  }
  return worst;
}

inline TensorGrid interior_square(double lo, double hi) {
  const auto ax = TensorGrid::linspace(lo, hi, 20);
  return TensorGrid({ax, ax});
}

// Two-axis Bessel products of the second kind, and the three-axis form with
// general scales, for both kinds.
inline double check_eq2() {
  const TensorGrid g = interior_square(0.1, 12.0);
  double worst = 0.0;
  for (double a : kPairOrders) {
    for (double b : kPairOrders) {
      worst = std::max(worst, scaled_residual(Equation::eq2, multi(Family::bessel_second, {a, b}), g));
    }
  }
  const auto ax = TensorGrid::linspace(0.3, 6.0, 8);
  const TensorGrid g3({ax, ax, ax});
  for (Family f : {Family::bessel_first, Family::bessel_second}) {
    const MultiOrder o = multi(f, {0.0, 1.0, 2.5});
    const std::vector<double> k = {1.0, 2.0, 0.5};
    const SampledField r = residual(Equation::ndim, o, g3, k);
    for (std::size_t i = 0; i < r.size(); ++i) {
      worst = std::max(worst, std::abs(r[i]) / std::max(1.0, std::abs(eval_product(o, g3.point(i), k))));
    }
  }
  return worst;
}

// [D_a + D_b] J_ab + 2 J_ab for the product of first-kind functions.
inline double check_theorem1() {
  const TensorGrid g = interior_square(0.1, 12.0);
  double worst = 0.0;
  for (double a : kPairOrders) {
    for (double b : kPairOrders) {
      const MultiOrder o = multi(Family::bessel_first, {a, b});
      for (std::size_t i = 0; i < g.size(); ++i) {
        const auto p = g.point(i);
        const double lhs = apply_axis_analytic({0, Order(a), Family::bessel_first}, o, p) +
                           apply_axis_analytic({1, Order(b), Family::bessel_first}, o, p);
        const double u = eval_product(o, p);
        worst = std::max(worst, std::abs(lhs + 2.0 * u) / std::max(1.0, std::abs(u)));
      }
    }
  }
  return worst;
}

inline double check_eq4() {
  const TensorGrid g = interior_square(0.1, 12.0);
  double worst = 0.0;
  for (Family f : {Family::spherical_first, Family::spherical_second}) {
    for (double a : kPairOrders) {
      for (double b : kPairOrders) worst = std::max(worst, scaled_residual(Equation::eq4, multi(f, {a, b}), g));
    }
  }
  return worst;
}

inline double check_eq7() {
  const TensorGrid g = interior_square(-0.95, 0.95);
  double worst = 0.0;
  for (int l1 = 0; l1 <= 3; ++l1) {
    for (int l2 = 0; l2 <= 3; ++l2) {
      for (int m1 = 0; m1 <= l1; ++m1) {
        for (int m2 = 0; m2 <= l2; ++m2) {
          const MultiOrder o({LegendreIndex(l1, m1), LegendreIndex(l2, m2)});
          const SampledField r = residual(Equation::eq7, o, g);
          for (std::size_t i = 0; i < r.size(); ++i) {
            const double u = std::abs(eval_product(o, g.point(i)));
            worst = std::max(worst, std::abs(r[i]) / std::max(1.0, u * (l1 * (l1 + 1.0) + l2 * (l2 + 1.0))));
          }
        }
      }
    }
  }
  return worst;
}

inline double check_eq10() {
  double worst = 0.0;
  const TensorGrid g({ode_grid()});
  for (Family f : {Family::bessel_first, Family::bessel_second}) {
    for (double nu : kCylOrders) {
      const MultiOrder o = multi(f, {nu});
      const SampledField r = residual(Equation::eq10, o, g);
      for (std::size_t i = 0; i < r.size(); ++i) {
        const double x = g.axis(0)[i];
        worst = std::max(worst, std::abs(r[i]) / std::max(1.0, std::abs(eval_product(o, {x})) * x * x));
      }
    }
  }
  return worst;
}

inline double check_eq13() {
  double worst = 0.0;
  for (double nu : {0.0, 1.0, 2.0}) {
    const MultiOrder o = multi(Family::bessel_first, {nu});
    for (double k : {0.5, 1.0, 2.0, 5.0}) {
      for (int i = 1; i <= 50; ++i) {
        const double r = 0.2 * i;
        const double lhs = apply_axis_analytic({0, Order(nu), Family::bessel_first}, o, {r}, {k});
        const double u = bessel_j(Order(nu), k * r).value;
        worst = std::max(worst, std::abs(lhs + k * k * u) / std::max(1.0, k * k));
      }
    }
  }
  return worst;
}

inline double check_iterate() {
  double worst = 0.0;
  for (double nu : kCylOrders) {
    for (double k : {0.5, 1.0, 2.0, 5.0}) {
      for (double r : {0.3, 1.0, 2.7, 8.0}) {
        const double u = bessel_j(Order(nu), k * r).value;
        for (int m = 0; m <= 4; ++m) {
          const double want = std::pow(-k * k, m) * u;
          worst = std::max(worst, std::abs(apply_iterated(Order(nu), k, r, m) - want) / std::abs(want));
        }
      }
    }
  }
  return worst;
}

inline OperatorPolynomial random_polynomial(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> count_dist(1, 5), degree_dist(0, 3);
  std::uniform_real_distribution<double> coeff(-5.0, 5.0);
  std::vector<OperatorPolynomial::Term> terms;
  std::vector<std::vector<int>> used;
  const int count = count_dist(rng);
  for (int attempt = 0; attempt < 50 && static_cast<int>(terms.size()) < count; ++attempt) {
    std::vector<int> e(n, 0);
    int budget = degree_dist(rng);
    for (std::size_t j = 0; j < n && budget > 0; ++j) {
      e[j] = std::uniform_int_distribution<int>(0, budget)(rng);
      budget -= e[j];
    }
    if (std::find(used.begin(), used.end(), e) != used.end()) continue;
    used.push_back(e);
    terms.push_back({coeff(rng), e});
  }
  return OperatorPolynomial(n, terms);
}

// 20 random polynomials in up to three commuting axis operators, degree <= 3.
inline double check_theorem2(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dims(1, 3), half(0, 3);
  std::uniform_real_distribution<double> kd(0.3, 3.0), rd(0.2, 6.0);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = static_cast<std::size_t>(dims(rng));
    const OperatorPolynomial poly = random_polynomial(rng, n);
    std::vector<double> nus, k, r, t;
    for (std::size_t j = 0; j < n; ++j) {
      nus.push_back(0.5 * half(rng));
      k.push_back(kd(rng));
      r.push_back(rd(rng));
      t.push_back(-k.back() * k.back());
    }
    for (Family f : {Family::bessel_first, Family::bessel_second, Family::spherical_first}) {
      const MultiOrder o = multi(f, nus);
      const double want = poly.evaluate(t) * eval_product(o, r, k);
      worst = std::max(worst, std::abs(apply_polynomial(poly, o, r, k) - want) / (1.0 + std::abs(want)));
    }
  }
  return worst;
}

inline std::vector<std::size_t> discrete_sizes(std::size_t n) {
  std::vector<std::size_t> sizes = {32, 64, 256};
  if (std::find(sizes.begin(), sizes.end(), n) == sizes.end()) sizes.push_back(n);
  return sizes;
}

inline double check_eq14_discrete(std::size_t n, double radius) {
  double worst = 0.0;
  for (double nu : {0.0, 1.0, 2.0}) {
    for (std::size_t size : discrete_sizes(n)) {
      worst = std::max(worst, HankelPlan(Order(nu), size, radius).involution_defect());
    }
  }
  return worst;
}

inline double check_inverse(std::size_t n, double radius, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  double worst = 0.0;
  for (double nu : {0.0, 1.0, 2.0}) {
    for (std::size_t size : discrete_sizes(n)) {
      const HankelPlan plan(Order(nu), size, radius);
      std::vector<double> x(size);
      for (auto& v : x) v = unit(rng);
      const auto back = plan.inverse(plan.forward(x));
      for (std::size_t i = 0; i < size; ++i) worst = std::max(worst, std::abs(back[i] - x[i]));
    }
  }
  return worst;
}

inline std::vector<double> sample(const HankelPlan& plan, const std::function<double(double)>& f) {
  std::vector<double> out;
  for (double r : plan.sample_points()) out.push_back(f(r));
  return out;
}

inline double check_gaussian() {
  const HankelPlan plan(Order(0), 256, 12.0);
  const auto out = plan.forward(sample(plan, [](double r) { return std::exp(-r * r / 2); }));
  double worst = 0.0;
  for (std::size_t m = 0; m < plan.size() && plan.frequency_points()[m] <= 6.0; ++m) {
    const double want = std::exp(-plan.frequency_points()[m] * plan.frequency_points()[m] / 2);
    worst = std::max(worst, std::abs(out[m] - want) / want);
  }
  return worst;
}

// r^p exp(-a r^2) and its radial operator of order nu, in closed form.
inline double check_eq12(std::size_t n, double radius) {
  double worst = 0.0;
  for (double nu : {0.0, 1.0, 2.0}) {
    const HankelPlan plan(Order(nu), n, radius);
    const std::pair<double, double> profiles[] = {{nu, 1.0}, {nu, 0.5}, {nu + 2, 1.0}, {nu, 2.0}, {nu + 4, 1.5}};
    for (const auto& [p, a] : profiles) {
      auto f = [p = p, a = a](double r) { return std::pow(r, p) * std::exp(-a * r * r); };
      auto lf = [p = p, a = a, nu](double r) {
        return ((p * p - nu * nu) * std::pow(r, p - 2) - 4 * a * (p + 1) * std::pow(r, p) +
                4 * a * a * std::pow(r, p + 2)) *
               std::exp(-a * r * r);
      };
      worst = std::max(worst, verify_derivative_property(plan, sample(plan, f), sample(plan, lf)).max_relative_error);
    }
  }
  return worst;
}

inline double check_orthogonality(OrthogonalityFamily family, double u, double v) {
  double worst = 0.0;
  for (double nu : {0.0, 1.0}) worst = std::max(worst, std::abs(verify_orthogonality(family, Order(nu), u, v, 200.0)));
  return worst;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double e = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) e = std::max(e, std::abs(a[i] - b[i]));
  return e;
}

// Separable product: n-D transform vs outer product of 1-D transforms, and
// independence of the axis processing order.
inline double check_eq17(std::size_t n, double radius) {
  const std::size_t size = std::min<std::size_t>(n, 64);
  const NDPlan plan({Order(0), Order(1)}, size, radius);
  const auto s1 = sample(plan.axis(0), [](double r) { return std::exp(-r * r); });
  const auto s2 = sample(plan.axis(1), [](double r) { return r * std::exp(-0.7 * r * r); });
  const SampledField f(plan.sample_grid(), outer_product({s1, s2}));
  const auto out = forward_nd(plan, f);
  const auto want = outer_product({plan.axis(0).forward(s1), plan.axis(1).forward(s2)});
  double scale = 0.0;
  for (double w : want) scale = std::max(scale, std::abs(w));
  double worst = max_abs_diff(out.values(), want) / scale;
  worst = std::max(worst, max_abs_diff(forward_nd(plan, f, {1, 0}).values(), out.values()) / scale);
  return worst;
}

// Error ratio of the numeric operator at a point as the step halves; the
// residual is the largest distance of the ratio from 4.
inline double check_fd_convergence() {
  const MultiOrder o = multi(Family::bessel_first, {1.0});
  const AxisOperator op{0, Order(1.0), Family::bessel_first};
  const double x0 = 3.0, k = 1.3;
  const double exact = apply_axis_analytic(op, o, {x0}, {k});
  auto error = [&](double h) {
    std::vector<double> x;
    for (int i = -20; i <= 20; ++i) x.push_back(x0 + i * h);
    const SampledField d = apply_axis_numeric(op, eval_on_grid(o, TensorGrid({x}), {k}), h);
    return std::abs(d[20] - exact);
  };
  double worst = 0.0;
  for (double h : {0.08, 0.04, 0.02}) worst = std::max(worst, std::abs(error(h) / error(h / 2) - 4.0));
  return worst;
}

// Discrete basis mode (inverse transform of a unit spectrum) as the right-hand
// side of the separable Helmholtz problem; the solver must return it scaled.
inline double check_helmholtz_mode(std::size_t n, double radius) {
  const std::size_t size = std::min<std::size_t>(n, 64);
  const NDPlan plan({Order(0), Order(2)}, size, radius);
  const double c = -1.5;
  const std::size_t m1 = 2, m2 = 7;
  std::vector<double> unit(size * size, 0.0);
  unit[m1 * size + m2] = 1.0;
  const SampledField mode = inverse_nd(plan, SampledField(plan.frequency_grid(), unit));
  const double k1 = plan.axis(0).frequency_points()[m1], k2 = plan.axis(1).frequency_points()[m2];
  std::vector<double> rhs = mode.values();
  for (double& v : rhs) v *= c - k1 * k1 - k2 * k2;
  const SampledField u = solve_helmholtz_separable(plan, SampledField(plan.sample_grid(), rhs), c);
  return max_abs_diff(u.values(), mode.values());
}

// Gaussian right-hand side: the solution is resynthesized on a uniform grid
// and the operator applied by finite differences.
inline double check_helmholtz_gaussian(std::size_t n, double radius) {
  const NDPlan plan({Order(0)}, n, radius);
  const double c = -1.0;
  const TensorGrid g = plan.sample_grid();
  std::vector<double> rhs;
  for (double r : g.axis(0)) rhs.push_back(std::exp(-r * r));
  const SampledField u = solve_helmholtz_separable(plan, SampledField(g, rhs), c);
  const double h = 0.01;
  std::vector<double> x;
  for (int i = 1; i <= 600 && i * h < radius; ++i) x.push_back(i * h);
  const SampledField uu = synthesize_nd(plan, forward_nd(plan, u), TensorGrid({x}));
  const SampledField lu = apply_axis_numeric({0, Order(0), Family::bessel_first}, uu, h);
  double err = 0.0, scale = 0.0;
  for (std::size_t i = 1; i + 1 < x.size(); ++i) {
    const double want = std::exp(-x[i] * x[i]);
    err = std::max(err, std::abs(lu[i] + c * uu[i] - want));
    scale = std::max(scale, want);
  }
  return err / scale;
}

inline double check_wronskian() {
  double worst = 0.0;
  for (double nu : kCylOrders) {
    for (double x : ode_grid()) {
      const auto j = bessel_j(Order(nu), x);
      const auto y = bessel_y(Order(nu), x);
      const double w = j.value * y.first_derivative - j.first_derivative * y.value;
      const double want = 2.0 / (kPi * x);
      worst = std::max(worst, std::abs(w - want) / want);
    }
  }
  return worst;
}

struct CheckSpec {
  const char* name;
  double tolerance;
  bool overridable;
  std::function<double(const VerifyConfig&)> run;
};

inline const std::vector<CheckSpec>& check_registry() {
  static const std::vector<CheckSpec> checks = {
      {"eq1", 1e-8, true, [](const VerifyConfig&) { return check_eq1(); }},
      {"eq2", 1e-8, true, [](const VerifyConfig&) { return check_eq2(); }},
      {"theorem1", 1e-8, true, [](const VerifyConfig&) { return check_theorem1(); }},
      {"eq4", 1e-8, true, [](const VerifyConfig&) { return check_eq4(); }},
      {"eq7", 1e-8, true, [](const VerifyConfig&) { return check_eq7(); }},
      {"eq10", 1e-8, true, [](const VerifyConfig&) { return check_eq10(); }},
      {"eq13", 1e-9, true, [](const VerifyConfig&) { return check_eq13(); }},
      {"iterate", 1e-8, true, [](const VerifyConfig&) { return check_iterate(); }},
      {"theorem2", 1e-7, true, [](const VerifyConfig& c) { return check_theorem2(c.seed); }},
      {"eq14-discrete", 1e-10, true, [](const VerifyConfig& c) { return check_eq14_discrete(c.n, c.radius); }},
      {"inverse", 1e-10, true, [](const VerifyConfig& c) { return check_inverse(c.n, c.radius, c.seed); }},
      {"gaussian", 1e-6, true, [](const VerifyConfig&) { return check_gaussian(); }},
      {"eq12", 1e-4, true, [](const VerifyConfig& c) { return check_eq12(c.n, c.radius); }},
      {"eq14", 1e-5, true,
       [](const VerifyConfig&) { return check_orthogonality(OrthogonalityFamily::bessel, 1.0, 3.0); }},
      {"eq16", 1e-5, true,
       [](const VerifyConfig&) { return check_orthogonality(OrthogonalityFamily::spherical, 1.0, 2.0); }},
      {"eq17", 1e-12, true, [](const VerifyConfig& c) { return check_eq17(c.n, c.radius); }},
      {"fd-convergence", 0.5, false, [](const VerifyConfig&) { return check_fd_convergence(); }},
      {"helmholtz-mode", 1e-10, true, [](const VerifyConfig& c) { return check_helmholtz_mode(c.n, c.radius); }},
      {"helmholtz-gaussian", 1e-3, true,
       [](const VerifyConfig& c) { return check_helmholtz_gaussian(c.n, c.radius); }},
      {"wronskian", 1e-10, true, [](const VerifyConfig&) { return check_wronskian(); }},
  };
  return checks;
}

}  // namespace detail

inline std::vector<std::string> check_names() {
  std::vector<std::string> out;
  for (const auto& c : detail::check_registry()) out.emplace_back(c.name);
  return out;
}

/// Runs one named check. Exceptions from the check are caught and reported
/// as a failure.
inline CheckResult run_check(const std::string& name, const VerifyConfig& config) {
  for (const auto& c : detail::check_registry()) {
    if (name != c.name) continue;
    CheckResult r{c.name, 0.0, c.overridable && config.tolerance ? *config.tolerance : c.tolerance, false, {}};
    try {
      r.max_residual = c.run(config);
      r.pass = std::isfinite(r.max_residual) && r.max_residual <= r.tolerance;
    } catch (const std::exception& e) {
      r.max_residual = std::numeric_limits<double>::quiet_NaN();
      r.error = e.what();
    }
    return r;
  }
  throw std::invalid_argument("unknown check '" + name + "'");
}

/// "all" or a comma-separated list of check names.
inline std::vector<CheckResult> run_suite(const std::string& suite, const VerifyConfig& config) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = check_names();
  } else {
    std::size_t start = 0;
    for (;;) {
      const std::size_t pos = suite.find(',', start);
      names.push_back(suite.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
    const auto known = check_names();
    for (const auto& n : names) {
      if (std::find(known.begin(), known.end(), n) == known.end()) {
        throw std::invalid_argument("unknown check '" + n + "'");
      }
    }
  }
  std::vector<CheckResult> out;
  for (const auto& n : names) out.push_back(run_check(n, config));
  return out;
}

inline nlohmann::json report_json(const VerifyConfig& config, const std::vector<CheckResult>& results) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json c = {{"name", r.name}, {"tolerance", r.tolerance}, {"pass", r.pass}};
    if (std::isfinite(r.max_residual)) {
      c["max_residual"] = r.max_residual;
    } else {
      c["max_residual"] = nullptr;
    }
    if (!r.error.empty()) c["error"] = r.error;
    checks.push_back(c);
  }
  return {{"seed", config.seed}, {"n", config.n}, {"radius", config.radius}, {"checks", checks}};
}

inline bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

}  // namespace hankelnd

#endif  // HANKELND_VERIFY_HPP
