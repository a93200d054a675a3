#ifndef HANKELND_OPERATORS_HPP
#define HANKELND_OPERATORS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hankelnd/errors.hpp"
#include "hankelnd/tensor.hpp"

namespace hankelnd {

/// Radial operator of one axis. Bessel families use (1/x)(x u')' - nu^2/x^2 u,
/// spherical families (1/x^2)(x^2 u')' - nu(nu+1)/x^2 u, and Legendre
/// ((1-x^2) u')' - m^2/(1-x^2) u.
struct AxisOperator {
  std::size_t axis = 0;
  AxisIndex order = Order(0.0);
  Family family = Family::bessel_first;
};

/// Polynomial in n commuting operator symbols.
class OperatorPolynomial {
 public:
  struct Term {
    double coefficient;
    std::vector<int> exponents;
  };

  OperatorPolynomial(std::size_t n_axes, std::vector<Term> terms) : n_axes_(n_axes), terms_(std::move(terms)) {
    if (n_axes_ == 0) throw LengthError("OperatorPolynomial: need at least one axis");
    if (terms_.empty()) throw LengthError("OperatorPolynomial: need at least one term");
    std::set<std::vector<int>> seen;
    for (const Term& t : terms_) {
      if (t.exponents.size() != n_axes_) throw LengthError("OperatorPolynomial: exponent tuple length mismatch");
      for (int e : t.exponents) {
        if (e < 0) throw DomainError("OperatorPolynomial: exponents must be nonnegative");
      }
      if (!std::isfinite(t.coefficient)) throw DomainError("OperatorPolynomial: non-finite coefficient");
      if (!seen.insert(t.exponents).second) throw DomainError("OperatorPolynomial: duplicate exponent tuple");
    }
  }

  std::size_t n_axes() const noexcept { return n_axes_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  int total_degree() const {
    int degree = 0;
    for (const Term& t : terms_) {
      int sum = 0;
      for (int e : t.exponents) sum += e;
      degree = std::max(degree, sum);
    }
    return degree;
  }

  double evaluate(const std::vector<double>& t) const {
    if (t.size() != n_axes_) throw LengthError("OperatorPolynomial: argument length mismatch");
    double total = 0.0;
    for (const Term& term : terms_) {
      double v = term.coefficient;
      for (std::size_t j = 0; j < n_axes_; ++j) v *= std::pow(t[j], term.exponents[j]);
      total += v;
    }
    return total;
  }

 private:
  std::size_t n_axes_;
  std::vector<Term> terms_;
};

namespace detail {

enum class Form { bessel, spherical, legendre };

inline Form form_of(Family family) {
  switch (family) {
    case Family::bessel_first:
    case Family::bessel_second: return Form::bessel;
    case Family::spherical_first:
    case Family::spherical_second: return Form::spherical;
    default: return Form::legendre;
  }
}

/// Coefficients (c2, c1, c0) of the operator c2 u'' + c1 u' + c0 u at x.
struct FormCoefficients {
  double c2;
  double c1;
  double c0;
};

inline FormCoefficients form_coefficients(Family family, const AxisIndex& index, double x) {
  switch (form_of(family)) {
    case Form::bessel: {
      const double nu = std::get<Order>(index).value();
      return {1.0, 1.0 / x, -nu * nu / (x * x)};
    }
    case Form::spherical: {
      const double nu = std::get<Order>(index).value();
      return {1.0, 2.0 / x, -nu * (nu + 1.0) / (x * x)};
    }
    default: {
      const double m = std::get<LegendreIndex>(index).order();
      const double s = 1.0 - x * x;
      return {s, -2.0 * x, -m * m / s};
    }
  }
}

inline void require_interior(Family family, double x) {
  if (!std::isfinite(x)) throw DomainError("operator point must be finite");
  if (form_of(family) == Form::legendre) {
    if (!(std::abs(x) < 1.0)) throw DomainError("Legendre operator needs |x| < 1, got " + std::to_string(x));
  } else if (!(x > 0.0)) {
    throw DomainError("radial operator needs x > 0, got " + std::to_string(x));
  }
}

inline double apply_form(Family family, const AxisIndex& index, double x, const EvalResult& u) {
  const FormCoefficients c = form_coefficients(family, index, x);
  return c.c2 * u.second_derivative + c.c1 * u.first_derivative + c.c0 * u.value;
}

// Sparse sums of c * x^i * s^j with s = 1/(1 - x^2). Exponents may be
// negative; Bessel forms only ever use j = 0.
using Monomials = std::map<std::pair<int, int>, double>;

inline void accumulate(Monomials& into, const Monomials& from, double factor = 1.0) {
  for (const auto& [key, c] : from) into[key] += factor * c;
}

inline Monomials multiply(const Monomials& a, const Monomials& b) {
  Monomials out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) out[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
  }
  return out;
}

inline Monomials derivative(const Monomials& a) {
  // d/dx x^i s^j = i x^(i-1) s^j + 2j x^(i+1) s^(j+1)
  Monomials out;
  for (const auto& [key, c] : a) {
    const auto [i, j] = key;
    if (i != 0) out[{i - 1, j}] += i * c;
    if (j != 0) out[{i + 1, j + 1}] += 2.0 * j * c;
  }
  return out;
}

inline double evaluate(const Monomials& a, double x) {
  const double s = 1.0 / (1.0 - x * x);
  double total = 0.0;
  for (const auto& [key, c] : a) total += c * std::pow(x, key.first) * std::pow(s, key.second);
  return total;
}

/// a u + b u' for u solving the axis ODE.
struct Reduced {
  Monomials a;
  Monomials b;
};

/// The axis ODE as u'' = p u' + q u, plus the operator coefficients.
struct SymbolicAxis {
  Monomials p, q;
  Monomials c2, c1, c0;
};

inline SymbolicAxis symbolic_axis(Family family, const AxisIndex& index, double k) {
  SymbolicAxis ax;
  const double k2 = k * k;
  switch (form_of(family)) {
    case Form::bessel: {
      const double nu = std::get<Order>(index).value();
      ax.p = {{{-1, 0}, -1.0}};
      ax.q = {{{0, 0}, -k2}, {{-2, 0}, nu * nu}};
      ax.c2 = {{{0, 0}, 1.0}};
      ax.c1 = {{{-1, 0}, 1.0}};
      ax.c0 = {{{-2, 0}, -nu * nu}};
      break;
    }
    case Form::spherical: {
      const double nu = std::get<Order>(index).value();
      const double a = nu * (nu + 1.0);
      ax.p = {{{-1, 0}, -2.0}};
      ax.q = {{{0, 0}, -k2}, {{-2, 0}, a}};
      ax.c2 = {{{0, 0}, 1.0}};
      ax.c1 = {{{-1, 0}, 2.0}};
      ax.c0 = {{{-2, 0}, -a}};
      break;
    }
    default: {
      if (k != 1.0) throw DomainError("Legendre axes do not accept a scale other than 1");
      const LegendreIndex li = std::get<LegendreIndex>(index);
      const double l = li.degree();
      const double m = li.order();
      ax.p = {{{1, 1}, 2.0}};
      ax.q = {{{0, 1}, -l * (l + 1.0)}, {{0, 2}, m * m}};
      ax.c2 = {{{0, -1}, 1.0}};
      ax.c1 = {{{1, 0}, -2.0}};
      ax.c0 = {{{0, 1}, -m * m}};
      break;
    }
  }
  return ax;
}

inline Reduced differentiate(const SymbolicAxis& ax, const Reduced& g) {
  // (a u + b u')' = (a' + b q) u + (a + b' + b p) u'
  Reduced out;
  out.a = derivative(g.a);
  accumulate(out.a, multiply(g.b, ax.q));
  out.b = g.a;
  accumulate(out.b, derivative(g.b));
  accumulate(out.b, multiply(g.b, ax.p));
  return out;
}

inline Reduced apply_symbolic(const SymbolicAxis& ax, const Reduced& g) {
  const Reduced g1 = differentiate(ax, g);
  const Reduced g2 = differentiate(ax, g1);
  Reduced out;
  out.a = multiply(ax.c2, g2.a);
  accumulate(out.a, multiply(ax.c1, g1.a));
  accumulate(out.a, multiply(ax.c0, g.a));
  out.b = multiply(ax.c2, g2.b);
  accumulate(out.b, multiply(ax.c1, g1.b));
  accumulate(out.b, multiply(ax.c0, g.b));
  return out;
}

inline constexpr int kMaxIterate = 8;

/// Values of L^e F(k x) for e = 0..max_power, by repeated symbolic
/// application with u'' eliminated through the ODE.
inline std::vector<double> iterate_axis(Family family, const AxisIndex& index, double k, double x, int max_power) {
  if (max_power < 0 || max_power > kMaxIterate) {
    throw DomainError("operator power must be in [0, " + std::to_string(kMaxIterate) + "]");
  }
  require_interior(family, x);
  const SymbolicAxis ax = symbolic_axis(family, index, k);
  const EvalResult u = axis_factor(family, index, x, k);
  std::vector<double> out;
  Reduced g{{{{0, 0}, 1.0}}, {}};
  for (int e = 0; e <= max_power; ++e) {
    if (e > 0) g = apply_symbolic(ax, g);
    const double v = evaluate(g.a, x) * u.value + evaluate(g.b, x) * u.first_derivative;
    if (!std::isfinite(v)) throw OverflowError("operator power overflowed at power " + std::to_string(e));
    out.push_back(v);
  }
  return out;
}

inline void check_operator(const AxisOperator& op, const MultiOrder& order) {
  if (op.axis >= order.size()) throw LengthError("operator axis out of range");
  if (op.family != order.family()) throw DomainError("operator family does not match the function family");
  if (!(op.order == order[op.axis])) throw DomainError("operator order does not match the axis order");
}

inline std::vector<EvalResult> interior_factors(const MultiOrder& order, const std::vector<double>& point,
                                                const std::vector<double>& k) {
  if (point.size() != order.size()) throw LengthError("point length does not match orders");
  std::vector<EvalResult> f;
  for (std::size_t j = 0; j < point.size(); ++j) {
    require_interior(order.family(), point[j]);
    f.push_back(axis_factor(order.family(), order[j], point[j], k[j]));
  }
  return f;
}

inline double product_with(const std::vector<EvalResult>& factors, std::size_t axis, double replaced) {
  double result = 1.0;
  for (std::size_t j = 0; j < factors.size(); ++j) result *= (j == axis ? replaced : factors[j].value);
  return result;
}

}  // namespace detail

/// L applied on one axis of the product function, analytically.
inline double apply_axis_analytic(const AxisOperator& op, const MultiOrder& order, const std::vector<double>& point,
                                  const std::vector<double>& scale = {}) {
  detail::check_operator(op, order);
  const auto k = detail::unit_scale(order.size(), scale);
  const auto f = detail::interior_factors(order, point, k);
  const double applied = detail::apply_form(order.family(), order[op.axis], point[op.axis], f[op.axis]);
  return detail::product_with(f, op.axis, applied);
}

/// Sum of the axis operators over all axes.
inline double apply_sum(const MultiOrder& order, const std::vector<double>& point,
                        const std::vector<double>& scale = {}) {
  const auto k = detail::unit_scale(order.size(), scale);
  const auto f = detail::interior_factors(order, point, k);
  double total = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    total += detail::product_with(f, j, detail::apply_form(order.family(), order[j], point[j], f[j]));
  }
  return total;
}

/// L^m J_nu(k r) by m symbolic applications.
inline double apply_iterated(Order order, double k, double r, int m) {
  return detail::iterate_axis(Family::bessel_first, order, k, r, m).back();
}

inline double apply_iterated(Family family, const AxisIndex& index, double k, double x, int m) {
  return detail::iterate_axis(family, index, k, x, m).back();
}

/// P(L_1, ..., L_n) applied to the product function. Each monomial applies
/// its axis powers in ascending axis order.
inline double apply_polynomial(const OperatorPolynomial& poly, const MultiOrder& order,
                               const std::vector<double>& point, const std::vector<double>& scale = {}) {
  if (poly.n_axes() != order.size()) throw LengthError("polynomial arity does not match orders");
  if (point.size() != order.size()) throw LengthError("point length does not match orders");
  const auto k = detail::unit_scale(order.size(), scale);
  std::vector<int> max_power(order.size(), 0);
  for (const auto& t : poly.terms()) {
    for (std::size_t j = 0; j < t.exponents.size(); ++j) max_power[j] = std::max(max_power[j], t.exponents[j]);
  }
  std::vector<std::vector<double>> powers;
  for (std::size_t j = 0; j < order.size(); ++j) {
    powers.push_back(detail::iterate_axis(order.family(), order[j], k[j], point[j], max_power[j]));
  }
  double total = 0.0;
  for (const auto& t : poly.terms()) {
    double v = t.coefficient;
    for (std::size_t j = 0; j < order.size(); ++j) v *= powers[j][static_cast<std::size_t>(t.exponents[j])];
    total += v;
  }
  return total;
}

/// Finite-difference application along op.axis. Second order in the
/// interior; boundary samples use one-sided stencils and are flagged.
inline SampledField apply_axis_numeric(const AxisOperator& op, const SampledField& field, double step) {
  const TensorGrid& grid = field.grid();
  if (op.axis >= grid.dims()) throw LengthError("operator axis out of range");
  if (!(step > 0.0) || !std::isfinite(step)) throw GridError("step must be positive");
  const auto& x = grid.axis(op.axis);
  const std::size_t n = x.size();
  if (n < 3) throw GridError("need at least 3 samples along the operator axis");
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs((x[i] - x[i - 1]) - step) > 1e-9 * step) {
      throw GridError("grid is not uniform with the given step along axis " + std::to_string(op.axis));
    }
  }
  for (double xi : x) detail::require_interior(op.family, xi);
  if (op.family == Family::legendre && !std::holds_alternative<LegendreIndex>(op.order)) {
    throw DomainError("legendre operator needs a LegendreIndex");
  }
  if (op.family != Family::legendre && !std::holds_alternative<Order>(op.order)) {
    throw DomainError("radial operator needs an Order");
  }

  const std::vector<double>& u = field.values();
  const std::size_t stride = grid.strides()[op.axis];
  std::vector<double> out(u.size());
  std::vector<std::uint8_t> flags(u.size(), 0);
  const double h = step;
  const double h2 = h * h;
  for (std::size_t flat = 0; flat < u.size(); ++flat) {
    const std::size_t i = (flat / stride) % n;
    const std::size_t base = flat - i * stride;
    auto at = [&](std::size_t idx) { return u[base + idx * stride]; };
    double d1 = 0.0;
    double d2 = 0.0;
    if (i > 0 && i + 1 < n) {
      d1 = (at(i + 1) - at(i - 1)) / (2.0 * h);
      d2 = (at(i + 1) - 2.0 * at(i) + at(i - 1)) / h2;
    } else {
      flags[flat] = 1;
      const bool left = i == 0;
      const double sign = left ? 1.0 : -1.0;
      auto off = [&](std::size_t j) { return left ? at(j) : at(n - 1 - j); };
      d1 = sign * (-3.0 * off(0) + 4.0 * off(1) - off(2)) / (2.0 * h);
      d2 = n >= 4 ? (2.0 * off(0) - 5.0 * off(1) + 4.0 * off(2) - off(3)) / h2
                  : (off(0) - 2.0 * off(1) + off(2)) / h2;
    }
    const detail::FormCoefficients c = detail::form_coefficients(op.family, op.order, x[i]);
    out[flat] = c.c2 * d2 + c.c1 * d1 + c.c0 * u[flat];
  }
  return SampledField(grid, std::move(out), std::move(flags));
}

enum class Equation { eq2, eq4, eq7, eq10, ndim };

inline const char* equation_name(Equation e) {
  switch (e) {
    case Equation::eq2: return "eq2";
    case Equation::eq4: return "eq4";
    case Equation::eq7: return "eq7";
    case Equation::eq10: return "eq10";
    case Equation::ndim: return "ndim";
  }
  return "unknown";
}

/// Left-hand side of the named equation with the product solution
/// substituted, at every grid point.
///   eq2   bessel, 2 axes:    (L_1 + L_2) u + 2 u
///   eq4   spherical, 2 axes: (L_1 + L_2) u + 2 u
///   eq7   legendre, 2 axes:  (L_1 + L_2) u + (l1(l1+1) + l2(l2+1)) u
///   eq10  bessel, 1 axis:    L u + k^2 u
///   ndim  any family:        sum_j L_j u + (sum_j k_j^2 or sum_j l_j(l_j+1)) u
inline SampledField residual(Equation equation, const MultiOrder& order, const TensorGrid& grid,
                             const std::vector<double>& scale = {}) {
  if (grid.dims() != order.size()) throw LengthError("residual: grid axes do not match orders");
  const auto k = detail::unit_scale(order.size(), scale);
  const detail::Form form = detail::form_of(order.family());
  const bool unit = std::all_of(k.begin(), k.end(), [](double v) { return v == 1.0; });
  auto require = [&](bool ok, const std::string& what) {
    if (!ok) throw DomainError(std::string("residual ") + equation_name(equation) + ": " + what);
  };
  switch (equation) {
    case Equation::eq2:
      if (order.size() != 2) throw LengthError("residual eq2: needs 2 axes");
      require(form == detail::Form::bessel, "needs a Bessel family");
      require(unit, "scale must be 1 on every axis");
      break;
    case Equation::eq4:
      if (order.size() != 2) throw LengthError("residual eq4: needs 2 axes");
      require(form == detail::Form::spherical, "needs a spherical family");
      require(unit, "scale must be 1 on every axis");
      break;
    case Equation::eq7:
      if (order.size() != 2) throw LengthError("residual eq7: needs 2 axes");
      require(form == detail::Form::legendre, "needs the legendre family");
      require(unit, "scale must be 1 on every axis");
      break;
    case Equation::eq10:
      if (order.size() != 1) throw LengthError("residual eq10: needs 1 axis");
      require(form == detail::Form::bessel, "needs a Bessel family");
      break;
    case Equation::ndim:
      if (form == detail::Form::legendre) require(unit, "scale must be 1 on every axis");
      break;
  }
  double constant = 0.0;
  for (std::size_t j = 0; j < order.size(); ++j) {
    if (form == detail::Form::legendre) {
      const int l = std::get<LegendreIndex>(order[j]).degree();
      constant += l * (l + 1.0);
    } else {
      constant += k[j] * k[j];
    }
  }
  std::vector<double> out(grid.size());
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    const auto p = grid.point(flat);
    out[flat] = apply_sum(order, p, k) + constant * eval_product(order, p, k);
  }
  return SampledField(grid, std::move(out));
}

}  // namespace hankelnd

#endif  // HANKELND_OPERATORS_HPP
