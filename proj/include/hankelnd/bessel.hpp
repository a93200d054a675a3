#ifndef HANKELND_BESSEL_HPP
#define HANKELND_BESSEL_HPP

// Scalar Bessel-type functions: J_nu, Y_nu, j_nu, y_nu, P_l^m, with first and
// second derivatives, and the positive zeros of J_nu.

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "hankelnd/detail/cylinder.hpp"
#include "hankelnd/errors.hpp"

namespace hankelnd {

/// Real order nu >= 0.
class Order {
 public:
  explicit Order(double nu) : nu_(nu) {
    if (!std::isfinite(nu) || nu < 0.0) {
      throw DomainError("order must be finite and nonnegative, got " + std::to_string(nu));
    }
  }

  double value() const noexcept { return nu_; }

  friend bool operator==(const Order&, const Order&) = default;

 private:
  double nu_;
};

/// Degree l and order m of an associated Legendre function, 0 <= m <= l.
class LegendreIndex {
 public:
  LegendreIndex(int degree, int order) : l_(degree), m_(order) {
    if (degree < 0 || order < 0 || order > degree) {
      throw DomainError("Legendre index requires 0 <= m <= l, got l=" + std::to_string(degree) +
                        " m=" + std::to_string(order));
    }
  }

  int degree() const noexcept { return l_; }
  int order() const noexcept { return m_; }

  friend bool operator==(const LegendreIndex&, const LegendreIndex&) = default;

 private:
  int l_;
  int m_;
};

struct EvalResult {
  double value = 0.0;
  double first_derivative = 0.0;
  double second_derivative = 0.0;
};

namespace detail {

inline void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw DomainError(std::string(what) + ": argument must be finite");
}

// Value, u' and u'' at x = 0 for u(x) = coeff * x^nu * (1 + O(x^2)), where the
// O(x^2) coefficient is `second` (so u''(0) = 2*coeff*second when nu == 0).
inline EvalResult origin_limit(double nu, double coeff, double second) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  EvalResult r;
  r.value = nu == 0.0 ? coeff : 0.0;
  if (nu == 1.0) {
    r.first_derivative = coeff;
  } else if (nu > 0.0 && nu < 1.0) {
    r.first_derivative = inf;
  }
  if (nu == 0.0) {
    r.second_derivative = 2.0 * coeff * second;
  } else if (nu == 2.0) {
    r.second_derivative = 2.0 * coeff;
  } else if (nu > 0.0 && nu < 1.0) {
    r.second_derivative = -inf;
  } else if (nu > 1.0 && nu < 2.0) {
    r.second_derivative = inf;
  }
  return r;
}

inline double cylinder_second(double nu, double x, double u, double du) {
  return -du / x - (1.0 - nu * nu / (x * x)) * u;
}

inline double spherical_second(double nu, double x, double u, double du) {
  return -2.0 * du / x - (1.0 - nu * (nu + 1.0) / (x * x)) * u;
}

}  // namespace detail

/// J_nu(x) for x >= 0. At x = 0 the derivatives are the one-sided limits,
/// which diverge for 0 < nu < 1 (first) and 0 < nu < 2, nu != 1 (second).
inline EvalResult bessel_j(Order order, double x) {
  detail::require_finite(x, "bessel_j");
  if (x < 0.0) throw DomainError("bessel_j: x must be nonnegative");
  const double nu = order.value();
  if (x == 0.0) {
    // J_nu(x) = (x/2)^nu / Gamma(nu+1) * (1 - x^2 / (4(nu+1)) + ...)
    const double coeff = std::pow(0.5, nu) / std::tgamma(nu + 1.0);
    return detail::origin_limit(nu, coeff, -0.25 / (nu + 1.0));
  }
  const detail::ValueSlope j = detail::cylinder_j(nu, x);
  return {j.value, j.slope, detail::cylinder_second(nu, x, j.value, j.slope)};
}

/// Y_nu(x) for x > 0.
inline EvalResult bessel_y(Order order, double x) {
  detail::require_finite(x, "bessel_y");
  if (x <= 0.0) throw DomainError("bessel_y: x must be positive");
  const double nu = order.value();
  const detail::CylinderPair p = detail::cylinder_jy(nu, x);
  return {p.y, p.yp, detail::cylinder_second(nu, x, p.y, p.yp)};
}

/// j_nu(x) = sqrt(pi / 2x) J_{nu+1/2}(x) for x >= 0.
inline EvalResult spherical_j(Order order, double x) {
  detail::require_finite(x, "spherical_j");
  if (x < 0.0) throw DomainError("spherical_j: x must be nonnegative");
  const double nu = order.value();
  if (x == 0.0) {
    // j_nu(x) = sqrt(pi) (x/2)^nu / (2 Gamma(nu + 3/2)) * (1 - x^2 / (2(2nu+3)) + ...)
    const double coeff =
        nu == 0.0 ? 1.0 : std::sqrt(detail::kPi) * std::pow(0.5, nu + 1.0) / std::tgamma(nu + 1.5);
    return detail::origin_limit(nu, coeff, -0.5 / (2.0 * nu + 3.0));
  }
  const double root = std::sqrt(0.5 * detail::kPi / x);
  const detail::ValueSlope j = detail::cylinder_j(nu + 0.5, x);
  const double value = root * j.value;
  const double slope = root * (j.slope - 0.5 * j.value / x);
  return {value, slope, detail::spherical_second(nu, x, value, slope)};
}

/// y_nu(x) = sqrt(pi / 2x) Y_{nu+1/2}(x) for x > 0.
inline EvalResult spherical_y(Order order, double x) {
  detail::require_finite(x, "spherical_y");
  if (x <= 0.0) throw DomainError("spherical_y: x must be positive");
  const double nu = order.value();
  const double root = std::sqrt(0.5 * detail::kPi / x);
  const detail::CylinderPair p = detail::cylinder_jy(nu + 0.5, x);
  const double value = root * p.y;
  const double slope = root * (p.yp - 0.5 * p.y / x);
  return {value, slope, detail::spherical_second(nu, x, value, slope)};
}

namespace detail {

// d^n P_l / dx^n at x = 1: (l+n)! / (2^n n! (l-n)!), zero for n > l.
inline double legendre_derivative_at_one(int l, int n) {
  if (n > l) return 0.0;
  double r = 1.0;
  for (int i = l - n + 1; i <= l + n; ++i) r *= i;
  for (int i = 1; i <= n; ++i) r /= 2.0 * i;
  return r;
}

inline EvalResult legendre_endpoint(int l, int m, double x) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  const double sigma = x > 0.0 ? 1.0 : -1.0;
  // d^k P_l(-1) = (-1)^(l+k) d^k P_l(1)
  auto dp = [&](int k) {
    const double at_one = legendre_derivative_at_one(l, k);
    return (sigma < 0.0 && (l + k) % 2 != 0) ? -at_one : at_one;
  };
  if (m == 0) return {dp(0), dp(1), dp(2)};

  // P_l^m = c h g with c = (-1)^m, h = (1-x^2)^(m/2), g = d^m P_l / dx^m.
  const double c = (m % 2 == 0) ? 1.0 : -1.0;
  const double g = dp(m);
  const double gp = dp(m + 1);
  EvalResult r;
  r.value = 0.0;
  switch (m) {
    case 1:  // h' -> -sigma * inf, h'' -> -inf
      r.first_derivative = std::copysign(inf, -sigma * c * g);
      r.second_derivative = std::copysign(inf, -c * g);
      break;
    case 2:  // h' = -2 sigma, h'' = -2
      r.first_derivative = c * (-2.0 * sigma) * g;
      r.second_derivative = c * (-2.0 * g + 2.0 * (-2.0 * sigma) * gp);
      break;
    case 3:  // h' = 0, h'' -> +inf
      r.first_derivative = 0.0;
      r.second_derivative = std::copysign(inf, c * g);
      break;
    case 4:  // h' = 0, h'' = 8
      r.first_derivative = 0.0;
      r.second_derivative = c * 8.0 * g;
      break;
    default:
      r.first_derivative = 0.0;
      r.second_derivative = 0.0;
      break;
  }
  return r;
}

}  // namespace detail

/// Associated Legendre function P_l^m(x), Condon-Shortley phase included:
/// P_1^1(x) = -sqrt(1 - x^2). At x = +-1 with m > 0 some derivatives diverge
/// and are returned as signed infinities.
inline EvalResult assoc_legendre(LegendreIndex index, double x) {
  detail::require_finite(x, "assoc_legendre");
  if (x < -1.0 || x > 1.0) throw DomainError("assoc_legendre: |x| must not exceed 1");
  const int l = index.degree();
  const int m = index.order();
  if (x == 1.0 || x == -1.0) return detail::legendre_endpoint(l, m, x);

  const double s2 = (1.0 - x) * (1.0 + x);
  const double s = std::sqrt(s2);
  double pmm = 1.0;
  double odd = 1.0;
  for (int i = 1; i <= m; ++i) {
    pmm *= -odd * s;
    odd += 2.0;
  }
  double current = pmm;
  double previous = 0.0;  // P_{l-1}^m, zero when l == m
  if (l > m) {
    previous = pmm;
    current = x * (2.0 * m + 1.0) * pmm;
    for (int ll = m + 2; ll <= l; ++ll) {
      const double next = (x * (2.0 * ll - 1.0) * current - (ll + m - 1.0) * previous) / (ll - m);
      previous = current;
      current = next;
    }
  }
  // (1 - x^2) P' = (l + m) P_{l-1}^m - l x P_l^m
  const double d1 = ((l + m) * previous - l * x * current) / s2;
  const double d2 = (2.0 * x * d1 - (l * (l + 1.0) - m * m / s2) * current) / s2;
  return {current, d1, d2};
}

namespace detail {

/// McMahon's large-zero expansion for the k-th positive zero of J_nu.
inline double mcmahon_zero(double nu, int k) {
  const double beta = (k + 0.5 * nu - 0.25) * kPi;
  const double mu = 4.0 * nu * nu;
  const double b8 = 8.0 * beta;
  const double b8_2 = b8 * b8;
  return beta - (mu - 1.0) / b8 - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8 * b8_2) -
         32.0 * (mu - 1.0) * (83.0 * mu * mu - 982.0 * mu + 3779.0) / (15.0 * b8 * b8_2 * b8_2);
}

}  // namespace detail

/// First `count` positive zeros of J_nu, strictly increasing.
///
/// Each zero is bracketed by a sign change found by unit steps from the
/// previous zero (consecutive zeros are more than 3 apart for every nu >= 0),
/// then refined by Newton's method from McMahon's estimate, falling back to
/// bisection whenever a step leaves the bracket.
inline std::vector<double> bessel_zeros(Order order, int count) {
  constexpr int kMaxNewton = 50;
  constexpr double kTolerance = 1e-13;
  if (count < 1) throw DomainError("bessel_zeros: count must be positive");
  const double nu = order.value();
  auto eval = [nu](double x) { return detail::cylinder_j(nu, x); };

  std::vector<double> zeros;
  zeros.reserve(static_cast<std::size_t>(count));
  // J_nu > 0 on (0, nu] for nu > 0, and J_0(0) = 1.
  double lo = nu;
  for (int k = 1; k <= count; ++k) {
    double a = lo;
    double fa = a == 0.0 ? 1.0 : eval(a).value;
    double b = a + 1.0;
    double fb = eval(b).value;
    while (fa * fb > 0.0) {
      a = b;
      fa = fb;
      b += 1.0;
      fb = eval(b).value;
    }
    double root = fb == 0.0 ? b : 0.0;
    if (fb != 0.0) {
      const double guess = detail::mcmahon_zero(nu, k);
      double x = (guess > a && guess < b) ? guess : 0.5 * (a + b);
      bool converged = false;
      for (int it = 0; it < kMaxNewton; ++it) {
        const detail::ValueSlope j = eval(x);
        if (std::abs(j.value) <= kTolerance) {
          const double polished = x - j.value / j.slope;
          if (std::abs(polished - x) < 1e-8 * x) x = polished;
          converged = true;
          break;
        }
        if ((j.value > 0.0) == (fa > 0.0)) {
          a = x;
        } else {
          b = x;
        }
        double next = x - j.value / j.slope;
        if (!(next > a && next < b)) next = 0.5 * (a + b);
        if (next == x) break;
        x = next;
      }
      if (!converged && std::abs(eval(x).value) > kTolerance) {
        throw ConvergenceError("bessel_zeros: Newton refinement failed for zero " +
                               std::to_string(k) + " of order " + std::to_string(nu));
      }
      root = x;
    }
    zeros.push_back(root);
    lo = root + 1.0;
  }
  return zeros;
}

}  // namespace hankelnd

#endif  // HANKELND_BESSEL_HPP
