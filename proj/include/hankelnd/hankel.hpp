#ifndef HANKELND_HANKEL_HPP
#define HANKELND_HANKEL_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "hankelnd/bessel.hpp"
#include "hankelnd/errors.hpp"
#include "hankelnd/tensor.hpp"

namespace hankelnd {

/// Quasi-discrete Hankel transform of order nu on [0, R].
///
/// With zeros j_1..j_{N+1} of J_nu, S = j_{N+1}, samples r_i = j_i R / S and
/// frequencies k_m = j_m / R, the kernel
///   C_mi = 2 / (S |J_{nu+1}(j_m)| |J_{nu+1}(j_i)|) * J_nu(j_m j_i / S)
/// is symmetric and nearly involutory. The stored matrix T is the nearest
/// exact involution to C (eigenvalues of C replaced by their sign), so
/// inverse(forward(x)) == x to rounding. Scaled vectors:
///   forward  F_m = |J_{nu+1}(j_m)| / V * sum_i T_mi f_i R / |J_{nu+1}(j_i)|,  V = S / R
///   inverse  f_i = |J_{nu+1}(j_i)| / R * sum_m T_im F_m V / |J_{nu+1}(j_m)|
class HankelPlan {
 public:
  HankelPlan(Order order, std::size_t n_points, double radius) : order_(order), radius_(radius) {
    if (n_points < 4) throw DomainError("HankelPlan: need at least 4 points");
    if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("HankelPlan: radius must be positive");
    const double nu = order.value();
    zeros_ = bessel_zeros(order, static_cast<int>(n_points) + 1);
    const std::size_t n = n_points;
    const double s = zeros_[n];
    bandwidth_ = s / radius;
    weights_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      weights_[i] = std::abs(bessel_j(Order(nu + 1.0), zeros_[i]).value);
      samples_.push_back(zeros_[i] * radius / s);
      frequencies_.push_back(zeros_[i] / radius);
    }
    Eigen::MatrixXd c(n, n);
    for (std::size_t m = 0; m < n; ++m) {
      for (std::size_t i = m; i < n; ++i) {
        const double v = 2.0 / (s * weights_[m] * weights_[i]) * bessel_j(order, zeros_[m] * zeros_[i] / s).value;
        c(m, i) = v;
        c(i, m) = v;
      }
    }
    raw_defect_ = max_abs(c * c - Eigen::MatrixXd::Identity(n, n));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(c);
    if (eig.info() != Eigen::Success) throw ConvergenceError("HankelPlan: eigendecomposition failed");
    Eigen::VectorXd sign = eig.eigenvalues().unaryExpr([](double l) { return l >= 0.0 ? 1.0 : -1.0; });
    matrix_ = eig.eigenvectors() * sign.asDiagonal() * eig.eigenvectors().transpose();
    matrix_ = 0.5 * (matrix_ + matrix_.transpose()).eval();
  }

  Order order() const noexcept { return order_; }
  std::size_t size() const noexcept { return samples_.size(); }
  double radius() const noexcept { return radius_; }
  /// First N+1 positive zeros of J_nu.
  const std::vector<double>& zeros() const noexcept { return zeros_; }
  const std::vector<double>& sample_points() const noexcept { return samples_; }
  const std::vector<double>& frequency_points() const noexcept { return frequencies_; }
  double k_max() const noexcept { return frequencies_.back(); }
  const Eigen::MatrixXd& matrix() const noexcept { return matrix_; }
  /// max |C C - I| of the unprojected kernel.
  double raw_defect() const noexcept { return raw_defect_; }
  /// max |T T - I| of the stored matrix.
  double involution_defect() const {
    return max_abs(matrix_ * matrix_ - Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(size()), static_cast<Eigen::Index>(size())));
  }

  std::vector<double> forward(const std::vector<double>& samples) const {
    check_length(samples);
    Eigen::VectorXd f(size());
    for (std::size_t i = 0; i < size(); ++i) f[i] = samples[i] * radius_ / weights_[i];
    const Eigen::VectorXd g = matrix_ * f;
    std::vector<double> out(size());
    for (std::size_t m = 0; m < size(); ++m) out[m] = g[m] * weights_[m] / bandwidth_;
    return out;
  }

  std::vector<double> inverse(const std::vector<double>& spectrum) const {
    check_length(spectrum);
    Eigen::VectorXd f(size());
    for (std::size_t m = 0; m < size(); ++m) f[m] = spectrum[m] * bandwidth_ / weights_[m];
    const Eigen::VectorXd g = matrix_ * f;
    std::vector<double> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = g[i] * weights_[i] / radius_;
    return out;
  }

  /// Fourier-Bessel series coefficients: f(r) = sum_m c_m J_nu(k_m r).
  std::vector<double> series_coefficients(const std::vector<double>& spectrum) const {
    check_length(spectrum);
    std::vector<double> c(size());
    for (std::size_t m = 0; m < size(); ++m) c[m] = 2.0 * spectrum[m] / (radius_ * radius_ * weights_[m] * weights_[m]);
    return c;
  }

  /// Rows: target points; columns: modes. Maps a spectrum to values at the
  /// targets through the Fourier-Bessel series.
  Eigen::MatrixXd synthesis_matrix(const std::vector<double>& points) const {
    Eigen::MatrixXd b(static_cast<Eigen::Index>(points.size()), static_cast<Eigen::Index>(size()));
    for (std::size_t p = 0; p < points.size(); ++p) {
      if (!(points[p] >= 0.0 && points[p] <= radius_)) throw GridError("synthesis point outside [0, R]");
      for (std::size_t m = 0; m < size(); ++m) {
        b(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(m)) =
            2.0 / (radius_ * radius_ * weights_[m] * weights_[m]) * bessel_j(order_, frequencies_[m] * points[p]).value;
      }
    }
    return b;
  }

  double synthesize(const std::vector<double>& spectrum, double r) const {
    const auto c = series_coefficients(spectrum);
    if (!(r >= 0.0 && r <= radius_)) throw GridError("synthesis point outside [0, R]");
    double total = 0.0;
    for (std::size_t m = 0; m < size(); ++m) total += c[m] * bessel_j(order_, frequencies_[m] * r).value;
    return total;
  }

 private:
  static double max_abs(const Eigen::MatrixXd& a) { return a.cwiseAbs().maxCoeff(); }

  void check_length(const std::vector<double>& v) const {
    if (v.size() != size()) {
      throw LengthError("HankelPlan: expected " + std::to_string(size()) + " values, got " + std::to_string(v.size()));
    }
  }

  Order order_;
  double radius_;
  double bandwidth_ = 0.0;
  double raw_defect_ = 0.0;
  std::vector<double> zeros_;
  std::vector<double> weights_;
  std::vector<double> samples_;
  std::vector<double> frequencies_;
  Eigen::MatrixXd matrix_;
};

/// One HankelPlan per axis.
class NDPlan {
 public:
  explicit NDPlan(std::vector<HankelPlan> plans) : plans_(std::move(plans)) {
    if (plans_.empty()) throw LengthError("NDPlan: at least one axis required");
  }

  NDPlan(const std::vector<Order>& orders, std::size_t n_points, double radius) {
    if (orders.empty()) throw LengthError("NDPlan: at least one axis required");
    for (const Order& o : orders) plans_.emplace_back(o, n_points, radius);
  }

  std::size_t dims() const noexcept { return plans_.size(); }
  const HankelPlan& axis(std::size_t j) const { return plans_.at(j); }

  TensorGrid sample_grid() const {
    std::vector<std::vector<double>> axes;
    std::vector<double> radii;
    for (const auto& p : plans_) {
      axes.push_back(p.sample_points());
      radii.push_back(p.radius());
    }
    return TensorGrid::radial(std::move(axes), radii);
  }

  TensorGrid frequency_grid() const {
    std::vector<std::vector<double>> axes;
    std::vector<Interval> bounds;
    for (const auto& p : plans_) {
      axes.push_back(p.frequency_points());
      bounds.push_back({0.0, p.k_max()});
    }
    return TensorGrid(std::move(axes), std::move(bounds));
  }

 private:
  std::vector<HankelPlan> plans_;
};

namespace detail {

inline std::vector<std::size_t> resolve_axis_order(std::size_t dims, std::vector<std::size_t> axis_order) {
  if (axis_order.empty()) {
    axis_order.resize(dims);
    std::iota(axis_order.begin(), axis_order.end(), std::size_t{0});
  }
  std::vector<std::size_t> sorted = axis_order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    if (sorted.size() != dims || sorted[j] != j) throw LengthError("axis order must be a permutation of the axes");
  }
  return axis_order;
}

/// Applies `transform` to every line along `axis` of a row-major array.
inline void along_axis(std::vector<double>& values, const std::vector<std::size_t>& shape, std::size_t axis,
                       const std::function<std::vector<double>(const std::vector<double>&)>& transform,
                       std::size_t out_length) {
  std::size_t outer = 1;
  for (std::size_t j = 0; j < axis; ++j) outer *= shape[j];
  std::size_t inner = 1;
  for (std::size_t j = axis + 1; j < shape.size(); ++j) inner *= shape[j];
  const std::size_t n = shape[axis];
  std::vector<double> out(outer * out_length * inner);
  std::vector<double> line(n);
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t in = 0; in < inner; ++in) {
      for (std::size_t i = 0; i < n; ++i) line[i] = values[(o * n + i) * inner + in];
      const std::vector<double> t = transform(line);
      for (std::size_t i = 0; i < out_length; ++i) out[(o * out_length + i) * inner + in] = t[i];
    }
  }
  values = std::move(out);
}

inline void require_grid(const TensorGrid& grid, const NDPlan& plan, bool frequency) {
  if (grid.dims() != plan.dims()) throw GridError("field has " + std::to_string(grid.dims()) + " axes, plan has " +
                                                  std::to_string(plan.dims()));
  for (std::size_t j = 0; j < plan.dims(); ++j) {
    const auto& expected = frequency ? plan.axis(j).frequency_points() : plan.axis(j).sample_points();
    if (grid.axis(j) != expected) {
      throw GridError(std::string("field axis ") + std::to_string(j) + " does not match the plan " +
                      (frequency ? "frequency points" : "sample points"));
    }
  }
}

}  // namespace detail

/// Separable n-D transform: the 1-D forward transform along each axis.
inline SampledField forward_nd(const NDPlan& plan, const SampledField& field, std::vector<std::size_t> axis_order = {}) {
  detail::require_grid(field.grid(), plan, false);
  auto values = field.values();
  const auto shape = field.grid().shape();
  for (std::size_t j : detail::resolve_axis_order(plan.dims(), std::move(axis_order))) {
    detail::along_axis(values, shape, j, [&](const std::vector<double>& v) { return plan.axis(j).forward(v); }, shape[j]);
  }
  return SampledField(plan.frequency_grid(), std::move(values));
}

inline SampledField inverse_nd(const NDPlan& plan, const SampledField& spectrum,
                               std::vector<std::size_t> axis_order = {}) {
  detail::require_grid(spectrum.grid(), plan, true);
  auto values = spectrum.values();
  const auto shape = spectrum.grid().shape();
  for (std::size_t j : detail::resolve_axis_order(plan.dims(), std::move(axis_order))) {
    detail::along_axis(values, shape, j, [&](const std::vector<double>& v) { return plan.axis(j).inverse(v); }, shape[j]);
  }
  return SampledField(plan.sample_grid(), std::move(values));
}

/// Evaluates the Fourier-Bessel series of a spectrum on an arbitrary tensor
/// grid inside [0, R_j] on every axis.
inline SampledField synthesize_nd(const NDPlan& plan, const SampledField& spectrum, const TensorGrid& target) {
  detail::require_grid(spectrum.grid(), plan, true);
  if (target.dims() != plan.dims()) throw GridError("target grid axis count does not match the plan");
  auto values = spectrum.values();
  auto shape = spectrum.grid().shape();
  for (std::size_t j = 0; j < plan.dims(); ++j) {
    const Eigen::MatrixXd b = plan.axis(j).synthesis_matrix(target.axis(j));
    detail::along_axis(
        values, shape, j,
        [&](const std::vector<double>& v) {
          const Eigen::VectorXd r = b * Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
          return std::vector<double>(r.data(), r.data() + r.size());
        },
        target.axis(j).size());
    shape[j] = target.axis(j).size();
  }
  return SampledField(target, std::move(values));
}

struct DerivativeReport {
  double max_relative_error = 0.0;  // max |lhs - rhs| / max |rhs| over checked modes
  double max_abs_error = 0.0;
  std::size_t modes_checked = 0;
  double tail = 0.0;        // |f(r_N)| r_N^2
  bool tail_warning = false;
};

/// Compares forward(L f) with -k^2 forward(f) for k_m <= k_cut (default
/// half the largest frequency). The error is normwise over the checked modes.
inline DerivativeReport verify_derivative_property(const HankelPlan& plan, const std::vector<double>& samples,
                                                   const std::vector<double>& operator_samples, double k_cut = -1.0) {
  if (operator_samples.size() != samples.size()) throw LengthError("derivative check: sample lengths differ");
  if (k_cut < 0.0) k_cut = 0.5 * plan.k_max();
  const auto lhs = plan.forward(operator_samples);
  const auto base = plan.forward(samples);
  DerivativeReport report;
  double scale = 0.0;
  for (std::size_t m = 0; m < plan.size(); ++m) {
    const double k = plan.frequency_points()[m];
    if (k > k_cut) break;
    const double rhs = -k * k * base[m];
    scale = std::max(scale, std::abs(rhs));
    report.max_abs_error = std::max(report.max_abs_error, std::abs(lhs[m] - rhs));
    ++report.modes_checked;
  }
  report.max_relative_error = scale > 0.0 ? report.max_abs_error / scale : report.max_abs_error;
  const double r_last = plan.sample_points().back();
  report.tail = std::abs(samples.back()) * r_last * r_last;
  report.tail_warning = report.tail > 1e-12;
  return report;
}

enum class OrthogonalityFamily { bessel, spherical };

namespace detail {

/// Gauss-Legendre nodes and weights on [-1, 1].
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
  std::vector<double> x(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    x[static_cast<std::size_t>(i)] = -z;
    x[static_cast<std::size_t>(n - 1 - i)] = z;
    w[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(n - 1 - i)] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return {x, w};
}

inline double composite_gauss(const std::function<double(double)>& f, double a, double b, std::size_t panels) {
  static const auto rule = gauss_legendre(10);
  const double h = (b - a) / static_cast<double>(panels);
  double total = 0.0;
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = a + static_cast<double>(p) * h;
    const double mid = lo + 0.5 * h;
    double s = 0.0;
    for (std::size_t i = 0; i < rule.first.size(); ++i) s += rule.second[i] * f(mid + 0.5 * h * rule.first[i]);
    total += 0.5 * h * s;
  }
  return total;
}

}  // namespace detail

/// Truncated orthogonality integral for u != v, Cesaro-averaged over the
/// last 10 half-periods pi/|u-v| before R:
///   (1/W) int_{R-W}^{R} I(t) dt,  I(t) = int_0^t w(x) F(ux) F(vx) dx,
/// with w = x (bessel) or x^2 (spherical). Evaluated as one integral of the
/// integrand times a ramp weight, by composite Gauss-Legendre on n_quad panels.
inline double verify_orthogonality(OrthogonalityFamily family, Order order, double u, double v, double radius,
                                   std::size_t n_quad = 4000) {
  if (!(u > 0.0) || !(v > 0.0) || !std::isfinite(u) || !std::isfinite(v)) {
    throw DomainError("orthogonality: u and v must be positive");
  }
  if (u == v) throw DomainError("orthogonality: u == v is the delta term, not an integral");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("orthogonality: radius must be positive");
  if (n_quad < 1000) throw DomainError("orthogonality: n_quad must be at least 1000");
  const double window = std::min(radius, 10.0 * detail::kPi / std::abs(u - v));
  auto integrand = [&](double x) {
    if (family == OrthogonalityFamily::bessel) return x * bessel_j(order, u * x).value * bessel_j(order, v * x).value;
    return x * x * spherical_j(order, u * x).value * spherical_j(order, v * x).value;
  };
  const double knee = radius - window;
  const auto tail_panels = std::max<std::size_t>(1, static_cast<std::size_t>(n_quad * window / radius));
  const std::size_t head_panels = n_quad > tail_panels ? n_quad - tail_panels : 1;
  double total = 0.0;
  if (knee > 0.0) total += detail::composite_gauss(integrand, 0.0, knee, head_panels);
  total += detail::composite_gauss([&](double x) { return integrand(x) * (radius - x) / window; }, knee, radius,
                                   tail_panels);
  return total;
}

/// Solves (sum_j L_j + c) u = rhs by division in transform space.
/// Throws ResonanceError when c - sum_j k_j^2 vanishes at a frequency tuple.
inline SampledField solve_helmholtz_separable(const NDPlan& plan, const SampledField& rhs, double c) {
  if (!std::isfinite(c)) throw DomainError("helmholtz: c must be finite");
  SampledField spectrum = forward_nd(plan, rhs);
  const TensorGrid& grid = spectrum.grid();
  std::vector<double> values = spectrum.values();
  for (std::size_t flat = 0; flat < values.size(); ++flat) {
    const auto idx = grid.unravel(flat);
    double sum = 0.0;
    std::vector<double> freq;
    for (std::size_t j = 0; j < idx.size(); ++j) {
      freq.push_back(grid.axis(j)[idx[j]]);
      sum += freq.back() * freq.back();
    }
    const double symbol = c - sum;
    if (std::abs(symbol) <= 1e-12 * std::max(std::abs(c), sum)) {
      std::vector<std::size_t> one_based;
      for (std::size_t i : idx) one_based.push_back(i + 1);
      throw ResonanceError(one_based, freq);
    }
    values[flat] /= symbol;
  }
  return inverse_nd(plan, SampledField(grid, std::move(values)));
}

}  // namespace hankelnd

#endif  // HANKELND_HANKEL_HPP
