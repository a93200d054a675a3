#ifndef HANKELND_TENSOR_HPP
#define HANKELND_TENSOR_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hankelnd/bessel.hpp"
#include "hankelnd/errors.hpp"

namespace hankelnd {

enum class Family { bessel_first, bessel_second, spherical_first, spherical_second, legendre };

inline const char* family_name(Family family) {
  switch (family) {
    case Family::bessel_first: return "bessel";
    case Family::bessel_second: return "bessel2";
    case Family::spherical_first: return "spherical";
    case Family::spherical_second: return "spherical2";
    case Family::legendre: return "legendre";
  }
  return "unknown";
}

/// Order of one axis: an Order for the Bessel families, a LegendreIndex otherwise.
using AxisIndex = std::variant<Order, LegendreIndex>;

/// Orders of a tensor-product function. One family for all axes.
class MultiOrder {
 public:
  MultiOrder(Family family, std::vector<Order> orders) : family_(family) {
    if (family == Family::legendre) throw DomainError("MultiOrder: legendre axes need LegendreIndex entries");
    if (orders.empty()) throw LengthError("MultiOrder: at least one axis required");
    for (const Order& o : orders) axes_.emplace_back(o);
  }

  explicit MultiOrder(std::vector<LegendreIndex> indices) : family_(Family::legendre) {
    if (indices.empty()) throw LengthError("MultiOrder: at least one axis required");
    for (const LegendreIndex& i : indices) axes_.emplace_back(i);
  }

  Family family() const noexcept { return family_; }
  std::size_t size() const noexcept { return axes_.size(); }
  const AxisIndex& operator[](std::size_t j) const { return axes_.at(j); }
  const std::vector<AxisIndex>& axes() const noexcept { return axes_; }

  /// Order value of a Bessel-family axis.
  double nu(std::size_t j) const {
    const Order* o = std::get_if<Order>(&axes_.at(j));
    if (!o) throw DomainError("MultiOrder: legendre axis has no real order");
    return o->value();
  }

  MultiOrder permuted(const std::vector<std::size_t>& perm) const {
    if (perm.size() != size()) throw LengthError("MultiOrder: permutation length mismatch");
    MultiOrder out = *this;
    for (std::size_t j = 0; j < perm.size(); ++j) out.axes_[j] = axes_.at(perm[j]);
    return out;
  }

 private:
  Family family_;
  std::vector<AxisIndex> axes_;
};

/// Scalar function of `family` at k*x, with derivatives taken in x.
inline EvalResult axis_factor(Family family, const AxisIndex& index, double x, double k = 1.0) {
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("scale must be positive and finite");
  const double t = k * x;
  EvalResult r{};
  if (family == Family::legendre) {
    const LegendreIndex* li = std::get_if<LegendreIndex>(&index);
    if (!li) throw DomainError("legendre axis needs a LegendreIndex");
    r = assoc_legendre(*li, t);
  } else {
    const Order* o = std::get_if<Order>(&index);
    if (!o) throw DomainError("Bessel-family axis needs an Order");
    switch (family) {
      case Family::bessel_first: r = bessel_j(*o, t); break;
      case Family::bessel_second: r = bessel_y(*o, t); break;
      case Family::spherical_first: r = spherical_j(*o, t); break;
      default: r = spherical_y(*o, t); break;
    }
  }
  if (k != 1.0) {
    r.first_derivative *= k;
    r.second_derivative *= k * k;
  }
  return r;
}

namespace detail {

inline std::vector<double> unit_scale(std::size_t n, const std::vector<double>& scale) {
  if (scale.empty()) return std::vector<double>(n, 1.0);
  if (scale.size() != n) throw LengthError("scale length does not match the number of axes");
  return scale;
}

}  // namespace detail

/// prod_j F_j(k_j x_j).
inline double eval_product(const MultiOrder& order, const std::vector<double>& point,
                           const std::vector<double>& scale = {}) {
  if (point.size() != order.size()) throw LengthError("eval_product: point length does not match orders");
  const std::vector<double> k = detail::unit_scale(order.size(), scale);
  double result = 1.0;
  for (std::size_t j = 0; j < point.size(); ++j) {
    result *= axis_factor(order.family(), order[j], point[j], k[j]).value;
  }
  return result;
}

/// Closed bounds an axis lives in.
struct Interval {
  double lo;
  double hi;
};

/// Tensor grid: strictly increasing samples per axis inside per-axis bounds.
class TensorGrid {
 public:
  /// Bounds default to the sample range.
  explicit TensorGrid(std::vector<std::vector<double>> axes) : axes_(std::move(axes)) {
    for (const auto& a : axes_) {
      if (a.empty()) throw GridError("TensorGrid: empty axis");
      bounds_.push_back({a.front(), a.back()});
    }
    validate();
  }

  TensorGrid(std::vector<std::vector<double>> axes, std::vector<Interval> bounds)
      : axes_(std::move(axes)), bounds_(std::move(bounds)) {
    if (bounds_.size() != axes_.size()) throw LengthError("TensorGrid: bounds count does not match axes");
    validate();
  }

  /// Radial axes with samples in (0, R_j).
  static TensorGrid radial(std::vector<std::vector<double>> axes, const std::vector<double>& radii) {
    if (radii.size() != axes.size()) throw LengthError("TensorGrid: radius count does not match axes");
    std::vector<Interval> bounds;
    for (std::size_t j = 0; j < axes.size(); ++j) {
      if (!(radii[j] > 0.0) || !std::isfinite(radii[j])) throw GridError("TensorGrid: radius must be positive");
      for (double x : axes[j]) {
        if (!(x > 0.0 && x < radii[j])) throw GridError("TensorGrid: radial sample outside (0, R)");
      }
      bounds.push_back({0.0, radii[j]});
    }
    return TensorGrid(std::move(axes), std::move(bounds));
  }

  /// `count` equally spaced samples from lo to hi inclusive.
  static std::vector<double> linspace(double lo, double hi, std::size_t count) {
    if (count < 2) throw GridError("linspace: need at least two samples");
    std::vector<double> out(count);
    const double h = (hi - lo) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) out[i] = lo + static_cast<double>(i) * h;
    out.back() = hi;
    return out;
  }

  std::size_t dims() const noexcept { return axes_.size(); }
  const std::vector<double>& axis(std::size_t j) const { return axes_.at(j); }
  const std::vector<std::vector<double>>& axes() const noexcept { return axes_; }
  const Interval& bounds(std::size_t j) const { return bounds_.at(j); }
  double radius(std::size_t j) const { return bounds_.at(j).hi; }

  std::vector<std::size_t> shape() const {
    std::vector<std::size_t> s;
    for (const auto& a : axes_) s.push_back(a.size());
    return s;
  }

  std::size_t size() const noexcept {
    std::size_t n = 1;
    for (const auto& a : axes_) n *= a.size();
    return n;
  }

  /// Row-major strides, axis 0 slowest.
  std::vector<std::size_t> strides() const {
    std::vector<std::size_t> s(axes_.size(), 1);
    for (std::size_t j = axes_.size(); j-- > 1;) s[j - 1] = s[j] * axes_[j].size();
    return s;
  }

  std::vector<std::size_t> unravel(std::size_t flat) const {
    std::vector<std::size_t> idx(axes_.size());
    for (std::size_t j = axes_.size(); j-- > 0;) {
      idx[j] = flat % axes_[j].size();
      flat /= axes_[j].size();
    }
    return idx;
  }

  std::vector<double> point(std::size_t flat) const {
    const auto idx = unravel(flat);
    std::vector<double> p(idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) p[j] = axes_[j][idx[j]];
    return p;
  }

  bool operator==(const TensorGrid& other) const {
    if (axes_ != other.axes_ || bounds_.size() != other.bounds_.size()) return false;
    for (std::size_t j = 0; j < bounds_.size(); ++j) {
      if (bounds_[j].lo != other.bounds_[j].lo || bounds_[j].hi != other.bounds_[j].hi) return false;
    }
    return true;
  }

 private:
  void validate() const {
    if (axes_.empty()) throw GridError("TensorGrid: at least one axis required");
    for (std::size_t j = 0; j < axes_.size(); ++j) {
      const auto& a = axes_[j];
      if (a.empty()) throw GridError("TensorGrid: empty axis " + std::to_string(j));
      const Interval& b = bounds_[j];
      if (!(b.lo <= b.hi)) throw GridError("TensorGrid: bad bounds on axis " + std::to_string(j));
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (!std::isfinite(a[i])) throw GridError("TensorGrid: non-finite sample");
        if (a[i] < b.lo || a[i] > b.hi) throw GridError("TensorGrid: sample outside axis bounds");
        if (i > 0 && !(a[i] > a[i - 1])) throw GridError("TensorGrid: samples must be strictly increasing");
      }
    }
  }

  std::vector<std::vector<double>> axes_;
  std::vector<Interval> bounds_;
};

/// Values on a TensorGrid, row-major with axis 0 slowest. Optional per-point
/// flags mark boundary samples produced by one-sided stencils.
class SampledField {
 public:
  SampledField(TensorGrid grid, std::vector<double> values, std::vector<std::uint8_t> flags = {})
      : grid_(std::move(grid)), values_(std::move(values)), flags_(std::move(flags)) {
    if (values_.size() != grid_.size()) throw LengthError("SampledField: value count does not match grid");
    if (!flags_.empty() && flags_.size() != values_.size()) throw LengthError("SampledField: flag count mismatch");
    for (double v : values_) {
      if (!std::isfinite(v)) throw DomainError("SampledField: values must be finite");
    }
  }

  const TensorGrid& grid() const noexcept { return grid_; }
  const std::vector<double>& values() const noexcept { return values_; }
  const std::vector<std::uint8_t>& flags() const noexcept { return flags_; }
  bool flagged(std::size_t flat) const { return !flags_.empty() && flags_.at(flat) != 0; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t flat) const { return values_.at(flat); }

  double at(const std::vector<std::size_t>& idx) const {
    const auto s = grid_.strides();
    if (idx.size() != s.size()) throw LengthError("SampledField: index rank mismatch");
    std::size_t flat = 0;
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (idx[j] >= grid_.axis(j).size()) throw LengthError("SampledField: index out of range");
      flat += idx[j] * s[j];
    }
    return values_[flat];
  }

 private:
  TensorGrid grid_;
  std::vector<double> values_;
  std::vector<std::uint8_t> flags_;
};

/// Outer product of per-axis vectors, row-major. Multiplies in the same
/// order as eval_product so entries agree bitwise.
inline std::vector<double> outer_product(const std::vector<std::vector<double>>& factors) {
  std::vector<double> acc{1.0};
  for (const auto& f : factors) {
    std::vector<double> next(acc.size() * f.size());
    for (std::size_t a = 0; a < acc.size(); ++a) {
      for (std::size_t i = 0; i < f.size(); ++i) next[a * f.size() + i] = acc[a] * f[i];
    }
    acc = std::move(next);
  }
  return acc;
}

inline SampledField eval_on_grid(const MultiOrder& order, const TensorGrid& grid,
                                 const std::vector<double>& scale = {}) {
  if (grid.dims() != order.size()) throw LengthError("eval_on_grid: grid axes do not match orders");
  const std::vector<double> k = detail::unit_scale(order.size(), scale);
  std::vector<std::vector<double>> factors(order.size());
  for (std::size_t j = 0; j < order.size(); ++j) {
    for (double x : grid.axis(j)) factors[j].push_back(axis_factor(order.family(), order[j], x, k[j]).value);
  }
  return SampledField(grid, outer_product(factors));
}

}  // namespace hankelnd

#endif  // HANKELND_TENSOR_HPP
