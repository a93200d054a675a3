#include <gtest/gtest.h>

#include <boost/math/special_functions/bessel.hpp>

#include <cmath>
#include <vector>

#include "hankelnd/hankel.hpp"
#include "hankelnd/operators.hpp"
#include "oracle.hpp"

namespace {

using namespace hankelnd;

// mpmath zeros of J_0.
constexpr double kJ0Zero1 = 2.4048255576957727686;
constexpr double kJ0Zero5 = 14.930917708487785948;

std::vector<double> sample(const HankelPlan& plan, const std::function<double(double)>& f) {
  std::vector<double> out;
  for (double r : plan.sample_points()) out.push_back(f(r));
  return out;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double e = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) e = std::max(e, std::abs(a[i] - b[i]));
  return e;
}

/// max |a - b| / max |b| over entries with k <= k_cut.
double resolved_error(const std::vector<double>& got, const std::vector<double>& want, const std::vector<double>& k,
                      double k_cut) {
  double err = 0.0, scale = 0.0;
  for (std::size_t m = 0; m < k.size() && k[m] <= k_cut; ++m) {
    err = std::max(err, std::abs(got[m] - want[m]));
    scale = std::max(scale, std::abs(want[m]));
  }
  return err / scale;
}

TEST(HankelPlan, Construction) {
  EXPECT_THROW(HankelPlan(Order(0), 3, 1.0), DomainError);
  EXPECT_THROW(HankelPlan(Order(0), 8, 0.0), DomainError);
  const HankelPlan p(Order(0), 8, 1.0);
  const auto& t = p.matrix();
  EXPECT_LT((t - t.transpose()).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LT(p.involution_defect(), 1e-10);
  EXPECT_GT(p.raw_defect(), 0.0);
  EXPECT_EQ(p.zeros().size(), 9u);

  const HankelPlan q(Order(0), 4, 1.0);
  EXPECT_NEAR(q.sample_points()[0], kJ0Zero1 / kJ0Zero5, 1e-15);
  EXPECT_NEAR(q.zeros()[4], kJ0Zero5, 1e-13);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(q.sample_points()[i], boost::math::cyl_bessel_j_zero(0.0, static_cast<int>(i) + 1) / kJ0Zero5, 1e-15);
  }
  for (double nu : {0.0, 1.0, 2.5}) {
    const HankelPlan r(Order(nu), 16, 3.0);
    EXPECT_NEAR(r.frequency_points()[0], boost::math::cyl_bessel_j_zero(nu, 1) / 3.0, 1e-14);
    for (std::size_t i = 0; i < r.size(); ++i) {
      EXPECT_GT(r.sample_points()[i], 0.0);
      EXPECT_LT(r.sample_points()[i], 3.0);
      if (i) {
        EXPECT_GT(r.sample_points()[i], r.sample_points()[i - 1]);
      }
    }
  }
}

TEST(HankelPlan, DiscreteOrthogonality) {
  for (double nu : {0.0, 1.0, 2.0}) {
    for (std::size_t n : {32u, 64u, 256u}) {
      const HankelPlan p(Order(nu), n, 1.0);
      EXPECT_LT(p.involution_defect(), 1e-10) << nu << " " << n;
      // The projection only moves the kernel by about its own defect.
      EXPECT_LT(p.raw_defect(), 1e-6);
    }
  }
}

TEST(HankelPlan, ZeroAndLength) {
  const HankelPlan p(Order(1), 16, 2.0);
  for (double v : p.forward(std::vector<double>(16, 0.0))) EXPECT_EQ(v, 0.0);
  for (double v : p.inverse(std::vector<double>(16, 0.0))) EXPECT_EQ(v, 0.0);
  EXPECT_THROW(p.forward(std::vector<double>(15)), LengthError);
  EXPECT_THROW(p.inverse(std::vector<double>(17)), LengthError);
}

TEST(HankelPlan, RoundTripAndLinearity) {
  oracle::Uniform rng(11);
  for (double nu : {0.0, 1.0, 2.0}) {
    const HankelPlan p(Order(nu), 64, 5.0);
    std::vector<double> x(64), y(64);
    for (auto& v : x) v = rng(-1, 1);
    for (auto& v : y) v = rng(-1, 1);
    EXPECT_LT(max_abs_diff(p.inverse(p.forward(x)), x), 1e-10);
    EXPECT_LT(max_abs_diff(p.forward(p.inverse(y)), y), 1e-10);
    const double a = rng(-3, 3), b = rng(-3, 3);
    std::vector<double> mix(64);
    for (std::size_t i = 0; i < 64; ++i) mix[i] = a * x[i] + b * y[i];
    const auto fx = p.forward(x), fy = p.forward(y), fm = p.forward(mix);
    for (std::size_t i = 0; i < 64; ++i) EXPECT_NEAR(fm[i], a * fx[i] + b * fy[i], 1e-12);
  }
}

TEST(HankelPlan, GaussianClosedForm) {
  const HankelPlan p(Order(0), 256, 12.0);
  const auto f = p.forward(sample(p, [](double r) { return std::exp(-r * r / 2); }));
  for (std::size_t m = 0; m < p.size() && p.frequency_points()[m] <= 6.0; ++m) {
    const double k = p.frequency_points()[m];
    const double want = std::exp(-k * k / 2);
    EXPECT_LT(std::abs(f[m] - want) / want, 1e-6) << k;
  }
}

TEST(HankelPlan, GaussianQuadratureOracle) {
  // Independent check of the closed form itself.
  auto j0 = [](double x) { return boost::math::cyl_bessel_j(0, x); };
  for (double k : {0.3, 1.0, 2.5, 4.0, 6.0}) {
    const double q = oracle::hankel_quadrature([](double r) { return std::exp(-r * r / 2); }, j0, k, 12.0);
    EXPECT_NEAR(q, std::exp(-k * k / 2), 1e-8) << k;
  }
}

TEST(HankelPlan, FirstOrderAgainstQuadrature) {
  const HankelPlan p(Order(1), 256, 15.0);
  auto f = [](double r) { return r * std::exp(-r * r); };
  const auto got = p.forward(sample(p, f));
  auto j1 = [](double x) { return boost::math::cyl_bessel_j(1, x); };
  std::vector<double> want;
  const auto& k = p.frequency_points();
  for (std::size_t m = 0; m < k.size() && k[m] <= 0.5 * p.k_max(); ++m) {
    want.push_back(k[m] / 4 * std::exp(-k[m] * k[m] / 4));
    if (m % 16 == 0 && k[m] < 12) {
      EXPECT_NEAR(oracle::hankel_quadrature(f, j1, k[m], 15.0), want.back(), 1e-10) << k[m];
    }
  }
  EXPECT_LT(resolved_error(got, want, k, 0.5 * p.k_max()), 1e-6);
}

TEST(HankelPlan, Synthesis) {
  const HankelPlan p(Order(2), 128, 10.0);
  auto f = [](double r) { return r * r * std::exp(-r * r); };
  const auto spectrum = p.forward(sample(p, f));
  for (double r : {0.0, 0.37, 1.0, 2.2, 5.0, 9.0}) EXPECT_NEAR(p.synthesize(spectrum, r), f(r), 1e-10) << r;
  EXPECT_THROW(p.synthesize(spectrum, 10.5), GridError);
}

NDPlan plan2(double nu1, double nu2, std::size_t n, double radius) {
  return NDPlan({HankelPlan(Order(nu1), n, radius), HankelPlan(Order(nu2), n, radius)});
}

TEST(ForwardND, OneAxisReduces) {
  const NDPlan plan({Order(1)}, 32, 4.0);
  const auto& p = plan.axis(0);
  const auto s = sample(p, [](double r) { return r * std::exp(-r * r); });
  const SampledField f(plan.sample_grid(), s);
  const auto out = forward_nd(plan, f);
  EXPECT_EQ(out.values(), p.forward(s));
  EXPECT_EQ(out.grid().axis(0), p.frequency_points());
}

TEST(ForwardND, SeparableProductAndAxisOrder) {
  const NDPlan plan = plan2(0, 1, 48, 8.0);
  auto g1 = [](double r) { return std::exp(-r * r); };
  auto g2 = [](double r) { return r * std::exp(-0.7 * r * r); };
  const auto s1 = sample(plan.axis(0), g1), s2 = sample(plan.axis(1), g2);
  const SampledField f(plan.sample_grid(), outer_product({s1, s2}));
  const auto out = forward_nd(plan, f);
  const auto want = outer_product({plan.axis(0).forward(s1), plan.axis(1).forward(s2)});
  EXPECT_LT(max_abs_diff(out.values(), want), 1e-12);
  EXPECT_LT(max_abs_diff(forward_nd(plan, f, {1, 0}).values(), out.values()), 1e-12);
  EXPECT_LT(max_abs_diff(inverse_nd(plan, out).values(), f.values()), 1e-10);
  EXPECT_THROW(forward_nd(plan, f, {0, 0}), LengthError);
  EXPECT_THROW(forward_nd(plan, out), GridError);
  EXPECT_THROW(inverse_nd(plan, f), GridError);

  const NDPlan plan3({Order(0), Order(2), Order(1)}, 12, 3.0);
  oracle::Uniform rng(3);
  std::vector<double> v(12 * 12 * 12);
  for (auto& x : v) x = rng(-1, 1);
  const SampledField r(plan3.sample_grid(), v);
  const auto a = forward_nd(plan3, r);
  EXPECT_LT(max_abs_diff(forward_nd(plan3, r, {2, 0, 1}).values(), a.values()), 1e-12);
  EXPECT_LT(max_abs_diff(forward_nd(plan3, r, {1, 2, 0}).values(), a.values()), 1e-12);
}

TEST(ForwardND, TwoDimensionalGaussian) {
  const NDPlan plan = plan2(0, 0, 128, 12.0);
  const TensorGrid g = plan.sample_grid();
  std::vector<double> v(g.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto p = g.point(i);
    v[i] = std::exp(-(p[0] * p[0] + p[1] * p[1]) / 2);
  }
  const auto out = forward_nd(plan, SampledField(g, v));
  const double cut = 0.5 * plan.axis(0).k_max();
  double err = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto k = out.grid().point(i);
    if (k[0] > cut || k[1] > cut) continue;
    const double want = std::exp(-(k[0] * k[0] + k[1] * k[1]) / 2);
    err = std::max(err, std::abs(out[i] - want));
    scale = std::max(scale, want);
  }
  EXPECT_LT(err / scale, 1e-5);
}

struct Profile {
  double p;
  double a;
};

// f = r^p exp(-a r^2) and the radial operator of order nu applied to it.
double profile(const Profile& q, double r) { return std::pow(r, q.p) * std::exp(-q.a * r * r); }
double profile_operator(const Profile& q, double nu, double r) {
  const double e = std::exp(-q.a * r * r);
  const double p = q.p, a = q.a;
  // f'' + f'/r - nu^2 f / r^2 with the r^(p-2) terms combined.
  return ((p * p - nu * nu) * std::pow(r, p - 2) - 4 * a * (p + 1) * std::pow(r, p) + 4 * a * a * std::pow(r, p + 2)) * e;
}

TEST(DerivativeProperty, DecayingProfiles) {
  for (double nu : {0.0, 1.0, 2.0}) {
    const HankelPlan plan(Order(nu), 256, 12.0);
    for (Profile q : {Profile{nu, 1.0}, Profile{nu, 0.5}, Profile{nu + 2, 1.0}, Profile{nu, 2.0}, Profile{nu + 4, 1.5}}) {
      const auto f = sample(plan, [&](double r) { return profile(q, r); });
      const auto lf = sample(plan, [&](double r) { return profile_operator(q, nu, r); });
      const DerivativeReport rep = verify_derivative_property(plan, f, lf);
      EXPECT_LT(rep.max_relative_error, 1e-4) << nu << " " << q.p << " " << q.a;
      EXPECT_FALSE(rep.tail_warning);
      EXPECT_GT(rep.modes_checked, 100u);
    }
  }
}

TEST(DerivativeProperty, Examples) {
  const HankelPlan p0(Order(0), 256, 10.0);
  const Profile g{0, 1};
  const auto rep = verify_derivative_property(p0, sample(p0, [&](double r) { return profile(g, r); }),
                                              sample(p0, [&](double r) { return profile_operator(g, 0, r); }), 5.0);
  EXPECT_LT(rep.max_relative_error, 1e-4);
  // Pointwise on k <= 5 as well, against the closed form -k^2/2 exp(-k^2/4).
  const auto lhs = p0.forward(sample(p0, [&](double r) { return profile_operator(g, 0, r); }));
  for (std::size_t m = 0; m < p0.size() && p0.frequency_points()[m] <= 5.0; ++m) {
    const double k = p0.frequency_points()[m];
    const double want = -k * k / 2 * std::exp(-k * k / 4);
    EXPECT_LT(std::abs(lhs[m] - want) / std::abs(want), 1e-4) << k;
  }

  const auto zero = verify_derivative_property(p0, std::vector<double>(256, 0.0), std::vector<double>(256, 0.0));
  EXPECT_EQ(zero.max_relative_error, 0.0);

  const HankelPlan p1(Order(1), 256, 10.0);
  const Profile h{1, 1};
  EXPECT_LT(verify_derivative_property(p1, sample(p1, [&](double r) { return profile(h, r); }),
                                       sample(p1, [&](double r) { return profile_operator(h, 1, r); }), 5.0)
                .max_relative_error,
            1e-4);
  EXPECT_THROW(verify_derivative_property(p1, std::vector<double>(256), std::vector<double>(255)), LengthError);
}

TEST(DerivativeProperty, TailWarning) {
  const HankelPlan p(Order(0), 64, 3.0);
  const Profile wide{0, 0.1};
  const auto rep = verify_derivative_property(p, sample(p, [&](double r) { return profile(wide, r); }),
                                              sample(p, [&](double r) { return profile_operator(wide, 0, r); }));
  EXPECT_TRUE(rep.tail_warning);
}

TEST(DerivativeProperty, OperatorsModuleAndPolynomialInTransformSpace) {
  // L f from the operators module on a product of basis modes, then the
  // 2-D transform: spectrum must equal -(k1^2 + k2^2) times the original.
  const NDPlan plan = plan2(0, 1, 64, 10.0);
  const double k1 = plan.axis(0).frequency_points()[3];
  const double k2 = plan.axis(1).frequency_points()[5];
  const MultiOrder order(Family::bessel_first, {Order(0), Order(1)});
  const TensorGrid g = plan.sample_grid();
  std::vector<double> f(g.size()), lf(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto p = g.point(i);
    f[i] = eval_product(order, p, {k1, k2});
    lf[i] = apply_sum(order, p, {k1, k2});
  }
  const auto F = forward_nd(plan, SampledField(g, f));
  const auto LF = forward_nd(plan, SampledField(g, lf));
  double err = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < F.size(); ++i) {
    const auto k = F.grid().point(i);
    const double want = -(k[0] * k[0] + k[1] * k[1]) * F[i];
    err = std::max(err, std::abs(LF[i] - want));
    scale = std::max(scale, std::abs(want));
  }
  EXPECT_LT(err / scale, 1e-4);
}

TEST(Orthogonality, BesselCesaroMeansDecrease) {
  double prev = INFINITY;
  for (double radius : {50.0, 100.0, 200.0}) {
    const double v = std::abs(verify_orthogonality(OrthogonalityFamily::bessel, Order(0), 1.0, 3.0, radius, 4000));
    EXPECT_LT(v, prev) << radius;
    prev = v;
  }
  EXPECT_LT(prev, 1e-5);
}

TEST(Orthogonality, SphericalCesaroMeansSmall) {
  double prev = INFINITY;
  for (double radius : {50.0, 100.0, 200.0}) {
    const double v = std::abs(verify_orthogonality(OrthogonalityFamily::spherical, Order(0), 1.0, 2.0, radius, 4000));
    EXPECT_LE(v, prev + 1e-12) << radius;
    EXPECT_LT(v, 1e-6);
    prev = v;
  }
}

TEST(Orthogonality, Validation) {
  EXPECT_THROW(verify_orthogonality(OrthogonalityFamily::bessel, Order(0), 1.0, 1.0, 50, 1000), DomainError);
  EXPECT_THROW(verify_orthogonality(OrthogonalityFamily::bessel, Order(0), 1.0, 2.0, 50, 999), DomainError);
  EXPECT_THROW(verify_orthogonality(OrthogonalityFamily::bessel, Order(0), -1.0, 2.0, 50, 1000), DomainError);
}

TEST(Orthogonality, MatchesAdaptiveQuadrature) {
  // Cesaro mean equals the ramp-weighted integral; check it with the
  // independent Gauss-Kronrod oracle and Boost's J.
  const double u = 1.0, v = 3.0, radius = 50.0;
  const double w = 10 * oracle::pi / 2.0;
  const oracle::Quadrature quad(1e-15, 1e-13);
  auto g = [&](double x) {
    const double ramp = x < radius - w ? 1.0 : (radius - x) / w;
    return ramp * x * boost::math::cyl_bessel_j(0, u * x) * boost::math::cyl_bessel_j(0, v * x);
  };
  double want = 0.0;
  for (double a = 0.0; a < radius; a += 1.0) want += quad(g, a, std::min(radius, a + 1.0));
  EXPECT_NEAR(verify_orthogonality(OrthogonalityFamily::bessel, Order(0), u, v, radius, 4000), want, 1e-11);
}

TEST(Helmholtz, BasisModeAndZero) {
  const NDPlan plan = plan2(0, 2, 64, 6.0);
  const double c = -1.5;
  const TensorGrid g = plan.sample_grid();
  const SampledField zero(g, std::vector<double>(g.size(), 0.0));
  for (double v : solve_helmholtz_separable(plan, zero, c).values()) EXPECT_EQ(v, 0.0);

  // Discrete basis mode: the field whose spectrum is a unit vector.
  const std::size_t m1 = 2, m2 = 7;
  std::vector<double> unit(g.size(), 0.0);
  unit[m1 * 64 + m2] = 1.0;
  const SampledField mode = inverse_nd(plan, SampledField(plan.frequency_grid(), unit));
  const double k1 = plan.axis(0).frequency_points()[m1], k2 = plan.axis(1).frequency_points()[m2];
  std::vector<double> rhs = mode.values();
  for (double& v : rhs) v *= c - k1 * k1 - k2 * k2;
  const SampledField u = solve_helmholtz_separable(plan, SampledField(g, rhs), c);
  EXPECT_LT(max_abs_diff(u.values(), mode.values()), 1e-10);

  // Sampled continuous mode J_0(k1 r1) J_2(k2 r2) is reproduced to the kernel defect.
  const MultiOrder order(Family::bessel_first, {Order(0), Order(2)});
  std::vector<double> cont(g.size()), crhs(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    cont[i] = eval_product(order, g.point(i), {k1, k2});
    crhs[i] = (c - k1 * k1 - k2 * k2) * cont[i];
  }
  const SampledField uc = solve_helmholtz_separable(plan, SampledField(g, crhs), c);
  EXPECT_LT(max_abs_diff(uc.values(), cont), 1e-6);
}

TEST(Helmholtz, Resonance) {
  const NDPlan plan({Order(0)}, 16, 2.0);
  const double k3 = plan.axis(0).frequency_points()[2];
  const TensorGrid g = plan.sample_grid();
  try {
    solve_helmholtz_separable(plan, SampledField(g, std::vector<double>(16, 1.0)), k3 * k3);
    FAIL() << "expected resonance";
  } catch (const ResonanceError& e) {
    EXPECT_EQ(e.index(), (std::vector<std::size_t>{3}));
    EXPECT_EQ(e.frequencies()[0], k3);
  }
}

TEST(Helmholtz, GaussianResidual) {
  const NDPlan plan({Order(0)}, 256, 20.0);
  const double c = -1.0;
  const TensorGrid g = plan.sample_grid();
  std::vector<double> rhs;
  for (double r : g.axis(0)) rhs.push_back(std::exp(-r * r));
  const SampledField u = solve_helmholtz_separable(plan, SampledField(g, rhs), c);
  const SampledField spectrum = forward_nd(plan, u);
  const double h = 0.01;
  std::vector<double> x;
  for (int i = 1; i <= 600; ++i) x.push_back(i * h);
  const TensorGrid uniform({x});
  const SampledField uu = synthesize_nd(plan, spectrum, uniform);
  const SampledField lu = apply_axis_numeric({0, Order(0), Family::bessel_first}, uu, h);
  double err = 0.0, scale = 0.0;
  for (std::size_t i = 1; i + 1 < x.size(); ++i) {
    const double want = std::exp(-x[i] * x[i]);
    err = std::max(err, std::abs(lu[i] + c * uu[i] - want));
    scale = std::max(scale, want);
  }
  EXPECT_LT(err / scale, 1e-3);
}

}  // namespace
