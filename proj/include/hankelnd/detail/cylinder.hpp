#ifndef HANKELND_DETAIL_CYLINDER_HPP
#define HANKELND_DETAIL_CYLINDER_HPP

// Cylinder functions J_nu, Y_nu and their first derivatives for real nu >= 0, x > 0.
//
//   x < 2               J: ascending series; Y: Temme's series at |mu| <= 1/2
//   2 <= x <= 50 + nu^2 Steed's method (CF1 for J'/J, CF2 for p + iq)
//   x > 50 + nu^2       Hankel asymptotic expansion
//
// Orders above the reduced order mu are reached by downward recurrence of J
// (inside CF1) and upward recurrence of Y, both stable directions.

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "hankelnd/errors.hpp"

namespace hankelnd::detail {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kEps = std::numeric_limits<double>::epsilon();

struct CylinderPair {
  double j;
  double jp;
  double y;
  double yp;
};

struct ValueSlope {
  double value;
  double slope;
};

inline double asymptotic_threshold(double nu) { return 50.0 + nu * nu; }

/// J_nu(x) and J_nu'(x) by the ascending series. Intended for x^2/4 small
/// relative to the first few terms; used for x < 2.
inline ValueSlope j_series(double nu, double x) {
  const double half = 0.5 * x;
  const double prefactor = nu < 100.0 ? std::pow(half, nu) / std::tgamma(nu + 1.0)
                                      : std::exp(nu * std::log(half) - std::lgamma(nu + 1.0));
  const double q = -half * half;
  double term = 1.0;
  double sum = 1.0;
  double dsum = nu;
  for (int k = 1; k < 300; ++k) {
    term *= q / (k * (nu + k));
    sum += term;
    dsum += term * (2.0 * k + nu);
    if (std::abs(term) * (2.0 * k + nu + 1.0) < 0.25 * kEps * std::abs(sum)) break;
  }
  return {prefactor * sum, prefactor * dsum / x};
}

// Coefficients c_k of 1/Gamma(z) = sum_k c_k z^k, k = 1..26.
inline constexpr std::array<double, 27> kReciprocalGamma = {
    0.0,
    1.0,
    0.57721566490153286061,
    -0.65587807152025388108,
    -0.042002635034095235529,
    0.1665386113822914895,
    -0.042197734555544336748,
    -0.0096219715278769735621,
    0.0072189432466630995424,
    -0.0011651675918590651121,
    -0.00021524167411495097282,
    0.00012805028238811618615,
    -0.000020134854780788238656,
    -1.2504934821426706573e-6,
    1.1330272319816958824e-6,
    -2.0563384169776071035e-7,
    6.1160951044814158179e-9,
    5.0020076444692229301e-9,
    -1.1812745704870201446e-9,
    1.0434267116911005105e-10,
    7.782263439905071254e-12,
    -3.6968056186422057082e-12,
    5.100370287454475979e-13,
    -2.0583260535665067832e-14,
    -5.3481225394230179824e-15,
    1.2267786282382607902e-15,
    -1.1812593016974587695e-16,
};

struct TemmeGammas {
  double gam1;   // (1/G(1-mu) - 1/G(1+mu)) / (2 mu)
  double gam2;   // (1/G(1-mu) + 1/G(1+mu)) / 2
  double gampl;  // 1/G(1+mu)
  double gammi;  // 1/G(1-mu)
};

/// Valid for |mu| <= 1/2; the even/odd parts of the 1/Gamma series avoid the
/// cancellation in gam1 near mu = 0.
inline TemmeGammas temme_gammas(double mu) {
  const double mu2 = mu * mu;
  double gam1 = 0.0;
  double gam2 = 0.0;
  double power = 1.0;
  for (std::size_t k = 0; k + 2 < kReciprocalGamma.size(); k += 2) {
    gam2 += kReciprocalGamma[k + 1] * power;
    gam1 -= kReciprocalGamma[k + 2] * power;
    power *= mu2;
  }
  return {gam1, gam2, gam2 - mu * gam1, gam2 + mu * gam1};
}

/// Steed/Temme evaluation (the classic bessjy scheme). Requires x > 0.
inline CylinderPair steed_temme(double nu, double x) {
  constexpr int kMaxIterations = 200000;
  constexpr double kTiny = 1e-300;
  constexpr double kRescale = 1e250;
  const double tol = 2.0 * kEps;

  const int nl = x < 2.0 ? static_cast<int>(nu + 0.5)
                         : std::max(0, static_cast<int>(nu - x + 1.5));
  const double mu = nu - nl;
  const double mu2 = mu * mu;
  const double xi = 1.0 / x;
  const double xi2 = 2.0 * xi;
  const double w = xi2 / kPi;

  // CF1: h = J_nu'/J_nu, modified Lentz.
  int sign = 1;
  double h = std::max(nu * xi, kTiny);
  double b = xi2 * nu;
  double d = 0.0;
  double c = h;
  int i = 1;
  for (; i <= kMaxIterations; ++i) {
    b += xi2;
    d = b - d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b - 1.0 / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = c * d;
    h *= del;
    if (d < 0.0) sign = -sign;
    if (std::abs(del - 1.0) <= tol) break;
  }
  if (i > kMaxIterations) throw ConvergenceError("continued fraction for J'/J did not converge");

  double rjl = sign * 1e-30;
  double rjpl = h * rjl;
  double rjl1 = rjl;
  double rjp1 = rjpl;
  double fact = nu * xi;
  for (int l = nl; l >= 1; --l) {
    const double next = fact * rjl + rjpl;
    fact -= xi;
    rjpl = fact * next - rjl;
    rjl = next;
    if (std::abs(rjl) > kRescale) {
      rjl /= kRescale;
      rjpl /= kRescale;
      rjl1 /= kRescale;
      rjp1 /= kRescale;
    }
  }
  if (rjl == 0.0) rjl = kEps;
  const double f = rjpl / rjl;

  double rjmu;
  double rymu;
  double rymup;
  double ry1;
  if (x < 2.0) {
    const double x2 = 0.5 * x;
    const double pimu = kPi * mu;
    const double fact_a = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
    double dd = -std::log(x2);
    double e = mu * dd;
    const double fact_b = std::abs(e) < kEps ? 1.0 : std::sinh(e) / e;
    const TemmeGammas g = temme_gammas(mu);
    double ff = 2.0 / kPi * fact_a * (g.gam1 * std::cosh(e) + g.gam2 * fact_b * dd);
    e = std::exp(e);
    double p = e / (g.gampl * kPi);
    double q = 1.0 / (e * kPi * g.gammi);
    const double pimu2 = 0.5 * pimu;
    const double fact_c = std::abs(pimu2) < kEps ? 1.0 : std::sin(pimu2) / pimu2;
    const double r = kPi * pimu2 * fact_c * fact_c;
    double cc = 1.0;
    dd = -x2 * x2;
    double sum = ff + r * q;
    double sum1 = p;
    int k = 1;
    for (; k <= kMaxIterations; ++k) {
      ff = (k * ff + p + q) / (k * static_cast<double>(k) - mu2);
      cc *= dd / k;
      p /= (k - mu);
      q /= (k + mu);
      const double del = cc * (ff + r * q);
      sum += del;
      sum1 += cc * p - k * del;
      if (std::abs(del) < (1.0 + std::abs(sum)) * kEps) break;
    }
    if (k > kMaxIterations) throw ConvergenceError("Temme series for Y did not converge");
    rymu = -sum;
    ry1 = -sum1 * xi2;
    rymup = mu * xi * rymu - ry1;
    rjmu = w / (rymup - f * rymu);
  } else {
    // CF2: p + iq = (J' + iY') / (J + iY), Steed's algorithm.
    double a = 0.25 - mu2;
    double p = -0.5 * xi;
    double q = 1.0;
    const double br = 2.0 * x;
    double bi = 2.0;
    double fct = a * xi / (p * p + q * q);
    double cr = br + q * fct;
    double ci = bi + p * fct;
    double den = br * br + bi * bi;
    double dr = br / den;
    double di = -bi / den;
    double dlr = cr * dr - ci * di;
    double dli = cr * di + ci * dr;
    double temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    int k = 1;
    for (; k <= kMaxIterations; ++k) {
      a += 2 * k;
      bi += 2.0;
      dr = a * dr + br;
      di = a * di + bi;
      if (std::abs(dr) + std::abs(di) < kTiny) dr = kTiny;
      fct = a / (cr * cr + ci * ci);
      cr = br + cr * fct;
      ci = bi - ci * fct;
      if (std::abs(cr) + std::abs(ci) < kTiny) cr = kTiny;
      den = dr * dr + di * di;
      dr /= den;
      di /= -den;
      dlr = cr * dr - ci * di;
      dli = cr * di + ci * dr;
      temp = p * dlr - q * dli;
      q = p * dli + q * dlr;
      p = temp;
      if (std::abs(dlr - 1.0) + std::abs(dli) <= tol) break;
    }
    if (k > kMaxIterations) throw ConvergenceError("continued fraction CF2 did not converge");
    const double gam = (p - f) / q;
    rjmu = std::sqrt(w / ((p - f) * gam + q));
    rjmu = std::copysign(rjmu, rjl);
    rymu = rjmu * gam;
    rymup = p * rymu + q * rjmu;
    ry1 = mu * xi * rymu - rymup;
  }

  const double scale = rjmu / rjl;
  CylinderPair out{};
  out.j = rjl1 * scale;
  out.jp = rjp1 * scale;
  for (int l = 1; l <= nl; ++l) {
    const double next = (mu + l) * xi2 * ry1 - rymu;
    rymu = ry1;
    ry1 = next;
  }
  out.y = rymu;
  out.yp = nu * xi * rymu - ry1;
  return out;
}

/// Hankel asymptotic expansion: returns {J_nu(x), Y_nu(x)}.
inline std::pair<double, double> hankel_asymptotic(double nu, double x) {
  const double mu = 4.0 * nu * nu;
  double p = 1.0;
  double q = 0.0;
  double term = 1.0;
  double previous = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 400; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (k * 8.0 * x);
    const double size = std::abs(term);
    if (size > previous) break;  // expansion started to diverge
    previous = size;
    const int half = k / 2;
    const double signed_term = (half % 2 == 0) ? term : -term;
    if (k % 2 == 0) {
      p += signed_term;
    } else {
      q += signed_term;
    }
    if (size < 0.5 * kEps * std::abs(p)) break;
  }
  const double phase = (0.5 * nu + 0.25) * kPi;
  const double cphase = std::cos(phase);
  const double sphase = std::sin(phase);
  const double cx = std::cos(x);
  const double sx = std::sin(x);
  const double cchi = cx * cphase + sx * sphase;
  const double schi = sx * cphase - cx * sphase;
  const double amplitude = std::sqrt(2.0 / (kPi * x));
  return {amplitude * (p * cchi - q * schi), amplitude * (p * schi + q * cchi)};
}

inline CylinderPair asymptotic_pair(double nu, double x) {
  const auto [j0, y0] = hankel_asymptotic(nu, x);
  const auto [j1, y1] = hankel_asymptotic(nu + 1.0, x);
  const double ratio = nu / x;
  return {j0, ratio * j0 - j1, y0, ratio * y0 - y1};
}

// Large x with nu well below x: expand at the fractional order and recur
// upward, which is stable in the oscillatory region. CF1 loses digits near
// zeros there.
inline bool use_upward_recurrence(double nu, double x) { return x >= 50.0 && nu <= 0.5 * x; }

inline CylinderPair recurrence_pair(double nu, double x) {
  const double mu = nu - std::floor(nu);
  auto [j0, y0] = hankel_asymptotic(mu, x);
  auto [j1, y1] = hankel_asymptotic(mu + 1.0, x);
  for (double order = mu + 1.0; order <= nu + 0.5; order += 1.0) {
    const double factor = 2.0 * order / x;
    const double j2 = factor * j1 - j0;
    const double y2 = factor * y1 - y0;
    j0 = j1;
    j1 = j2;
    y0 = y1;
    y1 = y2;
  }
  const double ratio = nu / x;
  return {j0, ratio * j0 - j1, y0, ratio * y0 - y1};
}

/// J_nu and J_nu' for x > 0.
inline ValueSlope cylinder_j(double nu, double x) {
  if (x < 2.0) return j_series(nu, x);
  if (x > asymptotic_threshold(nu)) {
    const CylinderPair pair = asymptotic_pair(nu, x);
    return {pair.j, pair.jp};
  }
  const CylinderPair pair = use_upward_recurrence(nu, x) ? recurrence_pair(nu, x) : steed_temme(nu, x);
  return {pair.j, pair.jp};
}

/// J_nu, J_nu', Y_nu, Y_nu' for x > 0.
inline CylinderPair cylinder_jy(double nu, double x) {
  if (x > asymptotic_threshold(nu)) return asymptotic_pair(nu, x);
  if (use_upward_recurrence(nu, x)) return recurrence_pair(nu, x);
  CylinderPair pair = steed_temme(nu, x);
  if (x < 2.0) {
    const ValueSlope j = j_series(nu, x);
    pair.j = j.value;
    pair.jp = j.slope;
  }
  return pair;
}

}  // namespace hankelnd::detail

#endif  // HANKELND_DETAIL_CYLINDER_HPP
