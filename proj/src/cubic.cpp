#include "cubic.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "errors.hpp"

namespace specgeo {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Monic {
  // x^3 + a x^2 + b x + c in long double
  long double a, b, c;

  long double f(long double x) const { return ((x + a) * x + b) * x + c; }
  long double fp(long double x) const { return (3.0L * x + 2.0L * a) * x + b; }

  long double newton(long double x) const {
    for (int i = 0; i < 2; ++i) {
      const long double d = fp(x);
      if (d == 0.0L) break;
      x -= f(x) / d;
    }
    return x;
  }
};

Triple from_ld(long double r0, long double r1, long double r2) {
  return sorted(Triple{static_cast<double>(r0), static_cast<double>(r1), static_cast<double>(r2)});
}

}  // namespace

std::array<double, 2> quadratic_roots_sum_product(double s, double p, const Tolerances& tol) {
  double disc = s * s - 4.0 * p;
  const double scale = s * s + std::abs(4.0 * p);
  if (disc < 0.0) {
    if (disc < -tol.disc * scale) raise(Errc::complex_roots, "quadratic discriminant is negative");
    disc = 0.0;
  }
  const double sq = std::sqrt(disc);
  // pick the addition that avoids cancellation, recover the other root from p
  const double r = (s >= 0.0) ? 0.5 * (s + sq) : 0.5 * (s - sq);
  double other = (r != 0.0) ? p / r : s - r;
  if (other > r) return {r, other};
  return {other, r};
}

Triple elementary_symmetric_roots(double p1, double p2, double p3, const Tolerances& tol) {
  if (!std::isfinite(p1) || !std::isfinite(p2) || !std::isfinite(p3)) {
    raise(Errc::invalid_argument, "symmetric polynomial inputs must be finite");
  }

  if (p3 == 0.0) {
    // x (x^2 - p1 x + p2): keep the zero root exact
    const auto q = quadratic_roots_sum_product(p1, p2, tol);
    return sorted(Triple{0.0, q[0], q[1]});
  }

  // discriminant gate: three real roots iff Delta >= 0
  {
    const double t1 = p1 * p1 * p2 * p2;
    const double t2 = 4.0 * p2 * p2 * p2;
    const double t3 = 4.0 * p1 * p1 * p1 * p3;
    const double t4 = 18.0 * p1 * p2 * p3;
    const double t5 = 27.0 * p3 * p3;
    const double delta = t1 - t2 - t3 + t4 - t5;
    const double scale = std::abs(t1) + std::abs(t2) + std::abs(t3) + std::abs(t4) + std::abs(t5);
    if (delta < -tol.disc * std::max(scale, 1e-300)) {
      raise(Errc::complex_roots, "cubic discriminant is negative: no real multiset");
    }
  }

  const Monic m{-static_cast<long double>(p1), static_cast<long double>(p2),
                -static_cast<long double>(p3)};
  const long double a = m.a, b = m.b, c = m.c;

  const long double amb = a * a - 3.0L * b;  // = 9Q = half the sum of squared root gaps
  if (amb <= 4e-12L * (a * a + 3.0L * std::abs(b))) {
    const long double r = -a / 3.0L;
    return from_ld(r, r, r);
  }

  const auto double_root_form = [&] {
    // for roots (r, r, s): 9c - ab = 2r(r-s)^2 and a^2 - 3b = (r-s)^2
    const long double r = (9.0L * c - a * b) / (2.0L * amb);
    const long double s = m.newton(-a - 2.0L * r);
    return from_ld(r, r, s);
  };

  const long double q = amb / 9.0L;
  const long double big_r = (2.0L * a * a * a - 9.0L * a * b + 27.0L * c) / 54.0L;
  const long double t = big_r / std::sqrt(q * q * q);
  if (t >= 1.0L - 1e-10L || t <= -1.0L + 1e-10L) return double_root_form();

  const long double theta = std::acos(t);
  const long double sq = std::sqrt(q);
  const long double third = std::numbers::pi_v<long double> * 2.0L / 3.0L;
  long double r0 = m.newton(-2.0L * sq * std::cos(theta / 3.0L) - a / 3.0L);
  long double r1 = m.newton(-2.0L * sq * std::cos(theta / 3.0L + third) - a / 3.0L);
  long double r2 = m.newton(-2.0L * sq * std::cos(theta / 3.0L - third) - a / 3.0L);
  if (r0 > r1) std::swap(r0, r1);
  if (r1 > r2) std::swap(r1, r2);
  if (r0 > r1) std::swap(r0, r1);

  // snap to the double-root form when the closest pair sits inside the noise
  // radius of the rounded coefficients
  long double gap, mid, far;
  if (r1 - r0 <= r2 - r1) {
    gap = r1 - r0; mid = 0.5L * (r0 + r1); far = r2;
  } else {
    gap = r2 - r1; mid = 0.5L * (r1 + r2); far = r0;
  }
  const long double fscale =
      std::abs(mid * mid * mid) + std::abs(a * mid * mid) + std::abs(b * mid) + std::abs(c);
  const long double sep = std::max(std::abs(mid - far), std::max(16.0L * gap, 1e-300L));
  if (gap <= 8.0L * std::sqrt(kEps * fscale / sep)) return double_root_form();

  return from_ld(r0, r1, r2);
}

}  // namespace specgeo
