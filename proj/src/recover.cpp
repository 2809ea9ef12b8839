#include "recover.hpp"

#include <cmath>

#include "cubic.hpp"
#include "curvature.hpp"
#include "errors.hpp"

namespace specgeo {

namespace {

void check_volume_order(double volume, GroupOrder n) {
  if (!(volume > 0.0) || !std::isfinite(volume)) {
    raise(Errc::bad_parameters, "volume must be a positive finite number");
  }
  if (n.n < 1) raise(Errc::bad_parameters, "group order must be a positive integer");
}

}  // namespace

Triple products_from_curvatures(const Triple& curvatures) {
  const double k12 = curvatures[0], k13 = curvatures[1], k23 = curvatures[2];
  return {0.5 * (k13 + k23), 0.5 * (k12 + k23), 0.5 * (k12 + k13)};
}

ChristoffelTriple recover_from_curvature_and_volume(const Triple& curvatures, double volume,
                                                    GroupOrder n, const Tolerances& tol) {
  check_volume_order(volume, n);
  if (!all_finite(curvatures)) raise(Errc::bad_parameters, "curvatures must be finite");

  const Triple p = products_from_curvatures(curvatures);
  const double pmax = std::max({std::abs(p[0]), std::abs(p[1]), std::abs(p[2])});
  bool tiny[3];
  int tiny_count = 0;
  for (int i = 0; i < 3; ++i) {
    tiny[i] = std::abs(p[i]) <= tol.deg * pmax;
    tiny_count += tiny[i];
  }

  if (tiny_count == 1 || tiny_count == 3) {
    // products (0, eps, c) have no real preimage, and mu = (0,0,0) is not a metric
    raise(Errc::inconsistent_curvature, "curvature products do not match any Christoffel triple");
  }

  if (tiny_count == 2) {
    // degenerate Ricci: the surviving product is p2 = mu2*mu3 and the volume
    // fixes p1; mu2, mu3 solve x^2 - p1 x + p2
    double p2 = 0.0;
    for (int i = 0; i < 3; ++i) {
      if (!tiny[i]) p2 = p[i];
    }
    if (p2 <= 0.0) {
      raise(Errc::inconsistent_curvature, "degenerate case requires a positive product");
    }
    const double p1 = kBackgroundVolume / (volume * static_cast<double>(n.n) * p2);
    std::array<double, 2> roots;
    try {
      roots = quadratic_roots_sum_product(p1, p2, tol);
    } catch (const Error&) {
      raise(Errc::inconsistent_curvature, "degenerate quadratic has no real roots");
    }
    return ChristoffelTriple::of(Triple{0.0, roots[0], roots[1]}, tol);
  }

  // non-degenerate: sign analysis; the product of all three is p3^2 >= 0
  const int negatives = (p[0] < 0.0) + (p[1] < 0.0) + (p[2] < 0.0);
  if (negatives != 0 && negatives != 2) {
    raise(Errc::inconsistent_curvature, "curvature product signs admit no real Christoffel triple");
  }
  const Triple sq{p[0] * p[1] / p[2], p[0] * p[2] / p[1], p[1] * p[2] / p[0]};
  for (double v : sq) {
    if (v < 0.0) raise(Errc::inconsistent_curvature, "curvature products force mu_i^2 < 0");
  }
  Triple mu{std::sqrt(sq[0]), std::sqrt(sq[1]), std::sqrt(sq[2])};
  if (negatives == 2) {
    // the two negative products share exactly one index; that symbol is negative
    if (p[0] < 0.0 && p[1] < 0.0) mu[0] = -mu[0];       // pairs (1,2),(1,3) share mu1
    else if (p[0] < 0.0 && p[2] < 0.0) mu[1] = -mu[1];  // pairs (1,2),(2,3) share mu2
    else mu[2] = -mu[2];                                // pairs (1,3),(2,3) share mu3
  }

  ChristoffelTriple out;
  try {
    out = ChristoffelTriple::of(mu, tol);
  } catch (const Error&) {
    raise(Errc::inconsistent_curvature, "no sign assignment yields pairwise-positive sums");
  }
  // loose consistency check between the two inputs; the products alone
  // already determine the metric here
  const double vol_claimed = volume * static_cast<double>(n.n);
  const double vol_actual = covering_volume(out, tol);
  if (std::abs(vol_actual - vol_claimed) > 1e-6 * std::max(vol_actual, vol_claimed)) {
    raise(Errc::inconsistent_curvature,
          "volume is inconsistent with the metric determined by the curvatures");
  }
  return out;
}

ChristoffelTriple unique_degenerate_metric(double sc, double volume, GroupOrder n,
                                           const Tolerances& tol) {
  check_volume_order(volume, n);
  if (!(sc > 0.0) || !std::isfinite(sc)) {
    raise(Errc::bad_parameters, "scalar curvature must be a positive finite number");
  }
  const double beta = 2.0 * kBackgroundVolume / (sc * volume * static_cast<double>(n.n));
  double disc = beta * beta - 2.0 * sc;
  const double scale = beta * beta + 2.0 * sc;
  if (disc < 0.0) {
    if (disc < -tol.disc * scale) {
      raise(Errc::existence_violated,
            "(32 pi^2 / (S V n))^2 - 2 S < 0: no degenerate metric exists");
    }
    disc = 0.0;
  }
  const double sq = std::sqrt(disc);
  const double hi = 0.5 * (beta + sq);
  const double lo = 0.5 * sc / hi;  // (beta - sq)/2 without cancellation
  return ChristoffelTriple::of(Triple{0.0, lo, hi}, tol);
}

}  // namespace specgeo
