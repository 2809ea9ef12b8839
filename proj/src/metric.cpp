#include "metric.hpp"

#include <cmath>

#include "errors.hpp"

namespace specgeo {

MetricEigenvalues MetricEigenvalues::of(double x, double y, double z) {
  return of(Triple{x, y, z});
}

MetricEigenvalues MetricEigenvalues::of(const Triple& v) {
  if (!all_finite(v)) raise(Errc::bad_parameters, "metric eigenvalues must be finite");
  for (double x : v) {
    if (x <= 0.0) raise(Errc::bad_parameters, "metric eigenvalues must be strictly positive");
  }
  return MetricEigenvalues{sorted(v)};
}

ChristoffelTriple ChristoffelTriple::of(const Triple& mu, const Tolerances& tol) {
  if (!all_finite(mu)) raise(Errc::invalid_christoffel, "Christoffel symbols must be finite");
  const Triple m = sorted(mu);
  // m[0]+m[1] is the smallest pairwise sum; sums in (0, tol.eq] are rejected
  // because every downstream formula divides by them.
  if (!(m[0] + m[1] > tol.eq)) {
    raise(Errc::invalid_christoffel, "pairwise sums of the Christoffel triple must be positive");
  }
  ChristoffelTriple c;
  c.mu = m;
  c.p1 = m[0] + m[1] + m[2];
  c.p2 = m[0] * m[1] + m[0] * m[2] + m[1] * m[2];
  c.p3 = m[0] * m[1] * m[2];
  return c;
}

const char* metric_class_name(MetricClass c) {
  switch (c) {
    case MetricClass::ConstantCurvature: return "ConstantCurvature";
    case MetricClass::BergerNonConstant: return "BergerNonConstant";
    case MetricClass::Generic: return "Generic";
  }
  return "Unknown";
}

ChristoffelTriple eigenvalues_to_christoffel(const MetricEigenvalues& e, const Tolerances& tol) {
  const double e1 = e.values[0], e2 = e.values[1], e3 = e.values[2];
  // vol(g)/16pi^2 = eta1 eta2 eta3, and mu = (16pi^2/vol) M^{-1} eta^2 with
  // M^{-1} = 1/2 [[-1,1,1],[1,-1,1],[1,1,-1]].
  const double s = std::sqrt(e1 * e2 * e3);
  const Triple mu{0.5 * (-e1 + e2 + e3) / s,
                  0.5 * (e1 - e2 + e3) / s,
                  0.5 * (e1 + e2 - e3) / s};
  return ChristoffelTriple::of(mu, tol);
}

MetricEigenvalues christoffel_to_eigenvalues(const ChristoffelTriple& c, const Tolerances& tol) {
  const Triple& m = c.mu;
  if (!(m[0] + m[1] > tol.eq)) {
    raise(Errc::invalid_christoffel, "pairwise sums of the Christoffel triple must be positive");
  }
  const Triple e{1.0 / ((m[0] + m[1]) * (m[0] + m[2])),
                 1.0 / ((m[1] + m[0]) * (m[1] + m[2])),
                 1.0 / ((m[2] + m[0]) * (m[2] + m[1]))};
  return MetricEigenvalues::of(e);
}

double covering_volume(const ChristoffelTriple& c, const Tolerances& tol) {
  const Triple& m = c.mu;
  if (!(m[0] + m[1] > tol.eq)) {
    raise(Errc::invalid_christoffel, "pairwise sums of the Christoffel triple must be positive");
  }
  return kBackgroundVolume / ((m[0] + m[1]) * (m[0] + m[2]) * (m[1] + m[2]));
}

MetricClass classify_metric(const MetricEigenvalues& e, const Tolerances& tol) {
  const Triple& v = e.values;
  const bool lo = close_rel(v[0], v[1], tol.eq);
  const bool hi = close_rel(v[1], v[2], tol.eq);
  if (lo && hi) return MetricClass::ConstantCurvature;
  if (lo || hi) return MetricClass::BergerNonConstant;
  return MetricClass::Generic;
}

}  // namespace specgeo
