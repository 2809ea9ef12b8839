#include "curvature.hpp"

namespace specgeo {

Triple principal_curvatures(const ChristoffelTriple& c) {
  const double p12 = c.mu[0] * c.mu[1];
  const double p13 = c.mu[0] * c.mu[2];
  const double p23 = c.mu[1] * c.mu[2];
  return sorted(Triple{-p12 + p13 + p23, p12 - p13 + p23, p12 + p13 - p23});
}

Triple ricci_eigenvalues(const ChristoffelTriple& c) {
  return sorted(Triple{2.0 * c.mu[1] * c.mu[2], 2.0 * c.mu[0] * c.mu[2], 2.0 * c.mu[0] * c.mu[1]});
}

CurvatureProfile curvature_profile(const ChristoffelTriple& c) {
  const double p1 = c.p1, p2 = c.p2, p3 = c.p3;
  CurvatureProfile out;
  out.principal = principal_curvatures(c);
  out.ricci = ricci_eigenvalues(c);
  out.sc = 2.0 * p2;
  out.r2 = 12.0 * p2 * p2 - 32.0 * p1 * p3;
  out.ric2 = 4.0 * p2 * p2 - 8.0 * p1 * p3;
  out.rrr = 8.0 * (p2 * p2 * p2 - 24.0 * p3 * p3);
  out.ric_rr = -48.0 * p3 * p3 + 8.0 * p2 * p2 * p2 - 16.0 * p1 * p2 * p3;
  out.ricric_r = 8.0 * (p1 * p2 * p3 - 6.0 * p3 * p3);
  out.ricricric = 24.0 * p3 * p3 + 8.0 * p2 * p2 * p2 - 24.0 * p1 * p2 * p3;
  const double grad = -9.0 * p3 * p3 - 4.0 * p1 * p1 * p1 * p3 + p1 * p1 * p2 * p2 +
                      10.0 * p1 * p2 * p3 - 2.0 * p2 * p2 * p2;
  out.grad_r2 = 32.0 * grad;
  out.grad_ric2 = 8.0 * grad;
  return out;
}

}  // namespace specgeo
