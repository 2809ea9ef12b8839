#pragma once

#include "metric.hpp"

namespace specgeo {

/// Closed-form curvature data of the left-invariant metric with Christoffel
/// triple mu.  Every scalar is a polynomial in the elementary symmetric
/// polynomials p1, p2, p3, so permutation invariance is structural.
struct CurvatureProfile {
  Triple principal{};   ///< sectional curvatures K12, K13, K23 (as a multiset)
  Triple ricci{};       ///< Ricci eigenvalues (as a multiset)
  double sc = 0.0;      ///< scalar curvature, 2 p2
  double r2 = 0.0;      ///< |R|^2
  double ric2 = 0.0;    ///< |Ric|^2
  double rrr = 0.0;     ///< (R,R,R)
  double ric_rr = 0.0;  ///< (Ric;R,R)
  double ricric_r = 0.0;   ///< (Ric;Ric;R)
  double ricricric = 0.0;  ///< (Ric Ric Ric)
  double grad_r2 = 0.0;    ///< |grad R|^2
  double grad_ric2 = 0.0;  ///< |grad Ric|^2, identically grad_r2 / 4
};

Triple principal_curvatures(const ChristoffelTriple& c);

Triple ricci_eigenvalues(const ChristoffelTriple& c);

CurvatureProfile curvature_profile(const ChristoffelTriple& c);

}  // namespace specgeo
