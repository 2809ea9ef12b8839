#pragma once

#include <array>

#include "multiset.hpp"
#include "tolerances.hpp"

namespace specgeo {

/// Real roots of x^2 - s*x + p given the root sum s and product p, via the
/// cancellation-free quadratic formula.  Discriminants negative beyond
/// tol.disc (scaled) raise complex_roots; small negatives are clamped.
/// Returned ascending.
std::array<double, 2> quadratic_roots_sum_product(double s, double p, const Tolerances& tol = {});

/// Real roots of x^3 - p1*x^2 + p2*x - p3, i.e. the multiset with elementary
/// symmetric polynomials (p1, p2, p3).  Requires the cubic discriminant to be
/// nonnegative within tol.disc (scaled); otherwise raises complex_roots.
///
/// Uses the trigonometric three-real-roots method with long-double internals.
/// Near-multiple roots are snapped to the exact double/triple-root closed
/// forms when the separation is below the root noise radius
/// sqrt(eps*|f|/|f''|), which is the resolution limit already imposed by
/// rounding the coefficients; without the snap, a multiple root would come
/// back split by O(sqrt(eps)).
Triple elementary_symmetric_roots(double p1, double p2, double p3, const Tolerances& tol = {});

}  // namespace specgeo
