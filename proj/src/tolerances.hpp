#pragma once

namespace specgeo {

/// Shared tolerance context passed to every operation that makes a
/// floating-point decision.  The inverse maps are algebraically exact, so
/// these exist only to absorb roundoff; each entry notes the scale it is
/// applied against.
struct Tolerances {
  double eq = 1e-9;        ///< multiset equality, relative to the larger entry
  double disc = 1e-10;     ///< discriminant sign tests, scaled by the term-magnitude sum
  double root = 1e-8;      ///< polynomial residual acceptance, scaled by |coeff|*|x|^k sums
  double rt = 1e-9;        ///< roundtrip and cross-formula comparisons, relative
  double branch_a = 1e-10; ///< A treated as zero when |A| <= branch_a*(|B|+|C|+1)
  double branch_c = 1e-10; ///< C treated as zero when |C| <= branch_c*(A^2+B+1)
  double prop = 1e-9;      ///< proportional-case test |C+A^2| <= prop*A^2
  double deg = 1e-9;       ///< curvature-product degeneracy, relative to the largest product
};

}  // namespace specgeo
