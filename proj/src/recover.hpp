#pragma once

#include "metric.hpp"

namespace specgeo {

/// Invert the principal-curvature relation: given (K12, K13, K23) return the
/// candidate products (mu1*mu2, mu1*mu3, mu2*mu3) = 1/2 M K with
/// M = [[0,1,1],[1,0,1],[1,1,0]].  Pure linear algebra, never fails.
Triple products_from_curvatures(const Triple& curvatures);

/// Recover the Christoffel triple from the principal curvatures together
/// with the quotient volume and fundamental-group order.  In the
/// non-degenerate case the products determine mu_i^2 and the signs are forced
/// by positivity of two symbols; the volume enters only in the degenerate
/// case (one mu zero), where it pins p1 = 16 pi^2/(vol*n*p2).
ChristoffelTriple recover_from_curvature_and_volume(const Triple& curvatures, double volume,
                                                    GroupOrder n, const Tolerances& tol = {});

/// The unique left-invariant metric with degenerate Ricci tensor realizing
/// scalar curvature sc > 0 and quotient volume volume > 0, when
/// (32 pi^2/(sc*volume*n))^2 >= 2*sc; otherwise raises existence_violated.
ChristoffelTriple unique_degenerate_metric(double sc, double volume, GroupOrder n,
                                           const Tolerances& tol = {});

}  // namespace specgeo
