#pragma once

#include "heat.hpp"
#include "metric.hpp"

namespace specgeo {

/// Principal moments of inertia of a rigid body, 0 < I1 <= I2 <= I3, in any
/// consistent unit system.  A body is spherical / symmetric / asymmetric
/// according to the multiplicity pattern, which matches the metric class of
/// the image eigenvalues.
struct MomentsOfInertia {
  Triple values{};

  static MomentsOfInertia of(double i1, double i2, double i3);
};

/// The left-invariant metric on SO(3) a rigid body induces: eta_j^2 = 2/I_j.
/// The factor 2 converts from the paper-side -B normalization to the
/// background -B/2 used everywhere in this library.
MetricEigenvalues moments_to_eigenvalues(const MomentsOfInertia& m);

/// Heat invariants of (SO(3), g_I); the configuration space is SO(3), so the
/// fundamental group order is 2.
HeatInvariants rotational_invariants(const MomentsOfInertia& m, const Tolerances& tol = {});

/// Invert rotational data back to the moments: invert_spectrum at order 2,
/// then I_j = 2/eta_j^2 sorted ascending.
MomentsOfInertia recover_moments(const HeatInvariants& h, const Tolerances& tol = {});

}  // namespace specgeo
