#include "molecule.hpp"

#include <cmath>

#include "errors.hpp"

namespace specgeo {

namespace {
constexpr std::uint64_t kSo3Order = 2;  // |pi_1(SO(3))|
}

MomentsOfInertia MomentsOfInertia::of(double i1, double i2, double i3) {
  const Triple v{i1, i2, i3};
  if (!all_finite(v)) raise(Errc::bad_parameters, "moments of inertia must be finite");
  for (double x : v) {
    if (x <= 0.0) raise(Errc::bad_parameters, "moments of inertia must be strictly positive");
  }
  return MomentsOfInertia{sorted(v)};
}

MetricEigenvalues moments_to_eigenvalues(const MomentsOfInertia& m) {
  return MetricEigenvalues::of(2.0 / m.values[0], 2.0 / m.values[1], 2.0 / m.values[2]);
}

HeatInvariants rotational_invariants(const MomentsOfInertia& m, const Tolerances& tol) {
  const ChristoffelTriple c = eigenvalues_to_christoffel(moments_to_eigenvalues(m), tol);
  return heat_invariants(c, GroupOrder{kSo3Order}, tol);
}

MomentsOfInertia recover_moments(const HeatInvariants& h, const Tolerances& tol) {
  const RecoveryReport report = invert_spectrum(h, GroupOrder{kSo3Order}, tol);
  const Triple& e = report.eigenvalues.values;
  for (double x : e) {
    if (!(x > 0.0)) raise(Errc::not_realizable, "recovered eigenvalues are not positive");
  }
  return MomentsOfInertia::of(2.0 / e[0], 2.0 / e[1], 2.0 / e[2]);
}

}  // namespace specgeo
