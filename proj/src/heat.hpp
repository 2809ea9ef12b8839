#pragma once

#include <string>

#include "metric.hpp"

namespace specgeo {

/// First four coefficients of the small-time heat-trace expansion of the
/// quotient.  a0 is the quotient volume; a_m scales as length^(3-2m).
struct HeatInvariants {
  double a0 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;
};

/// Derived inversion coefficients:
///   A = 3 a1 / a0                  (= p2 when the data comes from a metric)
///   B = 16 pi^2 / (a0 |Gamma|)     (= p1 p2 - p3, always positive)
///   C = (27 a1^2 - 30 a0 a2)/(4 a0^2)   (= p1 p3)
///   D = 7! a3 / a0
struct AbcdCoefficients {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  double D = 0.0;
};

enum class RecoveryBranch {
  AZero,
  ANegative,
  APositiveCNonneg,
  CZero,
  APositiveCNegDistinctRoots,
  APositiveCNegSharedRoot,
  DiscriminantZero,
};

const char* branch_name(RecoveryBranch b);

/// Result of recovering the symmetric polynomials from (A, B, C, D).
/// a3_required marks the branches that actually consumed D; on every other
/// branch the output is independent of a3 bit for bit.
struct PRecovery {
  double p1 = 0.0;
  double p2 = 0.0;
  double p3 = 0.0;
  RecoveryBranch branch = RecoveryBranch::AZero;
  bool a3_required = false;
  bool shared_root_warning = false;  ///< both q1 roots passed the q2 residual test
};

struct RecoveryReport {
  ChristoffelTriple christoffel;
  MetricEigenvalues eigenvalues;
  RecoveryBranch branch = RecoveryBranch::AZero;
  bool a3_required = false;
  bool degenerate_ricci = false;
  bool shared_root_warning = false;
};

enum class SpectralVerdict {
  LocallyIsometric,
  NotLocallyIsometric,
  InvariantsDiffer,
};

const char* verdict_name(SpectralVerdict v);

struct SpectralComparison {
  SpectralVerdict verdict = SpectralVerdict::InvariantsDiffer;
  std::string note;
};

/// Forward map: the four heat invariants of the quotient of the metric with
/// Christoffel triple c by a group of order n.
HeatInvariants heat_invariants(const ChristoffelTriple& c, GroupOrder n,
                               const Tolerances& tol = {});

AbcdCoefficients abcd_coefficients(const HeatInvariants& h, GroupOrder n);

/// Recover (p1, p2, p3) from the inversion coefficients, dispatching on the
/// sign pattern of A and C:
///   A ~ 0          -> p1 = -C/B
///   A < 0          -> p1 = (B - sqrt(B^2+4AC)) / (2A)
///   A > 0, C ~ 0   -> p1 = B/A, p3 = 0 exactly
///   A > 0, C > 0   -> p1 = (B + sqrt(B^2+4AC)) / (2A)
///   A > 0, C < 0   -> both q1 roots are positive; p1 is selected as the root
///                     of q1(x) = Ax^2 - Bx - C at which the second quadratic
///                     q2 (built from D) has residual below tol.root, except
///                     in the proportional case C = -A^2 where
///                     p1 = (B + sqrt(B^2-4A^3)) / (2A), and the zero-
///                     discriminant case where p1 = B/(2A).
PRecovery recover_p(const AbcdCoefficients& abcd, const Tolerances& tol = {});

/// The multiset with prescribed elementary symmetric polynomials, i.e. the
/// real roots of x^3 - p1 x^2 + p2 x - p3.  Raises complex_roots when the
/// discriminant is negative beyond tolerance and invalid_christoffel when the
/// roots fail the pairwise-sum constraint.
ChristoffelTriple symmetric_to_multiset(double p1, double p2, double p3,
                                        const Tolerances& tol = {});

/// Full inverse map from heat invariants and fundamental-group order to the
/// metric, up to local isometry.
RecoveryReport invert_spectrum(const HeatInvariants& h, GroupOrder n,
                               const Tolerances& tol = {});

/// Decide whether two (heat invariants, group order) records describe locally
/// isometric metrics.  Different invariant 4-tuples are InvariantsDiffer;
/// identical ones are resolved by inverting both sides, which can disagree
/// only when the orders differ.
SpectralComparison compare_spectra(const HeatInvariants& h1, GroupOrder n1,
                                   const HeatInvariants& h2, GroupOrder n2,
                                   const Tolerances& tol = {});

}  // namespace specgeo
