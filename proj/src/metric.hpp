#pragma once

#include <cstdint>
#include <numbers>

#include "multiset.hpp"
#include "tolerances.hpp"

namespace specgeo {

/// Volume of the background bi-invariant metric (round 3-sphere of radius 2,
/// i.e. the metric induced by -1/2 times the Killing form).  All eigenvalues
/// in this library are taken relative to that normalization.
inline constexpr double kBackgroundVolume = 16.0 * std::numbers::pi * std::numbers::pi;

/// Order of the fundamental group of the quotient.
struct GroupOrder {
  std::uint64_t n = 1;
};

/// Multiset of metric eigenvalues eta_1^2 <= eta_2^2 <= eta_3^2 relative to
/// the background metric.  Fixes a left-invariant metric up to isometry.
struct MetricEigenvalues {
  Triple values{};

  static MetricEigenvalues of(double x, double y, double z);
  static MetricEigenvalues of(const Triple& v);
};

/// Multiset of Milnor-frame Christoffel symbols together with its elementary
/// symmetric polynomials.  Valid iff every pairwise sum mu_i + mu_j is
/// strictly positive, which is equivalent to positivity of the recovered
/// metric eigenvalues and implies p1 > 0.
struct ChristoffelTriple {
  Triple mu{};
  double p1 = 0.0;
  double p2 = 0.0;
  double p3 = 0.0;

  static ChristoffelTriple of(const Triple& mu, const Tolerances& tol = {});
};

enum class MetricClass {
  ConstantCurvature,
  BergerNonConstant,
  Generic,
};

const char* metric_class_name(MetricClass c);

ChristoffelTriple eigenvalues_to_christoffel(const MetricEigenvalues& e,
                                             const Tolerances& tol = {});

MetricEigenvalues christoffel_to_eigenvalues(const ChristoffelTriple& c,
                                             const Tolerances& tol = {});

/// Volume of the covering metric on S^3: 16 pi^2 / ((mu1+mu2)(mu1+mu3)(mu2+mu3)).
/// The quotient volume is this divided by the group order.
double covering_volume(const ChristoffelTriple& c, const Tolerances& tol = {});

/// Multiplicity pattern of the eigenvalues under the relative tolerance tol.eq.
MetricClass classify_metric(const MetricEigenvalues& e, const Tolerances& tol = {});

}  // namespace specgeo
