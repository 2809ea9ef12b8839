#pragma once

#include <array>
#include <optional>

#include "metric.hpp"
#include "rational.hpp"

namespace specgeo::exact {

using RationalTriple = std::array<Rational, 3>;

/// (mu1+mu2)(mu1+mu3)(mu2+mu3) = p1 p2 - p3.  Raises invalid_christoffel when
/// a pairwise sum is not positive.
Rational pair_sum_product(const RationalTriple& mu);

/// Coefficient of pi^2 in the covering volume: 16 / ((mu1+mu2)(mu1+mu3)(mu2+mu3)).
Rational covering_volume_pi2(const RationalTriple& mu);

/// Coefficients of pi^2 in (a0, a1, a2, a3) for the quotient by a group of
/// order n.
std::array<Rational, 4> heat_invariants_pi2(const RationalTriple& mu, GroupOrder n);

/// Exact Christoffel triple of rational metric eigenvalues; nullopt when
/// sqrt(e1 e2 e3) is irrational.
std::optional<RationalTriple> christoffel_from_eigenvalues(const RationalTriple& e);

}  // namespace specgeo::exact
