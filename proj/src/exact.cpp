#include "exact.hpp"

#include <limits>

#include "errors.hpp"

namespace specgeo::exact {

namespace {

struct SymmetricPolys {
  Rational p1, p2, p3;
};

SymmetricPolys sym(const RationalTriple& m) {
  return {m[0] + m[1] + m[2],
          m[0] * m[1] + m[0] * m[2] + m[1] * m[2],
          m[0] * m[1] * m[2]};
}

}  // namespace

Rational pair_sum_product(const RationalTriple& mu) {
  const Rational s12 = mu[0] + mu[1];
  const Rational s13 = mu[0] + mu[2];
  const Rational s23 = mu[1] + mu[2];
  if (!s12.positive() || !s13.positive() || !s23.positive()) {
    raise(Errc::invalid_christoffel, "pairwise sums of the Christoffel triple must be positive");
  }
  return s12 * s13 * s23;
}

Rational covering_volume_pi2(const RationalTriple& mu) {
  return Rational{16} / pair_sum_product(mu);
}

std::array<Rational, 4> heat_invariants_pi2(const RationalTriple& mu, GroupOrder n) {
  if (n.n < 1 || n.n > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    raise(Errc::bad_parameters, "group order must be a positive integer");
  }
  const auto [p1, p2, p3] = sym(mu);
  const Rational a0 = Rational{16} / (Rational{static_cast<std::int64_t>(n.n)} * pair_sum_product(mu));
  const Rational a1 = a0 * p2 / Rational{3};
  const Rational a2 = a0 * (Rational{36} * p2 * p2 - Rational{48} * p1 * p3) / Rational{360};
  const Rational bracket = Rational{-240} * p3 * p3 - Rational{576} * p1 * p2 * p3 +
                           Rational{184} * p2 * p2 * p2 + Rational{192} * p1 * p1 * p1 * p3 -
                           Rational{48} * p1 * p1 * p2 * p2;
  const Rational a3 = a0 * bracket / Rational{5040};
  return {a0, a1, a2, a3};
}

std::optional<RationalTriple> christoffel_from_eigenvalues(const RationalTriple& e) {
  for (const Rational& x : e) {
    if (!x.positive()) raise(Errc::bad_parameters, "metric eigenvalues must be strictly positive");
  }
  const auto root = (e[0] * e[1] * e[2]).sqrt();
  if (!root) return std::nullopt;
  const Rational half{1, 2};
  const RationalTriple mu{half * (-e[0] + e[1] + e[2]) / *root,
                          half * (e[0] - e[1] + e[2]) / *root,
                          half * (e[0] + e[1] - e[2]) / *root};
  pair_sum_product(mu);  // validates
  return mu;
}

}  // namespace specgeo::exact
