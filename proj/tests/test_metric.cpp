#include <doctest.h>

#include <cmath>

#include "errors.hpp"
#include "metric.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace specgeo;

namespace {
constexpr double kPi2 = oracle::kPi2;
}

TEST_CASE("eigenvalues_to_christoffel on the round sphere") {
  const auto c = eigenvalues_to_christoffel(MetricEigenvalues::of(1, 1, 1));
  CHECK(c.mu[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(c.mu[1] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(c.mu[2] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(c.p1 == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(c.p2 == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(c.p3 == doctest::Approx(0.125).epsilon(1e-14));
}

TEST_CASE("eigenvalues_to_christoffel on a Berger metric") {
  // oracle: Cramer-solve the linear relation with vol = 32 pi^2
  const auto expect = oracle::mu_from_eigenvalues({4, 1, 1});
  CHECK(expect[0] == doctest::Approx(-0.5).epsilon(1e-13));

  const auto c = eigenvalues_to_christoffel(MetricEigenvalues::of(4, 1, 1));
  CHECK(c.mu[0] == doctest::Approx(-0.5).epsilon(1e-13));
  CHECK(c.mu[1] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(c.mu[2] == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("eigenvalues_to_christoffel on a degenerate-Ricci metric") {
  // direct check: eta_i^2 = 1/((mu_i+mu_j)(mu_i+mu_k)) for mu = (0,1,2)
  const Triple mu{0, 1, 2};
  const auto back = oracle::eigenvalues_from_mu(mu);
  CHECK(back[0] == doctest::Approx(0.5));
  CHECK(back[1] == doctest::Approx(1.0 / 3.0));
  CHECK(back[2] == doctest::Approx(1.0 / 6.0));

  const auto c = eigenvalues_to_christoffel(MetricEigenvalues::of(0.5, 1.0 / 3.0, 1.0 / 6.0));
  CHECK(c.mu[0] == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(std::abs(c.mu[0]) < 1e-14);
  CHECK(c.mu[1] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(c.mu[2] == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("christoffel_to_eigenvalues examples") {
  const auto sym = christoffel_to_eigenvalues(ChristoffelTriple::of({0.5, 0.5, 0.5}));
  for (double v : sym.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));

  const auto berger = christoffel_to_eigenvalues(ChristoffelTriple::of({-0.5, 1, 1}));
  CHECK(berger.values[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(berger.values[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(berger.values[2] == doctest::Approx(4.0).epsilon(1e-14));

  const auto deg = christoffel_to_eigenvalues(ChristoffelTriple::of({0, 1, 2}));
  CHECK(deg.values[0] == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(deg.values[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(deg.values[2] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("covering_volume examples") {
  CHECK(covering_volume(ChristoffelTriple::of({0.5, 0.5, 0.5})) ==
        doctest::Approx(16 * kPi2).epsilon(1e-14));
  CHECK(covering_volume(ChristoffelTriple::of({-0.5, 1, 1})) ==
        doctest::Approx(32 * kPi2).epsilon(1e-14));
  CHECK(covering_volume(ChristoffelTriple::of({0, 1, 2})) ==
        doctest::Approx(16 * kPi2 / 6).epsilon(1e-14));
}

TEST_CASE("classify_metric multiplicity patterns") {
  CHECK(classify_metric(MetricEigenvalues::of(1, 1, 1)) == MetricClass::ConstantCurvature);
  CHECK(classify_metric(MetricEigenvalues::of(4, 1, 1)) == MetricClass::BergerNonConstant);
  CHECK(classify_metric(MetricEigenvalues::of(0.5, 1.0 / 3.0, 1.0 / 6.0)) == MetricClass::Generic);

  // equality is relative: 1 vs 1+2e-10 collapses, 1 vs 1+2e-9 does not
  CHECK(classify_metric(MetricEigenvalues::of(1.0, 1.0 + 2e-10, 3.0)) ==
        MetricClass::BergerNonConstant);
  CHECK(classify_metric(MetricEigenvalues::of(1.0, 1.0 + 2e-9, 3.0)) == MetricClass::Generic);
}

TEST_CASE("invalid inputs are rejected") {
  CHECK_THROWS_AS((void)MetricEigenvalues::of(1, -1, 1), Error);
  CHECK_THROWS_AS((void)MetricEigenvalues::of(0, 1, 1), Error);
  CHECK_THROWS_AS((void)ChristoffelTriple::of({-1, 1, -1}), Error);
  CHECK_THROWS_AS((void)ChristoffelTriple::of({-1, 0.5, 2}), Error);
  // pairwise sum inside (0, tol.eq] is rejected rather than propagated
  CHECK_THROWS_AS((void)ChristoffelTriple::of({-1.0, 1.0 + 5e-10, 2.0}), Error);

  try {
    (void)ChristoffelTriple::of({-2, 1, 1});
    FAIL("expected InvalidChristoffel");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_christoffel);
  }
}

TEST_CASE("roundtrip e -> mu -> e at 1e-12") {
  support::MuSampler gen(101);
  for (int i = 0; i < 2000; ++i) {
    const Triple e{gen.uniform(0.05, 20.0), gen.uniform(0.05, 20.0), gen.uniform(0.05, 20.0)};
    const auto ev = MetricEigenvalues::of(e);
    const auto back = christoffel_to_eigenvalues(eigenvalues_to_christoffel(ev));
    for (int j = 0; j < 3; ++j) {
      CHECK(support::rel_close(back.values[j], ev.values[j], 1e-12));
    }
  }
}

TEST_CASE("validity correspondence: positive eigenvalues iff positive pairwise sums") {
  support::MuSampler gen(102);
  int invalid_seen = 0;
  for (int i = 0; i < 4000; ++i) {
    const Triple mu{gen.uniform(-2, 2), gen.uniform(-2, 2), gen.uniform(-2, 2)};
    const Triple m = sorted(mu);
    const bool valid = m[0] + m[1] > 1e-6;
    if (std::abs(m[0] + m[1]) <= 1e-6) continue;  // skip the boundary zone
    if (valid) {
      const auto c = ChristoffelTriple::of(mu);
      CHECK(c.p1 > 0.0);
      const auto e = christoffel_to_eigenvalues(c);
      for (double v : e.values) CHECK(v > 0.0);
    } else {
      ++invalid_seen;
      CHECK_THROWS_AS((void)ChristoffelTriple::of(mu), Error);
      // at least one reciprocal pair-sum product is nonpositive
      const Triple raw{1.0 / ((m[0] + m[1]) * (m[0] + m[2])),
                       1.0 / ((m[1] + m[0]) * (m[1] + m[2])),
                       1.0 / ((m[2] + m[0]) * (m[2] + m[1]))};
      CHECK(std::min({raw[0], raw[1], raw[2]}) <= 0.0);
    }
  }
  CHECK(invalid_seen > 100);
}

TEST_CASE("scaling: e -> lambda e maps mu -> mu/sqrt(lambda)") {
  support::MuSampler gen(103);
  for (int i = 0; i < 500; ++i) {
    const Triple e{gen.uniform(0.1, 5.0), gen.uniform(0.1, 5.0), gen.uniform(0.1, 5.0)};
    const double lambda = gen.uniform(0.1, 10.0);
    const auto c0 = eigenvalues_to_christoffel(MetricEigenvalues::of(e));
    const auto c1 = eigenvalues_to_christoffel(
        MetricEigenvalues::of(lambda * e[0], lambda * e[1], lambda * e[2]));
    const double root = std::sqrt(lambda);
    for (int j = 0; j < 3; ++j) {
      CHECK(std::abs(c1.mu[j] - c0.mu[j] / root) <= 1e-12 * std::max(1.0, std::abs(c0.mu[j])));
    }
    CHECK(support::rel_close(covering_volume(c1),
                             std::pow(lambda, 1.5) * covering_volume(c0), 1e-11));
  }
}

TEST_CASE("permutation invariance") {
  const Triple e{0.7, 2.1, 3.9};
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  const auto ref = eigenvalues_to_christoffel(MetricEigenvalues::of(e));
  for (const auto& p : perms) {
    const auto c = eigenvalues_to_christoffel(MetricEigenvalues::of(e[p[0]], e[p[1]], e[p[2]]));
    for (int j = 0; j < 3; ++j) CHECK(c.mu[j] == ref.mu[j]);
    CHECK(covering_volume(c) == covering_volume(ref));
  }
}
