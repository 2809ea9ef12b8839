#include <doctest.h>

#include <cmath>

#include "curvature.hpp"
#include "errors.hpp"
#include "oracles.hpp"
#include "recover.hpp"
#include "support.hpp"

using namespace specgeo;

namespace {
constexpr double kPi2 = oracle::kPi2;
}

TEST_CASE("products_from_curvatures") {
  const auto sym = products_from_curvatures({0.25, 0.25, 0.25});
  for (double p : sym) CHECK(p == doctest::Approx(0.25).epsilon(1e-14));

  const auto deg = products_from_curvatures({2, 2, -2});
  CHECK(deg[0] == doctest::Approx(0.0));
  CHECK(deg[1] == doctest::Approx(0.0));
  CHECK(deg[2] == doctest::Approx(2.0).epsilon(1e-14));

  const auto berger = products_from_curvatures({1, 1, -1.2});
  CHECK(berger[0] == doctest::Approx(-0.1).epsilon(1e-13));
  CHECK(berger[1] == doctest::Approx(-0.1).epsilon(1e-13));
  CHECK(berger[2] == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("recover_from_curvature_and_volume examples") {
  const auto round = recover_from_curvature_and_volume({0.25, 0.25, 0.25}, 16 * kPi2,
                                                       GroupOrder{1});
  for (double m : round.mu) CHECK(m == doctest::Approx(0.5).epsilon(1e-12));

  const auto berger = recover_from_curvature_and_volume({1, 1, -1.2}, 16 * kPi2 / 1.62,
                                                        GroupOrder{1});
  CHECK(berger.mu[0] == doctest::Approx(-0.1).epsilon(1e-12));
  CHECK(berger.mu[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(berger.mu[2] == doctest::Approx(1.0).epsilon(1e-12));

  const auto deg = recover_from_curvature_and_volume({2, 2, -2}, 16 * kPi2 / 6, GroupOrder{1});
  CHECK(deg.mu[0] == 0.0);
  CHECK(deg.mu[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(deg.mu[2] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("recover rejects impossible curvature data") {
  // exactly one vanishing product: p = (0, 0.5, 1) -> K = (1.5, 0.5, -0.5)
  CHECK_THROWS_AS(
      (void)recover_from_curvature_and_volume({1.5, 0.5, -0.5}, 10.0, GroupOrder{1}), Error);

  // two positive and one negative product: p = (1, 1, -1) -> K = (-1, -1, 3)
  try {
    (void)recover_from_curvature_and_volume({-1, -1, 3}, 10.0, GroupOrder{1});
    FAIL("expected InconsistentCurvature");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::inconsistent_curvature);
  }

  // valid products but wildly inconsistent volume
  CHECK_THROWS_AS(
      (void)recover_from_curvature_and_volume({0.25, 0.25, 0.25}, 100 * kPi2, GroupOrder{1}),
      Error);

  // degenerate with negative surviving product: p = (0, 0, -2) -> K = (-2, -2, 2)
  CHECK_THROWS_AS(
      (void)recover_from_curvature_and_volume({-2, -2, 2}, 10.0, GroupOrder{1}), Error);
}

TEST_CASE("isocurved roundtrip on random metrics") {
  support::MuSampler gen(501);
  const std::uint64_t orders[5] = {1, 2, 8, 24, 120};
  for (int i = 0; i < 3000; ++i) {
    Triple mu;
    if (i % 6 == 5) {
      mu = gen.degenerate();
    } else {
      mu = gen.generic();
      if (std::abs(mu[0]) < 1e-3) continue;  // keep clear of the degeneracy threshold
    }
    const auto c = ChristoffelTriple::of(mu);
    const std::uint64_t n = orders[gen.rng()() % 5];
    const auto recovered = recover_from_curvature_and_volume(
        principal_curvatures(c), covering_volume(c) / static_cast<double>(n), GroupOrder{n});
    CHECK(multiset_close(recovered.mu, c.mu, 1e-9));
  }
}

TEST_CASE("sign rigidity: negating a valid triple breaks p1 > 0") {
  support::MuSampler gen(502);
  for (int i = 0; i < 300; ++i) {
    const Triple mu = gen.generic();
    (void)ChristoffelTriple::of(mu);
    CHECK_THROWS_AS((void)ChristoffelTriple::of(Triple{-mu[0], -mu[1], -mu[2]}), Error);
  }
}

TEST_CASE("unique_degenerate_metric examples") {
  const auto basic = unique_degenerate_metric(4.0, 16 * kPi2 / 6, GroupOrder{1});
  CHECK(basic.mu[0] == 0.0);
  CHECK(basic.mu[1] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(basic.mu[2] == doctest::Approx(2.0).epsilon(1e-13));

  // boundary beta^2 = 2S: S = 2, beta = 2 needs V = 32 pi^2 / (S beta) = 8 pi^2
  const auto boundary = unique_degenerate_metric(2.0, 8 * kPi2, GroupOrder{1});
  CHECK(boundary.mu[0] == 0.0);
  CHECK(boundary.mu[1] == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(boundary.mu[2] == doctest::Approx(1.0).epsilon(1e-7));

  try {
    (void)unique_degenerate_metric(4.0, 1000 * kPi2, GroupOrder{1});
    FAIL("expected ExistenceViolated");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::existence_violated);
  }
}

TEST_CASE("unique_degenerate_metric forward checks") {
  support::MuSampler gen(503);
  for (int i = 0; i < 1000; ++i) {
    const double s = gen.uniform(0.1, 20.0);
    const double beta = std::sqrt(2.0 * s) * (1.0 + gen.uniform(0.0, 3.0));
    const std::uint64_t n = 1 + gen.rng()() % 4;
    const double volume = 2.0 * kBackgroundVolume / (s * beta * static_cast<double>(n));
    const auto c = unique_degenerate_metric(s, volume, GroupOrder{n});
    CHECK(c.mu[0] == 0.0);
    CHECK(c.p2 > 0.0);
    const auto profile = curvature_profile(c);
    CHECK(support::rel_close(profile.sc, s, 1e-9));
    CHECK(support::rel_close(covering_volume(c) / static_cast<double>(n), volume, 1e-9));
  }
}
