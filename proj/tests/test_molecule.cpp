#include <doctest.h>

#include <cmath>

#include "errors.hpp"
#include "molecule.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace specgeo;

namespace {
constexpr double kPi2 = oracle::kPi2;
}

TEST_CASE("moments_to_eigenvalues conversion factor") {
  const auto unit = moments_to_eigenvalues(MomentsOfInertia::of(1, 1, 1));
  for (double v : unit.values) CHECK(v == doctest::Approx(2.0).epsilon(1e-14));

  const auto water = moments_to_eigenvalues(MomentsOfInertia::of(1, 2, 3));
  CHECK(water.values[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(water.values[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(water.values[2] == doctest::Approx(2.0).epsilon(1e-14));

  const auto round = moments_to_eigenvalues(MomentsOfInertia::of(2, 2, 2));
  for (double v : round.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("rotational invariants") {
  // spherical body at I = 1: eigenvalues (2,2,2) scale the round volume by
  // 2^{3/2}; the SO(3) quotient halves it
  const auto unit = rotational_invariants(MomentsOfInertia::of(1, 1, 1));
  CHECK(unit.a0 == doctest::Approx(16 * std::sqrt(2.0) * kPi2).epsilon(1e-12));

  const auto round = rotational_invariants(MomentsOfInertia::of(2, 2, 2));
  CHECK(round.a0 == doctest::Approx(8 * kPi2).epsilon(1e-13));
  CHECK(round.a1 == doctest::Approx(2 * kPi2).epsilon(1e-13));

  // asymmetric body: cross-check the full tuple against the oracle pipeline
  const auto water = rotational_invariants(MomentsOfInertia::of(1, 2, 3));
  const auto mu = oracle::mu_from_eigenvalues({2.0 / 3.0, 1.0, 2.0});
  const auto expect = oracle::heat(mu, 2.0);
  CHECK(water.a0 == doctest::Approx(expect[0]).epsilon(1e-12));
  CHECK(water.a1 == doctest::Approx(expect[1]).epsilon(1e-12));
  CHECK(water.a2 == doctest::Approx(expect[2]).epsilon(1e-12));
  CHECK(water.a3 == doctest::Approx(expect[3]).epsilon(1e-12));
}

TEST_CASE("recover_moments roundtrip examples") {
  for (const Triple moments : {Triple{1, 1, 1}, Triple{1, 2, 3}, Triple{2, 2, 2}}) {
    const auto m = MomentsOfInertia::of(moments[0], moments[1], moments[2]);
    const auto back = recover_moments(rotational_invariants(m));
    for (int j = 0; j < 3; ++j) {
      CHECK(support::rel_close(back.values[j], m.values[j], 1e-10));
    }
  }
}

TEST_CASE("body class matches metric class") {
  const auto spherical = classify_metric(moments_to_eigenvalues(MomentsOfInertia::of(2, 2, 2)));
  CHECK(spherical == MetricClass::ConstantCurvature);
  const auto symmetric = classify_metric(moments_to_eigenvalues(MomentsOfInertia::of(1, 1, 3)));
  CHECK(symmetric == MetricClass::BergerNonConstant);
  const auto asymmetric = classify_metric(moments_to_eigenvalues(MomentsOfInertia::of(1, 2, 3)));
  CHECK(asymmetric == MetricClass::Generic);
}

TEST_CASE("moments roundtrip across body classes") {
  support::MuSampler gen(601);
  for (int i = 0; i < 900; ++i) {
    Triple moments;
    if (i % 3 == 0) {
      const double v = gen.uniform(0.2, 5.0);
      moments = {v, v, v};
    } else if (i % 3 == 1) {
      const double v = gen.uniform(0.2, 5.0);
      double w = 0.0;
      do {
        w = gen.uniform(0.2, 5.0);
      } while (std::abs(w - v) < 0.08 * std::max(v, w));
      moments = sorted(Triple{v, v, w});
    } else {
      do {
        moments = sorted(Triple{gen.uniform(0.2, 5.0), gen.uniform(0.2, 5.0),
                                gen.uniform(0.2, 5.0)});
      } while (moments[1] - moments[0] < 0.04 * moments[2] ||
               moments[2] - moments[1] < 0.04 * moments[2]);
    }
    const auto m = MomentsOfInertia::of(moments[0], moments[1], moments[2]);
    const auto back = recover_moments(rotational_invariants(m));
    for (int j = 0; j < 3; ++j) {
      CHECK(support::rel_close(back.values[j], m.values[j], 1e-9));
    }
  }
}

TEST_CASE("bad moments are rejected") {
  CHECK_THROWS_AS((void)MomentsOfInertia::of(0, 1, 1), Error);
  CHECK_THROWS_AS((void)MomentsOfInertia::of(1, -2, 1), Error);
  try {
    (void)MomentsOfInertia::of(-1, 1, 1);
    FAIL("expected BadParameters");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::bad_parameters);
  }
}
