#include <doctest.h>

#include <cmath>

#include "cubic.hpp"
#include "errors.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace specgeo;

TEST_CASE("quadratic_roots_sum_product") {
  const auto r = quadratic_roots_sum_product(3.0, 2.0);
  CHECK(r[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r[1] == doctest::Approx(2.0).epsilon(1e-14));

  // tiny negative discriminant clamps to a double root
  const auto d = quadratic_roots_sum_product(2.0, 1.0 + 1e-14);
  CHECK(d[0] == doctest::Approx(1.0).epsilon(1e-7));

  CHECK_THROWS_AS((void)quadratic_roots_sum_product(1.0, 1.0), Error);
}

TEST_CASE("cubic roots: simple, double, triple") {
  const auto simple = elementary_symmetric_roots(3.0, 2.0, 0.0);  // x(x-1)(x-2)
  CHECK(simple[0] == 0.0);
  CHECK(simple[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(simple[2] == doctest::Approx(2.0).epsilon(1e-14));

  const auto triple = elementary_symmetric_roots(1.5, 0.75, 0.125);  // (x-1/2)^3
  for (double r : triple) CHECK(r == doctest::Approx(0.5).epsilon(1e-14));

  const auto dbl = elementary_symmetric_roots(1.9, 0.8, -0.1);  // (x+0.1)(x-1)^2
  CHECK(dbl[0] == doctest::Approx(-0.1).epsilon(1e-12));
  CHECK(dbl[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(dbl[2] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(dbl[1] == dbl[2]);  // snapped, not split

  CHECK_THROWS_AS((void)elementary_symmetric_roots(0.0, 1.0, 0.5), Error);
  try {
    (void)elementary_symmetric_roots(0.0, 1.0, 0.5);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::complex_roots);
  }
}

TEST_CASE("cubic roots reproduce random multisets") {
  support::MuSampler gen(202);
  for (int i = 0; i < 4000; ++i) {
    Triple r{gen.uniform(-3, 3), gen.uniform(-3, 3), gen.uniform(-3, 3)};
    r = sorted(r);
    if (r[1] - r[0] < 1e-3 || r[2] - r[1] < 1e-3) continue;
    const auto s = oracle::sym(r);
    const auto roots = elementary_symmetric_roots(s.p1, s.p2, s.p3);
    const double scale = std::max({1.0, std::abs(r[0]), std::abs(r[2])});
    for (int j = 0; j < 3; ++j) CHECK(std::abs(roots[j] - r[j]) <= 1e-12 * scale);
    // residuals vanish against the coefficient scale
    for (double x : roots) {
      const double res = oracle::cubic_value(s.p1, s.p2, s.p3, x);
      const double fscale = std::abs(x * x * x) + std::abs(s.p1 * x * x) + std::abs(s.p2 * x) +
                            std::abs(s.p3);
      CHECK(std::abs(res) <= 1e-12 * std::max(fscale, 1.0));
    }
  }
}

TEST_CASE("cubic roots: exact double roots snap for any separation scale") {
  support::MuSampler gen(203);
  for (int i = 0; i < 2000; ++i) {
    const double r = gen.uniform(-3.0, 3.0);
    const double sep = gen.uniform(0.05, 2.0) * (gen.rng()() % 2 ? 1.0 : -1.0);
    const double s = r + sep;
    const double p1 = 2 * r + s, p2 = r * r + 2 * r * s, p3 = r * r * s;
    if (p3 == 0.0) continue;
    const auto roots = elementary_symmetric_roots(p1, p2, p3);
    // the double root comes back exactly doubled and near r
    const double scale = std::max({1.0, std::abs(r), std::abs(s)});
    if (s < r) {
      CHECK(roots[1] == roots[2]);
      CHECK(std::abs(roots[1] - r) <= 1e-10 * scale);
      CHECK(std::abs(roots[0] - s) <= 1e-10 * scale);
    } else {
      CHECK(roots[0] == roots[1]);
      CHECK(std::abs(roots[0] - r) <= 1e-10 * scale);
      CHECK(std::abs(roots[2] - s) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("cubic roots: negative discriminant rejected beyond tolerance") {
  // roots 1, i, -i: x^3 - x^2 + x - 1 -> p = (1, 1, 1)
  CHECK_THROWS_AS((void)elementary_symmetric_roots(1.0, 1.0, 1.0), Error);
}
