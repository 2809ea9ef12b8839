#pragma once

#include <random>

#include "metric.hpp"

namespace support {

using specgeo::Triple;

inline bool rel_close(double x, double y, double rel) {
  return std::abs(x - y) <= rel * std::max(std::abs(x), std::abs(y));
}

// Samplers for valid Christoffel triples.  Every sampler keeps the smallest
// pairwise sum >= 0.05 and stays clear of the degenerate loci it is not
// trying to hit, so tolerance assertions measure the algorithms and not the
// conditioning of the inputs.
class MuSampler {
 public:
  explicit MuSampler(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  bool valid(const Triple& mu) const {
    const Triple m = specgeo::sorted(mu);
    return m[0] + m[1] >= 0.05;
  }

  Triple generic() {
    for (;;) {
      Triple mu{uniform(-0.5, 4.0), uniform(0.1, 4.0), uniform(0.1, 4.0)};
      if (valid(mu)) return specgeo::sorted(mu);
    }
  }

  Triple all_positive() {
    for (;;) {
      Triple mu{uniform(0.03, 5.0), uniform(0.03, 5.0), uniform(0.03, 5.0)};
      if (valid(mu)) return specgeo::sorted(mu);
    }
  }

  Triple negative_p2() {  // A < 0 stratum
    for (;;) {
      Triple mu{uniform(-2.0, -0.1), uniform(0.3, 2.0), uniform(0.3, 2.0)};
      if (!valid(mu)) continue;
      const double p2 = mu[0] * mu[1] + mu[0] * mu[2] + mu[1] * mu[2];
      if (p2 < -0.01) return specgeo::sorted(mu);
    }
  }

  Triple zero_p2() {  // A ~ 0 stratum
    for (;;) {
      const double m1 = uniform(-2.0, -0.1);
      const double m2 = uniform(0.3, 3.0);
      if (m1 + m2 <= 0.06) continue;
      const double m3 = -m1 * m2 / (m1 + m2);
      const Triple mu{m1, m2, m3};
      if (std::abs(m3) <= 5.0 && valid(mu)) return specgeo::sorted(mu);
    }
  }

  Triple degenerate() {  // C ~ 0 stratum, one symbol exactly zero
    for (;;) {
      const Triple mu{0.0, uniform(0.05, 5.0), uniform(0.05, 5.0)};
      if (valid(mu) && std::abs(mu[1] - mu[2]) > 1e-3) return specgeo::sorted(mu);
    }
  }

  Triple negative_p3_positive_p2() {  // A > 0, C < 0 stratum
    for (;;) {
      const Triple mu{uniform(-0.4, -0.02), uniform(0.5, 5.0), uniform(0.5, 5.0)};
      if (!valid(mu)) continue;
      const double p1 = mu[0] + mu[1] + mu[2];
      const double p2 = mu[0] * mu[1] + mu[0] * mu[2] + mu[1] * mu[2];
      const double p3 = mu[0] * mu[1] * mu[2];
      if (p2 > 0.02 && p1 * p3 < -1e-4) return specgeo::sorted(mu);
    }
  }

  // Berger triple with the double entry separated from the third by at least
  // 8 percent; closer configurations are inside the double-precision noise
  // floor of the inverse problem.
  Triple berger() {
    for (;;) {
      const double m = uniform(0.1, 3.0);
      const double dir = rng_() % 2 == 0 ? 1.0 : -1.0;
      const double s = m * (1.0 + dir * uniform(0.08, 1.5));
      const Triple mu{m, m, s};
      if (valid(mu)) return specgeo::sorted(mu);
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace support
