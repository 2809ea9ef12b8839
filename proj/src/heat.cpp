#include "heat.hpp"

#include <cmath>

#include "cubic.hpp"
#include "errors.hpp"

namespace specgeo {

namespace {

void check_order(GroupOrder n) {
  if (n.n < 1) raise(Errc::bad_parameters, "group order must be a positive integer");
}

void check_invariants(const HeatInvariants& h) {
  if (!std::isfinite(h.a0) || !std::isfinite(h.a1) || !std::isfinite(h.a2) ||
      !std::isfinite(h.a3)) {
    raise(Errc::bad_parameters, "heat invariants must be finite");
  }
  if (h.a0 <= 0.0) raise(Errc::bad_parameters, "a0 (the volume) must be positive");
}

bool tuple_close(const HeatInvariants& x, const HeatInvariants& y, double rel) {
  const double ref = std::max({std::abs(x.a0), std::abs(x.a1), std::abs(x.a2), std::abs(x.a3),
                               std::abs(y.a0), std::abs(y.a1), std::abs(y.a2), std::abs(y.a3)});
  const auto close = [&](double a, double b) {
    return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)) ||
           (std::abs(a) <= rel * ref && std::abs(b) <= rel * ref);
  };
  return close(x.a0, y.a0) && close(x.a1, y.a1) && close(x.a2, y.a2) && close(x.a3, y.a3);
}

}  // namespace

const char* branch_name(RecoveryBranch b) {
  switch (b) {
    case RecoveryBranch::AZero: return "AZero";
    case RecoveryBranch::ANegative: return "ANegative";
    case RecoveryBranch::APositiveCNonneg: return "APositiveCNonneg";
    case RecoveryBranch::CZero: return "CZero";
    case RecoveryBranch::APositiveCNegDistinctRoots: return "APositiveCNegDistinctRoots";
    case RecoveryBranch::APositiveCNegSharedRoot: return "APositiveCNegSharedRoot";
    case RecoveryBranch::DiscriminantZero: return "DiscriminantZero";
  }
  return "Unknown";
}

const char* verdict_name(SpectralVerdict v) {
  switch (v) {
    case SpectralVerdict::LocallyIsometric: return "LocallyIsometric";
    case SpectralVerdict::NotLocallyIsometric: return "NotLocallyIsometric";
    case SpectralVerdict::InvariantsDiffer: return "InvariantsDiffer";
  }
  return "Unknown";
}

HeatInvariants heat_invariants(const ChristoffelTriple& c, GroupOrder n, const Tolerances& tol) {
  check_order(n);
  const Triple& m = c.mu;
  if (!(m[0] + m[1] > tol.eq)) {
    raise(Errc::invalid_christoffel, "pairwise sums of the Christoffel triple must be positive");
  }
  const double p1 = c.p1, p2 = c.p2, p3 = c.p3;
  HeatInvariants h;
  h.a0 = kBackgroundVolume /
         (static_cast<double>(n.n) * ((m[0] + m[1]) * (m[0] + m[2]) * (m[1] + m[2])));
  h.a1 = h.a0 / 3.0 * p2;
  h.a2 = h.a0 / 360.0 * (36.0 * p2 * p2 - 48.0 * p1 * p3);
  h.a3 = h.a0 / 5040.0 *
         (-240.0 * p3 * p3 - 576.0 * p1 * p2 * p3 + 184.0 * p2 * p2 * p2 +
          192.0 * p1 * p1 * p1 * p3 - 48.0 * p1 * p1 * p2 * p2);
  return h;
}

AbcdCoefficients abcd_coefficients(const HeatInvariants& h, GroupOrder n) {
  check_order(n);
  check_invariants(h);
  AbcdCoefficients out;
  out.A = 3.0 * h.a1 / h.a0;
  out.B = kBackgroundVolume / (h.a0 * static_cast<double>(n.n));
  out.C = (27.0 * h.a1 * h.a1 - 30.0 * h.a0 * h.a2) / (4.0 * h.a0 * h.a0);
  out.D = 5040.0 * h.a3 / h.a0;
  return out;
}

PRecovery recover_p(const AbcdCoefficients& abcd, const Tolerances& tol) {
  const double A = abcd.A, B = abcd.B, C = abcd.C, D = abcd.D;
  if (!std::isfinite(A) || !std::isfinite(B) || !std::isfinite(C) || !std::isfinite(D) || B <= 0.0) {
    raise(Errc::bad_parameters, "inversion coefficients require finite values and B > 0");
  }

  PRecovery out;
  out.p2 = A;

  const auto finish = [&](double p1, RecoveryBranch branch) {
    out.p1 = p1;
    out.branch = branch;
    out.p3 = (branch == RecoveryBranch::CZero) ? 0.0 : A * p1 - B;
    out.a3_required = branch == RecoveryBranch::APositiveCNegDistinctRoots ||
                      branch == RecoveryBranch::APositiveCNegSharedRoot;
    return out;
  };

  if (std::abs(A) <= tol.branch_a * (std::abs(B) + std::abs(C) + 1.0)) {
    return finish(-C / B, RecoveryBranch::AZero);
  }

  if (A < 0.0) {
    const double disc = B * B + 4.0 * A * C;
    const double scale = B * B + std::abs(4.0 * A * C);
    if (disc < -tol.disc * scale) {
      raise(Errc::negative_discriminant, "B^2 + 4AC < 0: no metric realizes these invariants");
    }
    // (B - sqrt(disc)) / (2A) in cancellation-free form
    return finish(-2.0 * C / (B + std::sqrt(std::max(disc, 0.0))), RecoveryBranch::ANegative);
  }

  if (std::abs(C) <= tol.branch_c * (A * A + B + 1.0)) {
    return finish(B / A, RecoveryBranch::CZero);
  }

  if (C > 0.0) {
    const double disc = B * B + 4.0 * A * C;
    return finish((B + std::sqrt(disc)) / (2.0 * A), RecoveryBranch::APositiveCNonneg);
  }

  // A > 0, C < 0: q1 has two positive roots and a3 is needed to pick one
  const double disc = B * B + 4.0 * A * C;
  const double dscale = B * B + std::abs(4.0 * A * C);
  if (disc < -tol.disc * dscale) {
    raise(Errc::negative_discriminant, "B^2 + 4AC < 0: no metric realizes these invariants");
  }
  if (std::abs(disc) <= tol.disc * dscale) {
    return finish(B / (2.0 * A), RecoveryBranch::DiscriminantZero);
  }
  if (std::abs(C + A * A) <= tol.prop * A * A) {
    // q2 proportional to q1 forces C = -A^2; the discriminant argument picks
    // the larger root
    const double d2 = std::max(B * B - 4.0 * A * A * A, 0.0);
    return finish((B + std::sqrt(d2)) / (2.0 * A), RecoveryBranch::APositiveCNegSharedRoot);
  }

  const double root_hi = (B + std::sqrt(disc)) / (2.0 * A);
  const double root_lo = (-C / A) / root_hi;
  const double q2a = 192.0 * C - 288.0 * A * A;
  const double q2b = 480.0 * A * B;
  const double q2c = 184.0 * A * A * A - 576.0 * A * C - 240.0 * B * B - D;
  const auto q2 = [&](double x) { return (q2a * x + q2b) * x + q2c; };
  const auto q2_scale = [&](double x) {
    return std::abs(q2a) * x * x + std::abs(q2b) * std::abs(x) + std::abs(q2c);
  };
  const double res_hi = std::abs(q2(root_hi));
  const double res_lo = std::abs(q2(root_lo));
  const bool ok_hi = res_hi <= tol.root * q2_scale(root_hi);
  const bool ok_lo = res_lo <= tol.root * q2_scale(root_lo);
  if (ok_hi && ok_lo) {
    out.shared_root_warning = true;
    return finish(res_hi <= res_lo ? root_hi : root_lo,
                  RecoveryBranch::APositiveCNegSharedRoot);
  }
  if (ok_hi) return finish(root_hi, RecoveryBranch::APositiveCNegDistinctRoots);
  if (ok_lo) return finish(root_lo, RecoveryBranch::APositiveCNegDistinctRoots);
  raise(Errc::no_common_root, "neither root of q1 satisfies the q2 residual test");
}

ChristoffelTriple symmetric_to_multiset(double p1, double p2, double p3, const Tolerances& tol) {
  return ChristoffelTriple::of(elementary_symmetric_roots(p1, p2, p3, tol), tol);
}

RecoveryReport invert_spectrum(const HeatInvariants& h, GroupOrder n, const Tolerances& tol) {
  const PRecovery p = recover_p(abcd_coefficients(h, n), tol);
  RecoveryReport report;
  report.christoffel = symmetric_to_multiset(p.p1, p.p2, p.p3, tol);
  report.eigenvalues = christoffel_to_eigenvalues(report.christoffel, tol);
  report.branch = p.branch;
  report.a3_required = p.a3_required;
  report.degenerate_ricci = p.branch == RecoveryBranch::CZero;
  report.shared_root_warning = p.shared_root_warning;
  return report;
}

SpectralComparison compare_spectra(const HeatInvariants& h1, GroupOrder n1,
                                   const HeatInvariants& h2, GroupOrder n2,
                                   const Tolerances& tol) {
  check_invariants(h1);
  check_invariants(h2);
  check_order(n1);
  check_order(n2);

  if (!tuple_close(h1, h2, tol.rt)) {
    return {SpectralVerdict::InvariantsDiffer, "heat invariant 4-tuples differ"};
  }

  RecoveryReport r1, r2;
  try {
    r1 = invert_spectrum(h1, n1, tol);
  } catch (const Error& e) {
    return {SpectralVerdict::NotLocallyIsometric,
            std::string("first record does not invert: ") + e.what()};
  }
  try {
    r2 = invert_spectrum(h2, n2, tol);
  } catch (const Error& e) {
    return {SpectralVerdict::NotLocallyIsometric,
            std::string("second record does not invert: ") + e.what()};
  }

  if (multiset_close(r1.eigenvalues.values, r2.eigenvalues.values, tol.eq)) {
    return {SpectralVerdict::LocallyIsometric, ""};
  }
  return {SpectralVerdict::NotLocallyIsometric,
          "equal invariants invert to different eigenvalue multisets (orders differ)"};
}

}  // namespace specgeo
