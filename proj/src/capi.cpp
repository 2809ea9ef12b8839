#include "specgeo/specgeo.h"

#include <cstring>
#include <string>

#include "classify.hpp"
#include "curvature.hpp"
#include "errors.hpp"
#include "exact.hpp"
#include "heat.hpp"
#include "metric.hpp"
#include "molecule.hpp"
#include "rational.hpp"
#include "recover.hpp"
#include "tolerances.hpp"

using namespace specgeo;

struct sg_context {
  Tolerances tol;
};

namespace {

thread_local std::string g_last_error;

const Tolerances kDefaultTol{};

const Tolerances& tol_of(const sg_context* ctx) { return ctx ? ctx->tol : kDefaultTol; }

sg_status map_errc(Errc c) {
  switch (c) {
    case Errc::invalid_argument: return SG_ERR_INVALID_ARGUMENT;
    case Errc::bad_parameters: return SG_ERR_BAD_PARAMETERS;
    case Errc::invalid_christoffel: return SG_ERR_INVALID_CHRISTOFFEL;
    case Errc::complex_roots: return SG_ERR_COMPLEX_ROOTS;
    case Errc::negative_discriminant: return SG_ERR_NEGATIVE_DISCRIMINANT;
    case Errc::no_common_root: return SG_ERR_NO_COMMON_ROOT;
    case Errc::inconsistent_curvature: return SG_ERR_INCONSISTENT_CURVATURE;
    case Errc::existence_violated: return SG_ERR_EXISTENCE_VIOLATED;
    case Errc::not_realizable: return SG_ERR_NOT_REALIZABLE;
    case Errc::exact_unavailable: return SG_ERR_EXACT_UNAVAILABLE;
  }
  return SG_ERR_INTERNAL;
}

template <typename Fn>
sg_status guarded(Fn&& fn) {
  try {
    fn();
    return SG_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return map_errc(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SG_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SG_ERR_INTERNAL;
  }
}

sg_status require(bool ok, const char* message) {
  if (ok) return SG_OK;
  g_last_error = message;
  return SG_ERR_INVALID_ARGUMENT;
}

Triple to_triple(const double v[3]) { return Triple{v[0], v[1], v[2]}; }

void from_triple(const Triple& t, double out[3]) {
  out[0] = t[0];
  out[1] = t[1];
  out[2] = t[2];
}

void copy_string(const std::string& s, char* out, std::size_t size) {
  if (size == 0) return;
  const std::size_t n = std::min(s.size(), size - 1);
  std::memcpy(out, s.data(), n);
  out[n] = '\0';
}

EllipticGroup to_group(const sg_group& g) {
  switch (g.type) {
    case SG_GROUP_I: return EllipticGroup::type_i(g.q, g.p);
    case SG_GROUP_II: return EllipticGroup::type_ii(g.n, g.k, g.q);
    case SG_GROUP_III: return EllipticGroup::type_iii(g.n, g.q);
    case SG_GROUP_IV: return EllipticGroup::type_iv(g.k, g.q);
    case SG_GROUP_V: return EllipticGroup::type_v(g.q);
    case SG_GROUP_VI: return EllipticGroup::type_vi(g.q);
  }
  raise(Errc::bad_parameters, "unknown group type tag");
}

MetricClass to_metric_class(int m) {
  switch (m) {
    case SG_METRIC_CONSTANT_CURVATURE: return MetricClass::ConstantCurvature;
    case SG_METRIC_BERGER_NON_CONSTANT: return MetricClass::BergerNonConstant;
    case SG_METRIC_GENERIC: return MetricClass::Generic;
  }
  raise(Errc::bad_parameters, "unknown metric class tag");
}

exact::RationalTriple to_rational_triple(const int64_t num[3], const int64_t den[3]) {
  return {Rational{num[0], den[0]}, Rational{num[1], den[1]}, Rational{num[2], den[2]}};
}

}  // namespace

extern "C" {

const char* sg_version(void) { return "1.0.0"; }

const char* sg_status_name(sg_status status) {
  switch (status) {
    case SG_OK: return "Ok";
    case SG_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case SG_ERR_BAD_PARAMETERS: return "BadParameters";
    case SG_ERR_INVALID_CHRISTOFFEL: return "InvalidChristoffel";
    case SG_ERR_COMPLEX_ROOTS: return "ComplexRoots";
    case SG_ERR_NEGATIVE_DISCRIMINANT: return "NegativeDiscriminant";
    case SG_ERR_NO_COMMON_ROOT: return "NoCommonRoot";
    case SG_ERR_INCONSISTENT_CURVATURE: return "InconsistentCurvature";
    case SG_ERR_EXISTENCE_VIOLATED: return "ExistenceViolated";
    case SG_ERR_NOT_REALIZABLE: return "NotRealizable";
    case SG_ERR_EXACT_UNAVAILABLE: return "ExactUnavailable";
    case SG_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* sg_last_error_message(void) { return g_last_error.c_str(); }

sg_context* sg_context_create(void) { return new (std::nothrow) sg_context{}; }

void sg_context_destroy(sg_context* ctx) { delete ctx; }

sg_status sg_context_set_tolerance(sg_context* ctx, const char* name, double value) {
  if (auto s = require(ctx && name, "context and name required"); s != SG_OK) return s;
  if (auto s = require(value > 0.0, "tolerance must be positive"); s != SG_OK) return s;
  const std::string key = name;
  Tolerances& t = ctx->tol;
  if (key == "eq") t.eq = value;
  else if (key == "disc") t.disc = value;
  else if (key == "root") t.root = value;
  else if (key == "rt") t.rt = value;
  else if (key == "branch-a") t.branch_a = value;
  else if (key == "branch-c") t.branch_c = value;
  else if (key == "prop") t.prop = value;
  else if (key == "deg") t.deg = value;
  else return require(false, "unknown tolerance name");
  return SG_OK;
}

sg_status sg_context_get_tolerance(const sg_context* ctx, const char* name, double* value) {
  if (auto s = require(name && value, "name and output required"); s != SG_OK) return s;
  const Tolerances& t = tol_of(ctx);
  const std::string key = name;
  if (key == "eq") *value = t.eq;
  else if (key == "disc") *value = t.disc;
  else if (key == "root") *value = t.root;
  else if (key == "rt") *value = t.rt;
  else if (key == "branch-a") *value = t.branch_a;
  else if (key == "branch-c") *value = t.branch_c;
  else if (key == "prop") *value = t.prop;
  else if (key == "deg") *value = t.deg;
  else return require(false, "unknown tolerance name");
  return SG_OK;
}

const char* sg_metric_class_name(int metric_class) {
  switch (metric_class) {
    case SG_METRIC_CONSTANT_CURVATURE: return "ConstantCurvature";
    case SG_METRIC_BERGER_NON_CONSTANT: return "BergerNonConstant";
    case SG_METRIC_GENERIC: return "Generic";
  }
  return "Unknown";
}

sg_status sg_eigenvalues_to_christoffel(const sg_context* ctx, const double eigenvalues[3],
                                        double mu[3]) {
  if (auto s = require(eigenvalues && mu, "inputs required"); s != SG_OK) return s;
  return guarded([&] {
    const auto c = eigenvalues_to_christoffel(MetricEigenvalues::of(to_triple(eigenvalues)),
                                              tol_of(ctx));
    from_triple(c.mu, mu);
  });
}

sg_status sg_christoffel_to_eigenvalues(const sg_context* ctx, const double mu[3],
                                        double eigenvalues[3]) {
  if (auto s = require(mu && eigenvalues, "inputs required"); s != SG_OK) return s;
  return guarded([&] {
    const auto e =
        christoffel_to_eigenvalues(ChristoffelTriple::of(to_triple(mu), tol_of(ctx)), tol_of(ctx));
    from_triple(e.values, eigenvalues);
  });
}

sg_status sg_covering_volume(const sg_context* ctx, const double mu[3], double* volume) {
  if (auto s = require(mu && volume, "inputs required"); s != SG_OK) return s;
  return guarded([&] {
    *volume = covering_volume(ChristoffelTriple::of(to_triple(mu), tol_of(ctx)), tol_of(ctx));
  });
}

sg_status sg_classify_metric(const sg_context* ctx, const double eigenvalues[3],
                             int* metric_class) {
  if (auto s = require(eigenvalues && metric_class, "inputs required"); s != SG_OK) return s;
  return guarded([&] {
    *metric_class = static_cast<int>(
        classify_metric(MetricEigenvalues::of(to_triple(eigenvalues)), tol_of(ctx)));
  });
}

sg_status sg_curvature_profile_compute(const sg_context* ctx, const double mu[3],
                                       sg_curvature_profile* out) {
  if (auto s = require(mu && out, "inputs required"); s != SG_OK) return s;
  return guarded([&] {
    const auto profile = curvature_profile(ChristoffelTriple::of(to_triple(mu), tol_of(ctx)));
    from_triple(profile.principal, out->principal);
    from_triple(profile.ricci, out->ricci);
    out->sc = profile.sc;
    out->r2 = profile.r2;
    out->ric2 = profile.ric2;
    out->rrr = profile.rrr;
    out->ric_rr = profile.ric_rr;
    out->ricric_r = profile.ricric_r;
    out->ricricric = profile.ricricric;
    out->grad_r2 = profile.grad_r2;
    out->grad_ric2 = profile.grad_ric2;
  });
}

const char* sg_branch_name(int branch) {
  if (branch < 0 || branch > 6) return "Unknown";
  return branch_name(static_cast<RecoveryBranch>(branch));
}

sg_status sg_heat_invariants_compute(const sg_context* ctx, const double mu[3], uint64_t order,
                                     sg_heat_invariants* out) {
  if (auto s = require(mu && out, "inputs required"); s != SG_OK) return s;
  return guarded([&] {
    const auto h = heat_invariants(ChristoffelTriple::of(to_triple(mu), tol_of(ctx)),
                                   GroupOrder{order}, tol_of(ctx));
    *out = {h.a0, h.a1, h.a2, h.a3};
  });
}

sg_status sg_abcd_compute(const sg_context* ctx, const sg_heat_invariants* h, uint64_t order,
                          sg_abcd* out) {
  (void)ctx;
  if (auto s = require(h && out, "inputs required"); s != SG_OK) return s;
  return guarded([&] {
    const auto r = abcd_coefficients(HeatInvariants{h->a0, h->a1, h->a2, h->a3}, GroupOrder{order});
    *out = {r.A, r.B, r.C, r.D};
  });
}

sg_status sg_invert_spectrum(const sg_context* ctx, const sg_heat_invariants* h, uint64_t order,
                             sg_recovery_report* out) {
  if (auto s = require(h && out, "inputs required"); s != SG_OK) return s;
  return guarded([&] {
    const auto r = invert_spectrum(HeatInvariants{h->a0, h->a1, h->a2, h->a3}, GroupOrder{order},
                                   tol_of(ctx));
    from_triple(r.christoffel.mu, out->mu);
    out->p[0] = r.christoffel.p1;
    out->p[1] = r.christoffel.p2;
    out->p[2] = r.christoffel.p3;
    from_triple(r.eigenvalues.values, out->eigenvalues);
    out->branch = static_cast<int>(r.branch);
    out->a3_required = r.a3_required;
    out->degenerate_ricci = r.degenerate_ricci;
    out->shared_root_warning = r.shared_root_warning;
  });
}

const char* sg_verdict_name(int verdict) {
  if (verdict < 0 || verdict > 2) return "Unknown";
  return verdict_name(static_cast<SpectralVerdict>(verdict));
}

sg_status sg_compare_spectra(const sg_context* ctx, const sg_heat_invariants* h1, uint64_t order1,
                             const sg_heat_invariants* h2, uint64_t order2, int* verdict,
                             char* note, uint64_t note_size) {
  if (auto s = require(h1 && h2 && verdict, "inputs required"); s != SG_OK) return s;
  return guarded([&] {
    const auto r = compare_spectra(HeatInvariants{h1->a0, h1->a1, h1->a2, h1->a3},
                                   GroupOrder{order1},
                                   HeatInvariants{h2->a0, h2->a1, h2->a2, h2->a3},
                                   GroupOrder{order2}, tol_of(ctx));
    *verdict = static_cast<int>(r.verdict);
    if (note && note_size > 0) copy_string(r.note, note, note_size);
  });
}

sg_status sg_group_validate(const sg_group* group) {
  if (auto s = require(group, "group required"); s != SG_OK) return s;
  return guarded([&] { to_group(*group); });
}

sg_status sg_group_order(const sg_group* group, uint64_t* order) {
  if (auto s = require(group && order, "inputs required"); s != SG_OK) return s;
  return guarded([&] { *order = group_order(to_group(*group)); });
}

sg_status sg_lens_diffeomorphic(uint64_t q, uint64_t p1, uint64_t p2, int* result) {
  if (auto s = require(result, "output required"); s != SG_OK) return s;
  return guarded([&] { *result = lens_diffeomorphic(q, p1, p2) ? 1 : 0; });
}

sg_status sg_isometry_group_descriptor(int metric_class, sg_isometry_descriptor* out) {
  if (auto s = require(out, "output required"); s != SG_OK) return s;
  return guarded([&] {
    const auto d = isometry_group_descriptor(to_metric_class(metric_class));
    copy_string(isometry_label_name(d.label), out->label, sizeof out->label);
    copy_string(isometry_component_name(d.component), out->component, sizeof out->component);
  });
}

sg_status sg_quotient_structure_compute(const sg_group* group, int metric_class,
                                        sg_quotient_structure* out) {
  if (auto s = require(group && out, "inputs required"); s != SG_OK) return s;
  return guarded([&] {
    const auto q = quotient_structure(to_group(*group), to_metric_class(metric_class));
    out->class_count = q.class_count;
    out->homogeneous[0] = q.class_count > 0 && q.homogeneous_flags[0];
    out->homogeneous[1] = q.class_count > 1 && q.homogeneous_flags[1];
    copy_string(q.centralizer_descriptor, out->centralizer, sizeof out->centralizer);
    copy_string(q.notes, out->notes, sizeof out->notes);
  });
}

sg_status sg_products_from_curvatures(const double curvatures[3], double products[3]) {
  if (auto s = require(curvatures && products, "inputs required"); s != SG_OK) return s;
  return guarded([&] { from_triple(products_from_curvatures(to_triple(curvatures)), products); });
}

sg_status sg_recover_from_curvature_and_volume(const sg_context* ctx, const double curvatures[3],
                                               double volume, uint64_t order, double mu[3]) {
  if (auto s = require(curvatures && mu, "inputs required"); s != SG_OK) return s;
  return guarded([&] {
    const auto c = recover_from_curvature_and_volume(to_triple(curvatures), volume,
                                                     GroupOrder{order}, tol_of(ctx));
    from_triple(c.mu, mu);
  });
}

sg_status sg_unique_degenerate_metric(const sg_context* ctx, double scalar_curvature,
                                      double volume, uint64_t order, double mu[3]) {
  if (auto s = require(mu, "output required"); s != SG_OK) return s;
  return guarded([&] {
    const auto c =
        unique_degenerate_metric(scalar_curvature, volume, GroupOrder{order}, tol_of(ctx));
    from_triple(c.mu, mu);
  });
}

sg_status sg_moments_to_eigenvalues(const double moments[3], double eigenvalues[3]) {
  if (auto s = require(moments && eigenvalues, "inputs required"); s != SG_OK) return s;
  return guarded([&] {
    const auto e = moments_to_eigenvalues(MomentsOfInertia::of(moments[0], moments[1], moments[2]));
    from_triple(e.values, eigenvalues);
  });
}

sg_status sg_rotational_invariants(const sg_context* ctx, const double moments[3],
                                   sg_heat_invariants* out) {
  if (auto s = require(moments && out, "inputs required"); s != SG_OK) return s;
  return guarded([&] {
    const auto h = rotational_invariants(MomentsOfInertia::of(moments[0], moments[1], moments[2]),
                                         tol_of(ctx));
    *out = {h.a0, h.a1, h.a2, h.a3};
  });
}

sg_status sg_recover_moments(const sg_context* ctx, const sg_heat_invariants* h,
                             double moments[3]) {
  if (auto s = require(h && moments, "inputs required"); s != SG_OK) return s;
  return guarded([&] {
    const auto m =
        recover_moments(HeatInvariants{h->a0, h->a1, h->a2, h->a3}, tol_of(ctx));
    from_triple(m.values, moments);
  });
}

sg_status sg_parse_rational(const char* text, int64_t* num, int64_t* den) {
  if (auto s = require(text && num && den, "inputs required"); s != SG_OK) return s;
  const auto r = Rational::parse(text);
  if (!r) {
    g_last_error = "not an exact rational";
    return SG_ERR_EXACT_UNAVAILABLE;
  }
  *num = r->num();
  *den = r->den();
  return SG_OK;
}

sg_status sg_exact_covering_volume(const int64_t mu_num[3], const int64_t mu_den[3], int64_t* num,
                                   int64_t* den) {
  if (auto s = require(mu_num && mu_den && num && den, "inputs required"); s != SG_OK) return s;
  return guarded([&] {
    const auto v = exact::covering_volume_pi2(to_rational_triple(mu_num, mu_den));
    *num = v.num();
    *den = v.den();
  });
}

sg_status sg_exact_heat_invariants(const int64_t mu_num[3], const int64_t mu_den[3],
                                   uint64_t order, int64_t num[4], int64_t den[4]) {
  if (auto s = require(mu_num && mu_den && num && den, "inputs required"); s != SG_OK) return s;
  return guarded([&] {
    const auto h = exact::heat_invariants_pi2(to_rational_triple(mu_num, mu_den),
                                              GroupOrder{order});
    for (int i = 0; i < 4; ++i) {
      num[i] = h[i].num();
      den[i] = h[i].den();
    }
  });
}

sg_status sg_exact_christoffel_from_eigenvalues(const int64_t e_num[3], const int64_t e_den[3],
                                                int64_t mu_num[3], int64_t mu_den[3]) {
  if (auto s = require(e_num && e_den && mu_num && mu_den, "inputs required"); s != SG_OK) {
    return s;
  }
  return guarded([&] {
    const auto mu = exact::christoffel_from_eigenvalues(to_rational_triple(e_num, e_den));
    if (!mu) raise(Errc::exact_unavailable, "sqrt(e1*e2*e3) is irrational");
    for (int i = 0; i < 3; ++i) {
      mu_num[i] = (*mu)[i].num();
      mu_den[i] = (*mu)[i].den();
    }
  });
}

}  // extern "C"
