/* specgeo: geometric and spectral data of locally homogeneous elliptic
 * three-manifolds.
 *
 * C API of the shared library.  All functions return sg_status; outputs are
 * written through pointers only on SG_OK.  An sg_context holds the tolerance
 * settings; the NULL context means defaults.  All entry points are
 * thread-safe; contexts are immutable while shared between threads.
 */
#ifndef SPECGEO_SPECGEO_H
#define SPECGEO_SPECGEO_H

#include <stdint.h>

#if defined(_WIN32)
#define SPECGEO_API __declspec(dllexport)
#else
#define SPECGEO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sg_status {
  SG_OK = 0,
  SG_ERR_INVALID_ARGUMENT = 1,
  SG_ERR_BAD_PARAMETERS = 2,
  SG_ERR_INVALID_CHRISTOFFEL = 3,
  SG_ERR_COMPLEX_ROOTS = 4,
  SG_ERR_NEGATIVE_DISCRIMINANT = 5,
  SG_ERR_NO_COMMON_ROOT = 6,
  SG_ERR_INCONSISTENT_CURVATURE = 7,
  SG_ERR_EXISTENCE_VIOLATED = 8,
  SG_ERR_NOT_REALIZABLE = 9,
  SG_ERR_EXACT_UNAVAILABLE = 10,
  SG_ERR_INTERNAL = 11
} sg_status;

SPECGEO_API const char* sg_version(void);

/* Stable machine-readable name of a status ("InvalidChristoffel", ...). */
SPECGEO_API const char* sg_status_name(sg_status status);

/* Human-readable detail for the most recent failure on this thread. */
SPECGEO_API const char* sg_last_error_message(void);

/* ---- tolerance context ------------------------------------------------ */

typedef struct sg_context sg_context;

SPECGEO_API sg_context* sg_context_create(void);
SPECGEO_API void sg_context_destroy(sg_context* ctx);

/* Names: "eq", "disc", "root", "rt", "branch-a", "branch-c", "prop", "deg". */
SPECGEO_API sg_status sg_context_set_tolerance(sg_context* ctx, const char* name, double value);
SPECGEO_API sg_status sg_context_get_tolerance(const sg_context* ctx, const char* name,
                                               double* value);

/* ---- metric core ------------------------------------------------------ */

enum {
  SG_METRIC_CONSTANT_CURVATURE = 0,
  SG_METRIC_BERGER_NON_CONSTANT = 1,
  SG_METRIC_GENERIC = 2
};

SPECGEO_API const char* sg_metric_class_name(int metric_class);

/* eigenvalues -> Christoffel multiset (both length-3, any order in, sorted out) */
SPECGEO_API sg_status sg_eigenvalues_to_christoffel(const sg_context* ctx,
                                                    const double eigenvalues[3], double mu[3]);
SPECGEO_API sg_status sg_christoffel_to_eigenvalues(const sg_context* ctx, const double mu[3],
                                                    double eigenvalues[3]);
SPECGEO_API sg_status sg_covering_volume(const sg_context* ctx, const double mu[3],
                                         double* volume);
SPECGEO_API sg_status sg_classify_metric(const sg_context* ctx, const double eigenvalues[3],
                                         int* metric_class);

/* ---- curvature --------------------------------------------------------- */

typedef struct sg_curvature_profile {
  double principal[3]; /* K12, K13, K23 as a sorted multiset */
  double ricci[3];     /* Ricci eigenvalues, sorted */
  double sc;
  double r2;        /* |R|^2 */
  double ric2;      /* |Ric|^2 */
  double rrr;       /* (R,R,R) */
  double ric_rr;    /* (Ric;R,R) */
  double ricric_r;  /* (Ric;Ric;R) */
  double ricricric; /* (Ric Ric Ric) */
  double grad_r2;   /* |grad R|^2 */
  double grad_ric2; /* |grad Ric|^2 */
} sg_curvature_profile;

SPECGEO_API sg_status sg_curvature_profile_compute(const sg_context* ctx, const double mu[3],
                                                   sg_curvature_profile* out);

/* ---- heat invariants and inversion ------------------------------------ */

typedef struct sg_heat_invariants {
  double a0, a1, a2, a3;
} sg_heat_invariants;

typedef struct sg_abcd {
  double a, b, c, d;
} sg_abcd;

enum {
  SG_BRANCH_A_ZERO = 0,
  SG_BRANCH_A_NEGATIVE = 1,
  SG_BRANCH_A_POSITIVE_C_NONNEG = 2,
  SG_BRANCH_C_ZERO = 3,
  SG_BRANCH_DISTINCT_ROOTS = 4,
  SG_BRANCH_SHARED_ROOT = 5,
  SG_BRANCH_DISCRIMINANT_ZERO = 6
};

SPECGEO_API const char* sg_branch_name(int branch);

typedef struct sg_recovery_report {
  double mu[3];
  double p[3]; /* p1, p2, p3 of the recovered multiset */
  double eigenvalues[3];
  int branch;
  int a3_required;
  int degenerate_ricci;
  int shared_root_warning;
} sg_recovery_report;

SPECGEO_API sg_status sg_heat_invariants_compute(const sg_context* ctx, const double mu[3],
                                                 uint64_t order, sg_heat_invariants* out);
SPECGEO_API sg_status sg_abcd_compute(const sg_context* ctx, const sg_heat_invariants* h,
                                      uint64_t order, sg_abcd* out);
SPECGEO_API sg_status sg_invert_spectrum(const sg_context* ctx, const sg_heat_invariants* h,
                                         uint64_t order, sg_recovery_report* out);

enum {
  SG_VERDICT_LOCALLY_ISOMETRIC = 0,
  SG_VERDICT_NOT_LOCALLY_ISOMETRIC = 1,
  SG_VERDICT_INVARIANTS_DIFFER = 2
};

SPECGEO_API const char* sg_verdict_name(int verdict);

SPECGEO_API sg_status sg_compare_spectra(const sg_context* ctx, const sg_heat_invariants* h1,
                                         uint64_t order1, const sg_heat_invariants* h2,
                                         uint64_t order2, int* verdict, char* note,
                                         uint64_t note_size);

/* ---- classification ---------------------------------------------------- */

typedef enum sg_group_type {
  SG_GROUP_I = 1,
  SG_GROUP_II = 2,
  SG_GROUP_III = 3,
  SG_GROUP_IV = 4,
  SG_GROUP_V = 5,
  SG_GROUP_VI = 6
} sg_group_type;

/* Parameter record; unused fields must be zero.
 *   I:   q, p       II:  n, k, q      III: n, q
 *   IV:  k, q       V:   q            VI:  q          */
typedef struct sg_group {
  sg_group_type type;
  uint64_t q;
  uint64_t p;
  uint64_t n;
  uint64_t k;
} sg_group;

SPECGEO_API sg_status sg_group_validate(const sg_group* group);
SPECGEO_API sg_status sg_group_order(const sg_group* group, uint64_t* order);

SPECGEO_API sg_status sg_lens_diffeomorphic(uint64_t q, uint64_t p1, uint64_t p2, int* result);

typedef struct sg_isometry_descriptor {
  char label[16];     /* FullO4 | BergerPair | GenericFour */
  char component[16]; /* SO4 | S3xS1 | S3xPm1 */
} sg_isometry_descriptor;

SPECGEO_API sg_status sg_isometry_group_descriptor(int metric_class, sg_isometry_descriptor* out);

typedef struct sg_quotient_structure {
  int class_count;     /* 0, 1 or 2 */
  int homogeneous[2];  /* first class_count entries are meaningful */
  char centralizer[32];
  char notes[128];
} sg_quotient_structure;

SPECGEO_API sg_status sg_quotient_structure_compute(const sg_group* group, int metric_class,
                                                    sg_quotient_structure* out);

/* ---- recovery from curvature data ------------------------------------- */

SPECGEO_API sg_status sg_products_from_curvatures(const double curvatures[3], double products[3]);
SPECGEO_API sg_status sg_recover_from_curvature_and_volume(const sg_context* ctx,
                                                           const double curvatures[3],
                                                           double volume, uint64_t order,
                                                           double mu[3]);
SPECGEO_API sg_status sg_unique_degenerate_metric(const sg_context* ctx, double scalar_curvature,
                                                  double volume, uint64_t order, double mu[3]);

/* ---- rigid bodies ------------------------------------------------------ */

SPECGEO_API sg_status sg_moments_to_eigenvalues(const double moments[3], double eigenvalues[3]);
SPECGEO_API sg_status sg_rotational_invariants(const sg_context* ctx, const double moments[3],
                                               sg_heat_invariants* out);
SPECGEO_API sg_status sg_recover_moments(const sg_context* ctx, const sg_heat_invariants* h,
                                         double moments[3]);

/* ---- exact rational results ------------------------------------------- */

/* Parse "3", "-3/4" or "0.125" into an exact rational. */
SPECGEO_API sg_status sg_parse_rational(const char* text, int64_t* num, int64_t* den);

/* Coefficient of pi^2 in the covering volume of rational mu. */
SPECGEO_API sg_status sg_exact_covering_volume(const int64_t mu_num[3], const int64_t mu_den[3],
                                               int64_t* num, int64_t* den);

/* Coefficients of pi^2 in (a0, a1, a2, a3). */
SPECGEO_API sg_status sg_exact_heat_invariants(const int64_t mu_num[3], const int64_t mu_den[3],
                                               uint64_t order, int64_t num[4], int64_t den[4]);

/* Exact mu for rational eigenvalues; SG_ERR_EXACT_UNAVAILABLE when
 * sqrt(e1*e2*e3) is irrational. */
SPECGEO_API sg_status sg_exact_christoffel_from_eigenvalues(const int64_t e_num[3],
                                                            const int64_t e_den[3],
                                                            int64_t mu_num[3], int64_t mu_den[3]);

#ifdef __cplusplus
}
#endif

#endif /* SPECGEO_SPECGEO_H */
