#ifndef MQS_H
#define MQS_H

/* C interface to the cat-state decoherence library.
 *
 * All quantities are dimensionless: alpha is the (real, positive) coherent
 * amplitude, v >= 1 the Gaussian noise variance (v = 1 is the pure-cat
 * limit), gamma_t the scaled time.  Functions return MQS_OK on success and
 * write results through out-pointers; heavier objects (Fock-basis density
 * matrices, sampled curves) are returned as opaque handles that must be
 * released with the matching *_free call.
 */

#include <stddef.h>

#if defined(_WIN32)
#define MQS_API __declspec(dllexport)
#else
#define MQS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    MQS_OK = 0,
    MQS_ERR_DOMAIN = 1,         /* parameter outside its domain */
    MQS_ERR_DEGENERATE = 2,     /* v = 1: distribution collapses to a point mass */
    MQS_ERR_NO_CROSSOVER = 3,   /* no sign change in the supplied bracket */
    MQS_ERR_TRUNCATION = 4,     /* Fock truncation too small for the request */
    MQS_ERR_NO_CONVERGENCE = 5, /* adaptive quadrature failed to converge */
    MQS_ERR_IO = 6,
    MQS_ERR_NULL_ARG = 7,
    MQS_ERR_VERIFY = 8          /* analytic-vs-oracle deviation above tolerance */
} mqs_status;

MQS_API const char *mqs_status_message(mqs_status s);

/* ---- static (t = 0) state quantities ---------------------------------- */

MQS_API mqs_status mqs_pure_scs_norm(double alpha, double *out);
MQS_API mqs_status mqs_mixed_norm(double alpha, double v, double *out);
MQS_API mqs_status mqs_thermal_p_weight(double alpha, double v,
                                        double beta_re, double beta_im,
                                        double *out);
MQS_API mqs_status mqs_decomposition_weight(double alpha, double v,
                                            double beta_re, double beta_im,
                                            double *out);
MQS_API mqs_status mqs_linear_entropy(double alpha, double v, double *out);
MQS_API mqs_status mqs_mean_photon_pure(double alpha, double *out);
MQS_API mqs_status mqs_mean_photon_mixed(double alpha, double v, double *out);

/* ---- amplitude-damping dynamics --------------------------------------- */

/* Parameters of the damped state at scaled time gamma_t: kappa = e^{-gamma_t},
 * alpha_prime = sqrt(kappa) alpha, v_prime = kappa (v - 1) + 1.  norm_t is the
 * inverse normalization of the three-term decomposition; the channel is
 * trace-preserving, so it is time-independent and equals 1 / mqs_mixed_norm. */
typedef struct {
    double kappa;
    double alpha_prime;
    double v_prime;
    double norm_t;
} mqs_evolved;

MQS_API mqs_status mqs_evolve(double alpha, double v, double gamma_t,
                              mqs_evolved *out);

/* Closed-form action of the damping channel on a coherent dyadic |a><b|:
 * coefficient times |sqrt(kappa) a><sqrt(kappa) b|. */
MQS_API mqs_status mqs_damp_dyadic(double a_re, double a_im,
                                   double b_re, double b_im, double kappa,
                                   double *coeff_re, double *coeff_im,
                                   double *a_out_re, double *a_out_im,
                                   double *b_out_re, double *b_out_im);

MQS_API mqs_status mqs_wigner_origin(double alpha, double v, double gamma_t,
                                     double *out);
MQS_API mqs_status mqs_wigner(double alpha, double v, double gamma_t,
                              double eta_re, double eta_im, double *out);

/* Grid minimum of W over [-x_half, x_half] x [-y_half, y_half] with the given
 * step.  Pass x_half = 0 to use the default extent (2 alpha by 4). */
MQS_API mqs_status mqs_wigner_min_scan(double alpha, double v, double gamma_t,
                                       double x_half, double y_half, double step,
                                       double *min_value,
                                       double *argmin_re, double *argmin_im);

MQS_API mqs_status mqs_decay_mixture(double alpha, double v, double gamma_t,
                                     double *out);
MQS_API mqs_status mqs_single_decay(double alpha, double gamma_t, double *out);

/* Bisection root of W0_pure(t) - W0_mixed(t) in [bracket_lo, bracket_hi],
 * to 1e-7 absolute in gamma_t. */
MQS_API mqs_status mqs_crossover_time(double alpha_pure,
                                      double alpha_mixed, double v_mixed,
                                      double bracket_lo, double bracket_hi,
                                      double *out);

/* ---- sampled curves ---------------------------------------------------- */

typedef struct mqs_curve mqs_curve;

typedef enum {
    MQS_CURVE_W0 = 0,            /* W(0) against gamma_t (pure when v = 1) */
    MQS_CURVE_DECAY_MIXTURE = 1, /* C(t) */
    MQS_CURVE_SINGLE_DECAY = 2,  /* e^{-2 alpha^2 gamma_t} */
    MQS_CURVE_WIGNER_SLICE = 3   /* W(eta) at fixed eta against gamma_t */
} mqs_curve_kind;

typedef enum { MQS_GRID_LIN = 0, MQS_GRID_LOG = 1 } mqs_grid_spacing;

/* eta_re / eta_im are used only by MQS_CURVE_WIGNER_SLICE. */
MQS_API mqs_status mqs_curve_create(mqs_curve_kind kind, double alpha, double v,
                                    double tmin, double tmax, size_t count,
                                    mqs_grid_spacing spacing,
                                    double eta_re, double eta_im,
                                    mqs_curve **out);
MQS_API size_t mqs_curve_size(const mqs_curve *c);
MQS_API mqs_status mqs_curve_point(const mqs_curve *c, size_t i,
                                   double *gamma_t, double *value);
MQS_API mqs_status mqs_curve_write_csv(const mqs_curve *c, const char *path);
MQS_API void mqs_curve_free(mqs_curve *c);

/* ---- truncated-Fock oracle -------------------------------------------- */

typedef struct mqs_fock_dm mqs_fock_dm;

MQS_API mqs_status mqs_fock_mixed_mqs(double alpha, double v, mqs_fock_dm **out);
MQS_API mqs_status mqs_fock_thermal_coherent(double alpha, double v,
                                             mqs_fock_dm **out);
/* Damped state built from the closed-form dyadic solution by quadrature
 * (the analytic route; compare against mqs_fock_damp of the initial state). */
MQS_API mqs_status mqs_fock_evolved_analytic(double alpha, double v,
                                             double gamma_t, mqs_fock_dm **out);
MQS_API mqs_status mqs_fock_damp(const mqs_fock_dm *in, double kappa,
                                 mqs_fock_dm **out);
MQS_API int mqs_fock_dim(const mqs_fock_dm *dm);
MQS_API mqs_status mqs_fock_parity_wigner_origin(const mqs_fock_dm *dm,
                                                 double *out);
MQS_API mqs_status mqs_fock_linear_entropy(const mqs_fock_dm *dm, double *out);
MQS_API mqs_status mqs_fock_mean_photon(const mqs_fock_dm *dm, double *out);
MQS_API mqs_status mqs_fock_max_absdiff(const mqs_fock_dm *a,
                                        const mqs_fock_dm *b, double *out);
/* Text dump: "dim N" then N rows of N "re im" pairs, 17 significant digits. */
MQS_API mqs_status mqs_fock_dump(const mqs_fock_dm *dm, const char *path);
MQS_API void mqs_fock_free(mqs_fock_dm *dm);

/* ---- analytic-vs-oracle verification ----------------------------------- */

typedef struct {
    double max_dev_w0;          /* analytic W(0) vs oracle parity */
    double max_dev_entropy;     /* closed-form vs matrix-trace linear entropy */
    double max_dev_mean_photon; /* closed-form vs matrix-trace mean photon */
    double max_dev_matrix;      /* analytic evolved matrix vs Kraus channel */
    double tolerance;           /* threshold applied to all of the above */
} mqs_verify_report;

/* Runs the full small-parameter suite.  Returns MQS_ERR_VERIFY if any
 * deviation exceeds the tolerance; the report is filled either way. */
MQS_API mqs_status mqs_verify(mqs_verify_report *out);

#ifdef __cplusplus
}
#endif

#endif /* MQS_H */
