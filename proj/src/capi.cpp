#include "mqs.h"

#include "decoherence.hpp"
#include "fock.hpp"
#include "quadrature.hpp"
#include "states.hpp"
#include "verify.hpp"

#include <fstream>
#include <new>

using namespace mqs;

struct mqs_curve {
    Curve curve;
};

struct mqs_fock_dm {
    FockDensityMatrix dm;
};

namespace {

// Translates the C++ error idiom to status codes at the boundary.
template <class F>
mqs_status guarded(F &&f) {
    try {
        f();
        return MQS_OK;
    } catch (const DegenerateError &) {
        return MQS_ERR_DEGENERATE;
    } catch (const NoCrossoverError &) {
        return MQS_ERR_NO_CROSSOVER;
    } catch (const TruncationError &) {
        return MQS_ERR_TRUNCATION;
    } catch (const ConvergenceError &) {
        return MQS_ERR_NO_CONVERGENCE;
    } catch (const std::domain_error &) {
        return MQS_ERR_DOMAIN;
    } catch (const std::bad_alloc &) {
        return MQS_ERR_IO;
    } catch (const std::exception &) {
        return MQS_ERR_IO;
    }
}

} // namespace

extern "C" {

const char *mqs_status_message(mqs_status s) {
    switch (s) {
    case MQS_OK: return "ok";
    case MQS_ERR_DOMAIN: return "parameter outside its domain";
    case MQS_ERR_DEGENERATE: return "V = 1: distribution degenerates to a point mass";
    case MQS_ERR_NO_CROSSOVER: return "no crossover in the supplied bracket";
    case MQS_ERR_TRUNCATION: return "Fock truncation too small";
    case MQS_ERR_NO_CONVERGENCE: return "quadrature did not converge";
    case MQS_ERR_IO: return "I/O or internal failure";
    case MQS_ERR_NULL_ARG: return "null argument";
    case MQS_ERR_VERIFY: return "analytic-vs-oracle deviation above tolerance";
    }
    return "unknown status";
}

mqs_status mqs_pure_scs_norm(double alpha, double *out) {
    if (!out) return MQS_ERR_NULL_ARG;
    return guarded([&] { *out = pure_scs_norm(alpha); });
}

mqs_status mqs_mixed_norm(double alpha, double v, double *out) {
    if (!out) return MQS_ERR_NULL_ARG;
    return guarded([&] { *out = mixed_norm(MqsParams(alpha, v)); });
}

mqs_status mqs_thermal_p_weight(double alpha, double v, double beta_re,
                                double beta_im, double *out) {
    if (!out) return MQS_ERR_NULL_ARG;
    return guarded(
        [&] { *out = thermal_p_weight(MqsParams(alpha, v), {beta_re, beta_im}); });
}

mqs_status mqs_decomposition_weight(double alpha, double v, double beta_re,
                                    double beta_im, double *out) {
    if (!out) return MQS_ERR_NULL_ARG;
    return guarded([&] {
        *out = decomposition_weight(MqsParams(alpha, v), {beta_re, beta_im});
    });
}

mqs_status mqs_linear_entropy(double alpha, double v, double *out) {
    if (!out) return MQS_ERR_NULL_ARG;
    return guarded([&] { *out = linear_entropy(MqsParams(alpha, v)); });
}

mqs_status mqs_mean_photon_pure(double alpha, double *out) {
    if (!out) return MQS_ERR_NULL_ARG;
    return guarded([&] { *out = mean_photon_pure(alpha); });
}

mqs_status mqs_mean_photon_mixed(double alpha, double v, double *out) {
    if (!out) return MQS_ERR_NULL_ARG;
    return guarded([&] { *out = mean_photon_mixed(MqsParams(alpha, v)); });
}

mqs_status mqs_evolve(double alpha, double v, double gamma_t, mqs_evolved *out) {
    if (!out) return MQS_ERR_NULL_ARG;
    return guarded([&] {
        const EvolvedParams e = evolve(MqsParams(alpha, v), ScaledTime(gamma_t));
        *out = {e.kappa, e.alpha_prime, e.v_prime, e.norm_t};
    });
}

mqs_status mqs_damp_dyadic(double a_re, double a_im, double b_re, double b_im,
                           double kappa, double *coeff_re, double *coeff_im,
                           double *a_out_re, double *a_out_im, double *b_out_re,
                           double *b_out_im) {
    if (!coeff_re || !coeff_im || !a_out_re || !a_out_im || !b_out_re || !b_out_im)
        return MQS_ERR_NULL_ARG;
    return guarded([&] {
        const DampedDyadic d = damp_dyadic({a_re, a_im}, {b_re, b_im}, kappa);
        *coeff_re = d.coefficient.real();
        *coeff_im = d.coefficient.imag();
        *a_out_re = d.a.re;
        *a_out_im = d.a.im;
        *b_out_re = d.b.re;
        *b_out_im = d.b.im;
    });
}

mqs_status mqs_wigner_origin(double alpha, double v, double gamma_t, double *out) {
    if (!out) return MQS_ERR_NULL_ARG;
    return guarded(
        [&] { *out = wigner_origin(MqsParams(alpha, v), ScaledTime(gamma_t)); });
}

mqs_status mqs_wigner(double alpha, double v, double gamma_t, double eta_re,
                      double eta_im, double *out) {
    if (!out) return MQS_ERR_NULL_ARG;
    return guarded([&] {
        *out = wigner(MqsParams(alpha, v), ScaledTime(gamma_t), {eta_re, eta_im});
    });
}

mqs_status mqs_wigner_min_scan(double alpha, double v, double gamma_t,
                               double x_half, double y_half, double step,
                               double *min_value, double *argmin_re,
                               double *argmin_im) {
    if (!min_value || !argmin_re || !argmin_im) return MQS_ERR_NULL_ARG;
    return guarded([&] {
        const MqsParams p(alpha, v);
        ScanGrid grid = ScanGrid::for_params(p, step > 0.0 ? step : 0.05);
        if (x_half > 0.0) grid.x_half = x_half;
        if (y_half > 0.0) grid.y_half = y_half;
        const ScanResult r = wigner_min_scan(p, ScaledTime(gamma_t), grid);
        *min_value = r.min_value;
        *argmin_re = r.argmin.re;
        *argmin_im = r.argmin.im;
    });
}

mqs_status mqs_decay_mixture(double alpha, double v, double gamma_t, double *out) {
    if (!out) return MQS_ERR_NULL_ARG;
    return guarded(
        [&] { *out = decay_mixture(MqsParams(alpha, v), ScaledTime(gamma_t)); });
}

mqs_status mqs_single_decay(double alpha, double gamma_t, double *out) {
    if (!out) return MQS_ERR_NULL_ARG;
    return guarded([&] {
        if (!(alpha > 0.0))
            throw std::domain_error("single_decay: alpha must be > 0");
        *out = single_decay(alpha, ScaledTime(gamma_t));
    });
}

mqs_status mqs_crossover_time(double alpha_pure, double alpha_mixed,
                              double v_mixed, double bracket_lo,
                              double bracket_hi, double *out) {
    if (!out) return MQS_ERR_NULL_ARG;
    return guarded([&] {
        *out = crossover_time(MqsParams(alpha_pure, 1.0),
                              MqsParams(alpha_mixed, v_mixed),
                              ScaledTime(bracket_lo), ScaledTime(bracket_hi))
                   .gamma_t;
    });
}

mqs_status mqs_curve_create(mqs_curve_kind kind, double alpha, double v,
                            double tmin, double tmax, size_t count,
                            mqs_grid_spacing spacing, double eta_re,
                            double eta_im, mqs_curve **out) {
    if (!out) return MQS_ERR_NULL_ARG;
    *out = nullptr;
    return guarded([&] {
        Quantity q;
        switch (kind) {
        case MQS_CURVE_W0:
            q = (v == 1.0) ? Quantity::W0Pure : Quantity::W0Mixed;
            break;
        case MQS_CURVE_DECAY_MIXTURE: q = Quantity::COfT; break;
        case MQS_CURVE_SINGLE_DECAY: q = Quantity::SingleDecay; break;
        case MQS_CURVE_WIGNER_SLICE: q = Quantity::WSurfaceSlice; break;
        default: throw std::domain_error("mqs_curve_create: bad kind");
        }
        const TimeGrid grid(tmin, tmax, count, spacing == MQS_GRID_LOG);
        *out = new mqs_curve{
            make_curve(q, MqsParams(alpha, v), grid, {eta_re, eta_im})};
    });
}

size_t mqs_curve_size(const mqs_curve *c) {
    return c ? c->curve.samples.size() : 0;
}

mqs_status mqs_curve_point(const mqs_curve *c, size_t i, double *gamma_t,
                           double *value) {
    if (!c || !gamma_t || !value) return MQS_ERR_NULL_ARG;
    if (i >= c->curve.samples.size()) return MQS_ERR_DOMAIN;
    *gamma_t = c->curve.samples[i].first;
    *value = c->curve.samples[i].second;
    return MQS_OK;
}

mqs_status mqs_curve_write_csv(const mqs_curve *c, const char *path) {
    if (!c || !path) return MQS_ERR_NULL_ARG;
    return guarded([&] { write_csv(c->curve, std::string(path)); });
}

void mqs_curve_free(mqs_curve *c) { delete c; }

mqs_status mqs_fock_mixed_mqs(double alpha, double v, mqs_fock_dm **out) {
    if (!out) return MQS_ERR_NULL_ARG;
    *out = nullptr;
    return guarded(
        [&] { *out = new mqs_fock_dm{mixed_mqs_fock(MqsParams(alpha, v))}; });
}

mqs_status mqs_fock_thermal_coherent(double alpha, double v, mqs_fock_dm **out) {
    if (!out) return MQS_ERR_NULL_ARG;
    *out = nullptr;
    return guarded([&] {
        *out = new mqs_fock_dm{thermal_coherent_fock(MqsParams(alpha, v))};
    });
}

mqs_status mqs_fock_evolved_analytic(double alpha, double v, double gamma_t,
                                     mqs_fock_dm **out) {
    if (!out) return MQS_ERR_NULL_ARG;
    *out = nullptr;
    return guarded([&] {
        *out = new mqs_fock_dm{
            evolved_mqs_fock(MqsParams(alpha, v), ScaledTime(gamma_t))};
    });
}

mqs_status mqs_fock_damp(const mqs_fock_dm *in, double kappa, mqs_fock_dm **out) {
    if (!in || !out) return MQS_ERR_NULL_ARG;
    *out = nullptr;
    return guarded(
        [&] { *out = new mqs_fock_dm{amplitude_damping_channel(in->dm, kappa)}; });
}

int mqs_fock_dim(const mqs_fock_dm *dm) { return dm ? dm->dm.dim() : 0; }

mqs_status mqs_fock_parity_wigner_origin(const mqs_fock_dm *dm, double *out) {
    if (!dm || !out) return MQS_ERR_NULL_ARG;
    return guarded([&] { *out = parity_wigner_origin(dm->dm); });
}

mqs_status mqs_fock_linear_entropy(const mqs_fock_dm *dm, double *out) {
    if (!dm || !out) return MQS_ERR_NULL_ARG;
    return guarded([&] { *out = fock_linear_entropy(dm->dm); });
}

mqs_status mqs_fock_mean_photon(const mqs_fock_dm *dm, double *out) {
    if (!dm || !out) return MQS_ERR_NULL_ARG;
    return guarded([&] { *out = fock_mean_photon(dm->dm); });
}

mqs_status mqs_fock_max_absdiff(const mqs_fock_dm *a, const mqs_fock_dm *b,
                                double *out) {
    if (!a || !b || !out) return MQS_ERR_NULL_ARG;
    if (a->dm.dim() != b->dm.dim()) return MQS_ERR_DOMAIN;
    return guarded(
        [&] { *out = (a->dm.mat - b->dm.mat).cwiseAbs().maxCoeff(); });
}

mqs_status mqs_fock_dump(const mqs_fock_dm *dm, const char *path) {
    if (!dm || !path) return MQS_ERR_NULL_ARG;
    return guarded([&] {
        std::ofstream os(path, std::ios::binary);
        if (!os)
            throw std::runtime_error("mqs_fock_dump: cannot open file");
        dump_fock(dm->dm, os);
        os.flush();
        if (!os)
            throw std::runtime_error("mqs_fock_dump: write failed");
    });
}

void mqs_fock_free(mqs_fock_dm *dm) { delete dm; }

mqs_status mqs_verify(mqs_verify_report *out) {
    if (!out) return MQS_ERR_NULL_ARG;
    VerifyReport report;
    const mqs_status s = guarded([&] { report = verify_against_oracle(); });
    if (s != MQS_OK)
        return s;
    *out = {report.max_dev_w0, report.max_dev_entropy, report.max_dev_mean_photon,
            report.max_dev_matrix, report.tolerance};
    return report.ok() ? MQS_OK : MQS_ERR_VERIFY;
}

} // extern "C"
