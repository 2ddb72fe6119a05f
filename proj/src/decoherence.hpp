#pragma once

#include "states.hpp"

#include <complex>
#include <iosfwd>
#include <utility>
#include <vector>

namespace mqs {

struct NoCrossoverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ScaledTime {
    double gamma_t;

    explicit ScaledTime(double gt) : gamma_t(gt) {
        if (!std::isfinite(gt) || gt < 0.0)
            throw std::domain_error("ScaledTime: gamma_t must be finite and >= 0");
    }

    double kappa() const { return std::exp(-gamma_t); }
    // 1 - kappa without cancellation at small gamma_t.
    double one_minus_kappa() const { return -std::expm1(-gamma_t); }
};

// State parameters after damping: alpha' = sqrt(kappa) alpha,
// V' = kappa (V - 1) + 1.  norm_t is the inverse normalization of the
// three-term decomposition; the channel preserves the trace, so it is
// time-independent and equals 1/mixed_norm.
struct EvolvedParams {
    double kappa;
    double alpha_prime;
    double v_prime;
    double norm_t;
};

EvolvedParams evolve(const MqsParams &p, ScaledTime t);

// Closed-form action of the damping channel on the coherent dyadic |a><b|.
struct DampedDyadic {
    std::complex<double> coefficient;
    PhasePoint a;
    PhasePoint b;
};

DampedDyadic damp_dyadic(PhasePoint a, PhasePoint b, double kappa);

// W(eta = 0) of the damped state:
//   (2/pi) N [ (2/A) e^{-2 kappa alpha^2 / A} - (2/B) e^{-2 (1-kappa) alpha^2 / B} ]
// with A = kappa (V-1) + 1 and B = (1-kappa)(V-1) + 1.  Exactly -2/pi at
// gamma_t = 0 and +2/pi in the long-time limit, for every (alpha, V).
double wigner_origin(const MqsParams &p, ScaledTime t);

// Independent route for the pure cat: damp the three dyadic pairs of
// |Psi_alpha><Psi_alpha| individually and take the parity of each.
double pure_cat_wigner_origin_dyadic(double alpha, ScaledTime t);

// Full Wigner function of the damped state: two Gaussian lobes at +-alpha'
// plus a closed-form Gaussian integral for the interference term.
double wigner(const MqsParams &p, ScaledTime t, PhasePoint eta);

struct ScanGrid {
    double x_half; // extent along the lobe axis
    double y_half; // transverse extent
    double step;

    static ScanGrid for_params(const MqsParams &p, double step = 0.05) {
        return {2.0 * p.alpha, 4.0, step};
    }
};

struct ScanResult {
    double min_value;
    PhasePoint argmin;
};

ScanResult wigner_min_scan(const MqsParams &p, ScaledTime t, const ScanGrid &grid);

// C(t) = [D(gamma_t) - D(gamma_t + 1)] / (1 - e^{-2 alpha^2/V}/V) with
// D(x) = e^{-2 alpha^2 x / (1 + (V-1)x)} / (1 + (V-1)x).  Continuous at V = 1,
// where it reduces to e^{-2 alpha^2 gamma_t}.
double decay_mixture(const MqsParams &p, ScaledTime t);

// The single-rate reference e^{-2 alpha^2 gamma_t}.
double single_decay(double alpha, ScaledTime t);

// Bisection root of W0(pure) - W0(mixed) in [lo, hi], to 1e-7 absolute in
// gamma_t.  Throws NoCrossoverError if the difference does not change sign.
ScaledTime crossover_time(const MqsParams &p_pure, const MqsParams &p_mixed,
                          ScaledTime lo, ScaledTime hi);

// ---- sampled curves ----------------------------------------------------

enum class Quantity { W0Pure, W0Mixed, COfT, SingleDecay, WSurfaceSlice };

const char *quantity_name(Quantity q);

struct TimeGrid {
    double tmin;
    double tmax;
    std::size_t count;
    bool log_spacing;

    TimeGrid(double tmin_, double tmax_, std::size_t count_, bool log_spacing_);

    std::vector<double> points() const;
};

struct Curve {
    Quantity quantity;
    MqsParams params;
    std::vector<std::pair<double, double>> samples; // (gamma_t, value)
};

// eta is used only by WSurfaceSlice.
Curve make_curve(Quantity q, const MqsParams &p, const TimeGrid &grid,
                 PhasePoint eta = {});

// CSV: "# quantity=... alpha=... V=..." comment header, a column-name line,
// then one "gamma_t,value" row per sample at 17 significant digits.
void write_csv(const Curve &curve, std::ostream &os);
void write_csv(const Curve &curve, const std::string &path);

} // namespace mqs
