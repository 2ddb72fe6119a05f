#include "states.hpp"

#include <cmath>

namespace mqs {

MqsParams::MqsParams(double alpha_, double v_) : alpha(alpha_), v(v_) {
    if (!std::isfinite(alpha) || alpha <= 0.0)
        throw std::domain_error("MqsParams: alpha must be finite and > 0");
    if (!std::isfinite(v) || v < 1.0)
        throw std::domain_error("MqsParams: V must be finite and >= 1");
}

double pure_scs_norm(double alpha) {
    if (!std::isfinite(alpha) || alpha <= 0.0)
        throw std::domain_error("pure_scs_norm: alpha must be > 0");
    // e^{-2 alpha^2} underflows to 0 for large alpha; the limit 1/sqrt(2) is exact.
    return 1.0 / std::sqrt(2.0 - 2.0 * std::exp(-2.0 * alpha * alpha));
}

double thermal_p_weight(const MqsParams &p, PhasePoint beta) {
    if (p.pure())
        throw DegenerateError("thermal_p_weight: V = 1 is a point mass at alpha; "
                              "use the pure coherent-state path");
    const double u = p.v - 1.0;
    const double dre = beta.re - p.alpha;
    const double d2 = dre * dre + beta.im * beta.im;
    return 2.0 / (M_PI * u) * std::exp(-2.0 * d2 / u);
}

double mixed_norm(const MqsParams &p) {
    return 1.0 / (2.0 - 2.0 * std::exp(-2.0 * p.alpha * p.alpha / p.v) / p.v);
}

double linear_entropy(const MqsParams &p) {
    const double a2 = p.alpha * p.alpha;
    const double v = p.v;
    const double n = mixed_norm(p);
    const double purity =
        4.0 * n * n *
        (1.0 / v + std::exp(-4.0 * a2 / v) / v -
         4.0 * std::exp(-4.0 * a2 * v / (v * v + 1.0)) / (v * v + 1.0));
    return 1.0 - purity;
}

double mean_photon_pure(double alpha) {
    if (!std::isfinite(alpha) || alpha <= 0.0)
        throw std::domain_error("mean_photon_pure: alpha must be > 0");
    const double x = alpha * alpha;
    // x/tanh(x) -> 1 as x -> 0; tanh underflow is exact here.
    return x < 1e-300 ? 1.0 : x / std::tanh(x);
}

double mean_photon_mixed(const MqsParams &p) {
    const double a2 = p.alpha * p.alpha;
    const double v = p.v;
    const double u = v - 1.0;
    const double n = mixed_norm(p);
    return 2.0 * n *
           (a2 + 0.5 * u +
            std::exp(-2.0 * a2 / v) * (0.5 * u / (v * v) + a2 / (v * v * v)));
}

double decomposition_weight(const MqsParams &p, PhasePoint beta) {
    if (p.pure())
        throw DegenerateError("decomposition_weight: V = 1 collapses to a point "
                              "mass at alpha");
    const double u = p.v - 1.0;
    const double a2 = p.alpha * p.alpha;
    const double dre = beta.re - p.alpha;
    const double d2 = dre * dre + beta.im * beta.im;
    const double cat = -std::expm1(-2.0 * beta.abs2());
    const double denom = 1.0 - std::exp(-2.0 * a2 / p.v) / p.v;
    return 2.0 / (M_PI * u) * cat / denom * std::exp(-2.0 * d2 / u);
}

} // namespace mqs
