#pragma once

#include <complex>
#include <stdexcept>

namespace mqs {

// v = 1 collapses a Gaussian weight to a point mass; operations that need a
// proper density signal this instead of returning a value.
struct DegenerateError : std::domain_error {
    using std::domain_error::domain_error;
};

// (alpha, V) pair defining a mixed macroscopic superposition.  V = 1 is the
// pure-cat limit.  alpha = 0 is rejected: the odd superposition vanishes
// identically.
struct MqsParams {
    double alpha;
    double v;

    MqsParams(double alpha_, double v_);

    bool pure() const { return v == 1.0; }
};

struct PhasePoint {
    double re = 0.0;
    double im = 0.0;

    std::complex<double> c() const { return {re, im}; }
    double abs2() const { return re * re + im * im; }
};

// Normalization N_alpha of the odd cat, 1/sqrt(2 - 2 e^{-2 alpha^2}).
double pure_scs_norm(double alpha);

// Gaussian P-function weight of the displaced thermal state, peak at beta = alpha.
// Requires v > 1.
double thermal_p_weight(const MqsParams &p, PhasePoint beta);

// Normalization N of the three-term mixed superposition.
double mixed_norm(const MqsParams &p);

// S = 1 - Tr(rho^2), closed form:
//   Tr(rho^2) = 4 N^2 [ 1/V + e^{-4 alpha^2/V}/V - 4 e^{-4 alpha^2 V/(V^2+1)}/(V^2+1) ]
double linear_entropy(const MqsParams &p);

// alpha^2 coth(alpha^2) for the pure cat.
double mean_photon_pure(double alpha);

// Tr[a^dag a rho], closed form:
//   2 N [ alpha^2 + (V-1)/2 + e^{-2 alpha^2/V} ( (V-1)/(2V^2) + alpha^2/V^3 ) ]
// Valid at V = 1, where it reduces to alpha^2 coth(alpha^2).
double mean_photon_mixed(const MqsParams &p);

// Weight of the pure cat |Psi_beta> in the classical-mixture decomposition of
// the mixed state.  Requires v > 1; nonnegative and normalized over the plane.
double decomposition_weight(const MqsParams &p, PhasePoint beta);

} // namespace mqs
