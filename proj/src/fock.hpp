#pragma once

#include "decoherence.hpp"
#include "states.hpp"

#include <Eigen/Dense>

#include <complex>
#include <iosfwd>

namespace mqs {

struct TruncationError : std::runtime_error {
    TruncationError(const std::string &msg, double achieved)
        : std::runtime_error(msg), achieved_deficit(achieved) {}
    double achieved_deficit;
};

// Normalized state vector in the truncated number basis.
struct FockVector {
    Eigen::VectorXcd amp;

    int dim() const { return static_cast<int>(amp.size()); }
};

// Truncated number-basis density operator.  Hermitian, unit trace after
// construction; trace_deficit records 1 - trace before renormalization.
struct FockDensityMatrix {
    Eigen::MatrixXcd mat;
    double trace_deficit = 0.0;

    int dim() const { return static_cast<int>(mat.rows()); }
};

// Truncation sizing: covers the photon numbers reached by the outermost
// quadrature nodes, roughly (alpha + 4 s)^2 + (4 s)^2 with s = sqrt((V-1)/2).
int fock_dim_for(double alpha, double v = 1.0);

// Coherent amplitudes e^{-|alpha|^2/2} alpha^n / sqrt(n!), assembled in
// log space.  Throws TruncationError if the tail mass exceeds tail_tol.
FockVector coherent_fock(std::complex<double> alpha, int dim,
                         double tail_tol = 1e-12);

// Normalized odd cat |alpha> - |-alpha|>.
FockVector cat_fock(std::complex<double> alpha, int dim);

// Truncated block of D(alpha) = exp(alpha a^dag - alpha^* a), generated
// columnwise from the coherent-state column by the ladder recurrence
// (equivalent to the associated-Laguerre closed form, stable at large dim).
Eigen::MatrixXcd displacement_matrix(std::complex<double> alpha, int dim);

// max |(D D^dag - I)_{mn}| over the leading sub x sub block.
double displacement_unitarity_deficit(const Eigen::MatrixXcd &d, int sub);

// Displaced thermal state D(alpha) diag(p_n) D(alpha)^dag with geometric p_n
// of mean (V-1)/2.  dim = 0 uses the sizing rule.
FockDensityMatrix thermal_coherent_fock(const MqsParams &p, int dim = 0);

// Mixed superposition assembled as the Gaussian P-mixture of unnormalized cat
// dyadics.  quad_order = 0 doubles the order until entrywise convergence.
FockDensityMatrix mixed_mqs_fock(const MqsParams &p, int dim = 0,
                                 int quad_order = 0);

// Same state assembled from the classical mixture of normalized pure cats
// with the decomposition weight; an independent construction route.
FockDensityMatrix mixed_mqs_fock_cat_mixture(const MqsParams &p, int dim = 0,
                                             int quad_order = 0);

// Damped state built from the closed-form dyadic solution by quadrature over
// the initial P-distribution (the analytic route, exact in kappa).
FockDensityMatrix evolved_mqs_fock(const MqsParams &p, ScaledTime t, int dim = 0,
                                   int quad_order = 0);

// Exact Kraus map of the zero-temperature damping channel.  Kraus rank is
// capped where the completeness deficit drops below 1e-14.
FockDensityMatrix amplitude_damping_channel(const FockDensityMatrix &rho,
                                            double kappa);

// Fixed-step 4th-order integration of the damping master equation; secondary
// cross-check of the Kraus map only.
FockDensityMatrix master_equation_rk4(const FockDensityMatrix &rho,
                                      double gamma_t, int steps);

// (2/pi) sum_n (-1)^n rho_nn.
double parity_wigner_origin(const FockDensityMatrix &rho);

double fock_linear_entropy(const FockDensityMatrix &rho);
double fock_mean_photon(const FockDensityMatrix &rho);

// Text dump: "dim N" line, then N rows of N "re im" pairs, 17 significant digits.
void dump_fock(const FockDensityMatrix &rho, std::ostream &os);

} // namespace mqs
