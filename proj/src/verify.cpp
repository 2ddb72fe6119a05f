#include "verify.hpp"

#include "decoherence.hpp"
#include "fock.hpp"
#include "states.hpp"

#include <algorithm>
#include <array>

namespace mqs {

VerifyReport verify_against_oracle() {
    constexpr std::array<std::pair<double, double>, 3> grid{
        {{1.5, 1.0}, {2.0, 3.0}, {2.5, 5.0}}};
    constexpr std::array<double, 5> times{0.0, 0.05, 0.1, 0.3, 0.7};

    VerifyReport report;
    for (const auto &[alpha, v] : grid) {
        const MqsParams p(alpha, v);
        const FockDensityMatrix rho0 = mixed_mqs_fock(p);

        report.max_dev_entropy =
            std::max(report.max_dev_entropy,
                     std::abs(linear_entropy(p) - fock_linear_entropy(rho0)));
        report.max_dev_mean_photon =
            std::max(report.max_dev_mean_photon,
                     std::abs(mean_photon_mixed(p) - fock_mean_photon(rho0)));

        for (double gt : times) {
            const ScaledTime t(gt);
            const FockDensityMatrix damped =
                amplitude_damping_channel(rho0, t.kappa());
            report.max_dev_w0 = std::max(
                report.max_dev_w0,
                std::abs(wigner_origin(p, t) - parity_wigner_origin(damped)));
            const FockDensityMatrix analytic = evolved_mqs_fock(p, t, rho0.dim());
            report.max_dev_matrix =
                std::max(report.max_dev_matrix,
                         (analytic.mat - damped.mat).cwiseAbs().maxCoeff());
        }
    }
    return report;
}

} // namespace mqs
