#pragma once

namespace mqs {

// Maximum absolute deviations between the closed-form engine and the
// truncated-Fock oracle over the small-parameter grid
// (alpha, V) in {(1.5, 1), (2, 3), (2.5, 5)}, gamma_t in {0, 0.05, 0.1, 0.3, 0.7}.
struct VerifyReport {
    double max_dev_w0 = 0.0;          // analytic W(0) vs oracle parity
    double max_dev_entropy = 0.0;     // closed form vs matrix trace
    double max_dev_mean_photon = 0.0; // closed form vs matrix trace
    double max_dev_matrix = 0.0;      // analytic evolved matrix vs Kraus map
    double tolerance = 1e-8;

    bool ok() const {
        return max_dev_w0 <= tolerance && max_dev_entropy <= tolerance &&
               max_dev_mean_photon <= tolerance && max_dev_matrix <= tolerance;
    }
};

VerifyReport verify_against_oracle();

} // namespace mqs
