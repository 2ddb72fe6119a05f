#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace mqs {

struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Nodes and weights of the n-point Gauss-Hermite rule for weight e^{-t^2}.
// Computed once per order (Golub-Welsch) and cached; thread-safe.
struct GaussHermiteRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussHermiteRule &gauss_hermite(int n);

// Mean of f over the complex plane against the isotropic Gaussian density with
// real mean `mean` and per-axis standard deviation sigma = scale/sqrt(2), i.e.
// the substitution beta = mean + scale*(x + i y), weight e^{-x^2-y^2}/pi.
// Order is doubled from 16 until two successive results differ by < tol.
template <class F>
double gaussian_plane_mean(F &&f, double mean, double scale, double tol = 1e-10,
                           int max_order = 512) {
    double prev = 0.0;
    bool have_prev = false;
    for (int order = 16; order <= max_order; order *= 2) {
        const auto &rule = gauss_hermite(order);
        double acc = 0.0;
        for (int i = 0; i < order; ++i) {
            double partial = 0.0;
            for (int j = 0; j < order; ++j)
                partial += rule.weights[j] *
                           f(mean + scale * rule.nodes[i], scale * rule.nodes[j]);
            acc += rule.weights[i] * partial;
        }
        acc /= M_PI;
        if (have_prev && std::abs(acc - prev) < tol)
            return acc;
        prev = acc;
        have_prev = true;
    }
    throw ConvergenceError("gaussian_plane_mean: quadrature did not converge");
}

} // namespace mqs
