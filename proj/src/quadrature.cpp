#include "quadrature.hpp"

#include <Eigen/Dense>

#include <map>
#include <mutex>

namespace mqs {

namespace {

GaussHermiteRule build_rule(int n) {
    // Golub-Welsch: eigendecomposition of the Jacobi matrix for the Hermite
    // recurrence, off-diagonal b_k = sqrt(k/2).
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const double b = std::sqrt(0.5 * k);
        jacobi(k, k - 1) = b;
        jacobi(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
    GaussHermiteRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double mu0 = std::sqrt(M_PI);
    for (int k = 0; k < n; ++k) {
        rule.nodes[k] = solver.eigenvalues()(k);
        const double v0 = solver.eigenvectors()(0, k);
        rule.weights[k] = mu0 * v0 * v0;
    }
    return rule;
}

} // namespace

const GaussHermiteRule &gauss_hermite(int n) {
    if (n < 1)
        throw std::invalid_argument("gauss_hermite: order must be >= 1");
    static std::mutex mtx;
    static std::map<int, GaussHermiteRule> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, build_rule(n)).first;
    return it->second;
}

} // namespace mqs
