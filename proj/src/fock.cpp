#include "fock.hpp"

#include "quadrature.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace mqs {

namespace {

// Raw coherent amplitudes without tail check or renormalization; the
// quadrature builders hit far-out nodes whose truncated columns only ever
// enter with exponentially small weights.
Eigen::VectorXcd coherent_amplitudes(std::complex<double> alpha, int dim) {
    Eigen::VectorXcd amp(dim);
    const double mag = std::abs(alpha);
    if (mag == 0.0) {
        amp.setZero();
        amp(0) = 1.0;
        return amp;
    }
    const double logmag = std::log(mag);
    const double arg = std::arg(alpha);
    for (int n = 0; n < dim; ++n) {
        const double lm = -0.5 * mag * mag + n * logmag - 0.5 * std::lgamma(n + 1.0);
        amp(n) = std::polar(std::exp(lm), n * arg);
    }
    return amp;
}

FockDensityMatrix finalize_density(Eigen::MatrixXcd mat) {
    mat = 0.5 * (mat + mat.adjoint()).eval();
    const double trace = mat.trace().real();
    if (!(trace > 0.0))
        throw std::runtime_error("finalize_density: nonpositive trace");
    FockDensityMatrix rho{mat / trace, std::abs(1.0 - trace)};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.mat,
                                                           Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -1e-8)
        throw std::runtime_error("finalize_density: negative eigenvalue " +
                                 std::to_string(solver.eigenvalues().minCoeff()));
    return rho;
}

// Doubles the Gauss-Hermite order until two successive assemblies agree
// entrywise, then finalizes the converged matrix.
template <class Builder>
FockDensityMatrix assemble_adaptive(Builder &&build, int quad_order) {
    if (quad_order > 0)
        return finalize_density(build(quad_order));
    Eigen::MatrixXcd prev;
    for (int order = 16; order <= 256; order *= 2) {
        Eigen::MatrixXcd cur = build(order);
        if (prev.size() > 0 && (cur - prev).cwiseAbs().maxCoeff() < 1e-11)
            return finalize_density(std::move(cur));
        prev = std::move(cur);
    }
    throw ConvergenceError("fock quadrature assembly did not converge");
}

} // namespace

int fock_dim_for(double alpha, double v) {
    // The quadrature builders sample coherent amplitudes out to roughly
    // alpha + 4 s with s = sqrt((v - 1) / 2), so size the truncation for the
    // photon number those outer nodes reach, not just the mean of the state.
    const double s = std::sqrt(0.5 * (v - 1.0));
    const double reach = (alpha + 4.0 * s) * (alpha + 4.0 * s) + 16.0 * s * s;
    return static_cast<int>(std::ceil(reach + 6.0 * std::sqrt(reach) + 15.0));
}

FockVector coherent_fock(std::complex<double> alpha, int dim, double tail_tol) {
    if (dim < 1)
        throw std::domain_error("coherent_fock: dim must be >= 1");
    Eigen::VectorXcd amp = coherent_amplitudes(alpha, dim);
    const double norm2 = amp.squaredNorm();
    const double tail = std::max(0.0, 1.0 - norm2);
    if (tail > tail_tol)
        throw TruncationError("coherent_fock: tail mass " + std::to_string(tail) +
                                  " exceeds tolerance",
                              tail);
    return {amp / std::sqrt(norm2)};
}

FockVector cat_fock(std::complex<double> alpha, int dim) {
    Eigen::VectorXcd amp = coherent_amplitudes(alpha, dim) -
                           coherent_amplitudes(-alpha, dim);
    const double norm = amp.norm();
    if (!(norm > 0.0))
        throw std::domain_error("cat_fock: vanishing superposition");
    return {amp / norm};
}

Eigen::MatrixXcd displacement_matrix(std::complex<double> alpha, int dim) {
    if (dim < 1)
        throw std::domain_error("displacement_matrix: dim must be >= 1");
    Eigen::MatrixXcd d(dim, dim);
    d.col(0) = coherent_amplitudes(alpha, dim);
    const std::complex<double> ac = std::conj(alpha);
    // <m|D a^dag|n> = sqrt(n+1) <m|D|n+1> and D a^dag = (a^dag - alpha^*) D.
    for (int c = 0; c + 1 < dim; ++c) {
        const double inv = 1.0 / std::sqrt(c + 1.0);
        d(0, c + 1) = -ac * d(0, c) * inv;
        for (int m = 1; m < dim; ++m)
            d(m, c + 1) = (std::sqrt(static_cast<double>(m)) * d(m - 1, c) -
                           ac * d(m, c)) *
                          inv;
    }
    return d;
}

double displacement_unitarity_deficit(const Eigen::MatrixXcd &d, int sub) {
    if (sub < 1 || sub > d.rows())
        throw std::domain_error("displacement_unitarity_deficit: bad subspace");
    Eigen::MatrixXcd block =
        (d * d.adjoint()).topLeftCorner(sub, sub) -
        Eigen::MatrixXcd::Identity(sub, sub);
    return block.cwiseAbs().maxCoeff();
}

FockDensityMatrix thermal_coherent_fock(const MqsParams &p, int dim) {
    if (dim == 0)
        dim = fock_dim_for(p.alpha, p.v);
    if (p.pure()) {
        const Eigen::VectorXcd c = coherent_amplitudes(p.alpha, dim);
        return finalize_density(c * c.adjoint());
    }
    const double nbar = 0.5 * (p.v - 1.0);
    const double lr = std::log(nbar / (1.0 + nbar));
    const double l0 = -std::log1p(nbar);
    Eigen::VectorXd weights(dim);
    for (int n = 0; n < dim; ++n)
        weights(n) = std::exp(l0 + n * lr);
    const Eigen::MatrixXcd d = displacement_matrix(p.alpha, dim);
    return finalize_density(d * weights.asDiagonal() * d.adjoint());
}

FockDensityMatrix mixed_mqs_fock(const MqsParams &p, int dim, int quad_order) {
    if (dim == 0)
        dim = fock_dim_for(p.alpha, p.v);
    if (p.pure()) {
        const FockVector cat = cat_fock(p.alpha, dim);
        return finalize_density(cat.amp * cat.amp.adjoint());
    }
    const double scale = std::sqrt(0.5 * (p.v - 1.0));
    const double n = mixed_norm(p);
    auto build = [&](int order) {
        const auto &rule = gauss_hermite(order);
        Eigen::MatrixXcd cols(dim, order * order);
        for (int i = 0; i < order; ++i) {
            for (int j = 0; j < order; ++j) {
                const std::complex<double> beta(p.alpha + scale * rule.nodes[i],
                                                scale * rule.nodes[j]);
                const double w = rule.weights[i] * rule.weights[j] / M_PI;
                cols.col(i * order + j) =
                    std::sqrt(n * w) * (coherent_amplitudes(beta, dim) -
                                        coherent_amplitudes(-beta, dim));
            }
        }
        return Eigen::MatrixXcd(cols * cols.adjoint());
    };
    return assemble_adaptive(build, quad_order);
}

FockDensityMatrix mixed_mqs_fock_cat_mixture(const MqsParams &p, int dim,
                                             int quad_order) {
    if (dim == 0)
        dim = fock_dim_for(p.alpha, p.v);
    if (p.pure()) {
        const FockVector cat = cat_fock(p.alpha, dim);
        return finalize_density(cat.amp * cat.amp.adjoint());
    }
    const double scale = std::sqrt(0.5 * (p.v - 1.0));
    auto build = [&](int order) {
        const auto &rule = gauss_hermite(order);
        Eigen::MatrixXcd cols(dim, order * order);
        for (int i = 0; i < order; ++i) {
            for (int j = 0; j < order; ++j) {
                const PhasePoint beta{p.alpha + scale * rule.nodes[i],
                                      scale * rule.nodes[j]};
                // Weight of the normalized cat |Psi_beta> with the Gaussian
                // factor absorbed into the quadrature rule.
                const double w = rule.weights[i] * rule.weights[j] / M_PI *
                                 decomposition_weight(p, beta) /
                                 thermal_p_weight(p, beta);
                cols.col(i * order + j) =
                    std::sqrt(w) * cat_fock(beta.c(), dim).amp;
            }
        }
        return Eigen::MatrixXcd(cols * cols.adjoint());
    };
    return assemble_adaptive(build, quad_order);
}

FockDensityMatrix evolved_mqs_fock(const MqsParams &p, ScaledTime t, int dim,
                                   int quad_order) {
    if (dim == 0)
        dim = fock_dim_for(p.alpha, p.v);
    const EvolvedParams ev = evolve(p, t);
    const double sk = std::sqrt(ev.kappa);
    const double omk = t.one_minus_kappa();
    const double n = mixed_norm(p);

    // Lobe at -alpha' is the parity conjugate of the +alpha' lobe:
    // entries pick up (-1)^{m+n}.
    const Eigen::MatrixXcd lobe_plus =
        thermal_coherent_fock(MqsParams(ev.alpha_prime, ev.v_prime), dim).mat;
    Eigen::MatrixXcd lobe_minus = lobe_plus;
    for (int m = 0; m < dim; ++m)
        for (int c = 0; c < dim; ++c)
            if ((m + c) % 2)
                lobe_minus(m, c) = -lobe_minus(m, c);

    if (p.pure()) {
        const Eigen::VectorXcd u = coherent_amplitudes(sk * p.alpha, dim);
        const Eigen::VectorXcd v = coherent_amplitudes(-sk * p.alpha, dim);
        const double coeff = std::exp(-2.0 * omk * p.alpha * p.alpha);
        Eigen::MatrixXcd cross = coeff * (u * v.adjoint());
        return finalize_density(
            n * (lobe_plus + lobe_minus - cross - cross.adjoint()));
    }

    const double scale = std::sqrt(0.5 * (p.v - 1.0));
    auto build = [&](int order) {
        const auto &rule = gauss_hermite(order);
        Eigen::MatrixXcd left(dim, order * order), right(dim, order * order);
        for (int i = 0; i < order; ++i) {
            for (int j = 0; j < order; ++j) {
                const std::complex<double> beta(p.alpha + scale * rule.nodes[i],
                                                scale * rule.nodes[j]);
                const double damp = std::exp(-2.0 * omk * std::norm(beta));
                const double w =
                    rule.weights[i] * rule.weights[j] / M_PI * damp;
                const double s = std::sqrt(w);
                left.col(i * order + j) =
                    s * coherent_amplitudes(sk * beta, dim);
                right.col(i * order + j) =
                    s * coherent_amplitudes(-sk * beta, dim);
            }
        }
        Eigen::MatrixXcd cross = left * right.adjoint();
        return Eigen::MatrixXcd(
            n * (lobe_plus + lobe_minus - cross - cross.adjoint()));
    };
    return assemble_adaptive(build, quad_order);
}

FockDensityMatrix amplitude_damping_channel(const FockDensityMatrix &rho,
                                            double kappa) {
    if (!(kappa > 0.0) || kappa > 1.0)
        throw std::domain_error("amplitude_damping_channel: kappa must be in (0, 1]");
    const int dim = rho.dim();
    if (kappa == 1.0)
        return rho;

    // b(n, k) = sqrt(C(n,k) kappa^{n-k} (1-kappa)^k), in log space.
    const double lk = std::log(kappa);
    const double lo = std::log1p(-kappa);
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(dim, dim);
    for (int n = 0; n < dim; ++n)
        for (int k = 0; k <= n; ++k) {
            const double lchoose = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                                   std::lgamma(n - k + 1.0);
            b(n, k) = std::exp(0.5 * (lchoose + (n - k) * lk + k * lo));
        }

    // Cap the Kraus rank where the completeness deficit is < 1e-14 for every n.
    int kmax = 0;
    for (int n = 0; n < dim; ++n) {
        double acc = 0.0;
        int k = 0;
        for (; k <= n; ++k) {
            acc += b(n, k) * b(n, k);
            if (1.0 - acc < 1e-14)
                break;
        }
        kmax = std::max(kmax, std::min(k, n));
    }

    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
    for (int k = 0; k <= kmax; ++k)
        for (int m = 0; m + k < dim; ++m)
            for (int c = 0; c + k < dim; ++c)
                out(m, c) += b(m + k, k) * b(c + k, k) * rho.mat(m + k, c + k);
    return finalize_density(std::move(out));
}

FockDensityMatrix master_equation_rk4(const FockDensityMatrix &rho,
                                      double gamma_t, int steps) {
    if (steps < 1)
        throw std::domain_error("master_equation_rk4: steps must be >= 1");
    const int dim = rho.dim();
    Eigen::MatrixXcd lower = Eigen::MatrixXcd::Zero(dim, dim);
    for (int n = 1; n < dim; ++n)
        lower(n - 1, n) = std::sqrt(static_cast<double>(n));
    Eigen::VectorXd number(dim);
    for (int n = 0; n < dim; ++n)
        number(n) = n;

    auto liouvillian = [&](const Eigen::MatrixXcd &r) {
        Eigen::MatrixXcd jump = lower * r * lower.adjoint();
        Eigen::MatrixXcd drift =
            -0.5 * (number.asDiagonal() * r + r * number.asDiagonal());
        return Eigen::MatrixXcd(jump + drift);
    };

    const double h = gamma_t / steps;
    Eigen::MatrixXcd r = rho.mat;
    for (int s = 0; s < steps; ++s) {
        const Eigen::MatrixXcd k1 = liouvillian(r);
        const Eigen::MatrixXcd k2 = liouvillian(r + 0.5 * h * k1);
        const Eigen::MatrixXcd k3 = liouvillian(r + 0.5 * h * k2);
        const Eigen::MatrixXcd k4 = liouvillian(r + h * k3);
        r += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return finalize_density(std::move(r));
}

double parity_wigner_origin(const FockDensityMatrix &rho) {
    double acc = 0.0;
    for (int n = 0; n < rho.dim(); ++n) {
        const double d = rho.mat(n, n).real();
        acc += (n % 2) ? -d : d;
    }
    return 2.0 / M_PI * acc;
}

double fock_linear_entropy(const FockDensityMatrix &rho) {
    // Tr(rho^2) is the squared Frobenius norm for Hermitian rho.
    return 1.0 - rho.mat.squaredNorm();
}

double fock_mean_photon(const FockDensityMatrix &rho) {
    double acc = 0.0;
    for (int n = 0; n < rho.dim(); ++n)
        acc += n * rho.mat(n, n).real();
    return acc;
}

void dump_fock(const FockDensityMatrix &rho, std::ostream &os) {
    os << "dim " << rho.dim() << "\n";
    char buf[64];
    for (int m = 0; m < rho.dim(); ++m) {
        for (int n = 0; n < rho.dim(); ++n) {
            const std::complex<double> z = rho.mat(m, n);
            std::snprintf(buf, sizeof buf, "%s%.17g %.17g", n ? " " : "",
                          z.real(), z.imag());
            os << buf;
        }
        os << "\n";
    }
}

} // namespace mqs
